"""Single-subprocess execution of compiled artifacts.

Each run is one child process in its own session, confined to its run
directory.  There is no retry, no output-inspection loop, and no repair:
if execution fails, it fails.
"""

from __future__ import annotations

import os
import shlex
import signal
import subprocess
import sys
import time
from dataclasses import dataclass
from pathlib import Path

DEFAULT_TIMEOUT = 40.0
TIMEOUT_EXIT_CODE = -signal.SIGKILL


class ExecutorError(Exception):
    """The artifact could not be spawned (missing file or interpreter)."""


@dataclass(frozen=True)
class ExecutionResult:
    exit_code: int
    stdout: str
    stderr: str
    duration: float
    timed_out: bool


def execute(
    artifact_name: str,
    run_dir: str | Path,
    interpreter: str | list[str] | None = None,
    timeout: float = DEFAULT_TIMEOUT,
) -> ExecutionResult:
    """Run ``artifact_name`` inside ``run_dir`` and capture the outcome.

    The child gets its own process group; on timeout the whole group is
    killed and ``timed_out`` is set with a nonzero exit code.  stdout and
    stderr are captured fully and also persisted as stdout.txt / stderr.txt
    in the run directory for audit.
    """
    run_dir = Path(run_dir)
    script = run_dir / artifact_name
    if not script.is_file():
        raise ExecutorError(f"artifact {script} does not exist; write it before executing")

    if interpreter is None:
        command = [sys.executable]
    elif isinstance(interpreter, str):
        command = shlex.split(interpreter)
    else:
        command = list(interpreter)
    command.append(artifact_name)

    start = time.monotonic()
    try:
        process = subprocess.Popen(
            command,
            cwd=run_dir,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
            start_new_session=True,
        )
    except OSError as exc:
        raise ExecutorError(f"cannot spawn {command[0]!r}: {exc}") from exc

    timed_out = False
    try:
        stdout, stderr = process.communicate(timeout=timeout)
    except subprocess.TimeoutExpired:
        timed_out = True
        try:
            os.killpg(os.getpgid(process.pid), signal.SIGKILL)
        except ProcessLookupError:
            pass
        stdout, stderr = process.communicate()
    duration = time.monotonic() - start

    exit_code = process.returncode
    if timed_out and exit_code == 0:
        exit_code = TIMEOUT_EXIT_CODE

    (run_dir / "stdout.txt").write_text(stdout, encoding="utf-8")
    (run_dir / "stderr.txt").write_text(stderr, encoding="utf-8")
    return ExecutionResult(
        exit_code=exit_code,
        stdout=stdout,
        stderr=stderr,
        duration=duration,
        timed_out=timed_out,
    )
