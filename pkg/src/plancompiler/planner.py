"""Planner backends: live chat-completions, replay from disk, and a
deterministic stub for offline runs.

Exactly one planner call happens per run.  Malformed output is a plan
failure, never a retry.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import requests

from .registry import Registry, serialize_for_prompt

DEFAULT_ENDPOINT = "https://api.openai.com/v1/chat/completions"


class PlannerError(Exception):
    """The backend could not produce a raw plan."""


@dataclass(frozen=True)
class Pricing:
    input_usd_per_token: float = 0.15 / 1_000_000
    output_usd_per_token: float = 0.60 / 1_000_000

    def cost(self, input_tokens: int, output_tokens: int) -> float:
        return (
            input_tokens * self.input_usd_per_token
            + output_tokens * self.output_usd_per_token
        )


@dataclass(frozen=True)
class PlannerConfig:
    backend: str = "stub"
    model_name: str = "gpt-4o-mini"
    temperature: float = 0.0
    pricing: Pricing = field(default_factory=Pricing)
    endpoint: str = DEFAULT_ENDPOINT
    api_key_env: str = "OPENAI_API_KEY"


@dataclass(frozen=True)
class PlannerUsage:
    input_tokens: int = 0
    output_tokens: int = 0
    cost_usd: float = 0.0
    latency: float = 0.0

    def to_json(self) -> dict:
        return {
            "input_tokens": self.input_tokens,
            "output_tokens": self.output_tokens,
            "cost_usd": self.cost_usd,
            "latency": self.latency,
        }


_RESPONSE_CONTRACT = """Respond with a single JSON object containing exactly these fields:
  "nodes": ordered list of node names chosen from the registry,
  "edges": list of [source, target] node-name pairs describing data flow,
  "parameters": object mapping each node name to its {parameter: value} object,
  "flags": list of advisory strings (empty if none),
  "glue_code": string (leave empty).
Use only registered node names. Supply every required parameter."""


def build_prompt(task_description: str, registry: Registry) -> str:
    """Deterministic planner prompt: task, registry listing, response contract.

    The registry listing never includes template contents.
    """
    return (
        "You are a workflow planner. Build a pipeline for the task below by "
        "selecting nodes from this registry and wiring them with edges.\n\n"
        "Node registry:\n"
        f"{serialize_for_prompt(registry)}\n\n"
        f"Task:\n{task_description}\n\n"
        f"{_RESPONSE_CONTRACT}"
    )


def plan_live(prompt: str, config: PlannerConfig) -> tuple[str, PlannerUsage]:
    """One chat-completion round trip; no retry on any failure."""
    api_key = os.environ.get(config.api_key_env)
    if not api_key:
        raise PlannerError(f"environment variable {config.api_key_env} is not set")
    base = os.environ.get("PLANNER_BASE_URL")
    endpoint = f"{base.rstrip('/')}/chat/completions" if base else config.endpoint

    payload = {
        "model": config.model_name,
        "temperature": config.temperature,
        "messages": [{"role": "user", "content": prompt}],
    }
    start = time.monotonic()
    try:
        response = requests.post(
            endpoint,
            json=payload,
            headers={"Authorization": f"Bearer {api_key}"},
            timeout=120,
        )
        response.raise_for_status()
        data = response.json()
        raw_text = data["choices"][0]["message"]["content"]
        usage = data.get("usage", {})
        input_tokens = int(usage.get("prompt_tokens", 0))
        output_tokens = int(usage.get("completion_tokens", 0))
    except (requests.RequestException, KeyError, IndexError, TypeError, ValueError) as exc:
        raise PlannerError(f"planner call failed: {exc}") from exc
    latency = time.monotonic() - start

    return raw_text, PlannerUsage(
        input_tokens=input_tokens,
        output_tokens=output_tokens,
        cost_usd=config.pricing.cost(input_tokens, output_tokens),
        latency=latency,
    )


def plan_replay(task_id: str, replay_dir: str | Path, run_index: int = 1) -> tuple[str, PlannerUsage]:
    """Return the recorded raw plan text and usage for a task run, verbatim."""
    base = Path(replay_dir) / task_id
    plan_file = base / f"plan_{run_index}.json"
    usage_file = base / f"usage_{run_index}.json"
    if not plan_file.is_file():
        raise PlannerError(f"no recorded plan at {plan_file}")
    raw_text = plan_file.read_text(encoding="utf-8")
    usage = PlannerUsage()
    if usage_file.is_file():
        data = json.loads(usage_file.read_text(encoding="utf-8"))
        usage = PlannerUsage(
            input_tokens=int(data.get("input_tokens", 0)),
            output_tokens=int(data.get("output_tokens", 0)),
            cost_usd=float(data.get("cost_usd", 0.0)),
            latency=float(data.get("latency", 0.0)),
        )
    return raw_text, usage


def record_plan(
    task_id: str, run_index: int, raw_text: str, usage: PlannerUsage, record_dir: str | Path
) -> None:
    """Persist a raw plan and its usage so a later run can replay them."""
    base = Path(record_dir) / task_id
    base.mkdir(parents=True, exist_ok=True)
    (base / f"plan_{run_index}.json").write_text(raw_text, encoding="utf-8")
    (base / f"usage_{run_index}.json").write_text(
        json.dumps(usage.to_json(), indent=2), encoding="utf-8"
    )


def plan_stub(authoring: dict[str, Any], registry: Registry) -> str:
    """Emit a canonical plan for a task's authored node chain.

    The stub does not repair anything: a chain authored with a missing
    required parameter produces a plan that fails validation, which is what
    negative-path tasks rely on.
    """
    if not authoring or "nodes" not in authoring:
        raise PlannerError("task has no authoring field; the stub backend needs one")
    nodes = list(authoring["nodes"])
    parameters = dict(authoring.get("parameters", {}))
    edges = [[nodes[i], nodes[i + 1]] for i in range(len(nodes) - 1)]
    return json.dumps(
        {
            "nodes": nodes,
            "edges": edges,
            "parameters": parameters,
            "flags": [],
            "glue_code": "",
        },
        separators=(",", ":"),
    )
