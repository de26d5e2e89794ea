"""PlanCompiler: typed node registry, seven-check plan validator,
deterministic pipeline compiler, subprocess executor, success-criterion
checkers, and a first-pass benchmark harness."""

from .compiler import (
    PYTHON_PROFILE,
    CompileError,
    CompiledArtifact,
    RuntimeProfile,
    compile_plan,
    emit_execution_block,
    render_literal,
    write_artifact,
)
from .criteria import (
    CriteriaReport,
    Criterion,
    CriterionSpecError,
    Table,
    TabularLoadError,
    check_file_column_sorted,
    check_file_exists,
    check_file_has_column,
    check_file_row_count,
    check_stdout_contains,
    evaluate_criteria,
    load_tabular,
)
from .executor import ExecutionResult, ExecutorError, execute
from .harness import (
    HarnessConfig,
    SetReport,
    TaskRecord,
    TaskSetError,
    TaskSpec,
    aggregate,
    load_task_set,
    make_backend,
    results_digest,
    run_set,
    run_task,
)
from .plan import (
    PlanDocument,
    PlanNormalizationError,
    PlanParseError,
    RawPlan,
    apply_edge_chain_fallback,
    normalize_plan,
    parse_plan,
    to_canonical_json,
)
from .planner import (
    PlannerConfig,
    PlannerError,
    PlannerUsage,
    Pricing,
    build_prompt,
    plan_live,
    plan_replay,
    plan_stub,
    record_plan,
)
from .registry import (
    NodeSpec,
    NodeType,
    Registry,
    RegistryError,
    default_registry_path,
    get_node,
    load_registry,
    serialize_for_prompt,
    type_compatible,
)
from .validation import (
    GraphCycleError,
    ValidationError,
    ValidationReport,
    topological_sort,
    validate_plan,
)

__version__ = "0.1.0"
