"""Driver-node discovery under network control constraints."""

from ._core import (  # noqa: F401
    BaselineResult,
    ConstraintReport,
    ControlModel,
    Evaluation,
    Graph,
    OracleRefusal,
    ParseError,
    Problem,
    RunResult,
    SolverConfig,
    UndefinedMetric,
    UsageError,
    auc,
    barabasi_albert,
    erdos_renyi,
    gene_frequency,
    greedy_baseline,
    greedy_fvs,
    greedy_mds,
    greedy_vertex_cover,
    hypervolume,
    igd,
    mms_driver_set,
    nsga2_cdp,
    oracle,
    random_labels,
    rank_sum,
    run_result_json,
    select_drivers,
    solve,
    source_nodes,
    strongly_connected_components,
    union_reference_front,
    violation,
)

__version__ = "0.1.0"
