"""Sand pile model lattices SPM(n), the filters SPM(<=n) and the tree SPT(inf)."""

from ._core import (
    BudgetExceeded,
    Diagram,
    SpmError,
    build,
    build_next,
    build_upto,
    c_printed,
    c_structural,
    chain,
    classify,
    count,
    d_structural,
    diagram_from_json,
    fall,
    fixed_point,
    generating_partitions,
    inf,
    inf_infinite,
    is_spm,
    leq,
    leq_infinite,
    p_recursion,
    p_table,
    reconcile,
    shot_vector,
    stair_length,
    successors,
    sup,
    sup_infinite,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
