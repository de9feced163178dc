"""WMISP solvers: exact oracles, class-specific polynomial algorithms and
the top-level dispatcher."""

from .dispatch import METHODS, Trace, solve
from .four import solve_b4free, solve_c4free, solve_d4free
from .oracle import enumerate_wmisp, oracle_wmisp
from .u5free import (
    DPTable,
    XYZPartition,
    check_partition,
    find_xyz_partition,
    solve_u5free_prime,
    solve_xyz_dp,
    xyz_dp_table,
)
from .w5free import solve_tn, solve_un, solve_w5free_prime, un_candidates

__all__ = [
    "METHODS", "Trace", "solve",
    "solve_b4free", "solve_c4free", "solve_d4free",
    "enumerate_wmisp", "oracle_wmisp",
    "DPTable", "XYZPartition", "check_partition", "find_xyz_partition",
    "solve_u5free_prime", "solve_xyz_dp", "xyz_dp_table",
    "solve_tn", "solve_un", "solve_w5free_prime", "un_candidates",
]
