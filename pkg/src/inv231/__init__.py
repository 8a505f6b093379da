"""Exact enumeration toolkit for involutions restricted by the pattern 231.

Everything is computed with exact integers: permutation-level brute force
(`perms`), composition-level combinatorics (`layered`), generalized
Fibonacci numbers (`fibonacci`), truncated power series (`series`), the
closed-form counts and generating functions (`enumeration`), and the
red/blue tiling bijection (`bijection`).  `checks` bundles the identities
relating all of these into runnable verification sweeps, and `cli` exposes
tables, series dumps, bijection listings, and the verifier as a command
line tool.
"""

from .bijection import (
    enumerate_redblue,
    format_tiling,
    involution_to_tiling,
    parse_tiling,
    tiling_to_involution,
)
from .enumeration import (
    build_dec_inc_dec,
    count_avoid_132_213_dec_inc_dec,
    count_avoid231_avoid_layered,
    count_avoid231_contain_k21,
    count_avoid231_once_layered,
    count_avoid231_once_ones_block,
    count_one231,
    count_one231_avoid_k21,
    count_one231_contain_k21,
    gf_avoid231_avoid_layered,
    gf_avoid231_contain_k21,
    gf_avoid231_contain_k21_xy,
    gf_avoid231_once_layered,
    gf_fib_k,
    gf_one231_avoid_k21,
    gf_one231_avoid_layered,
    gf_one231_contain_k21,
    gf_one231_contain_k21_xy,
    gf_one231_once_layered,
)
from .fibonacci import count_bounded_tilings, fib_k
from .layered import (
    build_layered,
    decompose_layered,
    enumerate_compositions,
    enumerate_layered,
    count_pattern_in_layered,
    format_composition,
    gap_caps,
    parse_composition,
)
from .perms import (
    CapExceededError,
    count_occurrences,
    enumerate_involutions,
    is_involution,
    is_permutation,
    oracle_count,
    oracle_count_sn,
    reverse,
)
from .series import BiSeries, DEFAULT_TRUNC, UniSeries, geom_denominator

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "CapExceededError",
    "DEFAULT_TRUNC",
    "UniSeries",
    "build_dec_inc_dec",
    "build_layered",
    "count_avoid_132_213_dec_inc_dec",
    "count_avoid231_avoid_layered",
    "count_avoid231_contain_k21",
    "count_avoid231_once_layered",
    "count_avoid231_once_ones_block",
    "count_bounded_tilings",
    "count_occurrences",
    "count_one231",
    "count_one231_avoid_k21",
    "count_one231_contain_k21",
    "count_pattern_in_layered",
    "decompose_layered",
    "enumerate_compositions",
    "enumerate_involutions",
    "enumerate_layered",
    "enumerate_redblue",
    "fib_k",
    "format_composition",
    "format_tiling",
    "gap_caps",
    "geom_denominator",
    "gf_avoid231_avoid_layered",
    "gf_avoid231_contain_k21",
    "gf_avoid231_contain_k21_xy",
    "gf_avoid231_once_layered",
    "gf_fib_k",
    "gf_one231_avoid_k21",
    "gf_one231_avoid_layered",
    "gf_one231_contain_k21",
    "gf_one231_contain_k21_xy",
    "gf_one231_once_layered",
    "involution_to_tiling",
    "is_involution",
    "is_permutation",
    "oracle_count",
    "oracle_count_sn",
    "parse_composition",
    "parse_tiling",
    "reverse",
    "tiling_to_involution",
]
