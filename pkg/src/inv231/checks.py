"""Named verification sweeps tying every closed form to a brute-force oracle.

Each check sweeps one identity over an explicit range and reports pass or
fail with the first counterexample.  The stated range of a check is the
largest size the identity is validated at by the package's own acceptance
suite; the CLI can lower (never raise) it via --n-max.

Checks are deterministic: sweeps run in a fixed order and the randomized
series checks use a fixed seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import bijection, enumeration, fibonacci, layered, perms
from .perms import _count_occurrences
from .series import BiSeries, DEFAULT_TRUNC, UniSeries, geom_denominator

P231 = (2, 3, 1)
P312 = (3, 1, 2)
P132 = (1, 3, 2)
P213 = (2, 1, 3)
P123 = (1, 2, 3)

ONCE_LAYERED_PATTERNS = ((2, 2), (1, 4), (3, 2), (2, 1, 2), (1, 1, 3))
AVOID_LAYERED_PATTERNS = ((4,), (5,), (1, 4), (4, 1), (4, 2), (2, 4))
ONE231_ONCE_PATTERNS = ((4,), (4, 1), (1, 4), (5,))


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    scope: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    stated_n: int
    run: Callable[[int, int], CheckResult]


def _desc_pattern(k: int) -> tuple[int, ...]:
    """The decreasing pattern k..21 as a permutation."""
    return tuple(range(k, 0, -1))


def _sn_avoiders(n: int, patterns: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All of S_n avoiding every given pattern, by streaming brute force."""
    pats = [tuple(t) for t in patterns]
    out = []
    for p in itertools.permutations(range(1, n + 1)):
        if all(_count_occurrences(p, t, cap=0) == 0 for t in pats):
            out.append(p)
    return out


def _first_failure(check_id: str, scope: str,
                   failures: Iterable[str]) -> CheckResult:
    for failure in failures:
        return CheckResult(check_id, scope, False, failure)
    return CheckResult(check_id, scope, True)


# --- generalized Fibonacci -------------------------------------------------

def _check_fib_tilings(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in range(1, 6):
            for n in range(0, n_max + 1):
                got = fibonacci.count_bounded_tilings(n, k)
                want = fibonacci.fib_k(k, n + 1)
                if got != want:
                    yield f"k={k} n={n}: tilings={got} fib={want}"
    return _first_failure("fib-tilings", f"k<=5, n<={n_max}", sweep())


def _check_fib_gf(n_max: int, trunc: int) -> CheckResult:
    top = min(n_max, trunc)
    def sweep():
        for k in range(1, 6):
            gf = enumeration.gf_fib_k(k, trunc)
            for n in range(0, top + 1):
                if gf.coeff(n) != fibonacci.fib_k(k, n):
                    yield (f"k={k} n={n}: series={gf.coeff(n)} "
                           f"fib={fibonacci.fib_k(k, n)}")
    return _first_failure("fib-gf", f"k<=5, n<={top}", sweep())


def _check_fib_all_parts(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(1, n_max + 1):
            for k in (n, n + 1, n + 3):
                if fibonacci.fib_k(k, n + 1) != 2 ** (n - 1):
                    yield f"k={k} n={n}: fib={fibonacci.fib_k(k, n + 1)}"
    return _first_failure("fib-all-parts", f"k>=n, n<={n_max}", sweep())


def _check_fib_monotone(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in range(0, 7):
            for n in range(1, n_max + 1):
                if fibonacci.fib_k(k, n) > fibonacci.fib_k(k + 1, n):
                    yield f"k={k} n={n}"
    return _first_failure("fib-monotone", f"k<=6, n<={n_max}", sweep())


# --- permutations and involutions ------------------------------------------

def _check_involution_recurrence(n_max: int, trunc: int) -> CheckResult:
    counts = [len(list(perms.enumerate_involutions(n)))
              for n in range(0, n_max + 1)]
    def sweep():
        for n in range(2, n_max + 1):
            want = counts[n - 1] + (n - 1) * counts[n - 2]
            if counts[n] != want:
                yield f"n={n}: enumerated={counts[n]} recurrence={want}"
    return _first_failure("involution-recurrence", f"n<={n_max}", sweep())


def _check_symmetry_231_312(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            for p in perms.enumerate_involutions(n):
                a = perms.count_occurrences(p, P231)
                b = perms.count_occurrences(p, P312)
                if a != b:
                    yield f"n={n} perm={p}: count231={a} count312={b}"
    return _first_failure("symmetry-231-312", f"all involutions, n<={n_max}",
                          sweep())


def _check_layered_characterization(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            images = {layered.build_layered(c)
                      for c in layered.enumerate_compositions(n)}
            avoid231 = set(perms.involutions_avoiding_231(n))
            avoid312 = {p for p in perms._involutions(n, perms.DEFAULT_INVOLUTION_CAP)
                        if _count_occurrences(p, P312, cap=0) == 0}
            if images != avoid231:
                yield f"n={n}: layered images != 231-avoiding involutions"
                return
            if images != avoid312:
                yield f"n={n}: layered images != 312-avoiding involutions"
                return
            both = len(_sn_avoiders(n, (P231, P312)))
            if both != len(images):
                yield (f"n={n}: |S_n(231,312)|={both} layered={len(images)}")
                return
            bad = next((p for p in images
                        if _count_occurrences(p, P231, cap=0)
                        or _count_occurrences(p, P312, cap=0)), None)
            if bad is not None:
                yield f"n={n}: layered image {bad} contains 231 or 312"
    return _first_failure("layered-characterization",
                          f"n<={n_max} (S_n swept too)", sweep())


def _check_avoider_power2(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(1, n_max + 1):
            got = len(perms.involutions_avoiding_231(n))
            if got != 2 ** (n - 1):
                yield f"n={n}: |avoiders|={got} expected={2 ** (n - 1)}"
    return _first_failure("avoider-power2", f"1<=n<={n_max}", sweep())


def _check_pair_reversal(n_max: int, trunc: int) -> CheckResult:
    small_patterns = [t for k in range(1, 5)
                      for t in itertools.permutations(range(1, k + 1))]
    def sweep():
        for n in range(0, n_max + 1):
            inv_base = [p for p in perms.involutions_avoiding_231(n)
                        if _count_occurrences(p, P312, cap=0) == 0]
            sn_base = _sn_avoiders(n, (P132, P213))
            for t in small_patterns:
                lhs = sum(1 for p in inv_base
                          if _count_occurrences(p, t, cap=0) == 0)
                rhs = sum(1 for p in sn_base
                          if _count_occurrences(p, perms.reverse(t), cap=0) == 0)
                if lhs != rhs:
                    yield (f"n={n} tau={t}: involution side={lhs} "
                           f"reversed 132/213 side={rhs}")
                    return
    return _first_failure("pair-reversal",
                          f"patterns up to length 4, n<={n_max}", sweep())


# --- layered machinery ------------------------------------------------------

def _check_layered_roundtrip(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            for c in layered.enumerate_compositions(n):
                back = layered.decompose_layered(layered.build_layered(c))
                if back != c:
                    yield f"composition {c}: decomposed to {back}"
                    return
    return _first_failure("layered-roundtrip", f"compositions of n<={n_max}",
                          sweep())


def _check_layered_pattern_counter(n_max: int, trunc: int) -> CheckResult:
    patterns = [c for total in range(0, 7)
                for c in layered.enumerate_compositions(total)]
    def sweep():
        for n in range(0, n_max + 1):
            for host in layered.enumerate_compositions(n):
                host_perm = layered.build_layered(host)
                for pat in patterns:
                    fast = layered.count_pattern_in_layered(host, pat)
                    slow = perms.count_occurrences(host_perm,
                                                   layered.build_layered(pat))
                    if fast != slow:
                        yield (f"host={host} pat={pat}: "
                               f"composition-level={fast} brute={slow}")
                        return
    return _first_failure("layered-pattern-counter",
                          f"hosts n<={n_max}, patterns total<=6", sweep())


def _check_layered_single_block(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            for host in layered.enumerate_compositions(n):
                for k in range(1, 6):
                    fast = layered.count_pattern_in_layered(host, (k,))
                    want = sum(enumeration.choose(part, k) for part in host)
                    if fast != want:
                        yield f"host={host} k={k}: {fast} != {want}"
                        return
    return _first_failure("layered-single-block",
                          f"hosts n<={n_max}, blocks k<=5", sweep())


# --- series engine ----------------------------------------------------------

def _random_unit_poly(rng: random.Random, trunc: int) -> UniSeries:
    coeffs = [rng.choice((1, -1))]
    coeffs.extend(rng.randint(-5, 5) for _ in range(trunc))
    return UniSeries.from_coeffs(coeffs, trunc)


def _check_series_reciprocal(n_max: int, trunc: int) -> CheckResult:
    rng = random.Random(777)
    top = min(n_max, 30)
    def sweep():
        for trial in range(40):
            a = _random_unit_poly(rng, top)
            if a * a.reciprocal() != UniSeries.one(top):
                yield f"univariate trial {trial}: a*recip(a) != 1"
                return
        for trial in range(10):
            terms = [(0, 0, rng.choice((1, -1)))]
            for _ in range(12):
                terms.append((rng.randint(1, 8), rng.randint(0, 10),
                              rng.randint(-3, 3)))
            b = BiSeries.from_terms(terms, 8)
            if b * b.reciprocal() != BiSeries.constant(1, 8):
                yield f"bivariate trial {trial}: b*recip(b) != 1"
                return
    return _first_failure("series-reciprocal",
                          f"seeded random polynomials, order<={top}", sweep())


def _check_series_ring_laws(n_max: int, trunc: int) -> CheckResult:
    rng = random.Random(778)
    top = min(n_max, 30)
    def sweep():
        for trial in range(40):
            a, b, c = (UniSeries.from_coeffs(
                [rng.randint(-6, 6) for _ in range(top + 1)], top)
                for _ in range(3))
            if (a + b) + c != a + (b + c):
                yield f"trial {trial}: addition not associative"
            elif (a * b) * c != a * (b * c):
                yield f"trial {trial}: multiplication not associative"
            elif a * (b + c) != a * b + a * c:
                yield f"trial {trial}: not distributive"
            elif a * b != b * a:
                yield f"trial {trial}: not commutative"
            else:
                continue
            return
    return _first_failure("series-ring-laws",
                          f"seeded random triples, order<={top}", sweep())


def _check_series_y1(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (2, 3, 4, 5):
            u = enumeration.gf_avoid231_contain_k21_xy(k, n_max).eval_y_one()
            for n in range(0, n_max + 1):
                want = 1 if n == 0 else 2 ** (n - 1)
                if u.coeff(n) != want:
                    yield f"k={k} n={n}: y=1 slice {u.coeff(n)} != {want}"
                    return
        for k in (4, 5):
            v = enumeration.gf_one231_contain_k21_xy(k, n_max).eval_y_one()
            for n in range(0, n_max + 1):
                if v.coeff(n) != enumeration.count_one231(n):
                    yield (f"k={k} n={n}: y=1 slice {v.coeff(n)} != "
                           f"{enumeration.count_one231(n)}")
                    return
    return _first_failure("series-y1-specialization", f"n<={n_max}", sweep())


# --- avoid 231, refined by a second pattern ---------------------------------

def _check_avoid231_contain_k21(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (2, 3, 4, 5):
            xy = enumeration.gf_avoid231_contain_k21_xy(k, trunc)
            pat = _desc_pattern(k)
            for r in range(0, min(k, 3) + 1):
                gf = enumeration.gf_avoid231_contain_k21(k, r, trunc)
                for n in range(0, trunc + 1):
                    cnt = enumeration.count_avoid231_contain_k21(n, k, r)
                    if cnt != gf.coeff(n) or cnt != xy.coeff(n, r):
                        yield (f"k={k} r={r} n={n}: gap sum={cnt} "
                               f"series={gf.coeff(n)} xy={xy.coeff(n, r)}")
                        return
                    if n <= n_max:
                        orc = perms.oracle_count(n, [(P231, 0), (pat, r)])
                        if cnt != orc:
                            yield (f"k={k} r={r} n={n}: formula={cnt} "
                                   f"oracle={orc}")
                            return
    return _first_failure("avoid231-contain-k21",
                          f"k in 2..5, r<=min(k,3), oracle n<={n_max}, "
                          f"duality n<={trunc}", sweep())


def _check_avoid231_once_layered(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for pat in ONCE_LAYERED_PATTERNS:
            gf = enumeration.gf_avoid231_once_layered(pat, trunc)
            perm = layered.build_layered(pat)
            for n in range(0, trunc + 1):
                cnt = enumeration.count_avoid231_once_layered(n, pat)
                if cnt != gf.coeff(n):
                    yield f"pat={list(pat)} n={n}: sum={cnt} series={gf.coeff(n)}"
                    return
                if n <= n_max:
                    orc = perms.oracle_count(n, [(P231, 0), (perm, 1)])
                    if cnt != orc:
                        yield f"pat={list(pat)} n={n}: formula={cnt} oracle={orc}"
                        return
    return _first_failure("avoid231-once-layered",
                          f"pattern set of 5, oracle n<={n_max}", sweep())


def _check_avoid231_once_ones_block(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (1, 2):
            for l in (1, 2, 3, 4):
                pat = (1,) * k + (l,)
                perm = layered.build_layered(pat)
                for n in range(0, n_max + 1):
                    got = enumeration.count_avoid231_once_ones_block(n, k, l)
                    via_gaps = enumeration.count_avoid231_once_layered(n, pat)
                    orc = perms.oracle_count(n, [(P231, 0), (perm, 1)])
                    if not got == via_gaps == orc:
                        yield (f"k={k} l={l} n={n}: fib={got} "
                               f"gaps={via_gaps} oracle={orc}")
                        return
    return _first_failure("avoid231-once-ones-block",
                          f"k<=2, l<=4, n<={n_max}", sweep())


def _check_avoid_both(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for pat in AVOID_LAYERED_PATTERNS + ((2, 1, 2),):
            perm = layered.build_layered(pat)
            for n in range(0, n_max + 1):
                fast = enumeration.count_avoid231_avoid_layered(n, pat)
                brute = sum(1 for c in layered.enumerate_compositions(n)
                            if layered.count_pattern_in_layered(c, pat) == 0)
                if fast != brute:
                    yield (f"pat={list(pat)} n={n}: state dp={fast} "
                           f"composition sweep={brute}")
                    return
                if n <= min(n_max, 10):
                    orc = perms.oracle_count(n, [(P231, 0), (perm, 0)])
                    if fast != orc:
                        yield f"pat={list(pat)} n={n}: dp={fast} oracle={orc}"
                        return
    return _first_failure("avoid-both-sweep",
                          f"compositions n<={n_max}, involution oracle "
                          f"n<={min(n_max, 10)}", sweep())


# --- exactly one 231 ---------------------------------------------------------

def _check_one231_count(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            tilings = list(bijection.enumerate_redblue(n))
            formula = enumeration.count_one231(n)
            orc = perms.oracle_count(n, [(P231, 1)])
            if not len(tilings) == formula == orc:
                yield (f"n={n}: tilings={len(tilings)} formula={formula} "
                       f"oracle={orc}")
                return
            if n >= 5:
                left = sum(1 for t in tilings if t[0][0] == bijection.RED)
                right = sum(1 for t in tilings if t[-1][0] == bijection.RED)
                interior = len(tilings) - left - right
                if (left != 2 ** (n - 5) or right != 2 ** (n - 5)
                        or interior != (n - 5) * 2 ** (n - 6)):
                    yield (f"n={n}: case split left={left} right={right} "
                           f"interior={interior}")
                    return
    return _first_failure("one231-count", f"n<={n_max}", sweep())


def _check_redblue_roundtrip(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            tilings = list(bijection.enumerate_redblue(n))
            images = [bijection.tiling_to_involution(t) for t in tilings]
            if len(set(images)) != len(images):
                yield f"n={n}: forward map not injective"
                return
            for t, img in zip(tilings, images):
                if _count_occurrences(img, P231, cap=1) != 1:
                    yield f"n={n}: image {img} lacks a unique 231"
                    return
                back = bijection.involution_to_tiling(img)
                if back != t:
                    yield (f"n={n}: {bijection.format_tiling(t)} -> {img} -> "
                           f"{bijection.format_tiling(back)}")
                    return
            if set(images) != set(perms.involutions_with_one_231(n)):
                yield f"n={n}: image set != involutions with one 231"
                return
    return _first_failure("redblue-roundtrip", f"n<={n_max}", sweep())


def _check_redblue_transport(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (3, 4, 5):
            pat = _desc_pattern(k)
            red_part = perms.count_occurrences(bijection.RED_BLOCK, pat)
            for n in range(0, n_max + 1):
                for t in bijection.enumerate_redblue(n):
                    structural = red_part + sum(
                        enumeration.choose(length, k)
                        for color, length in t if color == bijection.BLUE)
                    direct = perms.count_occurrences(
                        bijection.tiling_to_involution(t), pat)
                    if structural != direct:
                        yield (f"k={k} tiling={bijection.format_tiling(t)}: "
                               f"structural={structural} direct={direct}")
                        return
    return _first_failure("redblue-pattern-transport",
                          f"k in 3..5, n<={n_max}", sweep())


def _check_one231_avoid_k21(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (4, 5, 6):
            gf = enumeration.gf_one231_avoid_k21(k, trunc)
            pat = _desc_pattern(k)
            for n in range(0, trunc + 1):
                cnt = enumeration.count_one231_avoid_k21(n, k)
                if cnt != gf.coeff(n):
                    yield f"k={k} n={n}: convolution={cnt} series={gf.coeff(n)}"
                    return
                if n <= n_max:
                    orc = perms.oracle_count(n, [(P231, 1), (pat, 0)])
                    if cnt != orc:
                        yield f"k={k} n={n}: formula={cnt} oracle={orc}"
                        return
    return _first_failure("one231-avoid-k21",
                          f"k in 4..6, oracle n<={n_max}", sweep())


def _check_one231_avoid_layered(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for pat in AVOID_LAYERED_PATTERNS + ((1,), (2,), (3,)):
            gf = enumeration.gf_one231_avoid_layered(pat, trunc)
            perm = layered.build_layered(pat)
            if len(pat) == 1 and pat[0] <= 3:
                if any(gf.coeffs):
                    yield f"pat={list(pat)}: expected the zero series"
                    return
            for n in range(0, n_max + 1):
                orc = perms.oracle_count(n, [(P231, 1), (perm, 0)])
                if gf.coeff(n) != orc:
                    yield (f"pat={list(pat)} n={n}: recursion={gf.coeff(n)} "
                           f"oracle={orc}")
                    return
    return _first_failure("one231-avoid-layered",
                          f"pattern set of 6 plus tiny blocks, n<={n_max}",
                          sweep())


def _check_one231_avoid_unfold(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for l in (4, 5, 6):
            a = enumeration.gf_one231_avoid_layered((l,), trunc)
            b = enumeration.gf_one231_avoid_k21(l, trunc)
            if a.coeffs != b.coeffs:
                yield f"l={l}: recursion and closed form differ"
                return
    return _first_failure("one231-avoid-unfold",
                          f"single blocks l in 4..6, order {trunc}", sweep())


def _check_one231_contain_k21(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for k in (4, 5):
            xy = enumeration.gf_one231_contain_k21_xy(k, trunc)
            pat = _desc_pattern(k)
            for r in (0, 1, 2):
                gf = enumeration.gf_one231_contain_k21(k, r, trunc)
                for n in range(0, trunc + 1):
                    cnt = enumeration.count_one231_contain_k21(n, k, r)
                    if cnt != gf.coeff(n) or cnt != xy.coeff(n, r):
                        yield (f"k={k} r={r} n={n}: gap sum={cnt} "
                               f"series={gf.coeff(n)} xy={xy.coeff(n, r)}")
                        return
                    if n <= n_max:
                        orc = perms.oracle_count(n, [(P231, 1), (pat, r)])
                        if cnt != orc:
                            yield (f"k={k} r={r} n={n}: formula={cnt} "
                                   f"oracle={orc}")
                            return
    return _first_failure("one231-contain-k21",
                          f"k in 4..5, r<=2, oracle n<={n_max}", sweep())


def _check_one231_once_seed(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for l in (4, 5, 6, 7):
            a = enumeration.gf_one231_once_layered((l,), trunc)
            b = enumeration.gf_one231_contain_k21(l, 1, trunc)
            if a.coeffs != b.coeffs:
                yield f"l={l}: seed and closed form differ"
                return
        if any(enumeration.gf_one231_once_layered((2,), trunc).coeffs):
            yield "pat=[2]: expected the zero series"
    return _first_failure("one231-once-seed",
                          f"single blocks l in 4..7, order {trunc}", sweep())


def _check_one231_once_layered(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for pat in ONE231_ONCE_PATTERNS:
            gf = enumeration.gf_one231_once_layered(pat, trunc)
            perm = layered.build_layered(pat)
            for n in range(0, n_max + 1):
                orc = perms.oracle_count(n, [(P231, 1), (perm, 1)])
                if gf.coeff(n) != orc:
                    yield (f"pat={list(pat)} n={n}: recursion={gf.coeff(n)} "
                           f"oracle={orc}")
                    return
    return _first_failure("one231-once-layered",
                          f"patterns {[list(p) for p in ONE231_ONCE_PATTERNS]}, "
                          f"n<={n_max}", sweep())


def _check_linear_recurrences(n_max: int, trunc: int) -> CheckResult:
    """The avoid/once series for layered patterns obey linear recurrences
    whose characteristic polynomials are products of geometric denominators:
    multiplying by such a product must leave a polynomial, i.e. zero out
    every high-order coefficient."""
    def annihilated(series: UniSeries, denom: UniSeries, bound: int) -> bool:
        prod = series * denom
        return all(prod.coeff(n) == 0 for n in range(bound + 1, prod.trunc + 1))

    def sweep():
        for pat in AVOID_LAYERED_PATTERNS:
            m = len(pat)
            denom = geom_denominator(1, trunc) ** m
            for block in pat:
                denom = denom * geom_denominator(block - 1, trunc) ** 2
            deg = m + 2 * sum(block - 1 for block in pat)
            bound = deg + sum(pat) + 4
            if bound >= trunc:
                continue
            series = enumeration.gf_one231_avoid_layered(pat, trunc)
            if not annihilated(series, denom, bound):
                yield f"avoid pat={list(pat)}: no geometric recurrence"
                return
        for pat in ONE231_ONCE_PATTERNS:
            m = len(pat)
            denom = geom_denominator(1, trunc) ** m
            for block in pat:
                denom = denom * geom_denominator(block - 1, trunc) ** 3
            deg = m + 3 * sum(block - 1 for block in pat)
            bound = deg + sum(pat) + 4
            if bound >= trunc:
                continue
            series = enumeration.gf_one231_once_layered(pat, trunc)
            if not annihilated(series, denom, bound):
                yield f"once pat={list(pat)}: no geometric recurrence"
                return
    return _first_failure("geometric-recurrences",
                          f"series order {trunc}", sweep())


# --- the 132/213 side --------------------------------------------------------

def _check_dec_inc_dec(n_max: int, trunc: int) -> CheckResult:
    combos = [(a, b, c)
              for a in range(1, 4) for b in range(1, 4) for c in range(1, 4)
              if a + b + c <= 5]
    def sweep():
        for a, b, c in combos:
            perm = enumeration.build_dec_inc_dec(a, b, c)
            for n in range(0, n_max + 1):
                got = enumeration.count_avoid_132_213_dec_inc_dec(n, a, b, c)
                orc = perms.oracle_count_sn(
                    n, [(P132, 0), (P213, 0), (perm, 0)])
                if got != orc:
                    yield f"(a,b,c)=({a},{b},{c}) n={n}: formula={got} oracle={orc}"
                    return
    return _first_failure("dec-inc-dec",
                          f"a+b+c<=5, n<={n_max}", sweep())


def _check_fib_anchor(n_max: int, trunc: int) -> CheckResult:
    def sweep():
        for n in range(0, n_max + 1):
            got = perms.oracle_count_sn(n, [(P132, 0), (P213, 0), (P123, 0)])
            want = fibonacci.fib_k(2, n + 1)
            if got != want:
                yield f"n={n}: brute={got} fibonacci={want}"
                return
    return _first_failure("fib-anchor-132-213-123", f"n<={n_max}", sweep())


ALL_CHECKS: tuple[Check, ...] = (
    Check("fib-tilings", "bounded tilings equal generalized Fibonacci values",
          15, _check_fib_tilings),
    Check("fib-gf", "series x/(1-x-...-x^k) generates fib_k", 24,
          _check_fib_gf),
    Check("fib-all-parts", "unbounded parts give powers of two", 15,
          _check_fib_all_parts),
    Check("fib-monotone", "fib_k grows with the order k", 24,
          _check_fib_monotone),
    Check("involution-recurrence",
          "involution counts satisfy a(n)=a(n-1)+(n-1)a(n-2)", 10,
          _check_involution_recurrence),
    Check("symmetry-231-312",
          "every involution has equal 231 and 312 counts", 9,
          _check_symmetry_231_312),
    Check("layered-characterization",
          "231-avoiding involutions are exactly the layered permutations", 9,
          _check_layered_characterization),
    Check("avoider-power2", "2^(n-1) involutions avoid 231", 12,
          _check_avoider_power2),
    Check("pair-reversal",
          "double-avoider counts translate under reversal to the 132/213 side",
          9, _check_pair_reversal),
    Check("layered-roundtrip", "build/decompose invert each other", 12,
          _check_layered_roundtrip),
    Check("layered-pattern-counter",
          "composition-level occurrence counts match permutation-level brute "
          "force", 9, _check_layered_pattern_counter),
    Check("layered-single-block",
          "single-block patterns count by one binomial per block", 9,
          _check_layered_single_block),
    Check("series-reciprocal", "reciprocal is a two-sided inverse", 30,
          _check_series_reciprocal),
    Check("series-ring-laws", "series arithmetic satisfies the ring axioms",
          30, _check_series_ring_laws),
    Check("series-y1-specialization",
          "setting y=1 collapses bivariate series to their univariate sums",
          12, _check_series_y1),
    Check("avoid231-contain-k21",
          "avoid 231 with r copies of k..21: gap sum, series, bivariate, "
          "oracle", 10, _check_avoid231_contain_k21),
    Check("avoid231-once-layered",
          "avoid 231 with one copy of a layered pattern: sum, series, oracle",
          10, _check_avoid231_once_layered),
    Check("avoid231-once-ones-block",
          "singleton blocks then one block collapse to a Fibonacci value", 10,
          _check_avoid231_once_ones_block),
    Check("avoid-both-sweep",
          "avoid 231 and a layered pattern: state DP vs composition sweep vs "
          "oracle", 12, _check_avoid_both),
    Check("one231-count",
          "involutions with one 231: tilings, closed form, oracle, case "
          "split", 12, _check_one231_count),
    Check("redblue-roundtrip",
          "red/blue tilings biject with one-231 involutions", 12,
          _check_redblue_roundtrip),
    Check("redblue-pattern-transport",
          "decreasing-pattern counts transport through the bijection", 11,
          _check_redblue_transport),
    Check("one231-avoid-k21",
          "one 231 avoiding k..21: convolution, series, oracle", 11,
          _check_one231_avoid_k21),
    Check("one231-avoid-layered",
          "one 231 avoiding a layered pattern: recursion vs oracle", 11,
          _check_one231_avoid_layered),
    Check("one231-avoid-unfold",
          "single-block recursion reproduces the closed form", 24,
          _check_one231_avoid_unfold),
    Check("one231-contain-k21",
          "one 231 with r copies of k..21: gap sum, series, bivariate, "
          "oracle", 11, _check_one231_contain_k21),
    Check("one231-once-seed",
          "single-block seeds equal the r=1 closed form", 24,
          _check_one231_once_seed),
    Check("one231-once-layered",
          "one 231 with one copy of a layered pattern: recursion vs oracle",
          11, _check_one231_once_layered),
    Check("geometric-recurrences",
          "layered-pattern series obey geometric-denominator recurrences", 24,
          _check_linear_recurrences),
    Check("dec-inc-dec",
          "132/213 avoiders with a dec/inc/dec pattern match the S_n oracle",
          8, _check_dec_inc_dec),
    Check("fib-anchor-132-213-123",
          "S_n(132,213,123) is counted by Fibonacci numbers", 9,
          _check_fib_anchor),
)


def run_checks(n_max: int | None = None, trunc: int = DEFAULT_TRUNC,
               only: str | None = None) -> list[CheckResult]:
    """Run the verification suite and return one result per check.

    n_max caps every sweep (None runs each check at its stated range);
    `only` keeps just the checks whose id contains the given substring.
    """
    results = []
    for check in ALL_CHECKS:
        if only is not None and only not in check.check_id:
            continue
        effective = check.stated_n if n_max is None else min(n_max,
                                                             check.stated_n)
        results.append(check.run(effective, trunc))
    return results
