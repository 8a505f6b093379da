"""Truncated formal power series with exact integer coefficients.

Univariate series in x are dense tuples of coefficients up to a truncation
order; bivariate series in (x, y) keep one sparse {y exponent: coefficient}
map per x degree, because the y exponents that show up here are binomials
that grow combinatorially while staying few in number.

All arithmetic is exact ring arithmetic modulo x^(N+1).  Operands with
different truncations combine at the smaller one.  Values are immutable;
share them freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

#: Default truncation order for generating functions; far past the range
#: any exhaustive cross-check can reach, yet instant to compute.
DEFAULT_TRUNC = 24


def _as_uni(value: UniSeries | int, trunc: int) -> UniSeries:
    if isinstance(value, UniSeries):
        return value
    return UniSeries.constant(int(value), trunc)


@dataclass(frozen=True)
class UniSeries:
    """A univariate series c_0 + c_1 x + ... + c_N x^N with exact integer
    coefficients, N = self.trunc."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("need exactly trunc+1 coefficients")

    @staticmethod
    def from_coeffs(coeffs: Sequence[int], trunc: int | None = None) -> UniSeries:
        """Series from low-order coefficients, zero-padded to trunc."""
        cs = [int(c) for c in coeffs]
        if trunc is None:
            trunc = max(len(cs) - 1, 0)
        if len(cs) < trunc + 1:
            cs.extend([0] * (trunc + 1 - len(cs)))
        return UniSeries(trunc, tuple(cs[: trunc + 1]))

    @staticmethod
    def constant(c: int, trunc: int) -> UniSeries:
        return UniSeries.from_coeffs([c], trunc)

    @staticmethod
    def zero(trunc: int) -> UniSeries:
        return UniSeries.constant(0, trunc)

    @staticmethod
    def one(trunc: int) -> UniSeries:
        return UniSeries.constant(1, trunc)

    @staticmethod
    def x_power(j: int, trunc: int) -> UniSeries:
        """The monomial x^j (zero series if j exceeds the truncation)."""
        if j < 0:
            raise ValueError("exponent must be nonnegative")
        coeffs = [0] * (trunc + 1)
        if j <= trunc:
            coeffs[j] = 1
        return UniSeries(trunc, tuple(coeffs))

    def coeff(self, n: int) -> int:
        """Coefficient of x^n; asking past the truncation is an error,
        never a silent zero."""
        if not 0 <= n <= self.trunc:
            raise IndexError(
                f"coefficient {n} outside truncation order {self.trunc}")
        return self.coeffs[n]

    def truncate(self, trunc: int) -> UniSeries:
        if trunc >= self.trunc:
            return self
        return UniSeries(trunc, self.coeffs[: trunc + 1])

    def __add__(self, other: UniSeries | int) -> UniSeries:
        other = _as_uni(other, self.trunc)
        n = min(self.trunc, other.trunc)
        return UniSeries(n, tuple(a + b for a, b in
                                  zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> UniSeries:
        return UniSeries(self.trunc, tuple(-a for a in self.coeffs))

    def __sub__(self, other: UniSeries | int) -> UniSeries:
        return self + (-_as_uni(other, self.trunc))

    def __rsub__(self, other: int) -> UniSeries:
        return _as_uni(other, self.trunc) - self

    def __mul__(self, other: UniSeries | int) -> UniSeries:
        if isinstance(other, int):
            return UniSeries(self.trunc, tuple(other * a for a in self.coeffs))
        n = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return UniSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> UniSeries:
        if e < 0:
            raise ValueError("negative powers go through reciprocal()")
        result = UniSeries.one(self.trunc)
        for _ in range(e):
            result = result * self
        return result

    def reciprocal(self) -> UniSeries:
        """The series b with self * b = 1 up to truncation.

        Requires constant term 1 or -1; solved coefficient by coefficient.
        """
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"reciprocal needs constant term 1 or -1, got {c0}")
        n = self.trunc
        out = [0] * (n + 1)
        out[0] = c0
        for m in range(1, n + 1):
            acc = 0
            for i in range(1, m + 1):
                ai = self.coeffs[i]
                if ai:
                    acc += ai * out[m - i]
            out[m] = -c0 * acc
        return UniSeries(n, tuple(out))

    def __truediv__(self, other: UniSeries) -> UniSeries:
        return self * other.reciprocal()

    def to_text(self) -> str:
        """Human form 'c0 + c1*x + c2*x^2 + ...' with zero terms skipped."""
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "x" if n == 1 else f"x^{n}"
                term = ("-" if c < 0 else "") + mag + var
                if parts and c > 0:
                    term = "+ " + term
                elif parts:
                    term = "- " + term[1:]
            parts.append(term)
        return " ".join(parts) if parts else "0"

    def to_jsonable(self) -> dict:
        """Lossless JSON form: coefficients as decimal strings."""
        return {"trunc": self.trunc,
                "coeffs": [str(c) for c in self.coeffs]}


def geom_denominator(k: int, trunc: int = DEFAULT_TRUNC) -> UniSeries:
    """The polynomial 1 - x - x^2 - ... - x^k as a series.

    k = 0 leaves the empty sum, i.e. the constant 1.

    >>> geom_denominator(1, 3).coeffs
    (1, -1, 0, 0)
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for j in range(1, min(k, trunc) + 1):
        coeffs[j] = -1
    return UniSeries(trunc, tuple(coeffs))


def _clean_level(level: Mapping[int, int]) -> dict[int, int]:
    out = {}
    for e, c in level.items():
        if e < 0:
            raise ValueError("y exponents must be nonnegative")
        if c:
            out[int(e)] = int(c)
    return out


@dataclass(frozen=True)
class BiSeries:
    """A bivariate series sum_n sum_r c_{n,r} x^n y^r, truncated in x only.

    levels[n] maps y exponents to nonzero coefficients; y exponents are
    exact integers of any size.  Treat instances as immutable: the level
    dicts are never mutated after construction.
    """

    trunc: int
    levels: tuple[dict[int, int], ...]

    def __post_init__(self) -> None:
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.levels) != self.trunc + 1:
            raise ValueError("need exactly trunc+1 levels")

    @staticmethod
    def from_terms(terms: Iterable[tuple[int, int, int]], trunc: int) -> BiSeries:
        """Series from (x exponent, y exponent, coefficient) triples;
        terms past the truncation are dropped, duplicates accumulate."""
        levels: list[dict[int, int]] = [{} for _ in range(trunc + 1)]
        for xe, ye, c in terms:
            if xe < 0:
                raise ValueError("x exponents must be nonnegative")
            if xe <= trunc and c:
                levels[xe][ye] = levels[xe].get(ye, 0) + c
        return BiSeries(trunc, tuple(_clean_level(lv) for lv in levels))

    @staticmethod
    def constant(c: int, trunc: int) -> BiSeries:
        return BiSeries.from_terms([(0, 0, c)], trunc)

    @staticmethod
    def from_uni(series: UniSeries) -> BiSeries:
        return BiSeries.from_terms(
            ((n, 0, c) for n, c in enumerate(series.coeffs)), series.trunc)

    def coeff(self, n: int, r: int) -> int:
        """Coefficient of x^n y^r; n past the truncation is an error,
        absent sparse entries are 0."""
        if not 0 <= n <= self.trunc:
            raise IndexError(
                f"coefficient {n} outside truncation order {self.trunc}")
        if r < 0:
            raise ValueError("y exponent must be nonnegative")
        return self.levels[n].get(r, 0)

    def truncate(self, trunc: int) -> BiSeries:
        if trunc >= self.trunc:
            return self
        return BiSeries(trunc, tuple(dict(lv) for lv in self.levels[: trunc + 1]))

    def __add__(self, other: BiSeries) -> BiSeries:
        n = min(self.trunc, other.trunc)
        levels = []
        for i in range(n + 1):
            merged = dict(self.levels[i])
            for e, c in other.levels[i].items():
                merged[e] = merged.get(e, 0) + c
            levels.append(_clean_level(merged))
        return BiSeries(n, tuple(levels))

    def __neg__(self) -> BiSeries:
        return BiSeries(self.trunc, tuple({e: -c for e, c in lv.items()}
                                          for lv in self.levels))

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other: BiSeries | int) -> BiSeries:
        if isinstance(other, int):
            if other == 0:
                return BiSeries.constant(0, self.trunc)
            return BiSeries(self.trunc,
                            tuple({e: other * c for e, c in lv.items()}
                                  for lv in self.levels))
        n = min(self.trunc, other.trunc)
        levels: list[dict[int, int]] = [{} for _ in range(n + 1)]
        for i in range(n + 1):
            lv_a = self.levels[i]
            if not lv_a:
                continue
            for j in range(n + 1 - i):
                lv_b = other.levels[j]
                if not lv_b:
                    continue
                target = levels[i + j]
                for ea, ca in lv_a.items():
                    for eb, cb in lv_b.items():
                        e = ea + eb
                        target[e] = target.get(e, 0) + ca * cb
        return BiSeries(n, tuple(_clean_level(lv) for lv in levels))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiSeries:
        if e < 0:
            raise ValueError("negative powers go through reciprocal()")
        result = BiSeries.constant(1, self.trunc)
        for _ in range(e):
            result = result * self
        return result

    def reciprocal(self) -> BiSeries:
        """Inverse up to x truncation; needs the x^0 slice to be exactly
        the constant 1 or -1 (true of every denominator handled here)."""
        lv0 = self.levels[0]
        if set(lv0) not in ({0}, set()) or lv0.get(0, 0) not in (1, -1):
            raise ValueError(
                "reciprocal needs the (x^0, y^0) term to be 1 or -1 and "
                "no other x^0 terms")
        c0 = lv0[0]
        n = self.trunc
        out: list[dict[int, int]] = [{0: c0}]
        for m in range(1, n + 1):
            acc: dict[int, int] = {}
            for i in range(1, m + 1):
                lv_a = self.levels[i]
                if not lv_a:
                    continue
                lv_b = out[m - i]
                for ea, ca in lv_a.items():
                    for eb, cb in lv_b.items():
                        e = ea + eb
                        acc[e] = acc.get(e, 0) + ca * cb
            out.append(_clean_level({e: -c0 * c for e, c in acc.items()}))
        return BiSeries(n, tuple(out))

    def eval_y_one(self) -> UniSeries:
        """Specialize y = 1 by summing each x level's sparse map."""
        return UniSeries(self.trunc,
                         tuple(sum(lv.values()) for lv in self.levels))

    def terms(self) -> Iterator[tuple[int, int, int]]:
        """Nonzero (x exponent, y exponent, coefficient) triples in
        (x, then y) order."""
        for n, lv in enumerate(self.levels):
            for e in sorted(lv):
                yield n, e, lv[e]

    def to_jsonable(self) -> dict:
        return {"trunc": self.trunc,
                "levels": [[{"y_exp": e, "coeff": str(lv[e])}
                            for e in sorted(lv)] for lv in self.levels]}
