"""Equidimensional flag manifolds: presentations and series cross-checks.

The spaces are the flag manifolds of p-fold products,

    complex:  U(jp) / (U(j)^r x U((p-r)j))
    real:     SO(jp) / (SO(j)^r x SO((p-r)j))

for an odd prime p and 1 <= r <= p (r = p means p equal factors and no
complement).  Their F_p-cohomology is presented by the characteristic
classes of the r tautological rank-j bundles (factor index l = 1..r) and
of the complement (index l = 0), modulo the components of the product of
the total classes -- the image of the positive-degree cohomology of the
classifying space of the big group.

Two independent Poincare-series oracles guard the presentations:

* fibration_series_oracle -- the quotient of the product of the factor
  classifying series by the base classifying series, which is valid
  exactly when the Serre spectral sequence of the bundle collapses; the
  division must be exact with nonnegative coefficients, and the oracle
  raises SeriesDivisionError the moment it is not (this really happens:
  when jp is odd the real flag manifold is an odd-dimensional closed
  manifold, so for r in {p-1, p} its cohomology supports an odd-degree
  class beyond the presented range -- (real, j=3, r=3, p=3) diverges
  at degree 16);

* gaussian_multinomial -- the q-multinomial coefficient (in q = t^2)
  counting the complex flag cells, via the q-Pascal recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charclass import (
    FIELD_COMPLEX,
    FIELD_REAL,
    classifying_presentation,
    special_orthogonal,
    total_class,
    unitary,
)
from .galgebra import (
    EVEN,
    AlgebraPresentation,
    GeneratorSpec,
    Polynomial,
    StructuralError,
    check_odd_prime,
    quotient_dimension,
)

__all__ = [
    "SeriesDivisionError",
    "SeriesReport",
    "flag_presentation",
    "default_depth",
    "poincare_series",
    "fibration_series_oracle",
    "gaussian_multinomial",
]


class SeriesDivisionError(ArithmeticError):
    """A classifying-series division failed to be exact and nonnegative."""


@dataclass(frozen=True)
class SeriesReport:
    """A truncated Poincare series: coefficients[d] = dim of degree d."""

    source: str
    depth: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.depth + 1:
            raise StructuralError("series length does not match depth")

    def matches(self, other: "SeriesReport") -> bool:
        d = min(self.depth, other.depth)
        return self.coefficients[: d + 1] == other.coefficients[: d + 1]


def _check_flag_args(field: str, j: int, r: int, p: int) -> None:
    check_odd_prime(p)
    if field not in (FIELD_COMPLEX, FIELD_REAL):
        raise StructuralError(f"field must be complex/real, got {field!r}")
    if j < 1:
        raise StructuralError(f"factor rank j must be >= 1, got {j}")
    if not 1 <= r <= p:
        raise StructuralError(f"factor count r must satisfy 1 <= r <= {p}, got {r}")


def default_depth(j: int, p: int) -> int:
    """Default truncation for flag series comparisons."""
    return 2 * j * p


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


def _complex_flag(j: int, r: int, p: int) -> AlgebraPresentation:
    comp_rank = (p - r) * j
    gens: list[GeneratorSpec] = []
    for l in range(1, r + 1):
        gens += [GeneratorSpec(f"c{i}_{l}", 2 * i, EVEN) for i in range(1, j + 1)]
    gens += [GeneratorSpec(f"c{i}_0", 2 * i, EVEN) for i in range(1, comp_rank + 1)]
    gtuple = tuple(gens)

    def bundle_total(rank: int, label: int) -> Polynomial:
        out = Polynomial.one(gtuple, p)
        for i in range(1, rank + 1):
            out = out + Polynomial.generator(gtuple, p, f"c{i}_{label}")
        return out

    total = Polynomial.one(gtuple, p)
    for l in range(1, r + 1):
        total = total * bundle_total(j, l)
    if comp_rank:
        total = total * bundle_total(comp_rank, 0)

    rels = []
    for i in range(1, j * p + 1):
        comp = total.graded_component(2 * i)
        if not comp.is_zero():
            rels.append(comp)
    return AlgebraPresentation(p, gtuple, tuple(rels))


def _real_flag(j: int, r: int, p: int) -> AlgebraPresentation:
    comp_rank = (p - r) * j
    gens: list[GeneratorSpec] = []

    def block(rank: int, label: int) -> list[GeneratorSpec]:
        if rank == 0:
            return []
        if rank % 2 == 1:
            return [
                GeneratorSpec(f"p{i}_{label}", 4 * i, EVEN)
                for i in range(1, (rank - 1) // 2 + 1)
            ]
        out = [
            GeneratorSpec(f"p{i}_{label}", 4 * i, EVEN)
            for i in range(1, rank // 2)
        ]
        out.append(GeneratorSpec(f"e{rank}_{label}", rank, EVEN))
        return out

    for l in range(1, r + 1):
        gens += block(j, l)
    gens += block(comp_rank, 0)
    gtuple = tuple(gens)

    def bundle_total(rank: int, label: int) -> Polynomial:
        """Total Pontrjagin class of one factor (e^2 on top if rank even)."""
        out = Polynomial.one(gtuple, p)
        if rank % 2 == 1:
            top = (rank - 1) // 2
            for i in range(1, top + 1):
                out = out + Polynomial.generator(gtuple, p, f"p{i}_{label}")
        else:
            for i in range(1, rank // 2):
                out = out + Polynomial.generator(gtuple, p, f"p{i}_{label}")
            e = Polynomial.generator(gtuple, p, f"e{rank}_{label}")
            out = out + e * e
        return out

    total = Polynomial.one(gtuple, p)
    for l in range(1, r + 1):
        total = total * bundle_total(j, l)
    if comp_rank:
        total = total * bundle_total(comp_rank, 0)

    rels = []
    for i in range(1, (j * p) // 2 + 1):
        comp = total.graded_component(4 * i)
        if not comp.is_zero():
            rels.append(comp)

    if j % 2 == 0:
        # the big group is SO(jp) with jp even: its Euler class also maps in,
        # to the product of the factor Euler classes
        euler = Polynomial.one(gtuple, p)
        for l in range(1, r + 1):
            euler = euler * Polynomial.generator(gtuple, p, f"e{j}_{l}")
        if comp_rank:
            euler = euler * Polynomial.generator(gtuple, p, f"e{comp_rank}_0")
        rels.append(euler)

    return AlgebraPresentation(p, gtuple, tuple(rels))


def flag_presentation(field: str, j: int, r: int, p: int) -> AlgebraPresentation:
    """Presentation of the flag manifold of r rank-j factors (+ complement).

    Generators carry the factor index as a suffix (l = 1..r the factors,
    l = 0 the complement); relations are the positive-degree components
    of the product of the total classes, plus (real, j even) the product
    of the Euler classes.
    """
    _check_flag_args(field, j, r, p)
    if field == FIELD_COMPLEX:
        return _complex_flag(j, r, p)
    return _real_flag(j, r, p)


def poincare_series(pres: AlgebraPresentation, depth: int) -> SeriesReport:
    """Degreewise dimensions of a presented quotient, d = 0..depth."""
    if depth < 0:
        raise StructuralError("depth must be >= 0")
    coeffs = tuple(quotient_dimension(pres, d) for d in range(depth + 1))
    return SeriesReport("presentation", depth, coeffs)


# ---------------------------------------------------------------------------
# series oracles
# ---------------------------------------------------------------------------


def _series_mul(a: list[int], b: list[int], depth: int) -> list[int]:
    out = [0] * (depth + 1)
    for i, x in enumerate(a[: depth + 1]):
        if x:
            for k, y in enumerate(b[: depth + 1 - i]):
                if y:
                    out[i + k] += x * y
    return out


def _geometric(step: int, depth: int) -> list[int]:
    out = [0] * (depth + 1)
    for i in range(0, depth + 1, step):
        out[i] = 1
    return out


def _classifying_series(field: str, rank: int, depth: int) -> list[int]:
    """Poincare series of BU(rank) or BSO(rank) to the given depth."""
    out = [1] + [0] * depth
    if field == FIELD_COMPLEX:
        for i in range(1, rank + 1):
            out = _series_mul(out, _geometric(2 * i, depth), depth)
        return out
    if rank % 2 == 1:
        for i in range(1, (rank - 1) // 2 + 1):
            out = _series_mul(out, _geometric(4 * i, depth), depth)
    else:
        for i in range(1, rank // 2):
            out = _series_mul(out, _geometric(4 * i, depth), depth)
        out = _series_mul(out, _geometric(rank, depth), depth)
    return out


def fibration_series_oracle(
    field: str, j: int, r: int, p: int, depth: int
) -> SeriesReport:
    """Expected flag series from the collapsing fibration: the product of
    the factor classifying series divided by the base classifying series.

    Raises SeriesDivisionError if the division is inexact or produces a
    negative coefficient -- the signal that the cohomology cannot be
    concentrated in the degrees the presentation provides.
    """
    _check_flag_args(field, j, r, p)
    numerator = [1] + [0] * depth
    for _ in range(r):
        numerator = _series_mul(numerator, _classifying_series(field, j, depth), depth)
    comp_rank = (p - r) * j
    if comp_rank:
        numerator = _series_mul(
            numerator, _classifying_series(field, comp_rank, depth), depth
        )
    denominator = _classifying_series(field, j * p, depth)

    quotient = [0] * (depth + 1)
    for d in range(depth + 1):
        acc = numerator[d] - sum(
            quotient[i] * denominator[d - i] for i in range(d)
        )
        # denominator has constant term 1, so the division is term by term
        quotient[d] = acc
        if acc < 0:
            raise SeriesDivisionError(
                f"negative coefficient {acc} at degree {d} for "
                f"({field}, j={j}, r={r}, p={p}): the fibration does not "
                f"collapse through this degree"
            )
    return SeriesReport("fibration", depth, tuple(quotient))


def gaussian_multinomial(parts: list[int], depth: int) -> SeriesReport:
    """The q-multinomial [n; parts] as a t-series (q = t^2), n = sum(parts).

    Built from the q-Pascal recurrence for q-binomials:
    [m; k] = [m-1; k-1] + q^k [m-1; k].
    """
    if not parts or any((not isinstance(x, int)) or x < 1 for x in parts):
        raise StructuralError("parts must be a nonempty list of positive integers")

    def q_binomial(m: int, k: int) -> list[int]:
        table: dict[tuple[int, int], list[int]] = {}
        for mm in range(m + 1):
            table[(mm, 0)] = [1]
            table[(mm, mm)] = [1]
            for kk in range(1, min(mm, k) + 1):
                if kk == mm:
                    continue
                a = table[(mm - 1, kk - 1)]
                b = table[(mm - 1, kk)]
                shifted = [0] * kk + b
                size = max(len(a), len(shifted))
                table[(mm, kk)] = [
                    (a[i] if i < len(a) else 0) + (shifted[i] if i < len(shifted) else 0)
                    for i in range(size)
                ]
        return table[(m, k)]

    q_coeffs = [1]
    total = 0
    for part in parts:
        total += part
        g = q_binomial(total, part)
        out = [0] * (len(q_coeffs) + len(g) - 1)
        for i, x in enumerate(q_coeffs):
            for k, y in enumerate(g):
                out[i + k] += x * y
        q_coeffs = out

    t_coeffs = [0] * (depth + 1)
    for i, c in enumerate(q_coeffs):
        if 2 * i <= depth:
            t_coeffs[2 * i] = c
    return SeriesReport("gaussian", depth, tuple(t_coeffs))
