"""Graded-commutative polynomial algebras over prime fields F_p.

Everything downstream lives inside finitely presented algebras

    F_p[g_1, ..., g_s] / (r_1, ..., r_t)

where each generator carries a cohomological degree and a parity.  Odd
generators anticommute and square to zero (the square-zero relations are
implicit and never stored); even generators are central.  p is an odd
prime.

Monomials are exponent tuples aligned with the generator list of the
ambient presentation, polynomials are sparse maps monomial -> nonzero
residue, and degreewise questions (bases, quotient dimensions, ideal
membership) reduce to Gaussian elimination over F_p on the monomial
basis of one degree at a time.  No Groebner machinery is needed: every
ideal we meet is inspected degree by degree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "EVEN",
    "ODD",
    "StructuralError",
    "FpElement",
    "GeneratorSpec",
    "Monomial",
    "Polynomial",
    "AlgebraPresentation",
    "mono_degree",
    "mono_mul",
    "poly_mul",
    "degree_basis",
    "quotient_dimension",
    "ideal_member",
    "render_polynomial",
    "parse_polynomial",
    "render_presentation",
    "parse_presentation",
]

EVEN = "even"
ODD = "odd"

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class StructuralError(ValueError):
    """Malformed algebraic data: mixed moduli, bad degrees, wrong generators..."""


def check_odd_prime(p: int) -> None:
    """Raise StructuralError unless p is an odd prime."""
    if not isinstance(p, int) or p < 3:
        raise StructuralError(f"modulus must be an odd prime, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise StructuralError(f"modulus must be an odd prime, got {p}")
        d += 1


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FpElement:
    """A residue in F_p.  Arithmetic insists both operands share the modulus."""

    value: int
    p: int

    def __post_init__(self):
        check_odd_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _match(self, other: "FpElement") -> None:
        if not isinstance(other, FpElement):
            raise TypeError(f"expected FpElement, got {type(other).__name__}")
        if other.p != self.p:
            raise StructuralError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other):
        self._match(other)
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other):
        self._match(other)
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other):
        self._match(other)
        return FpElement(self.value * other.value, self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        self._match(other)
        return self * other.inverse()


# ---------------------------------------------------------------------------
# generators and monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    """A named algebra generator with a cohomological degree and a parity."""

    name: str
    degree: int
    parity: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise StructuralError(f"bad generator name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise StructuralError(f"generator {self.name}: degree must be >= 1")
        if self.parity not in (EVEN, ODD):
            raise StructuralError(f"generator {self.name}: parity must be even/odd")
        if (self.degree % 2 == 0) != (self.parity == EVEN):
            raise StructuralError(
                f"generator {self.name}: degree {self.degree} "
                f"inconsistent with parity {self.parity}"
            )


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent tuple over the ambient (ordered) generator list."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if any((not isinstance(e, int)) or e < 0 for e in self.exps):
            raise StructuralError(f"bad exponent tuple {self.exps!r}")

    @staticmethod
    def one(ngens: int) -> "Monomial":
        return Monomial((0,) * ngens)

    def is_one(self) -> bool:
        return not any(self.exps)


def mono_degree(gens: tuple[GeneratorSpec, ...], m: Monomial) -> int:
    if len(m.exps) != len(gens):
        raise StructuralError("monomial does not match generator list")
    return sum(e * g.degree for e, g in zip(m.exps, gens))


def mono_mul(
    gens: tuple[GeneratorSpec, ...], a: Monomial, b: Monomial
) -> tuple[int, Monomial | None]:
    """Multiply monomials; return (Koszul sign, product) or (0, None).

    The product is zero exactly when an odd generator appears in both
    factors.  The sign counts the transpositions needed to merge the odd
    generators of b into those of a, i.e. (-1)^#{(i,j): b_i, a_j odd
    occupied, j > i}.
    """
    if len(a.exps) != len(gens) or len(b.exps) != len(gens):
        raise StructuralError("monomial does not match generator list")
    sign = 1
    odd_a = [i for i, g in enumerate(gens) if g.parity == ODD and a.exps[i]]
    if odd_a:
        for i, g in enumerate(gens):
            if g.parity != ODD or not b.exps[i]:
                continue
            if a.exps[i]:
                return 0, None
            # b's odd factor at slot i hops over a's odd factors beyond i
            hops = sum(1 for j in odd_a if j > i)
            if hops % 2:
                sign = -sign
    return sign, Monomial(tuple(x + y for x, y in zip(a.exps, b.exps)))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Sparse F_p polynomial over an ordered generator list.

    terms maps Monomial -> residue in 1..p-1; the zero polynomial has an
    empty map.  Use Polynomial.make (or the arithmetic operators) so the
    map is normalized.
    """

    gens: tuple[GeneratorSpec, ...]
    p: int
    terms: Mapping[Monomial, int]

    def __post_init__(self):
        check_odd_prime(self.p)
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate generator names in {names}")
        for m, c in self.terms.items():
            if len(m.exps) != len(self.gens):
                raise StructuralError("term does not match generator list")
            if not 1 <= c <= self.p - 1:
                raise StructuralError(f"non-normalized coefficient {c} mod {self.p}")
            for e, g in zip(m.exps, self.gens):
                if g.parity == ODD and e > 1:
                    raise StructuralError(
                        f"odd generator {g.name} with exponent {e}"
                    )

    # -- construction -------------------------------------------------------

    @staticmethod
    def make(
        gens: tuple[GeneratorSpec, ...], p: int, terms: Mapping[Monomial, int]
    ) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            c %= p
            if c:
                # odd squares vanish identically
                if any(
                    e > 1 and g.parity == ODD for e, g in zip(m.exps, gens)
                ):
                    continue
                clean[m] = c
        return Polynomial(gens, p, clean)

    @staticmethod
    def zero(gens: tuple[GeneratorSpec, ...], p: int) -> "Polynomial":
        return Polynomial(gens, p, {})

    @staticmethod
    def one(gens: tuple[GeneratorSpec, ...], p: int) -> "Polynomial":
        return Polynomial(gens, p, {Monomial.one(len(gens)): 1})

    @staticmethod
    def generator(gens: tuple[GeneratorSpec, ...], p: int, name: str) -> "Polynomial":
        for i, g in enumerate(gens):
            if g.name == name:
                exps = [0] * len(gens)
                exps[i] = 1
                return Polynomial(gens, p, {Monomial(tuple(exps)): 1})
        raise StructuralError(f"no generator named {name!r}")

    @staticmethod
    def constant(gens: tuple[GeneratorSpec, ...], p: int, c: int) -> "Polynomial":
        return Polynomial.make(gens, p, {Monomial.one(len(gens)): c})

    # -- inspection ----------------------------------------------------------

    def _match(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.p != self.p:
            raise StructuralError(f"mixed moduli {self.p} and {other.p}")
        if other.gens != self.gens:
            raise StructuralError("polynomials over different generator lists")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> FpElement:
        return FpElement(self.terms.get(m, 0), self.p)

    def degrees(self) -> list[int]:
        """Sorted distinct degrees with a nonzero component."""
        return sorted({mono_degree(self.gens, m) for m in self.terms})

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous polynomial (StructuralError otherwise)."""
        ds = self.degrees()
        if len(ds) != 1:
            raise StructuralError(f"not homogeneous (degrees {ds})")
        return ds[0]

    def graded_component(self, d: int) -> "Polynomial":
        picked = {
            m: c for m, c in self.terms.items() if mono_degree(self.gens, m) == d
        }
        return Polynomial(self.gens, self.p, picked)

    def max_degree(self) -> int:
        ds = self.degrees()
        return ds[-1] if ds else 0

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial.make(self.gens, self.p, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Polynomial.make(self.gens, self.p, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial.make(
            self.gens, self.p, {m: -c for m, c in self.terms.items()}
        )

    def scale(self, k: int) -> "Polynomial":
        return Polynomial.make(
            self.gens, self.p, {m: c * k for m, c in self.terms.items()}
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._match(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = mono_mul(self.gens, m1, m2)
                if sign == 0:
                    continue
                out[m] = out.get(m, 0) + sign * c1 * c2
        return Polynomial.make(self.gens, self.p, out)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise StructuralError("negative power")
        out = Polynomial.one(self.gens, self.p)
        for _ in range(k):
            out = out * self
        return out


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Graded-commutative product (Koszul signs, odd squares vanish)."""
    return a * b


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraPresentation:
    """F_p[generators] / (relations), relations homogeneous of degree >= 1."""

    p: int
    generators: tuple[GeneratorSpec, ...]
    relations: tuple[Polynomial, ...]

    def __post_init__(self):
        check_odd_prime(self.p)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate generator names in {names}")
        for r in self.relations:
            if r.p != self.p or r.gens != self.generators:
                raise StructuralError("relation over wrong generator list")
            if r.is_zero():
                raise StructuralError("zero polynomial is not a relation")
            r.homogeneous_degree()  # raises if not homogeneous

    def generator(self, name: str) -> Polynomial:
        return Polynomial.generator(self.generators, self.p, name)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.generators, self.p)

    def one(self) -> Polynomial:
        return Polynomial.one(self.generators, self.p)

    def monomial(self, m: Monomial) -> Polynomial:
        return Polynomial(self.generators, self.p, {m: 1})


# ---------------------------------------------------------------------------
# degreewise linear algebra
# ---------------------------------------------------------------------------


def degree_basis(pres: AlgebraPresentation, d: int) -> list[Monomial]:
    """Monomials of degree d, graded-lex order (descending in the exponent
    of earlier generators), ignoring relations.  d < 0 gives []."""
    gens = pres.generators
    out: list[Monomial] = []
    n = len(gens)

    def rec(i: int, remaining: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Monomial(tuple(acc + [0] * (n - i))))
            return
        if i == n:
            return
        g = gens[i]
        cap = remaining // g.degree
        if g.parity == ODD:
            cap = min(cap, 1)
        for e in range(cap, -1, -1):
            acc.append(e)
            rec(i + 1, remaining - e * g.degree, acc)
            acc.pop()

    if d == 0:
        return [Monomial.one(n)]
    if d > 0:
        rec(0, d, [])
    return out


def _echelon(rows: list[list[int]], p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot cols)."""
    if not rows:
        return np.zeros((0, 0), dtype=np.int64), []
    a = np.array(rows, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _reduce_vector(
    ech: np.ndarray, pivots: list[int], vec: list[int], p: int
) -> np.ndarray:
    v = np.array(vec, dtype=np.int64) % p
    for row, c in zip(ech, pivots):
        if v[c]:
            v = (v - v[c] * row) % p
    return v


def _relation_rows(
    pres: AlgebraPresentation,
    d: int,
    extra: Iterable[Polynomial] = (),
) -> tuple[list[Monomial], dict[Monomial, int], list[list[int]]]:
    """Degree-d vectors spanning (relations + extra) * (all monomials)."""
    basis = degree_basis(pres, d)
    col = {m: i for i, m in enumerate(basis)}
    rows: list[list[int]] = []
    for rel in tuple(pres.relations) + tuple(extra):
        if rel.is_zero():
            continue
        e = rel.homogeneous_degree()
        if e > d:
            continue
        for m in degree_basis(pres, d - e):
            prod = rel * pres.monomial(m)
            if prod.is_zero():
                continue
            vec = [0] * len(basis)
            for mm, cc in prod.terms.items():
                vec[col[mm]] = cc
            rows.append(vec)
    return basis, col, rows


def quotient_dimension(pres: AlgebraPresentation, d: int) -> int:
    """dim_{F_p} of the degree-d part of the presented quotient algebra."""
    basis, _, rows = _relation_rows(pres, d)
    if not basis:
        return 0
    _, pivots = _echelon(rows, pres.p)
    return len(basis) - len(pivots)


def ideal_member(
    ideal_gens: Iterable[Polynomial], elt: Polynomial, pres: AlgebraPresentation
) -> bool:
    """Does elt lie in the ideal spanned by ideal_gens inside the quotient?

    elt must be homogeneous; membership is decided degreewise by row
    reduction against (relations + ideal_gens) * monomials.
    """
    gens = tuple(ideal_gens)
    for g in gens:
        if g.gens != pres.generators or g.p != pres.p:
            raise StructuralError("ideal generator over wrong presentation")
    if elt.gens != pres.generators or elt.p != pres.p:
        raise StructuralError("element over wrong presentation")
    if elt.is_zero():
        return True
    d = elt.homogeneous_degree()
    basis, col, rows = _relation_rows(pres, d, extra=gens)
    ech, pivots = _echelon(rows, pres.p)
    vec = [0] * len(basis)
    for m, c in elt.terms.items():
        vec[col[m]] = c
    return not _reduce_vector(ech, pivots, vec, pres.p).any()


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def _render_monomial(gens: tuple[GeneratorSpec, ...], m: Monomial) -> str:
    parts = []
    for e, g in zip(m.exps, gens):
        if e == 0:
            continue
        parts.append(g.name if e == 1 else f"{g.name}^{e}")
    return "*".join(parts) if parts else "1"


def render_polynomial(poly: Polynomial) -> str:
    """Canonical text: terms `k*g1^e1*g2^e2` joined by ` + `, graded order."""
    if poly.is_zero():
        return "0"
    keyed = sorted(
        poly.terms.items(),
        key=lambda mc: (
            mono_degree(poly.gens, mc[0]),
            tuple(-e for e in mc[0].exps),
        ),
    )
    out = []
    for m, c in keyed:
        body = _render_monomial(poly.gens, m)
        out.append(str(c) if body == "1" else f"{c}*{body}")
    return " + ".join(out)


_TERM_SPLIT_RE = re.compile(r"\s*\+\s*")
_FACTOR_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?\Z")


def parse_polynomial(
    text: str, gens: tuple[GeneratorSpec, ...], p: int
) -> Polynomial:
    """Parse the render_polynomial format (also accepts `·` for `*` and a
    leading `-` on a term)."""
    text = text.strip().replace("·", "*")
    if text in ("", "0"):
        return Polynomial.zero(gens, p)
    index = {g.name: i for i, g in enumerate(gens)}
    terms: dict[Monomial, int] = {}
    for raw in _TERM_SPLIT_RE.split(text):
        if not raw:
            raise StructuralError("empty term")
        negate = raw.startswith("-")
        if negate:
            raw = raw[1:].strip()
        coeff = 1
        exps = [0] * len(gens)
        for factor in raw.split("*"):
            factor = factor.strip()
            if not factor:
                raise StructuralError(f"bad term {raw!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            if factor == "1":
                continue
            match = _FACTOR_RE.match(factor)
            if not match or match.group(1) not in index:
                raise StructuralError(f"unknown factor {factor!r}")
            e = int(match.group(2)) if match.group(2) else 1
            exps[index[match.group(1)]] += e
        if negate:
            coeff = -coeff
        m = Monomial(tuple(exps))
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial.make(gens, p, terms)


def render_presentation(pres: AlgebraPresentation) -> str:
    """`gen <name> <degree> <parity>` lines, then `rel <polynomial>` lines."""
    lines = [
        f"gen {g.name} {g.degree} {g.parity}" for g in pres.generators
    ]
    lines += [f"rel {render_polynomial(r)}" for r in pres.relations]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str, p: int) -> AlgebraPresentation:
    gens: list[GeneratorSpec] = []
    rel_lines: list[str] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gen "):
            if rel_lines:
                raise StructuralError("gen line after rel lines")
            fields = line.split()
            if len(fields) != 4:
                raise StructuralError(f"bad gen line {line!r}")
            gens.append(GeneratorSpec(fields[1], int(fields[2]), fields[3]))
        elif line.startswith("rel "):
            rel_lines.append(line[4:])
        else:
            raise StructuralError(f"bad line {line!r}")
    gtuple = tuple(gens)
    rels = tuple(parse_polynomial(body, gtuple, p) for body in rel_lines)
    return AlgebraPresentation(p, gtuple, rels)
