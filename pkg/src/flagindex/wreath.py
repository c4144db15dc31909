"""Wreath powers: the diagonal + induced normal form mod p.

Let B be an evenly graded polynomial base algebra over F_p (the
cohomology of a classifying space, or a free algebra on Chern roots) and
let the cyclic group of order p permute the factors of the p-fold tensor
power of B.  In the degrees that matter for index computations, the
equivariant cohomology of the power splits into two kinds of classes,
and this module implements their arithmetic:

* diagonal terms  P(m) * u^eps * v^j  -- the multiplicative p-th power
  of a base monomial m times classes u, v pulled back from the cyclic
  group (u exterior of degree 1, v polynomial of degree 2), with
  cohomological degree p*deg(m) + eps + 2j;

* induced terms  O(m_1 | ... | m_p)  -- transfers of non-diagonal tensor
  monomials, i.e. orbit sums over the p rotations.  Since p is prime,
  every non-diagonal orbit has exactly p elements; the orbit is recorded
  once, keyed by its lexicographically least rotation, with degree
  deg(m_1) + ... + deg(m_p).

The products follow the transfer calculus: diagonal terms multiply
componentwise (with u^2 = 0); positive-degree u, v classes annihilate
induced terms; P(m) rescales every slot of an induced term; and two
induced terms multiply by summing one factor over all rotations,
re-inducing each non-diagonal result and dropping diagonal ones.

On top of the arithmetic sit the p-th power map, the resulting mixing
classes z, and the characteristic classes of wreath powers of complex
and oriented real vector bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import comb
from typing import Iterable, Mapping

from .charclass import classifying_presentation, cyclic, special_orthogonal, total_class, unitary
from .galgebra import (
    EVEN,
    AlgebraPresentation,
    Monomial,
    Polynomial,
    StructuralError,
    mono_degree,
)

__all__ = [
    "TensorMonomial",
    "OrbitKey",
    "WreathClass",
    "wreath_base",
    "p_power",
    "transfer_i",
    "z_class",
    "wreath_mul",
    "wreath_degree_basis",
    "binomial_v_series",
    "wreath_total_chern_of",
    "wreath_chern",
    "wreath_pontrjagin",
    "wreath_euler",
    "restrict_to_point",
    "render_wreath_class",
]


def wreath_base(pres: AlgebraPresentation) -> AlgebraPresentation:
    """Validate a base presentation for wreath work: free and evenly graded."""
    if pres.relations:
        raise StructuralError("wreath base must be a free presentation")
    for g in pres.generators:
        if g.parity != EVEN:
            raise StructuralError(f"wreath base generator {g.name} must be even")
    return pres


@dataclass(frozen=True)
class TensorMonomial:
    """A p-tuple of base monomials, one per tensor slot."""

    slots: tuple[Monomial, ...]

    def rotations(self) -> list[tuple[Monomial, ...]]:
        s = self.slots
        return [s[l:] + s[:l] for l in range(len(s))]

    def is_diagonal(self) -> bool:
        return all(m == self.slots[0] for m in self.slots)


def _canonical_rotation(slots: tuple[Monomial, ...]) -> tuple[Monomial, ...]:
    best = slots
    for l in range(1, len(slots)):
        rot = slots[l:] + slots[:l]
        if rot < best:
            best = rot
    return best


@dataclass(frozen=True, order=True)
class OrbitKey:
    """Canonical representative of a non-diagonal rotation orbit."""

    slots: tuple[Monomial, ...]

    def __post_init__(self):
        if all(m == self.slots[0] for m in self.slots):
            raise StructuralError("diagonal tuple cannot key an orbit")
        if self.slots != _canonical_rotation(self.slots):
            raise StructuralError("orbit key must be the least rotation")

    @staticmethod
    def from_slots(slots: tuple[Monomial, ...]) -> "OrbitKey":
        return OrbitKey(_canonical_rotation(slots))


DiagKey = tuple[Monomial, int, int]  # (base monomial, eps in {0,1}, v power)


@dataclass(frozen=True)
class WreathClass:
    """A normal-form class: diagonal terms + induced orbit terms."""

    base: AlgebraPresentation
    diag: Mapping[DiagKey, int]
    free: Mapping[OrbitKey, int]

    @property
    def p(self) -> int:
        return self.base.p

    # -- construction --------------------------------------------------------

    @staticmethod
    def make(
        base: AlgebraPresentation,
        diag: Mapping[DiagKey, int] | None = None,
        free: Mapping[OrbitKey, int] | None = None,
    ) -> "WreathClass":
        wreath_base(base)
        p = base.p
        ngens = len(base.generators)
        d_clean: dict[DiagKey, int] = {}
        for (m, eps, j), c in (diag or {}).items():
            if eps not in (0, 1) or j < 0 or len(m.exps) != ngens:
                raise StructuralError(f"bad diagonal key {(m, eps, j)!r}")
            c %= p
            if c:
                d_clean[(m, eps, j)] = c
        f_clean: dict[OrbitKey, int] = {}
        for key, c in (free or {}).items():
            if not isinstance(key, OrbitKey):
                key = OrbitKey.from_slots(tuple(key))
            if len(key.slots) != p:
                raise StructuralError("orbit arity must equal p")
            for m in key.slots:
                if len(m.exps) != ngens:
                    raise StructuralError("orbit slot over wrong base")
            merged = (f_clean.get(key, 0) + c) % p  # keys may merge on canonicalization
            if merged:
                f_clean[key] = merged
            elif key in f_clean:
                del f_clean[key]
        return WreathClass(base, d_clean, f_clean)

    @staticmethod
    def zero(base: AlgebraPresentation) -> "WreathClass":
        return WreathClass.make(base)

    @staticmethod
    def unit(base: AlgebraPresentation) -> "WreathClass":
        one = Monomial.one(len(base.generators))
        return WreathClass.make(base, {(one, 0, 0): 1})

    @staticmethod
    def uv_term(base: AlgebraPresentation, eps: int, j: int, coeff: int = 1) -> "WreathClass":
        one = Monomial.one(len(base.generators))
        return WreathClass.make(base, {(one, eps, j): coeff})

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.diag and not self.free

    def _match(self, other: "WreathClass") -> None:
        if not isinstance(other, WreathClass):
            raise TypeError(f"expected WreathClass, got {type(other).__name__}")
        if other.base != self.base:
            raise StructuralError("wreath classes over different bases")

    def diag_degree(self, key: DiagKey) -> int:
        m, eps, j = key
        return self.p * mono_degree(self.base.generators, m) + eps + 2 * j

    def orbit_degree(self, key: OrbitKey) -> int:
        return sum(mono_degree(self.base.generators, m) for m in key.slots)

    def degrees(self) -> list[int]:
        ds = {self.diag_degree(k) for k in self.diag}
        ds |= {self.orbit_degree(k) for k in self.free}
        return sorted(ds)

    def homogeneous_component(self, d: int) -> "WreathClass":
        return WreathClass.make(
            self.base,
            {k: c for k, c in self.diag.items() if self.diag_degree(k) == d},
            {k: c for k, c in self.free.items() if self.orbit_degree(k) == d},
        )

    def diag_part(self) -> "WreathClass":
        return WreathClass.make(self.base, dict(self.diag), {})

    def free_part(self) -> "WreathClass":
        return WreathClass.make(self.base, {}, dict(self.free))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "WreathClass") -> "WreathClass":
        self._match(other)
        d = dict(self.diag)
        for k, c in other.diag.items():
            d[k] = d.get(k, 0) + c
        f = dict(self.free)
        for k, c in other.free.items():
            f[k] = f.get(k, 0) + c
        return WreathClass.make(self.base, d, f)

    def __neg__(self) -> "WreathClass":
        return self.scale(-1)

    def __sub__(self, other: "WreathClass") -> "WreathClass":
        return self + (-other)

    def scale(self, k: int) -> "WreathClass":
        return WreathClass.make(
            self.base,
            {key: c * k for key, c in self.diag.items()},
            {key: c * k for key, c in self.free.items()},
        )

    def __mul__(self, other: "WreathClass") -> "WreathClass":
        self._match(other)
        base = self.base
        p = self.p
        gens = base.generators
        diag_out: dict[DiagKey, int] = {}
        free_out: dict[tuple[Monomial, ...], int] = {}

        def mono_prod(a: Monomial, b: Monomial) -> Monomial:
            return Monomial(tuple(x + y for x, y in zip(a.exps, b.exps)))

        # diagonal x diagonal
        for (m1, e1, j1), c1 in self.diag.items():
            for (m2, e2, j2), c2 in other.diag.items():
                if e1 and e2:
                    continue  # u^2 = 0
                key = (mono_prod(m1, m2), e1 + e2, j1 + j2)
                diag_out[key] = diag_out.get(key, 0) + c1 * c2

        # diagonal x induced: only P(m) acts; u, v annihilate transfers
        def scaled(slots: tuple[Monomial, ...], m: Monomial) -> tuple[Monomial, ...]:
            return tuple(mono_prod(s, m) for s in slots)

        for okey, cf in self.free.items():
            for (m, eps, j), cd in other.diag.items():
                if eps or j:
                    continue
                slots = _canonical_rotation(scaled(okey.slots, m))
                free_out[slots] = free_out.get(slots, 0) + cf * cd
        for okey, cf in other.free.items():
            for (m, eps, j), cd in self.diag.items():
                if eps or j:
                    continue
                slots = _canonical_rotation(scaled(okey.slots, m))
                free_out[slots] = free_out.get(slots, 0) + cf * cd

        # induced x induced: sum one factor over its rotations, re-induce
        for t, ct in self.free.items():
            ts = t.slots
            for s, cs in other.free.items():
                c = ct * cs
                ss = s.slots
                for l in range(p):
                    rot = ss[l:] + ss[:l]
                    prod = tuple(mono_prod(x, y) for x, y in zip(ts, rot))
                    if all(m == prod[0] for m in prod):
                        continue  # transfers of diagonal tuples vanish
                    key = _canonical_rotation(prod)
                    free_out[key] = free_out.get(key, 0) + c

        free_keys = {
            OrbitKey(k): c % p for k, c in free_out.items() if c % p
        }
        return WreathClass.make(base, diag_out, free_keys)


def wreath_mul(a: WreathClass, b: WreathClass) -> WreathClass:
    """Product in the normal form (see the module docstring for the rules)."""
    return a * b


# ---------------------------------------------------------------------------
# p-th powers, transfers, mixing classes
# ---------------------------------------------------------------------------


def _free_presentation(x: Polynomial) -> AlgebraPresentation:
    return wreath_base(AlgebraPresentation(x.p, x.gens, ()))


def p_power(x: Polynomial) -> WreathClass:
    """The multiplicative p-th power P(x) of a base class x.

    Expanding x^{tensor p} over the terms of x: diagonal words give
    P(m) with coefficient c^p = c, and each non-diagonal orbit of words
    contributes its orbit sum once, with the product of the slot
    coefficients (recorded at the least rotation -- mod p one cannot
    divide the p identical rotation contributions by p, so the orbit is
    never enumerated p times).
    """
    base = _free_presentation(x)
    p = x.p
    items = list(x.terms.items())
    diag = {(m, 0, 0): c for m, c in items}
    free: dict[OrbitKey, int] = {}
    if len(items) > 1:
        for word in iproduct(range(len(items)), repeat=p):
            first = word[0]
            if all(i == first for i in word):
                continue
            slots = tuple(items[i][0] for i in word)
            if slots != _canonical_rotation(slots):
                continue  # one representative per orbit
            coeff = 1
            for i in word:
                coeff = (coeff * items[i][1]) % p
            if coeff:
                key = OrbitKey(slots)
                free[key] = (free.get(key, 0) + coeff) % p
    return WreathClass.make(base, diag, free)


def transfer_i(
    base: AlgebraPresentation, t: TensorMonomial | tuple[Monomial, ...], coeff: int = 1
) -> WreathClass:
    """The transfer (induction) of a tensor monomial: the orbit sum for a
    non-diagonal tuple, zero for a diagonal one."""
    slots = t.slots if isinstance(t, TensorMonomial) else tuple(t)
    if len(slots) != base.p:
        raise StructuralError("tensor monomial arity must equal p")
    if all(m == slots[0] for m in slots):
        return WreathClass.zero(base)
    return WreathClass.make(base, {}, {OrbitKey.from_slots(slots): coeff})


def z_class(x: Polynomial) -> WreathClass:
    """The mixing class z(x) = P(x) - sum_d P(x_d) over the homogeneous
    components x_d of x.  Purely induced: all diagonal terms cancel."""
    out = p_power(x)
    for d in x.degrees():
        out = out - p_power(x.graded_component(d))
    return out


# ---------------------------------------------------------------------------
# degreewise bases
# ---------------------------------------------------------------------------


def _degree_term_keys(
    base: AlgebraPresentation, d: int
) -> tuple[list[DiagKey], list[OrbitKey]]:
    """All normal-form term keys of degree d, deterministically ordered."""
    from .galgebra import degree_basis  # local import to keep module tops light

    wreath_base(base)
    p = base.p
    cache: dict[int, list[Monomial]] = {}

    def basis(e: int) -> list[Monomial]:
        if e not in cache:
            cache[e] = degree_basis(base, e)
        return cache[e]

    diag_keys: list[DiagKey] = []
    e = 0
    while p * e <= d:
        rem = d - p * e
        eps = rem % 2
        j = (rem - eps) // 2
        for m in basis(e):
            diag_keys.append((m, eps, j))
        e += 2
    free_keys: list[OrbitKey] = []
    if d >= 2 and d % 2 == 0:
        words: list[tuple[Monomial, ...]] = []

        def rec(slot: int, remaining: int, acc: list[Monomial]) -> None:
            if slot == p - 1:
                for m in basis(remaining):
                    word = tuple(acc + [m])
                    if not all(x == word[0] for x in word):
                        if word == _canonical_rotation(word):
                            words.append(word)
                return
            for e2 in range(0, remaining + 1, 2):
                for m in basis(e2):
                    acc.append(m)
                    rec(slot + 1, remaining - e2, acc)
                    acc.pop()

        rec(0, d, [])
        free_keys = sorted(OrbitKey(w) for w in words)
    return diag_keys, free_keys


def wreath_degree_basis(base: AlgebraPresentation, d: int) -> list[WreathClass]:
    """Basis of the degree-d part of the normal form: the u^eps v^j multiples
    of diagonal classes first, then the induced orbit classes."""
    diag_keys, free_keys = _degree_term_keys(base, d)
    out = [WreathClass.make(base, {k: 1}) for k in diag_keys]
    out += [WreathClass.make(base, {}, {k: 1}) for k in free_keys]
    return out


# ---------------------------------------------------------------------------
# characteristic classes of wreath powers
# ---------------------------------------------------------------------------


def binomial_v_series(base: AlgebraPresentation, exponent: int) -> WreathClass:
    """(1 + v^{p-1})^exponent as a diagonal class."""
    if exponent < 0:
        raise StructuralError("negative binomial exponent")
    p = base.p
    one = Monomial.one(len(base.generators))
    diag = {
        (one, 0, (p - 1) * s): comb(exponent, s) % p
        for s in range(exponent + 1)
    }
    return WreathClass.make(base, diag)


def wreath_total_chern_of(total: Polynomial, rank: int) -> WreathClass:
    """Total Chern class of the wreath power of a rank-`rank` complex bundle
    with total Chern class `total`:

        sum_{0<=r<=rank} P(total_2r) (1 + v^{p-1})^{rank-r}  +  z(total).

    Assembled as P(total) + sum_r P(total_2r) ((1+v^{p-1})^{rank-r} - 1),
    which is the same sum with z expanded.
    """
    base = _free_presentation(total)
    out = p_power(total)
    for r in range(rank + 1):
        comp = total.graded_component(2 * r)
        if comp.is_zero():
            continue
        bump = binomial_v_series(base, rank - r) - WreathClass.unit(base)
        out = out + p_power(comp) * bump
    return out


def wreath_chern(n: int, p: int, max_degree: int | None = None) -> dict[int, WreathClass]:
    """Chern classes c_k of the wreath power of the universal rank-n complex
    bundle, for 2k <= max_degree (default: all k = 1..pn)."""
    if max_degree is None:
        max_degree = 2 * p * n
    total = total_class(unitary(n), p)
    w = wreath_total_chern_of(total, n)
    kmax = min(p * n, max_degree // 2)
    return {k: w.homogeneous_component(2 * k) for k in range(1, kmax + 1)}


def wreath_pontrjagin(
    n: int, p: int, max_degree: int | None = None
) -> dict[int, WreathClass]:
    """Pontrjagin classes p_i of the wreath power of the universal oriented
    rank-n real bundle:

        p_i = (-1)^i [ sum_r (-1)^r P(tp_4r) (1+v^{p-1})^{n-2r} ]_{4i}
              + z_{4i}(tp),

    tp the total Pontrjagin class (with e_n^2 on top for n even), for
    4i <= max_degree (default: all i = 1..floor(pn/2))."""
    if max_degree is None:
        max_degree = 4 * ((p * n) // 2)
    tp = total_class(special_orthogonal(n), p)
    base = _free_presentation(tp)
    s = WreathClass.zero(base)
    for r in range(n // 2 + 1):
        comp = tp.graded_component(4 * r)
        if comp.is_zero():
            continue
        term = p_power(comp) * binomial_v_series(base, n - 2 * r)
        s = s + (term if r % 2 == 0 else -term)
    zc = z_class(tp)
    imax = min((p * n) // 2, max_degree // 4)
    out: dict[int, WreathClass] = {}
    for i in range(1, imax + 1):
        si = s.homogeneous_component(4 * i)
        if i % 2 == 1:
            si = -si
        out[i] = si + zc.homogeneous_component(4 * i)
    return out


def wreath_euler(n: int, p: int) -> WreathClass:
    """Euler class of the wreath power of the universal oriented rank-n real
    bundle, n even: P(e_n)."""
    if n % 2 != 0:
        raise StructuralError("wreath Euler class needs even rank")
    tp_pres = classifying_presentation(special_orthogonal(n), p)
    return p_power(tp_pres.generator(f"e{n}"))


def restrict_to_point(w: WreathClass) -> Polynomial:
    """Restriction along a point inclusion: base classes die, u and v
    survive.  Returns a polynomial over the cyclic group presentation."""
    bcp = classifying_presentation(cyclic(), w.p)
    out = Polynomial.zero(bcp.generators, w.p)
    for (m, eps, j), c in w.diag.items():
        if m.is_one():
            term = Polynomial.make(
                bcp.generators, w.p, {Monomial((eps, j)): c}
            )
            out = out + term
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _mono_text(base: AlgebraPresentation, m: Monomial) -> str:
    parts = []
    for e, g in zip(m.exps, base.generators):
        if e == 0:
            continue
        parts.append(g.name if e == 1 else f"{g.name}^{e}")
    return "*".join(parts) if parts else "1"


def render_wreath_class(w: WreathClass) -> str:
    """Text form: diagonal terms `k*P(m)*u*v^j`, induced terms
    `k*O(m1|...|mp)`, ascending degree, diagonal before induced."""
    if w.is_zero():
        return "0"
    pieces: list[tuple[tuple, str]] = []
    for key in w.diag:
        m, eps, j = key
        factors = []
        if not m.is_one():
            factors.append(f"P({_mono_text(w.base, m)})")
        if eps:
            factors.append("u")
        if j:
            factors.append("v" if j == 1 else f"v^{j}")
        body = "*".join(factors)
        c = w.diag[key]
        text = str(c) if not body else f"{c}*{body}"
        pieces.append(((w.diag_degree(key), 0, m.exps, eps, j), text))
    for key in w.free:
        body = "|".join(_mono_text(w.base, m) for m in key.slots)
        text = f"{w.free[key]}*O({body})"
        pieces.append(((w.orbit_degree(key), 1, tuple(m.exps for m in key.slots), 0, 0), text))
    pieces.sort(key=lambda t: t[0])
    return " + ".join(text for _, text in pieces)
