"""Fadell-Husseini index of the rotation action on equidimensional flags.

The index is the kernel of the restriction from the cohomology of the
classifying space of the cyclic group to the cohomology of the homotopy
orbit space of the flag manifold.  Via the wreath-power model that kernel
is generated by the characteristic classes of the wreath power of the
universal bundle, so everything reduces to ideal membership questions in
the wreath normal form, decided degreewise by row reduction over F_p.

Contents:

* ``closed_form_index`` -- the expected answer, a small arithmetic table;
* ``compute_index`` -- the answer found by actually scanning degrees;
* ``verify_reduction_relations`` -- checks that each kernel generator
  reduces, modulo the previous ones, to one of four predicted shapes;
* ``sphere_index`` / ``shadow_bound`` -- the applied bound on how many
  copies of the reduced regular representation a flag can "shadow".
"""

from __future__ import annotations

import time
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
    AlgebraPresentation,
    StructuralError,
    _echelon,
    _reduce_vector,
    check_odd_prime,
)
from .wreath import (
    WreathClass,
    _degree_term_keys,
    p_power,
    render_wreath_class,
    wreath_chern,
    wreath_degree_basis,
    wreath_euler,
    wreath_pontrjagin,
    z_class,
)

VONLY = "VOnly"
UANDV = "UAndV"


class BoundExceededError(RuntimeError):
    """The degree scan ran out of budget without finding the index."""


def check_field(field: str) -> None:
    if field not in (FIELD_COMPLEX, FIELD_REAL):
        raise StructuralError(f"field must be complex or real, got {field!r}")


def decompose(p: int, n: int) -> tuple[int, int]:
    """Write n = p^a * q with p not dividing q; returns (a, q)."""
    check_odd_prime(p)
    if n < 1:
        raise StructuralError(f"rank must be positive, got {n}")
    a, q = 0, n
    while q % p == 0:
        q //= p
        a += 1
    return a, q


def _vpow_text(j: int) -> str:
    if j == 0:
        return ""
    if j == 1:
        return "v"
    return f"v^{j}"


@dataclass(frozen=True)
class IndexResult:
    """The index ideal: (v^l) for shape VOnly, (u*v^{l-1}, v^l) for UAndV."""

    shape: str
    l: int

    def __post_init__(self):
        if self.shape not in (VONLY, UANDV):
            raise StructuralError(f"bad index shape {self.shape!r}")
        if self.l < 1:
            raise StructuralError(f"index exponent must be positive, got {self.l}")

    @property
    def u_exponent(self) -> int:
        """Least t with u*v^{t-1} in the ideal."""
        return self.l if self.shape == UANDV else self.l + 1

    def ideal_text(self) -> str:
        v = _vpow_text(self.l) or "1"
        if self.shape == VONLY:
            return f"({v})"
        uv = "u" + ("*" + _vpow_text(self.l - 1) if self.l > 1 else "")
        return f"({uv}, {v})"

    def contains(self, other: "IndexResult") -> bool:
        """Ideal containment: every generator of `other` lies in `self`."""
        return other.l >= self.l and other.u_exponent >= self.u_exponent


def closed_form_index(p: int, n: int, field: str) -> IndexResult:
    """The index ideal as a closed form in (p, a, q, field).

    Complex flags always give UAndV(p^{a+1}).  Real flags give the same
    for even rank or odd rank with q > 1, and the smaller VOnly(p^{a+1}-1)
    for odd rank with q = 1 (the pure p-power case, n = p^a).
    """
    check_field(field)
    a, q = decompose(p, n)
    top = p ** (a + 1)
    if field == FIELD_COMPLEX or n % 2 == 0 or q > 1:
        return IndexResult(UANDV, top)
    return IndexResult(VONLY, top - 1)


def sphere_index(p: int, r: int) -> IndexResult:
    """Index of the unit sphere in r copies of the reduced regular
    representation: the principal ideal (v^{r(p-1)/2})."""
    check_odd_prime(p)
    if r < 1:
        raise StructuralError(f"need at least one copy, got {r}")
    return IndexResult(VONLY, r * (p - 1) // 2)


def kernel_generators(
    p: int, n: int, field: str, max_degree: int | None = None
) -> list[WreathClass]:
    """Generators of the restriction kernel: the characteristic classes of
    the p-fold wreath power of the universal rank-n bundle.

    Complex: the pn wreath Chern classes.  Real, n odd: the (pn-1)/2 wreath
    Pontrjagin classes.  Real, n even: the pn/2 wreath Pontrjagin classes
    plus the wreath Euler class.  `max_degree` truncates the list.
    """
    check_field(field)
    decompose(p, n)
    if field == FIELD_COMPLEX:
        table = wreath_chern(n, p, max_degree)
        return [table[k] for k in sorted(table)]
    table = wreath_pontrjagin(n, p, max_degree)
    out = [table[k] for k in sorted(table)]
    if n % 2 == 0 and (max_degree is None or p * n <= max_degree):
        out.append(wreath_euler(n, p))
    return out


# ---------------------------------------------------------------------------
# degreewise membership
# ---------------------------------------------------------------------------


class _DegreeSlice:
    """Coordinates on the degree-d piece of the wreath normal form."""

    def __init__(self, base: AlgebraPresentation, d: int):
        diag_keys, free_keys = _degree_term_keys(base, d)
        self.base = base
        self.d = d
        self.col: dict[tuple, int] = {}
        for k in diag_keys:
            self.col[("d", k)] = len(self.col)
        for k in free_keys:
            self.col[("f", k)] = len(self.col)
        self.dim = len(self.col)

    def vector(self, w: WreathClass) -> list[int]:
        vec = [0] * self.dim
        for k, c in w.diag.items():
            i = self.col.get(("d", k))
            if i is None:
                raise StructuralError(f"term of wrong degree in slice {self.d}")
            vec[i] = c
        for k, c in w.free.items():
            i = self.col.get(("f", k))
            if i is None:
                raise StructuralError(f"term of wrong degree in slice {self.d}")
            vec[i] = c
        return vec

    def unvector(self, vec) -> WreathClass:
        diag, free = {}, {}
        for (kind, key), i in self.col.items():
            c = int(vec[i])
            if not c:
                continue
            (diag if kind == "d" else free)[key] = c
        return WreathClass.make(self.base, diag, free)


class _MembershipTester:
    """Row spans of an ideal, built degree by degree, with cached bases."""

    def __init__(self, base: AlgebraPresentation, gens: list[WreathClass]):
        self.base = base
        self.p = base.p
        self.gens: list[tuple[WreathClass, int]] = []
        for g in gens:
            if g.is_zero():
                continue
            degs = g.degrees()
            if len(degs) != 1:
                raise StructuralError("kernel generators must be homogeneous")
            self.gens.append((g, degs[0]))
        self._basis_cache: dict[int, list[WreathClass]] = {}

    def _basis(self, d: int) -> list[WreathClass]:
        if d not in self._basis_cache:
            self._basis_cache[d] = wreath_degree_basis(self.base, d)
        return self._basis_cache[d]

    def slice_rows(self, d: int) -> tuple[_DegreeSlice, list[list[int]]]:
        sl = _DegreeSlice(self.base, d)
        rows: list[list[int]] = []
        for g, dg in self.gens:
            if dg > d:
                continue
            for b in self._basis(d - dg):
                prod = g * b
                if not prod.is_zero():
                    rows.append(sl.vector(prod))
        return sl, rows

    def contains(self, target: WreathClass, d: int) -> bool:
        sl, rows = self.slice_rows(d)
        ech, pivots = _echelon(rows, self.p)
        return not _reduce_vector(ech, pivots, sl.vector(target), self.p).any()


@dataclass(frozen=True)
class IndexScan:
    """Everything compute_index learned: the result plus scan bookkeeping."""

    p: int
    n: int
    field: str
    a: int
    q: int
    result: IndexResult
    generators_used: int
    degrees_scanned: int
    elapsed: float


def _scan_index(p: int, n: int, field: str, max_l: int | None = None) -> IndexScan:
    start = time.perf_counter()
    check_field(field)
    a, q = decompose(p, n)
    if max_l is None:
        max_l = 2 * p ** (a + 1)
    if max_l < 1:
        raise StructuralError(f"scan bound must be positive, got {max_l}")
    group = unitary(n) if field == FIELD_COMPLEX else special_orthogonal(n)
    base = classifying_presentation(group, p)
    gens = kernel_generators(p, n, field, max_degree=2 * max_l)
    tester = _MembershipTester(base, gens)

    l_u = None
    l_v = None
    tested = 0
    max_d = 0
    for l in range(1, max_l + 1):
        if l_u is None:
            d = 2 * l - 1
            if tester.contains(WreathClass.uv_term(base, 1, l - 1), d):
                l_u = l
            tested += 1
            max_d = max(max_d, d)
        if l_v is None:
            d = 2 * l
            if tester.contains(WreathClass.uv_term(base, 0, l), d):
                l_v = l
            tested += 1
            max_d = max(max_d, d)
        if l_u is not None and l_v is not None:
            break
    if l_u is None or l_v is None:
        raise BoundExceededError(
            f"no index of the expected shape with l <= {max_l} "
            f"(found l_u={l_u}, l_v={l_v})"
        )
    if l_u == l_v:
        result = IndexResult(UANDV, l_v)
    elif l_u == l_v + 1:
        result = IndexResult(VONLY, l_v)
    else:
        raise StructuralError(
            f"membership pattern (l_u={l_u}, l_v={l_v}) matches neither "
            "ideal shape; the scan machinery is inconsistent"
        )
    used = sum(1 for _, dg in tester.gens if dg <= max_d)
    return IndexScan(
        p=p,
        n=n,
        field=field,
        a=a,
        q=q,
        result=result,
        generators_used=used,
        degrees_scanned=tested,
        elapsed=time.perf_counter() - start,
    )


def compute_index(p: int, n: int, field: str, max_l: int | None = None) -> IndexResult:
    """Find the index by degreewise ideal membership.

    Scans l = 1, 2, ... testing u*v^{l-1} and v^l against the kernel ideal,
    and assembles the answer from the two least exponents found.  Raises
    BoundExceededError past max_l (default 2*p^{a+1}) and StructuralError
    if the memberships do not fit either ideal shape.
    """
    return _scan_index(p, n, field, max_l).result


def index_report(p: int, n: int, field: str, max_l: int | None = None) -> dict:
    """compute_index plus bookkeeping, as a plain JSON-friendly record."""
    scan = _scan_index(p, n, field, max_l)
    return {
        "p": scan.p,
        "n": scan.n,
        "field": scan.field,
        "a": scan.a,
        "q": scan.q,
        "shape": scan.result.shape,
        "l": scan.result.l,
        "generatorsUsed": scan.generators_used,
        "degreesScanned": scan.degrees_scanned,
        "elapsed": scan.elapsed,
    }


# ---------------------------------------------------------------------------
# reduction-relation shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    k: int
    degree: int
    family: str
    ok: bool
    alpha: int | None
    detail: str


@dataclass(frozen=True)
class CorollaryCheck:
    target: str
    degree: int
    ok: bool


@dataclass(frozen=True)
class ReductionReport:
    p: int
    n: int
    field: str
    a: int
    q: int
    checks: tuple[RelationCheck, ...]
    corollaries: tuple[CorollaryCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and all(c.ok for c in self.corollaries)


def verify_reduction_relations(p: int, n: int, field: str) -> ReductionReport:
    """Check that each kernel generator, reduced modulo the previous ones,
    has its predicted shape.  Requires p | n (and odd n in the real case).

    With K = p^{a+1}, the generator in position k (weight 2k complex, 4k
    real; write s = k complex, s = 2k real) must reduce to:

    * ``plain``  (p does not divide k, s <= K-2):  the mixing class alone;
    * ``shift``  (p divides k, s off the exceptional values):  the p-th
      power of the base class in position k/p, plus the mixing class;
    * ``band``   (s = K - p^{m+1}):  as in shift but with the base class
      in position (p^a - p^m)-worth of degree, plus a unit multiple of a
      pure v power -- the unit is solved for and reported;
    * ``top``    (s = K - 1):  v^{p-1} times a p-th power, plus mixing;
      exact in the complex case, up to a reported unit in the real case
      (the sign there alternates with p mod 4).

    Afterwards the two consequences for the closed-form ideal generators
    are confirmed by membership in the ideal of the listed generators.
    """
    check_field(field)
    a, q = decompose(p, n)
    if a < 1:
        raise StructuralError("reduction families are stated for p | n only")
    if field == FIELD_REAL and n % 2 == 0:
        raise StructuralError("real reduction families need odd rank")
    top_l = p ** (a + 1)
    if field == FIELD_COMPLEX:
        group = unitary(n)
        weight = 2
        kmax = top_l - 1
        table = wreath_chern(n, p, max_degree=weight * kmax)
    else:
        group = special_orthogonal(n)
        weight = 4
        kmax = (top_l - 1) // 2
        table = wreath_pontrjagin(n, p, max_degree=weight * kmax)
    base = classifying_presentation(group, p)
    total = total_class(group, p)
    zc = z_class(total)
    gens = [table[k] for k in range(1, kmax + 1)]
    band = {top_l - p ** (m + 1): m for m in range(a)}

    checks: list[RelationCheck] = []
    for k in range(1, kmax + 1):
        deg = weight * k
        s = k if field == FIELD_COMPLEX else 2 * k
        tester = _MembershipTester(base, gens[: k - 1])
        sl, rows = tester.slice_rows(deg)
        ech, pivots = _echelon(rows, p)

        def residue(w: WreathClass):
            return _reduce_vector(ech, pivots, sl.vector(w), p)

        z_part = zc.homogeneous_component(deg)
        alpha = None
        if s == top_l - 1:
            family = "top"
            shifted = p_power(total.graded_component(2 * (p ** a - 1)))
            vp_term = WreathClass.uv_term(base, 0, p - 1) * shifted
            if field == FIELD_COMPLEX:
                res = residue(gens[k - 1] - vp_term - z_part)
                ok = not res.any()
            else:
                # The real statement only pins this shape up to a unit (the
                # plus sign holds for p = 1 mod 4, minus for p = 3 mod 4);
                # solve for the unit and report it.
                res = residue(gens[k - 1] - z_part)
                vres = residue(vp_term)
                if not vres.any():
                    checks.append(RelationCheck(
                        k, deg, family, False, None,
                        "the v^(p-1) shifted power already reduces to zero"))
                    continue
                lead = next(i for i in range(sl.dim) if vres[i])
                alpha = (int(res[lead]) * pow(int(vres[lead]), p - 2, p)) % p
                ok = alpha != 0 and not ((res - alpha * vres) % p).any()
                res = (res - alpha * vres) % p
        elif s in band:
            family = "band"
            m = band[s]
            shifted = p_power(total.graded_component(2 * (p ** a - p ** m)))
            res = residue(gens[k - 1] - shifted - z_part)
            vres = residue(WreathClass.uv_term(base, 0, s))
            if not vres.any():
                ok = False
                detail = "the pure v power already reduces to zero"
                checks.append(RelationCheck(k, deg, family, ok, None, detail))
                continue
            lead = next(i for i in range(sl.dim) if vres[i])
            alpha = (int(res[lead]) * pow(int(vres[lead]), p - 2, p)) % p
            ok = alpha != 0 and not ((res - alpha * vres) % p).any()
        elif k % p == 0:
            family = "shift"
            shifted = p_power(total.graded_component(weight * (k // p)))
            res = residue(gens[k - 1] - shifted - z_part)
            ok = not res.any()
        else:
            family = "plain"
            res = residue(gens[k - 1] - z_part)
            ok = not res.any()

        if ok:
            detail = ""
            if family == "band":
                m = band[s]
                detail = f"alpha_{m} = {alpha}"
                if m == a - 1 and field == FIELD_COMPLEX:
                    # the complex statement pins this unit to q mod p
                    detail += f" (q mod p = {q % p})"
            elif family == "top" and alpha is not None:
                detail = f"unit = {alpha}"
        else:
            detail = "residue " + render_wreath_class(sl.unvector(res))
        checks.append(RelationCheck(k, deg, family, ok, alpha, detail))

    tester = _MembershipTester(base, gens)
    corollaries: list[CorollaryCheck] = []
    if field == FIELD_COMPLEX or q > 1:
        targets = [
            (WreathClass.uv_term(base, 1, top_l - 1), f"u*v^{top_l - 1}", 2 * top_l - 1),
            (WreathClass.uv_term(base, 0, top_l), f"v^{top_l}", 2 * top_l),
        ]
    else:
        targets = [
            (WreathClass.uv_term(base, 0, top_l - 1), f"v^{top_l - 1}", 2 * top_l - 2),
        ]
    for cls, text, deg in targets:
        corollaries.append(CorollaryCheck(text, deg, tester.contains(cls, deg)))

    return ReductionReport(
        p=p,
        n=n,
        field=field,
        a=a,
        q=q,
        checks=tuple(checks),
        corollaries=tuple(corollaries),
    )


# ---------------------------------------------------------------------------
# applied bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShadowBound:
    """Largest r for which the flag admits p orthogonal shadows of r copies
    of the reduced regular representation.

    `sharp` records whether the strict index comparison (sphere l < flag l)
    reproduces the admit/reject boundary exactly; for real flags of even
    rank or with q > 1 the stated bound is one less than the comparison
    alone would give, so the boundary there is not reproduced by it.
    """

    field: str
    p: int
    n: int
    a: int
    q: int
    max_r: int
    flag_index: IndexResult
    sharp: bool

    def admits(self, r: int) -> bool:
        return 1 <= r <= self.max_r

    def index_admits(self, r: int) -> bool:
        """The containment obstruction: the sphere ideal does not sit
        inside the flag ideal, i.e. the sphere exponent is too small."""
        return sphere_index(self.p, r).l < self.flag_index.l


def shadow_bound(p: int, n: int, field: str) -> ShadowBound:
    check_field(field)
    a, q = decompose(p, n)
    both = 2 * (p ** (a + 1) - 1) // (p - 1)
    max_r = both if field == FIELD_COMPLEX else both - 1
    flag = closed_form_index(p, n, field)
    sharp = field == FIELD_COMPLEX or (n % 2 == 1 and q == 1)
    return ShadowBound(
        field=field,
        p=p,
        n=n,
        a=a,
        q=q,
        max_r=max_r,
        flag_index=flag,
        sharp=sharp,
    )
