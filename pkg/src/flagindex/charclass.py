"""Classifying-space cohomology and characteristic classes mod p.

With F_p coefficients for an odd prime p the classifying spaces that
matter here have polynomial cohomology:

* BU(n)   -- Chern classes c_1..c_n, degree 2i;
* BSO(n)  -- Pontrjagin classes p_1..p_{(n-1)/2} for n odd; for n even
             p_1..p_{n/2-1} together with the Euler class e_n (degree n),
             the top Pontrjagin class being the alias p_{n/2} = e_n^2;
* BC_p    -- an exterior class u (degree 1) times a polynomial class v
             (degree 2), the image of u under the Bockstein.

On top of the presentations this module builds total classes, formal
inverses of total classes, and the induced presentations of complex and
oriented real Grassmannians.
"""

from __future__ import annotations

from dataclasses import dataclass

from .galgebra import (
    EVEN,
    ODD,
    AlgebraPresentation,
    GeneratorSpec,
    Polynomial,
    StructuralError,
    check_odd_prime,
)

__all__ = [
    "FIELD_COMPLEX",
    "FIELD_REAL",
    "GroupFamily",
    "unitary",
    "special_orthogonal",
    "cyclic",
    "classifying_presentation",
    "total_class",
    "euler_class",
    "inverse_total_class",
    "grassmann_presentation",
    "oriented_grassmann_presentation",
]

FIELD_COMPLEX = "complex"
FIELD_REAL = "real"


@dataclass(frozen=True)
class GroupFamily:
    """One of the structure groups U(n), SO(n), or the cyclic group C_p."""

    kind: str  # "U", "SO" or "Cp"
    n: int = 0

    def __post_init__(self):
        if self.kind in ("U", "SO"):
            if self.n < 1:
                raise StructuralError(f"{self.kind}({self.n}): rank must be >= 1")
        elif self.kind == "Cp":
            if self.n != 0:
                raise StructuralError("Cp carries no rank")
        else:
            raise StructuralError(f"unknown group kind {self.kind!r}")

    def __str__(self):
        return "C_p" if self.kind == "Cp" else f"{self.kind}({self.n})"


def unitary(n: int) -> GroupFamily:
    return GroupFamily("U", n)


def special_orthogonal(n: int) -> GroupFamily:
    return GroupFamily("SO", n)


def cyclic() -> GroupFamily:
    return GroupFamily("Cp")


def classifying_presentation(group: GroupFamily, p: int) -> AlgebraPresentation:
    """H*(BG; F_p) as a presentation (no stored relations; u^2 is implicit)."""
    check_odd_prime(p)
    if group.kind == "U":
        gens = tuple(
            GeneratorSpec(f"c{i}", 2 * i, EVEN) for i in range(1, group.n + 1)
        )
        return AlgebraPresentation(p, gens, ())
    if group.kind == "SO":
        n = group.n
        if n % 2 == 1:
            gens = tuple(
                GeneratorSpec(f"p{i}", 4 * i, EVEN) for i in range(1, (n - 1) // 2 + 1)
            )
        else:
            gens = tuple(
                GeneratorSpec(f"p{i}", 4 * i, EVEN) for i in range(1, n // 2)
            ) + (GeneratorSpec(f"e{n}", n, EVEN),)
        return AlgebraPresentation(p, gens, ())
    # cyclic group
    gens = (GeneratorSpec("u", 1, ODD), GeneratorSpec("v", 2, EVEN))
    return AlgebraPresentation(p, gens, ())


def total_class(group: GroupFamily, p: int) -> Polynomial:
    """Total characteristic class: 1 + c_1 + ... + c_n for U(n); the total
    Pontrjagin class 1 + p_1 + ... (+ e_n^2 on top for n even) for SO(n)."""
    pres = classifying_presentation(group, p)
    out = pres.one()
    if group.kind == "U":
        for g in pres.generators:
            out = out + pres.generator(g.name)
        return out
    if group.kind == "SO":
        n = group.n
        for g in pres.generators:
            gp = pres.generator(g.name)
            if n % 2 == 0 and g.name == f"e{n}":
                gp = gp * gp  # top Pontrjagin class is e_n^2
            out = out + gp
        return out
    raise StructuralError("total_class is defined for U(n) and SO(n) only")


def euler_class(group: GroupFamily, p: int) -> Polynomial:
    """The Euler class e_n of SO(n) for n even."""
    if group.kind != "SO" or group.n % 2 != 0:
        raise StructuralError("euler_class needs SO(n) with n even")
    pres = classifying_presentation(group, p)
    return pres.generator(f"e{group.n}")


def inverse_total_class(total: Polynomial, max_degree: int) -> Polynomial:
    """Formal inverse of a total class through degree max_degree.

    total must have constant term 1; the inverse s satisfies s_0 = 1 and
    s_d = -sum_{e>=1} total_e * s_{d-e}.
    """
    one = Polynomial.one(total.gens, total.p)
    if total.graded_component(0) != one:
        raise StructuralError("total class must have constant term 1")
    comps = {d: total.graded_component(d) for d in total.degrees() if d > 0}
    out = {0: one}
    for d in range(1, max_degree + 1):
        acc = Polynomial.zero(total.gens, total.p)
        for e, te in comps.items():
            if e <= d and (d - e) in out:
                acc = acc - te * out[d - e]
        if not acc.is_zero():
            out[d] = acc
    result = Polynomial.zero(total.gens, total.p)
    for part in out.values():
        result = result + part
    return result


def grassmann_presentation(n: int, k: int, p: int) -> AlgebraPresentation:
    """H*(Gr_k(C^n); F_p): Chern classes c_1..c_k of the tautological
    k-plane bundle, modulo the degree 2(n-k+1)..2n components of the
    inverse total class."""
    check_odd_prime(p)
    if not 1 <= k <= n:
        raise StructuralError(f"Gr_{k}(C^{n}) needs 1 <= k <= n")
    gens = tuple(GeneratorSpec(f"c{i}", 2 * i, EVEN) for i in range(1, k + 1))
    total = Polynomial.one(gens, p)
    for g in gens:
        total = total + Polynomial.generator(gens, p, g.name)
    inv = inverse_total_class(total, 2 * n)
    rels = []
    for i in range(n - k + 1, n + 1):
        comp = inv.graded_component(2 * i)
        if not comp.is_zero():
            rels.append(comp)
    return AlgebraPresentation(p, gens, tuple(rels))


def _doubled_inverse(K: int, N: int, p: int, gens: tuple[GeneratorSpec, ...]):
    """Inverse of 1 + p_1 + ... + p_K through degree 4N over gens (which
    must start with those Pontrjagin generators)."""
    total = Polynomial.one(gens, p)
    for i in range(1, K + 1):
        total = total + Polynomial.generator(gens, p, f"p{i}")
    return inverse_total_class(total, 4 * N)


def oriented_grassmann_presentation(n: int, j: int, p: int) -> AlgebraPresentation:
    """H*(G~_j(R^n); F_p), the Grassmannian of oriented j-planes, 1 <= j < n.

    Four parity cases.  Writing N, K for the Pontrjagin ranges of the
    ambient and tautological bundles, the underlying Pontrjagin part is
    F_p[p_1..p_K] modulo the degree 4(N-K+1)..4N inverse components, and
    the Euler-type classes are adjoined on top:

    * n odd,  j odd:  adjoin w (degree n-j) with w^2 = the complement's
      top Pontrjagin class, i.e. the degree 2(n-j) inverse component;
    * n odd,  j even: adjoin e (degree j) with e^2 = p_{j/2};
    * n even, j even: adjoin e (degree j) and w (degree n-j) with
      e^2 = p_{j/2}, w^2 = the degree 2(n-j) inverse component, e*w = 0;
    * n even, j odd:  adjoin an odd class s (degree n-1) squaring to zero.
    """
    check_odd_prime(p)
    if not 1 <= j < n:
        raise StructuralError(f"oriented Grassmannian needs 1 <= j < n, got ({n},{j})")

    if n % 2 == 1:
        N = (n - 1) // 2
        K = (j - 1) // 2 if j % 2 == 1 else j // 2
    else:
        N = n // 2
        K = j // 2 if j % 2 == 0 else (j - 1) // 2

    pgens = tuple(GeneratorSpec(f"p{i}", 4 * i, EVEN) for i in range(1, K + 1))
    extra: list[GeneratorSpec] = []
    if n % 2 == 1 and j % 2 == 1:
        extra = [GeneratorSpec(f"w{n - j}", n - j, EVEN)]
    elif n % 2 == 1 and j % 2 == 0:
        extra = [GeneratorSpec(f"e{j}", j, EVEN)]
    elif n % 2 == 0 and j % 2 == 0:
        extra = [GeneratorSpec(f"e{j}", j, EVEN), GeneratorSpec(f"w{n - j}", n - j, EVEN)]
    else:
        extra = [GeneratorSpec(f"s{n - 1}", n - 1, ODD)]
    gens = pgens + tuple(extra)

    inv = _doubled_inverse(K, N, p, gens)
    rels: list[Polynomial] = []
    for i in range(N - K + 1, N + 1):
        comp = inv.graded_component(4 * i)
        if not comp.is_zero():
            rels.append(comp)

    def gen(name: str) -> Polynomial:
        return Polynomial.generator(gens, p, name)

    if n % 2 == 1 and j % 2 == 1:
        w = gen(f"w{n - j}")
        rels.append(w * w - inv.graded_component(2 * (n - j)))
    elif n % 2 == 1 and j % 2 == 0:
        e = gen(f"e{j}")
        rels.append(e * e - gen(f"p{j // 2}"))
    elif n % 2 == 0 and j % 2 == 0:
        e, w = gen(f"e{j}"), gen(f"w{n - j}")
        rels.append(e * e - gen(f"p{j // 2}"))
        rels.append(w * w - inv.graded_component(2 * (n - j)))
        rels.append(e * w)
    # n even, j odd: s squares to zero implicitly; nothing to add

    return AlgebraPresentation(p, gens, tuple(r for r in rels if not r.is_zero()))
