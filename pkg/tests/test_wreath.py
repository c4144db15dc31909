"""Wreath normal form: orbits, products, p-th powers, mixing classes,
and the characteristic classes of wreath powers."""

import pytest

from flagindex.charclass import classifying_presentation, special_orthogonal, unitary
from flagindex.galgebra import (
    EVEN,
    ODD,
    AlgebraPresentation,
    GeneratorSpec,
    Monomial,
    Polynomial,
    StructuralError,
)
from flagindex.wreath import (
    OrbitKey,
    WreathClass,
    binomial_v_series,
    p_power,
    render_wreath_class,
    restrict_to_point,
    transfer_i,
    wreath_base,
    wreath_chern,
    wreath_degree_basis,
    wreath_euler,
    wreath_pontrjagin,
    z_class,
)

LINE = AlgebraPresentation(3, (GeneratorSpec("t", 2, EVEN),), ())


def orbit(*exps):
    return OrbitKey.from_slots(tuple(Monomial((e,)) for e in exps))


def test_wreath_base_guards():
    x = Polynomial.generator(LINE.generators, 3, "t")
    with_rel = AlgebraPresentation(3, LINE.generators, (x * x,))
    with pytest.raises(StructuralError):
        wreath_base(with_rel)
    odd = AlgebraPresentation(3, (GeneratorSpec("s", 3, ODD),), ())
    with pytest.raises(StructuralError):
        wreath_base(odd)
    assert wreath_base(LINE) is LINE


def test_orbit_key_canonicalization():
    k = orbit(0, 1, 0)
    assert k.slots == (Monomial((0,)), Monomial((0,)), Monomial((1,)))
    with pytest.raises(StructuralError):
        OrbitKey((Monomial((1,)), Monomial((0,)), Monomial((0,))))
    with pytest.raises(StructuralError):
        OrbitKey((Monomial((1,)), Monomial((1,)), Monomial((1,))))


def test_transfer_of_diagonal_vanishes():
    t = Monomial((1,))
    assert transfer_i(LINE, (t, t, t)).is_zero()
    w = transfer_i(LINE, (t, t, Monomial((0,))))
    assert list(w.free) == [orbit(1, 1, 0)]


def test_uv_annihilate_induced_terms():
    w = WreathClass.make(LINE, {}, {orbit(0, 0, 1): 1})
    u = WreathClass.uv_term(LINE, 1, 0)
    v = WreathClass.uv_term(LINE, 0, 1)
    assert (w * u).is_zero()
    assert (w * v).is_zero()
    assert (u * u).is_zero()
    assert (u * v).diag == {(Monomial((0,)), 1, 1): 1}


def test_induced_times_induced_by_hand():
    # O(1|1|t)^2 = O(1|1|t^2) + 2 O(1|t|t): rotate one factor, slotwise
    # multiply, re-induce the non-diagonal results
    w = WreathClass.make(LINE, {}, {orbit(0, 0, 1): 1})
    sq = w * w
    assert sq.diag == {}
    assert sq.free == {orbit(0, 0, 2): 1, orbit(0, 1, 1): 2}


def test_p_power_scales_induced_terms_slotwise():
    t = Polynomial.generator(LINE.generators, 3, "t")
    w = WreathClass.make(LINE, {}, {orbit(0, 0, 1): 1})
    scaled = w * p_power(t)
    assert scaled.free == {orbit(1, 1, 2): 1}


def test_p_power_multiplicative_and_on_sums():
    t = Polynomial.generator(LINE.generators, 3, "t")
    one = Polynomial.one(LINE.generators, 3)
    assert p_power(t * t) == p_power(t) * p_power(t)
    ps = p_power(one + t)
    # diagonal: P(1) + P(t); induced: the two non-constant orbits of words
    assert ps.diag == {(Monomial((0,)), 0, 0): 1, (Monomial((1,)), 0, 0): 1}
    assert ps.free == {orbit(0, 0, 1): 1, orbit(0, 1, 1): 1}
    assert p_power(one + t) == p_power(one) + p_power(t) + z_class(one + t)


def test_z_class_vanishes_on_homogeneous():
    t = Polynomial.generator(LINE.generators, 3, "t")
    assert z_class(t.scale(2)).is_zero()
    assert z_class((t * t).scale(1)).is_zero()
    z = z_class(Polynomial.one(LINE.generators, 3) + t)
    assert z.diag == {}
    assert z.degrees() == [2, 4]


def test_binomial_v_series():
    w = binomial_v_series(LINE, 2)
    one = Monomial((0,))
    assert w.diag == {(one, 0, 0): 1, (one, 0, 2): 2, (one, 0, 4): 1}
    assert binomial_v_series(LINE, 0) == WreathClass.unit(LINE)
    with pytest.raises(StructuralError):
        binomial_v_series(LINE, -1)


def test_wreath_degree_basis_counts():
    bu1 = classifying_presentation(unitary(1), 3)
    assert len(wreath_degree_basis(bu1, 2)) == 2  # v and O(1|1|c1)
    assert len(wreath_degree_basis(bu1, 3)) == 1  # u*v
    assert len(wreath_degree_basis(bu1, 4)) == 3  # v^2, O(1|1|c1^2), O(1|c1|c1)
    for w in wreath_degree_basis(bu1, 6):
        assert w.degrees() == [6]


def test_wreath_chern_line_bundle():
    table = wreath_chern(1, 3)
    bu1 = classifying_presentation(unitary(1), 3)
    c1 = Monomial((1,))
    assert set(table) == {1, 2, 3}
    assert table[1] == WreathClass.make(bu1, {}, {orbit(0, 0, 1): 1})
    assert table[2] == WreathClass.make(
        bu1, {(Monomial((0,)), 0, 2): 1}, {orbit(0, 1, 1): 1}
    )
    assert table[3] == WreathClass.make(bu1, {(c1, 0, 0): 1})
    assert render_wreath_class(table[2]) == "1*v^2 + 1*O(1|c1|c1)"
    trimmed = wreath_chern(1, 3, max_degree=4)
    assert set(trimmed) == {1, 2}


def test_restrict_to_point():
    table = wreath_chern(1, 3)
    bcp_v2 = restrict_to_point(table[2])
    assert render_wreath_class(table[2]).startswith("1*v^2")
    assert list(bcp_v2.terms) == [Monomial((0, 2))]  # v^2 survives, the orbit dies
    assert restrict_to_point(table[1]).is_zero()
    assert restrict_to_point(table[3]).is_zero()


def test_wreath_pontrjagin_rank_one():
    # rank 1, p = 5: the first class collapses entirely, the second is v^4
    table = wreath_pontrjagin(1, 5)
    assert set(table) == {1, 2}
    assert table[1].is_zero()
    base = classifying_presentation(special_orthogonal(1), 5)
    assert table[2] == WreathClass.uv_term(base, 0, 4)


def test_wreath_euler():
    base = classifying_presentation(special_orthogonal(2), 3)
    e = base.generator("e2")
    we = wreath_euler(2, 3)
    assert we == p_power(e)
    assert we * we == wreath_pontrjagin(2, 3)[3]
    with pytest.raises(StructuralError):
        wreath_euler(3, 3)


def test_make_validation():
    with pytest.raises(StructuralError):
        WreathClass.make(LINE, {(Monomial((1,)), 2, 0): 1})
    with pytest.raises(StructuralError):
        WreathClass.make(LINE, {}, {(Monomial((1,)), Monomial((0,))): 1})
    # coefficients normalize mod p and zero terms drop
    w = WreathClass.make(LINE, {(Monomial((1,)), 0, 0): 3})
    assert w.is_zero()


def test_homogeneous_component_split():
    t = Polynomial.generator(LINE.generators, 3, "t")
    w = p_power(Polynomial.one(LINE.generators, 3) + t)
    parts = [w.homogeneous_component(d) for d in w.degrees()]
    total = WreathClass.zero(LINE)
    for part in parts:
        total = total + part
    assert total == w
