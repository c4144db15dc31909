"""Graded algebra core: scalars, monomials, degreewise linear algebra,
and the text format."""

import random

import pytest

from flagindex.galgebra import (
    EVEN,
    ODD,
    AlgebraPresentation,
    FpElement,
    GeneratorSpec,
    Monomial,
    Polynomial,
    StructuralError,
    degree_basis,
    ideal_member,
    mono_degree,
    mono_mul,
    parse_polynomial,
    parse_presentation,
    quotient_dimension,
    render_polynomial,
    render_presentation,
)


def test_fp_element_arithmetic():
    a = FpElement(7, 5)
    b = FpElement(4, 5)
    assert a.value == 2
    assert (a + b).value == 1
    assert (a - b).value == 3
    assert (a * b).value == 3
    assert (-a).value == 3
    assert (a / b).value == 3  # 2 * 4^{-1} = 2 * 4 = 8 = 3 mod 5
    assert a.inverse().value == 3
    assert bool(FpElement(0, 5)) is False


def test_fp_element_guards():
    with pytest.raises(StructuralError):
        FpElement(1, 4)
    with pytest.raises(StructuralError):
        FpElement(1, 3) + FpElement(1, 5)
    with pytest.raises(ZeroDivisionError):
        FpElement(0, 3).inverse()


def test_generator_spec_parity_must_match_degree():
    GeneratorSpec("x", 2, EVEN)
    GeneratorSpec("s", 3, ODD)
    with pytest.raises(StructuralError):
        GeneratorSpec("x", 3, EVEN)
    with pytest.raises(StructuralError):
        GeneratorSpec("x", 2, ODD)
    with pytest.raises(StructuralError):
        GeneratorSpec("2bad", 2, EVEN)
    with pytest.raises(StructuralError):
        GeneratorSpec("x", 0, EVEN)


ODD_PAIR = (GeneratorSpec("s", 3, ODD), GeneratorSpec("t", 5, ODD))


def test_odd_generators_anticommute():
    s = Polynomial.generator(ODD_PAIR, 3, "s")
    t = Polynomial.generator(ODD_PAIR, 3, "t")
    assert s * t == -(t * s)
    assert (s * s).is_zero()
    assert ((s + t) * (s + t)).is_zero()


def test_mono_mul_kills_odd_squares():
    sign, m = mono_mul(ODD_PAIR, Monomial((1, 0)), Monomial((1, 0)))
    assert sign == 0 and m is None
    sign, m = mono_mul(ODD_PAIR, Monomial((0, 1)), Monomial((1, 0)))
    assert sign == -1 and m == Monomial((1, 1))


EVEN_PAIR = (GeneratorSpec("x", 2, EVEN), GeneratorSpec("y", 4, EVEN))


def test_polynomial_components():
    x = Polynomial.generator(EVEN_PAIR, 3, "x")
    y = Polynomial.generator(EVEN_PAIR, 3, "y")
    f = (x + y) ** 2
    assert f.degrees() == [4, 6, 8]
    assert f.graded_component(4) == x * x
    assert f.graded_component(6) == (x * y).scale(2)
    assert f.max_degree() == 8
    with pytest.raises(StructuralError):
        f.homogeneous_degree()
    assert mono_degree(EVEN_PAIR, Monomial((1, 1))) == 6


def test_degree_basis_counts():
    pres = AlgebraPresentation(3, EVEN_PAIR + ODD_PAIR, ())
    names = [render_polynomial(pres.monomial(m)) for m in degree_basis(pres, 4)]
    assert sorted(names) == ["1*x^2", "1*y"]
    names = [render_polynomial(pres.monomial(m)) for m in degree_basis(pres, 5)]
    assert sorted(names) == ["1*t", "1*x*s"]
    assert degree_basis(pres, 0) == [Monomial((0, 0, 0, 0))]
    assert degree_basis(pres, -2) == []
    assert degree_basis(pres, 1) == []


def test_quotient_dimension_truncated_polynomial():
    x = Polynomial.generator(EVEN_PAIR[:1], 3, "x")
    pres = AlgebraPresentation(3, EVEN_PAIR[:1], (x ** 3,))
    dims = [quotient_dimension(pres, d) for d in range(8)]
    assert dims == [1, 0, 1, 0, 1, 0, 0, 0]


def test_ideal_member_basic():
    pres = AlgebraPresentation(3, EVEN_PAIR, ())
    x = pres.generator("x")
    y = pres.generator("y")
    assert ideal_member([x], x * y, pres)
    assert ideal_member([x], x ** 3 + (x * y).scale(2), pres)
    assert not ideal_member([x], y, pres)
    assert ideal_member([x], pres.zero(), pres)
    # modulo a relation x^2 = y the class y*x lands in (x) anyway
    rel = x * x - y
    pres2 = AlgebraPresentation(3, EVEN_PAIR, (rel,))
    assert ideal_member([y], x ** 3, pres2)


def test_render_parse_round_trip_random():
    rng = random.Random(11)
    gens = EVEN_PAIR + (GeneratorSpec("s", 3, ODD),)
    for _ in range(300):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            m = Monomial((rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 1)))
            terms[m] = terms.get(m, 0) + rng.randint(1, 4)
        poly = Polynomial.make(gens, 5, terms)
        assert parse_polynomial(render_polynomial(poly), gens, 5) == poly


def test_parse_polynomial_accepts_minus_and_unicode_dot():
    x = Polynomial.generator(EVEN_PAIR, 3, "x")
    assert parse_polynomial("-x", EVEN_PAIR, 3) == -x
    assert parse_polynomial("2·x^2", EVEN_PAIR, 3) == (x * x).scale(2)
    with pytest.raises(StructuralError):
        parse_polynomial("zz", EVEN_PAIR, 3)


def test_presentation_round_trip():
    x = Polynomial.generator(EVEN_PAIR, 5, "x")
    y = Polynomial.generator(EVEN_PAIR, 5, "y")
    pres = AlgebraPresentation(5, EVEN_PAIR, (x * x - y, y ** 2))
    again = parse_presentation(render_presentation(pres), 5)
    assert again == pres
    with pytest.raises(StructuralError):
        parse_presentation("rel 1*x\ngen x 2 even", 5)


def test_relations_must_be_homogeneous():
    x = Polynomial.generator(EVEN_PAIR, 3, "x")
    y = Polynomial.generator(EVEN_PAIR, 3, "y")
    with pytest.raises(StructuralError):
        AlgebraPresentation(3, EVEN_PAIR, (x + y,))
