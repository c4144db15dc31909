"""Flag presentations and the three ways to compute their Poincare series."""

import pytest

from flagindex.charclass import grassmann_presentation
from flagindex.flagcoh import (
    SeriesDivisionError,
    SeriesReport,
    default_depth,
    fibration_series_oracle,
    flag_presentation,
    gaussian_multinomial,
    poincare_series,
)
from flagindex.galgebra import (
    StructuralError,
    parse_presentation,
    quotient_dimension,
    render_presentation,
)


def test_flag_args_validated():
    with pytest.raises(StructuralError):
        flag_presentation("complex", 1, 4, 3)  # r > p
    with pytest.raises(StructuralError):
        flag_presentation("complex", 0, 1, 3)
    with pytest.raises(StructuralError):
        flag_presentation("quaternionic", 1, 1, 3)
    with pytest.raises(StructuralError):
        flag_presentation("complex", 1, 1, 4)


def test_complex_full_flag_structure():
    pres = flag_presentation("complex", 1, 3, 3)
    assert [g.name for g in pres.generators] == ["c1_1", "c1_2", "c1_3"]
    assert [r.homogeneous_degree() for r in pres.relations] == [2, 4, 6]
    # text form round-trips
    assert parse_presentation(render_presentation(pres), 3) == pres


def test_single_factor_flag_is_grassmannian():
    # one rank-1 factor in C^3: the presentation must present CP^2
    pres = flag_presentation("complex", 1, 1, 3)
    cp2 = grassmann_presentation(3, 1, 3)
    dims = [quotient_dimension(pres, d) for d in range(8)]
    assert dims == [quotient_dimension(cp2, d) for d in range(8)]
    assert dims == [1, 0, 1, 0, 1, 0, 0, 0]


def test_poincare_series_full_flag():
    pres = flag_presentation("complex", 1, 3, 3)
    rep = poincare_series(pres, 6)
    assert rep.coefficients == (1, 0, 2, 0, 2, 0, 1)
    assert sum(rep.coefficients) == 6  # 3! points of the Weyl orbit


def test_series_report_matches_truncates():
    a = SeriesReport("x", 4, (1, 0, 1, 0, 1))
    b = SeriesReport("y", 2, (1, 0, 1))
    assert a.matches(b)
    with pytest.raises(StructuralError):
        SeriesReport("z", 3, (1, 0))


def test_fibration_oracle_agrees_on_grassmannian():
    got = fibration_series_oracle("complex", 1, 1, 3, 6)
    assert got.coefficients == (1, 0, 1, 0, 1, 0, 0)


def test_fibration_oracle_real_divergence():
    # the real full-flag comparison works to depth 15 and must refuse at 16
    ok = fibration_series_oracle("real", 3, 3, 3, 15)
    pres = flag_presentation("real", 3, 3, 3)
    assert poincare_series(pres, 15).coefficients == ok.coefficients
    with pytest.raises(SeriesDivisionError):
        fibration_series_oracle("real", 3, 3, 3, 16)


def test_real_even_factor_series():
    pres = flag_presentation("real", 2, 3, 3)
    rep = poincare_series(pres, 12)
    assert rep.coefficients == (1, 0, 3, 0, 5, 0, 6, 0, 5, 0, 3, 0, 1)
    oracle = fibration_series_oracle("real", 2, 3, 3, 12)
    assert rep.coefficients == oracle.coefficients


def test_gaussian_multinomial_binomials():
    assert gaussian_multinomial([1, 1], 2).coefficients == (1, 0, 1)
    assert gaussian_multinomial([1, 2], 4).coefficients == (1, 0, 1, 0, 1)
    assert gaussian_multinomial([2, 2], 8).coefficients == (1, 0, 1, 0, 2, 0, 1, 0, 1)
    assert gaussian_multinomial([1, 1, 1], 6).coefficients == (1, 0, 2, 0, 2, 0, 1)
    with pytest.raises(StructuralError):
        gaussian_multinomial([], 4)
    with pytest.raises(StructuralError):
        gaussian_multinomial([0, 2], 4)


def test_gaussian_matches_presentation_series():
    for j, r, p in ((1, 2, 3), (2, 3, 3), (1, 2, 5)):
        depth = default_depth(j, p)
        parts = [j] * r + ([j * (p - r)] if r < p else [])
        pres = flag_presentation("complex", j, r, p)
        assert (
            poincare_series(pres, depth).coefficients
            == gaussian_multinomial(parts, depth).coefficients
        )


def test_default_depth():
    assert default_depth(1, 3) == 6
    assert default_depth(2, 5) == 20
