"""Index computations: closed forms, the degree scan, relation shapes,
and shadow bounds."""

import pytest

from flagindex.fhindex import (
    UANDV,
    VONLY,
    BoundExceededError,
    IndexResult,
    closed_form_index,
    compute_index,
    decompose,
    index_report,
    kernel_generators,
    shadow_bound,
    sphere_index,
    verify_reduction_relations,
)
from flagindex.galgebra import StructuralError
from flagindex.wreath import wreath_euler


def test_decompose():
    assert decompose(3, 1) == (0, 1)
    assert decompose(3, 18) == (2, 2)
    assert decompose(5, 50) == (2, 2)
    with pytest.raises(StructuralError):
        decompose(3, 0)
    with pytest.raises(StructuralError):
        decompose(9, 3)


def test_index_result_texts():
    assert IndexResult(VONLY, 2).ideal_text() == "(v^2)"
    assert IndexResult(UANDV, 1).ideal_text() == "(u, v)"
    assert IndexResult(UANDV, 9).ideal_text() == "(u*v^8, v^9)"
    assert IndexResult(VONLY, 8).u_exponent == 9
    assert IndexResult(UANDV, 9).u_exponent == 9
    with pytest.raises(StructuralError):
        IndexResult("Both", 2)
    with pytest.raises(StructuralError):
        IndexResult(VONLY, 0)


def test_index_result_containment():
    big = IndexResult(UANDV, 9)
    assert big.contains(IndexResult(UANDV, 9))
    assert big.contains(IndexResult(VONLY, 9))       # (v^9) inside (u*v^8, v^9)
    assert not IndexResult(VONLY, 9).contains(big)   # u*v^8 is not a v power
    assert IndexResult(VONLY, 7).contains(IndexResult(VONLY, 8))
    assert not IndexResult(VONLY, 8).contains(IndexResult(VONLY, 7))


def test_closed_form_table():
    assert closed_form_index(3, 1, "complex") == IndexResult(UANDV, 3)
    assert closed_form_index(3, 3, "complex") == IndexResult(UANDV, 9)
    assert closed_form_index(3, 6, "complex") == IndexResult(UANDV, 9)
    assert closed_form_index(5, 2, "complex") == IndexResult(UANDV, 5)
    assert closed_form_index(3, 1, "real") == IndexResult(VONLY, 2)
    assert closed_form_index(3, 9, "real") == IndexResult(VONLY, 26)
    assert closed_form_index(3, 5, "real") == IndexResult(UANDV, 3)
    assert closed_form_index(3, 6, "real") == IndexResult(UANDV, 9)
    assert closed_form_index(7, 7, "real") == IndexResult(VONLY, 48)
    with pytest.raises(StructuralError):
        closed_form_index(3, 1, "quaternionic")


def test_sphere_index():
    assert sphere_index(3, 1) == IndexResult(VONLY, 1)
    assert sphere_index(3, 7) == IndexResult(VONLY, 7)
    assert sphere_index(5, 3) == IndexResult(VONLY, 6)
    with pytest.raises(StructuralError):
        sphere_index(3, 0)


def test_kernel_generator_counts():
    assert len(kernel_generators(3, 1, "complex")) == 3
    assert len(kernel_generators(3, 3, "real")) == 4
    gens = kernel_generators(3, 2, "real")
    assert len(gens) == 4  # three Pontrjagin classes and the Euler class
    assert gens[-1] == wreath_euler(2, 3)
    assert len(kernel_generators(3, 1, "complex", max_degree=2)) == 1
    # rank 1 at p = 5: the first Pontrjagin class of the wreath power is 0
    gens5 = kernel_generators(5, 1, "real")
    assert gens5[0].is_zero() and not gens5[1].is_zero()


def test_scan_matches_closed_form_small():
    for p, n, field in (
        (3, 1, "complex"),
        (3, 2, "complex"),
        (3, 1, "real"),
        (3, 2, "real"),
        (5, 1, "real"),
    ):
        assert compute_index(p, n, field) == closed_form_index(p, n, field)


def test_scan_bound_exceeded():
    with pytest.raises(BoundExceededError):
        compute_index(3, 1, "complex", max_l=2)
    with pytest.raises(StructuralError):
        compute_index(3, 1, "complex", max_l=0)


def test_index_report_record():
    rec = index_report(3, 1, "real")
    assert rec["shape"] == VONLY and rec["l"] == 2
    assert rec["a"] == 0 and rec["q"] == 1
    assert rec["generatorsUsed"] >= 1
    assert rec["degreesScanned"] >= 3
    assert rec["elapsed"] > 0


def test_reduction_relations_complex():
    rep = verify_reduction_relations(3, 3, "complex")
    assert rep.ok
    assert tuple(c.family for c in rep.checks) == (
        "plain", "plain", "shift", "plain", "plain", "band", "plain", "top"
    )
    band = [c for c in rep.checks if c.family == "band"]
    assert [c.alpha for c in band] == [1]
    assert "q mod p = 1" in band[0].detail
    assert [c.target for c in rep.corollaries] == ["u*v^8", "v^9"]
    assert all(c.ok for c in rep.corollaries)


def test_reduction_relations_real():
    rep = verify_reduction_relations(3, 3, "real")
    assert rep.ok
    assert tuple(c.family for c in rep.checks) == ("plain", "plain", "band", "top")
    assert [c.alpha for c in rep.checks if c.family == "band"] == [2]
    top = [c for c in rep.checks if c.family == "top"][0]
    assert top.alpha == 2 and "unit = 2" in top.detail
    assert [c.target for c in rep.corollaries] == ["v^8"]
    assert rep.corollaries[0].ok


def test_reduction_relations_guards():
    with pytest.raises(StructuralError):
        verify_reduction_relations(3, 2, "complex")  # needs p | n
    with pytest.raises(StructuralError):
        verify_reduction_relations(3, 6, "real")  # needs odd rank


def test_shadow_bounds():
    sb = shadow_bound(3, 3, "complex")
    assert sb.max_r == 8 and sb.sharp
    assert sb.admits(8) and not sb.admits(9)
    assert sb.index_admits(8) and not sb.index_admits(9)

    sb = shadow_bound(3, 3, "real")
    assert sb.max_r == 7 and sb.sharp
    assert sb.flag_index == IndexResult(VONLY, 8)

    # real, q > 1: the table is one tighter than the containment criterion
    sb = shadow_bound(3, 2, "real")
    assert sb.max_r == 1 and not sb.sharp
    assert not sb.admits(2) and sb.index_admits(2) and not sb.index_admits(3)

    assert shadow_bound(3, 9, "complex").max_r == 26
    assert shadow_bound(7, 7, "real").max_r == 15
