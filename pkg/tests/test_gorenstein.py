import pytest
from oracles import hilbert_from_h

from detschemes.corpus import shift_sweep
from detschemes.degmatrix import is_irreducible_admissible, validate
from detschemes.errors import DimensionTooSmall, MTooSmall, NotAdmissible, NotCanonical
from detschemes.exactpoly import HVector, difference
from detschemes.gorenstein import (
    ag_from_degree_matrix,
    ag_h_vector_general,
    ag_h_vector_piecewise,
    ag_smooth_from_degree_matrix,
    canonical_h_function,
    canonical_hilbert_function,
    full_hilbert_function_Y,
    full_hilbert_function_Y_values,
    m_min_numeric,
    plateau,
    verify_decreasing_type,
    verify_symmetry,
)
from detschemes.hilbert import summarize

SURFACE_AG15 = (1, 4, 10, 20, 32, 41, 45, 46, 46, 46, 46, 45, 41, 32, 20, 10, 4, 1)


def test_canonical_module_h_function():
    h = HVector((1, 3, 6, 10, 12, 9, 4, 1))
    d = 2
    assert [canonical_h_function(h, d, t) for t in range(-6, 4)] == [0, 0, 1, 4, 9, 12, 10, 6, 3, 1]
    vals = [canonical_hilbert_function(h, d, t) for t in range(-10, 10)]
    diffs = difference(vals, d + 1)
    assert diffs == [canonical_h_function(h, d, t) for t in range(-10, 10)]
    assert canonical_hilbert_function(h, d, -4) == 1


def test_surface_ag(surface):
    ag = ag_from_degree_matrix(surface, 5, 15)
    assert ag.entries == SURFACE_AG15
    assert ag.m_min_numeric == 12 and ag.base_degree == 46
    assert ag.is_symmetric and ag.is_decreasing_type
    assert ag.warnings
    ag14 = ag_from_degree_matrix(surface, 5, 14)
    assert len(plateau(ag14)) == 3 and plateau(ag14) == range(7, 10)
    ag12 = ag_from_degree_matrix(surface, 5, 12)
    assert list(plateau(ag12)) == [7]


def test_scroll_ag(scroll):
    ag = ag_from_degree_matrix(scroll, 5, 0)
    assert ag.entries == (1, 4, 1)
    assert ag_from_degree_matrix(scroll, 5, 5).entries == (1, 4, 4, 4, 4, 4, 4, 1)
    assert ag_from_degree_matrix(scroll, 6, 1).entries == (1, 4, 4, 4, 1)


def test_general_formula_covers_smaller_m(surface):
    base = summarize(surface, 5)
    assert m_min_numeric(base) == 12
    g = ag_h_vector_general(base, 5)
    assert g.entries.entries == tuple(
        base.delta_d(t) + base.delta_d(5 - t + 2) - 46 for t in range(8)
    )
    assert g.is_symmetric
    with pytest.raises(MTooSmall):
        ag_h_vector_piecewise(base, 11)
    with pytest.raises(MTooSmall):
        ag_h_vector_general(base, 4)


def test_verifiers():
    assert verify_symmetry((1, 3, 1)) and verify_symmetry((1,))
    assert not verify_symmetry((1, 3, 2)) and not verify_symmetry((2, 2))
    assert verify_decreasing_type((1, 3, 3, 1))
    assert verify_decreasing_type((1, 4, 6, 4, 1))
    assert not verify_decreasing_type((1, 3, 2, 2, 1))
    assert not verify_decreasing_type((1, 2, 1, 2, 1))


def test_full_hilbert_function(surface):
    base = summarize(surface, 5)
    for m in (12, 13, 15):
        ag = ag_from_degree_matrix(surface, 5, m)
        top = m + 2 + 6
        from_h = [full_hilbert_function_Y(base, m, t) for t in range(top)]
        from_u = [full_hilbert_function_Y(base, m, t, surface) for t in range(top)]
        assert from_h == from_u == full_hilbert_function_Y_values(base, m, top - 1, surface)
        # Y has dimension d - 1, so d differences reach its Artinian reduction
        diffs = difference(from_h, 2)
        assert diffs[: m + 3] == list(ag.entries.entries)
        assert all(x == 0 for x in diffs[m + 3:])
        assert from_h[0] == 1 and from_h[1] == 6


def test_degree_and_shift_properties():
    corpus = [U for U in shift_sweep(2, 3, 2) if is_irreducible_admissible(U, U.c + 2)]
    assert corpus
    for U in corpus:
        for n in (U.c + 2, U.c + 3):
            base = summarize(U, n)
            d, r, deg = base.dimension, base.r, base.degree
            m0 = m_min_numeric(base)
            prev = None
            for m in (m0, m0 + 1, m0 + 4):
                ag = ag_from_degree_matrix(U, n, m)
                assert ag.is_symmetric and ag.is_decreasing_type
                assert ag.degree == 2 * sum(base.delta_d(t) for t in range(r)) + (m - 2 * r + d + 1) * deg
                if prev is not None:
                    assert ag.degree - prev.degree == (m - prev.m) * deg
                prev = ag
            vals = [hilbert_from_h(base.h_vector.entries, d, t) for t in range(4)]
            assert vals[0] == 1


def test_error_paths(surface, scroll):
    with pytest.raises(MTooSmall) as exc:
        ag_from_degree_matrix(surface, 5, 3)
    assert str(exc.value) == "MTooSmall: m=3 is below the bound 12"
    with pytest.raises(DimensionTooSmall):
        ag_from_degree_matrix(scroll, 4, 0)
    with pytest.raises(DimensionTooSmall):
        ag_h_vector_general(summarize(scroll, 4), 4)
    with pytest.raises(NotAdmissible):
        ag_from_degree_matrix(validate([[1, 0, 0], [2, 1, 1]]), 5, 4)
    with pytest.raises(NotCanonical):
        ag_from_degree_matrix(validate([[1, 1, 2], [2, 2, 3]]), 5, 4)


def test_smooth_gate(scroll):
    assert ag_smooth_from_degree_matrix(scroll, 5, 0).entries == (1, 4, 1)
    with pytest.raises(NotAdmissible):
        ag_smooth_from_degree_matrix(validate([[3, 2, 2, 1], [4, 3, 3, 2]]), 8, 20)
