import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import hilbert_from_h, k_poly_from_shifts, series_coefficients

from detschemes.chains import k_polynomial
from detschemes.corpus import shift_sweep
from detschemes.degmatrix import canonicalize, from_shifts, is_reduced_admissible, validate
from detschemes.errors import DegenerateMatrix, NotCanonical, PreconditionError
from detschemes.exactpoly import difference
from detschemes.hilbert import (
    betti_table,
    degree_trace_formula,
    h_vector,
    hilbert_function,
    hilbert_function_values,
    reg_index,
    regularity_bounds,
    regularity_closed,
    regularity_max,
    stabilization_point,
    summarize,
    vanishing_identities,
)

SURFACE_H = (1, 3, 6, 10, 12, 9, 4, 1)
# Coefficients of K(z)/(1-z)^6 for the 2x4 surface matrix, from the
# shift generating-function oracle.
SURFACE_HILBERT_P5 = [1, 6, 21, 56, 123, 231, 384, 583, 828, 1119, 1456, 1839, 2268]


def test_hilbert_function_examples(surface):
    assert hilbert_function(surface, 5, 0) == 1
    assert hilbert_function(surface, 5, 1) == 6
    assert hilbert_function(surface, 5, 3) == 56
    assert hilbert_function_values(surface, 5, 12) == SURFACE_HILBERT_P5
    assert [hilbert_function(surface, 5, t) for t in range(13)] == SURFACE_HILBERT_P5
    assert hilbert_function_values(surface, 5, 0) == [1]
    assert hilbert_function_values(surface, 5, -1) == []


def test_frozen_values_match_oracle(surface):
    K = k_poly_from_shifts((0, 0, 0, 1), (2, 3))
    assert series_coefficients(K, 6, 12) == SURFACE_HILBERT_P5
    assert [hilbert_from_h(SURFACE_H, 2, t) for t in range(13)] == SURFACE_HILBERT_P5


def test_h_vectors(surface, scroll):
    assert h_vector(scroll) == (1, 3)
    assert h_vector(surface) == SURFACE_H
    for d in range(1, 6):
        assert h_vector(validate([[d]])) == (1,) * d


def test_degree(surface, scroll):
    assert degree_trace_formula(surface) == 46
    assert degree_trace_formula(scroll) == 4
    assert degree_trace_formula(validate([[5]])) == 5


def test_regularity(surface, scroll):
    assert regularity_closed(surface) == regularity_max(surface) == 8
    assert regularity_closed(scroll) == regularity_max(scroll) == 2
    assert regularity_closed(validate([[6]])) == regularity_max(validate([[6]])) == 6
    with pytest.raises(NotCanonical):
        regularity_closed(validate([[2, 3], [3, 4]]))
    assert regularity_max(validate([[2, 3], [3, 4]])) == regularity_max(validate([[3, 2], [4, 3]]))


def test_reg_index(surface, scroll):
    assert reg_index(surface, 5) == 5
    assert reg_index(scroll, 5) == -1
    assert reg_index(validate([[4]]), 1) == 3
    with pytest.raises(PreconditionError):
        reg_index(surface, 2)


def test_betti(surface, scroll):
    assert betti_table(scroll).as_dict() == {0: {2: 6}, 1: {3: 8}, 2: {4: 3}}
    b = betti_table(surface).as_dict()
    assert b[2] == {8: 1, 9: 1, 10: 1}
    assert b == {0: {4: 3, 5: 3}, 1: {6: 3, 7: 4, 8: 1}, 2: {8: 1, 9: 1, 10: 1}}
    assert betti_table(validate([[3]])).as_dict() == {0: {3: 1}}


def test_summaries(surface, scroll):
    s = summarize(surface, 5)
    assert (s.h_vector, s.degree, s.regularity, s.reg_index) == (SURFACE_H, 46, 8, 5)
    assert s.dimension == 2 and s.r == 7 and not s.warnings
    s = summarize(scroll, 5)
    assert (s.h_vector, s.degree, s.regularity, s.reg_index) == ((1, 3), 4, 2, -1)
    s = summarize(validate([[2]]), 2)
    assert (s.h_vector, s.degree, s.regularity, s.reg_index) == ((1, 1), 2, 2, 0)


def test_degenerate_matrix_flagged():
    s = summarize(validate([[1, 0, 0], [2, 1, 1]]), 4)
    assert s.warnings and s.h_vector == (1, 1) and s.degree == 2
    with pytest.raises(DegenerateMatrix):
        h_vector(validate([[1, 0, 0], [1, 0, 0]]))


def _corpus():
    return [U for U in shift_sweep(3, 3, 2) if is_reduced_admissible(U)]


def test_invariants_on_small_sweep():
    for U in _corpus():
        h = h_vector(U)
        deg = degree_trace_formula(U)
        assert deg == h.degree
        reg = regularity_closed(U)
        assert reg == regularity_max(U) == h.length + 1
        assert betti_table(U).k_poly() == k_polynomial(U).poly
        assert betti_table(U).regularity() == reg
        assert betti_table(U).ranks() == [sum(c.values()) for c in betti_table(U).columns]
        for n in range(U.c, U.c + 4):
            d = n - U.c
            vals = hilbert_function_values(U, n, reg + 3)
            assert vals == [hilbert_from_h(h.entries, d, t) for t in range(reg + 4)]
            assert vals == [hilbert_function(U, n, t) for t in range(reg + 4)]
            assert stabilization_point(vals, d, deg) == reg - 1
            assert all(v == 0 for v in vanishing_identities(U, n).values())


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda l: st.integers(1, 4).flatmap(
            lambda c: st.tuples(
                st.lists(st.integers(0, 4), min_size=l + c - 1, max_size=l + c - 1),
                st.lists(st.integers(5, 9), min_size=l, max_size=l),
            )
        )
    )
)
def test_delta_d_is_h_vector_partial_sums(ab):
    U = canonicalize(from_shifts(*ab))
    h = h_vector(U)
    n = U.c + 2
    vals = hilbert_function_values(U, n, regularity_closed(U) + 3)
    assert difference(vals, n - U.c + 1)[: len(h.entries)] == list(h.entries)


def test_vanishing_identities_example(surface):
    vals = vanishing_identities(surface, 5)
    assert set(vals) == {3, 4, 5} and all(v == 0 for v in vals.values())


def test_regularity_bounds_degenerate():
    U = validate([[1, 0]])
    restricted, overall = regularity_bounds(U)
    assert (restricted, overall) == (0, 1)
    assert regularity_max(U) == 0
