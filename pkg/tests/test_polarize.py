import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borel_dual import (
    GridIdeal,
    GridMonomial,
    Monomial,
    borel_closure,
    bpol_ideal,
    bpol_membership,
    bpol_monomial,
    contains,
    depolarize,
    monomial_from_word,
    stdpol_ideal,
    stdpol_monomial,
    transpose,
    verify_polarization,
)
from borel_dual.polarize import flatten_grid_ideal, grid_hilbert_series_quotient, unflatten_support
from conftest import ideal


def grid(rows, cols, *cells):
    return GridMonomial(rows, cols, frozenset(cells))


class TestGridMonomial:
    def test_str(self):
        assert grid(2, 2, (1, 1), (2, 2)).to_str() == "x1_1*x2_2"
        assert grid(2, 2).to_str("y") == "1"

    def test_cell_bounds(self):
        with pytest.raises(ValueError):
            grid(2, 2, (3, 1))

    def test_divides(self):
        assert grid(2, 2, (1, 1)).divides(grid(2, 2, (1, 1), (2, 2)))


class TestColumnPolarization:
    def test_monomial_cells(self):
        # x1*x2^2 -> letters (1, 2, 2) -> cells (1,1), (2,2), (2,3)
        assert bpol_monomial(Monomial((1, 2)), 3).cells == {(1, 1), (2, 2), (2, 3)}

    def test_running_example(self, running_example):
        J = bpol_ideal(running_example, 2)
        assert J.to_str() == "x1_1*x1_2, x1_1*x2_2, x1_1*x3_2, x2_1*x2_2, x2_1*x3_2"

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            bpol_monomial(Monomial((3,)), 2)

    def test_depolarize_round_trip(self, running_example):
        assert depolarize(bpol_ideal(running_example, 2)) == running_example

    def test_is_polarization(self, running_example):
        assert verify_polarization(running_example, bpol_ideal(running_example, 2))

    @given(st.lists(st.lists(st.integers(1, 3), min_size=1, max_size=3), min_size=1, max_size=2))
    @settings(max_examples=30, deadline=None)
    def test_random_is_polarization(self, words):
        I = borel_closure([monomial_from_word(sorted(w), 3) for w in words], 3)
        assert verify_polarization(I, bpol_ideal(I, 3))


class TestStandardPolarization:
    def test_monomial_cells(self):
        assert stdpol_monomial(Monomial((1, 2)), 2).cells == {(1, 1), (2, 1), (2, 2)}

    def test_running_example(self, running_example):
        J = stdpol_ideal(running_example, 2)
        assert J.to_str() == "x1_1*x1_2, x1_1*x2_1, x1_1*x3_1, x2_1*x2_2, x2_1*x3_1"

    def test_is_polarization(self, running_example):
        assert verify_polarization(running_example, stdpol_ideal(running_example, 2))

    def test_differs_from_column_polarization(self, running_example):
        assert stdpol_ideal(running_example, 2) != bpol_ideal(running_example, 2)


class TestTranspose:
    def test_involution(self, running_example):
        J = bpol_ideal(running_example, 2)
        assert transpose(transpose(J)) == J

    def test_shape_swap(self):
        J = GridIdeal(3, 2, (grid(3, 2, (3, 1)),))
        T = transpose(J)
        assert (T.rows, T.cols) == (2, 3)
        assert T.gens[0].cells == {(1, 3)}


class TestMembershipViaGrid:
    def test_agrees_with_direct_membership(self, running_example):
        I = running_example
        from itertools import product

        for exps in product(range(3), repeat=3):
            m = Monomial(exps)
            if m.degree > 2:
                continue
            assert bpol_membership(I, m, 2) == contains(I, m)


class TestFlattening:
    def test_round_trip(self, running_example):
        J = bpol_ideal(running_example, 2)
        flat = flatten_grid_ideal(J)
        assert flat.n == 6
        cells = {frozenset(unflatten_support(g.support, 2)) for g in flat.gens}
        assert cells == {g.cells for g in J.gens}

    def test_grid_hilbert_series_matches_flat(self, running_example):
        J = bpol_ideal(running_example, 2)
        from borel_dual import hilbert_series_quotient

        assert grid_hilbert_series_quotient(J) == hilbert_series_quotient(flatten_grid_ideal(J))
