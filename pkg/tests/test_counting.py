"""Tests for exact counting: binomials, Catalan, Narayana and the LGV determinant."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from narayana.combinatorics.counting import (
    CountTable,
    _exact_div,
    binomial,
    catalan,
    domain_cells,
    endpoints_feasible,
    gen_narayana,
    gen_narayana_numerator,
    lattice_path_count,
    lgv_count,
    lgv_endpoints,
    lgv_matrix,
    narayana_classic,
    printed_lgv_count,
    tabulate,
)
from narayana.combinatorics.dyck import returns_census
from narayana.errors import DomainError, InexactDivisionError
from narayana.models import GridPoint

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

cell_strategy = st.integers(min_value=1, max_value=40).flatmap(
    lambda n: st.tuples(st.integers(min_value=1, max_value=n), st.just(n)).flatmap(
        lambda pair: st.tuples(
            st.just(pair[0]), st.just(pair[1]), st.integers(min_value=pair[0], max_value=pair[1])
        )
    )
)


class TestBinomial:
    """Tests for binomial conventions."""

    @pytest.mark.parametrize(
        "m,k,expected",
        [(5, 2, 10), (5, 0, 1), (0, 0, 1), (-1, 0, 1), (-1, 1, 0), (3, 4, 0), (3, -1, 0)],
    )
    def test_conventions(self, m, k, expected):
        """Test the boundary conventions."""
        assert binomial(m, k) == expected

    @given(st.integers(min_value=0, max_value=60), st.integers(min_value=0, max_value=60))
    def test_agrees_with_comb(self, m, k):
        """Test agreement with math.comb on nonnegative arguments."""
        assert binomial(m, k) == math.comb(m, k)


class TestClassicalNumbers:
    """Tests for Catalan and classical Narayana numbers."""

    def test_catalan(self):
        """Test the first Catalan numbers."""
        assert [catalan(n) for n in range(len(CATALAN))] == CATALAN

    def test_catalan_negative(self):
        """Test that negative n is rejected."""
        with pytest.raises(DomainError):
            catalan(-1)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_narayana_row_sums(self, n):
        """Test that each Narayana row sums to a Catalan number."""
        assert sum(narayana_classic(n, k) for k in range(1, n + 1)) == catalan(n)

    def test_narayana_domain(self):
        """Test that k outside 1..n is rejected."""
        with pytest.raises(DomainError):
            narayana_classic(3, 0)

    def test_exact_division(self):
        """Test that an inexact division raises."""
        assert _exact_div(12, 4, "test") == 3
        with pytest.raises(InexactDivisionError):
            _exact_div(7, 2, "test")


class TestGenNarayana:
    """Tests for N_i(n, j)."""

    @pytest.mark.parametrize(
        "i,n,j,expected",
        [
            (1, 1, 1, 1),
            (1, 4, 2, 3),
            (2, 2, 2, 1),
            (2, 6, 4, 15),
            (3, 7, 5, 27),
            (4, 8, 5, 84),
            (4, 10, 6, 840),
            (2, 5, 5, 0),
        ],
    )
    def test_values(self, i, n, j, expected):
        """Test tabulated values."""
        assert gen_narayana(i, n, j) == expected

    @pytest.mark.parametrize("i,n,j", [(0, 3, 1), (2, 3, 1), (1, 3, 4), (1, 0, 1)])
    def test_domain(self, i, n, j):
        """Test that cells outside 1 <= i <= j <= n are rejected."""
        with pytest.raises(DomainError):
            gen_narayana(i, n, j)

    @given(cell_strategy)
    def test_numerator_divisible(self, cell):
        """Test that n divides the numerator."""
        i, n, j = cell
        assert gen_narayana_numerator(i, n, j) % n == 0

    @pytest.mark.parametrize("n", range(1, 31))
    def test_sums(self, n):
        """Test totals over a row and over the returns."""
        assert sum(gen_narayana(i, n, j) for i, m, j in domain_cells(n) if m == n) == catalan(n)
        for j in range(1, n + 1):
            assert sum(gen_narayana(i, n, j) for i in range(1, j + 1)) == narayana_classic(n, j)

    @pytest.mark.parametrize("n", range(2, 12))
    def test_first_row_is_shifted_narayana(self, n):
        """Test N_1(n, j) = Narayana(n - 1, j) for j < n."""
        for j in range(1, n):
            assert gen_narayana(1, n, j) == narayana_classic(n - 1, j)

    @pytest.mark.parametrize("n", range(1, 20))
    def test_peak_symmetry(self, n):
        """Test that j peaks and n + 1 - j peaks are equally frequent."""
        for j in range(1, n + 1):
            assert narayana_classic(n, j) == narayana_classic(n, n + 1 - j)

    @pytest.mark.parametrize("n", range(1, 12))
    def test_marginal_over_peaks(self, n):
        """Test that summing over peaks gives the census of returns."""
        by_returns = returns_census(n)
        for i in range(1, n + 1):
            assert sum(gen_narayana(i, n, j) for j in range(i, n + 1)) == by_returns.get(i, 0)

    @pytest.mark.parametrize("i", range(1, 20))
    def test_trailing_zero(self, i):
        """Test N_i(n, n) = 0 for n > i and N_n(n, n) = 1."""
        assert gen_narayana(i, i, i) == 1
        assert gen_narayana(i, i + 1, i + 1) == 0


class TestLGV:
    """Tests for the determinant count."""

    def test_endpoints(self):
        """Test the sources and sinks of the running example."""
        assert lgv_endpoints(4, 10, 6) == (
            GridPoint(1, 4),
            GridPoint(4, 6),
            GridPoint(1, 0),
            GridPoint(5, 5),
        )

    def test_matrix_and_determinant(self):
        """Test the 2x2 matrix at (4, 10, 6)."""
        assert lgv_matrix(4, 10, 6) == ((10, 5), (84, 126))
        assert lgv_count(4, 10, 6) == 840

    def test_single_cell(self):
        """Test the smallest cell."""
        assert lgv_count(1, 1, 1) == 1

    def test_lattice_path_count(self):
        """Test path counts including the empty path."""
        assert lattice_path_count(GridPoint(0, 0), GridPoint(2, 2)) == 6
        assert lattice_path_count(GridPoint(1, 1), GridPoint(1, 1)) == 1
        assert lattice_path_count(GridPoint(2, 0), GridPoint(0, 3)) == 0

    def test_matches_closed_form(self):
        """Test determinant against closed form for every cell up to n = 50."""
        for i, n, j in domain_cells(50):
            assert lgv_count(i, n, j) == gen_narayana(i, n, j), (i, n, j)

    def test_feasibility(self):
        """Test that only the j = n cell has infeasible endpoints."""
        assert not endpoints_feasible(1, 2, 2)
        assert endpoints_feasible(1, 2, 1)
        for i, n, j in domain_cells(12):
            assert endpoints_feasible(i, n, j) == (j < n)

    def test_printed_expression_disagrees(self):
        """Test that the printed binomial expression does not reproduce the table."""
        assert printed_lgv_count(4, 10, 6) == 0
        assert gen_narayana(4, 10, 6) == 840


class TestCountTable:
    """Tests for CountTable."""

    def test_zero_entries_dropped(self):
        """Test that zero counts are not stored."""
        table = CountTable({(1, 2, 1): 1, (1, 2, 2): 0})
        assert len(table) == 1
        assert table.get(1, 2, 2) == 0

    @pytest.mark.parametrize("key", [(2, 3, 1), (0, 1, 1), (1, 2, 3)])
    def test_invalid_key(self, key):
        """Test that keys outside the domain are rejected."""
        with pytest.raises(DomainError):
            CountTable({key: 1})

    def test_negative_count(self):
        """Test that negative counts are rejected."""
        with pytest.raises(DomainError):
            CountTable({(1, 1, 1): -1})

    def test_frozen(self):
        """Test that a table cannot be reassigned."""
        table = CountTable({(1, 1, 1): 1})
        with pytest.raises(ValidationError):
            table.entries = {}

    def test_merge(self):
        """Test cell-wise sums in either order."""
        a = CountTable({(1, 1, 1): 1, (1, 2, 1): 1})
        b = CountTable({(1, 2, 1): 2, (2, 2, 2): 1})
        assert a.merge(b) == b.merge(a)
        assert a.merge(b).get(1, 2, 1) == 3
        assert a.merge(b).total() == 5

    def test_tabulate(self):
        """Test that tabulate covers the domain and drops zeros."""
        table = tabulate(gen_narayana, 4)
        assert table.total() == sum(CATALAN[1:5])
        assert (1, 2, 2) not in table.cells()
        assert table.row(2) == {(1, 1): 1, (2, 2): 1}
