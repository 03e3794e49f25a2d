"""Tests for truncated trivariate power series and the generating function."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from narayana.combinatorics.counting import catalan, domain_cells, gen_narayana
from narayana.combinatorics.series import (
    Series3,
    from_lines,
    gf_coefficient,
    gf_expand,
    series_inv,
    series_mul,
    series_sqrt,
)
from narayana.errors import BoundExceededError, DomainError, SeriesError

ORDER = 6


@pytest.fixture
def x():
    return Series3.monomial(1, 0, 0, ORDER)


@pytest.fixture
def one():
    return Series3.constant(1, ORDER)


class TestSeries3:
    """Tests for Series3 arithmetic."""

    def test_truncation(self):
        """Test that terms above the truncation order are dropped."""
        s = Series3(2, {(1, 0, 0): 1, (3, 0, 0): 5, (2, 1, 1): 0})
        assert dict(s.coefficients) == {(1, 0, 0): Fraction(1)}

    def test_negative_exponent(self):
        """Test that negative exponents are rejected."""
        with pytest.raises(SeriesError):
            Series3(2, {(1, -1, 0): 1})

    def test_negative_order(self):
        """Test that a negative truncation order is rejected."""
        with pytest.raises(SeriesError):
            Series3(-1)

    def test_frozen(self, x):
        """Test that a series cannot be reassigned."""
        with pytest.raises(ValidationError):
            x.truncation_order = 9

    def test_add_and_scale(self, x, one):
        """Test addition, subtraction and scalar multiplication."""
        s = 3 * one + x - x
        assert dict(s.coefficients) == {(0, 0, 0): Fraction(3)}
        assert (-x).coefficient(1, 0, 0) == -1

    def test_mul_truncates(self, one, x):
        """Test that products keep the smaller truncation order."""
        short = Series3.monomial(1, 0, 0, 2)
        product = series_mul(short, x * x)
        assert product.truncation_order == 2
        assert not product.coefficients
        assert (one + x) * (one - x) == one - x * x

    def test_inverse_geometric(self, one, x):
        """Test 1 / (1 - x) = sum of x^k."""
        inverse = series_inv(one - x)
        assert all(inverse.coefficient(k, 0, 0) == 1 for k in range(ORDER + 1))
        assert series_mul(inverse, one - x) == one

    def test_sqrt_catalan(self, one, x):
        """Test sqrt(1 - 4x) = 1 - 2 sum Catalan(k - 1) x^k."""
        root = series_sqrt(one - 4 * x)
        assert root.coefficient(0, 0, 0) == 1
        for k in range(1, ORDER + 1):
            assert root.coefficient(k, 0, 0) == -2 * catalan(k - 1)
        assert root * root == one - 4 * x

    def test_sqrt_requires_unit_constant(self, one):
        """Test that sqrt needs constant term 1."""
        with pytest.raises(SeriesError):
            series_sqrt(4 * one)

    def test_constant_slice_required(self, one):
        """Test that x^0 terms in y or z are refused."""
        y = Series3.monomial(0, 1, 0, ORDER)
        with pytest.raises(SeriesError):
            series_sqrt(one + y)
        with pytest.raises(SeriesError):
            series_inv(one + y)

    def test_inverse_needs_nonzero_constant(self, x):
        """Test that 1 / x is refused."""
        with pytest.raises(SeriesError):
            series_inv(x)

    def test_lines(self):
        """Test the interchange form."""
        s = Series3(3, {(2, 1, 1): Fraction(1, 2), (0, 0, 0): 1})
        assert s.to_lines() == ["0 0 0 1/1", "2 1 1 1/2"]
        assert from_lines(s.to_lines(), 3) == s


class TestGeneratingFunction:
    """Tests for the generating function expansion."""

    def test_low_order(self):
        """Test the expansion to x^2."""
        assert gf_expand(2).to_lines() == ["0 0 0 1/1", "1 1 1 1/1", "2 1 1 1/1", "2 2 2 1/1"]

    def test_matches_closed_form(self):
        """Test every coefficient against N_i(n, j) up to n = 10."""
        expansion = gf_expand(10)
        for i, n, j in domain_cells(10):
            assert expansion.coefficient(n, i, j) == gen_narayana(i, n, j)
        for n, i, j in expansion.coefficients:
            assert n == 0 or 1 <= i <= j <= n
        for n in range(11):
            assert sum(expansion.x_slice(n).values()) == catalan(n)

    def test_coefficient(self):
        """Test single coefficient extraction."""
        assert gf_coefficient(0, 0, 0) == 1
        assert gf_coefficient(6, 2, 4) == 15
        assert gf_coefficient(3, 2, 1) == 0

    def test_bound(self):
        """Test that orders above the bound are refused."""
        with pytest.raises(BoundExceededError):
            gf_expand(5, bound=4)

    def test_bound_from_environment(self, monkeypatch):
        """Test that NARAYANA_GF_BOUND sets the default bound."""
        monkeypatch.setenv("NARAYANA_GF_BOUND", "3")
        with pytest.raises(BoundExceededError):
            gf_expand(4)

    def test_negative_order(self):
        """Test that negative orders are refused."""
        with pytest.raises(DomainError):
            gf_expand(-1)
        with pytest.raises(DomainError):
            gf_coefficient(2, -1, 1)


exponents = st.tuples(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=2),
)
tails = st.dictionaries(exponents, st.integers(min_value=-5, max_value=5), max_size=5)


def series_with_constant(constant: int, tail: dict) -> Series3:
    return Series3(3, {**tail, (0, 0, 0): constant})


class TestRingLaws:
    """Property tests for series arithmetic."""

    @given(tails, tails, tails)
    def test_associative_and_distributive(self, a, b, c):
        """Test associativity of products and distributivity over sums."""
        sa, sb, sc = (series_with_constant(2, t) for t in (a, b, c))
        assert (sa * sb) * sc == sa * (sb * sc)
        assert sa * (sb + sc) == sa * sb + sa * sc
        assert sa * sb == sb * sa

    @given(st.integers(min_value=-4, max_value=4).filter(bool), tails)
    def test_inverse_roundtrip(self, constant, tail):
        """Test a * (1 / a) = 1."""
        s = series_with_constant(constant, tail)
        assert series_mul(s, series_inv(s)) == Series3.constant(1, 3)

    @given(tails)
    def test_sqrt_roundtrip(self, tail):
        """Test sqrt(a)^2 = a for constant term 1."""
        s = series_with_constant(1, tail)
        root = series_sqrt(s)
        assert root * root == s
