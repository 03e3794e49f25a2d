"""Truncated trivariate power series in x, y, z with exact rational coefficients."""

import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Union

from pydantic import BaseModel, ConfigDict, Field

from narayana.config import get_settings
from narayana.errors import BoundExceededError, DomainError, SeriesError

logger = logging.getLogger(__name__)

Exponent = tuple[int, int, int]
Poly = dict[tuple[int, int], Fraction]
Scalar = Union[int, Fraction]


def _truncate(order: int, coefficients: Mapping[Exponent, Scalar]) -> dict[Exponent, Fraction]:
    if order < 0:
        raise SeriesError(f"Negative truncation order {order}")
    cleaned: dict[Exponent, Fraction] = {}
    for key, value in coefficients.items():
        if min(key) < 0:
            raise SeriesError(f"Negative exponent in {key}")
        if key[0] <= order and value:
            cleaned[key] = Fraction(value)
    return cleaned


class Series3(BaseModel):
    """
    Sum of c * x^n y^i z^j over stored (n, i, j), truncated above x-degree
    truncation_order. Zero coefficients and truncated terms are never stored.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    truncation_order: int = Field(..., ge=0)
    coefficients: dict[Exponent, Fraction] = Field(default_factory=dict)

    def __init__(
        self, truncation_order: int, coefficients: Mapping[Exponent, Scalar] | None = None
    ) -> None:
        super().__init__(
            truncation_order=truncation_order,
            coefficients=_truncate(truncation_order, coefficients or {}),
        )

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "Series3":
        return cls(order, {(0, 0, 0): Fraction(value)})

    @classmethod
    def monomial(cls, n: int, i: int, j: int, order: int, value: Scalar = 1) -> "Series3":
        return cls(order, {(n, i, j): Fraction(value)})

    def coefficient(self, n: int, i: int, j: int) -> Fraction:
        return self.coefficients.get((n, i, j), Fraction(0))

    def x_slice(self, n: int) -> Poly:
        """Coefficient of x^n as a polynomial in y, z."""
        return {(i, j): c for (m, i, j), c in self.coefficients.items() if m == n}

    def to_lines(self) -> list[str]:
        """Interchange form: 'n i j numerator/denominator', sorted by (n, i, j)."""
        return [
            f"{n} {i} {j} {c.numerator}/{c.denominator}"
            for (n, i, j), c in sorted(self.coefficients.items())
        ]

    def __add__(self, other: "Series3") -> "Series3":
        return series_add(self, other)

    def __sub__(self, other: "Series3") -> "Series3":
        return series_add(self, series_scale(other, -1))

    def __neg__(self) -> "Series3":
        return series_scale(self, -1)

    def __mul__(self, other: Union["Series3", Scalar]) -> "Series3":
        if isinstance(other, Series3):
            return series_mul(self, other)
        return series_scale(self, other)

    def __rmul__(self, other: Scalar) -> "Series3":
        return series_scale(self, other)


def from_lines(lines: Iterable[str], order: int) -> Series3:
    """Parse the to_lines interchange form."""
    coefficients: dict[Exponent, Fraction] = {}
    for line in lines:
        if not line.strip():
            continue
        n, i, j, value = line.split()
        coefficients[(int(n), int(i), int(j))] = Fraction(value)
    return Series3(order, coefficients)


def series_add(a: Series3, b: Series3) -> Series3:
    order = min(a.truncation_order, b.truncation_order)
    total: dict[Exponent, Fraction] = dict(a.coefficients)
    for key, value in b.coefficients.items():
        total[key] = total.get(key, Fraction(0)) + value
    return Series3(order, total)


def series_scale(a: Series3, c: Scalar) -> Series3:
    return Series3(a.truncation_order, {key: value * c for key, value in a.coefficients.items()})


def series_mul(a: Series3, b: Series3) -> Series3:
    order = min(a.truncation_order, b.truncation_order)
    product: dict[Exponent, Fraction] = {}
    for (n1, i1, j1), c1 in a.coefficients.items():
        for (n2, i2, j2), c2 in b.coefficients.items():
            n = n1 + n2
            if n > order:
                continue
            key = (n, i1 + i2, j1 + j2)
            product[key] = product.get(key, Fraction(0)) + c1 * c2
    return Series3(order, product)


def _poly_mul(p: Poly, q: Poly) -> Poly:
    product: Poly = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            key = (i1 + i2, j1 + j2)
            product[key] = product.get(key, Fraction(0)) + c1 * c2
    return product


def _poly_axpy(acc: Poly, p: Poly, scale: Fraction) -> None:
    for key, value in p.items():
        acc[key] = acc.get(key, Fraction(0)) + scale * value


def _constant_slice(a: Series3, operation: str) -> Fraction:
    """x^0 part of a, which must be a pure constant for x-degree truncation to be exact."""
    head = a.x_slice(0)
    if any(key != (0, 0) for key in head):
        raise SeriesError(f"{operation}: the x^0 part must be constant, got terms {sorted(head)}")
    return head.get((0, 0), Fraction(0))


def _from_slices(slices: list[Poly], order: int) -> Series3:
    return Series3(
        order,
        {(n, i, j): c for n, poly in enumerate(slices) for (i, j), c in poly.items()},
    )


def series_sqrt(a: Series3) -> Series3:
    """Square root with constant term 1, by recursion on x-degree slices."""
    if _constant_slice(a, "sqrt") != 1:
        raise SeriesError(f"sqrt needs constant term 1, got {a.coefficient(0, 0, 0)}")
    order = a.truncation_order
    roots: list[Poly] = [{(0, 0): Fraction(1)}]
    for m in range(1, order + 1):
        acc = dict(a.x_slice(m))
        for k in range(1, m):
            _poly_axpy(acc, _poly_mul(roots[k], roots[m - k]), Fraction(-1))
        roots.append({key: value / 2 for key, value in acc.items() if value})
    return _from_slices(roots, order)


def series_inv(a: Series3) -> Series3:
    """Multiplicative inverse; the constant term must be nonzero."""
    head = _constant_slice(a, "inverse")
    if head == 0:
        raise SeriesError("inverse needs a nonzero constant term")
    order = a.truncation_order
    a_slices = [a.x_slice(m) for m in range(order + 1)]
    inverse: list[Poly] = [{(0, 0): 1 / head}]
    for m in range(1, order + 1):
        acc: Poly = {}
        for k in range(1, m + 1):
            _poly_axpy(acc, _poly_mul(a_slices[k], inverse[m - k]), -1 / head)
        inverse.append({key: value for key, value in acc.items() if value})
    return _from_slices(inverse, order)


def resolve_gf_bound(bound: int | None) -> int:
    return get_settings().gf_bound if bound is None else bound


@lru_cache(maxsize=16)
def _expand_gf(order: int) -> Series3:
    one = Series3.constant(1, order)
    x = Series3.monomial(1, 0, 0, order)
    y = Series3.monomial(0, 1, 0, order)
    z = Series3.monomial(0, 0, 1, order)
    discriminant = one - 2 * x * (one + z) + x * x * (one - z) * (one - z)
    inner = one - x * (one - z) - series_sqrt(discriminant)
    expansion = 2 * series_inv(2 * one - y * inner)
    for (n, i, j), c in expansion.coefficients.items():
        if c.denominator != 1 or c < 0:
            raise SeriesError(f"Coefficient of x^{n} y^{i} z^{j} is {c}, not a nonnegative integer")
        if i > n or j > n:
            raise SeriesError(f"Term x^{n} y^{i} z^{j} exceeds its x-degree")
    logger.debug(
        "Expanded generating function to order %d: %d terms", order, len(expansion.coefficients)
    )
    return expansion


def gf_expand(order: int, bound: int | None = None) -> Series3:
    """
    2 / (2 - y (1 - x(1-z) - sqrt(1 - 2x(1+z) + x^2 (1-z)^2))) to x-degree `order`.

    Every coefficient is checked to be a nonnegative integer.
    """
    if order < 0:
        raise DomainError(f"Expansion order must be nonnegative, got {order}")
    limit = resolve_gf_bound(bound)
    if order > limit:
        raise BoundExceededError(f"Generating function expansion to order {order}", order, limit)
    return _expand_gf(order)


def gf_coefficient(n: int, i: int, j: int, bound: int | None = None) -> int:
    """Coefficient of x^n y^i z^j in the generating function."""
    if min(n, i, j) < 0:
        raise DomainError(f"Exponents must be nonnegative, got ({n}, {i}, {j})")
    value = gf_expand(n, bound).coefficient(n, i, j)
    return value.numerator
