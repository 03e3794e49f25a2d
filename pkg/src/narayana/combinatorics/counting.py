"""Exact counting: binomial conventions, Catalan and Narayana numbers, LGV determinant."""

import math
from collections.abc import Callable, Iterator, Mapping

from pydantic import BaseModel, ConfigDict, Field

from narayana.errors import DomainError, InexactDivisionError
from narayana.models import GridPoint

Cell = tuple[int, int, int]
EMPTY_CELL: Cell = (0, 0, 0)


def _clean_counts(entries: Mapping[Cell, int]) -> dict[Cell, int]:
    cleaned: dict[Cell, int] = {}
    for key, value in entries.items():
        i, n, j = key
        if key != EMPTY_CELL and not 1 <= i <= j <= n:
            raise DomainError(f"Count table key (i={i}, n={n}, j={j}) outside 1 <= i <= j <= n")
        if value < 0:
            raise DomainError(f"Negative count {value} at (i={i}, n={n}, j={j})")
        if value:
            cleaned[key] = value
    return cleaned


class CountTable(BaseModel):
    """
    Sparse exact map (i, n, j) -> count.

    Keys satisfy 1 <= i <= j <= n; the single extra key (0, 0, 0) holds the
    empty path so that totals over n = 0 equal Catalan(0). Zero counts are
    never stored.
    """

    model_config = ConfigDict(frozen=True)

    entries: dict[Cell, int] = Field(default_factory=dict)

    def __init__(self, entries: Mapping[Cell, int] | None = None) -> None:
        super().__init__(entries=_clean_counts(entries or {}))

    def get(self, i: int, n: int, j: int) -> int:
        return self.entries.get((i, n, j), 0)

    def row(self, n: int) -> dict[tuple[int, int], int]:
        """Cells of semilength n keyed by (i, j)."""
        return {(i, j): value for (i, m, j), value in self.entries.items() if m == n}

    def cells(self) -> list[Cell]:
        return sorted(self.entries)

    def total(self) -> int:
        return sum(self.entries.values())

    def merge(self, other: "CountTable") -> "CountTable":
        """Cell-wise sum; merging is commutative."""
        merged = dict(self.entries)
        for key, value in other.entries.items():
            merged[key] = merged.get(key, 0) + value
        return CountTable(merged)

    def __len__(self) -> int:
        return len(self.entries)


def domain_cells(nmax: int) -> Iterator[Cell]:
    """All (i, n, j) with 1 <= i <= j <= n <= nmax, ordered by n, then i, then j."""
    for n in range(1, nmax + 1):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                yield i, n, j


def tabulate(count: Callable[[int, int, int], int], nmax: int) -> CountTable:
    """Evaluate count(i, n, j) on every domain cell up to nmax."""
    return CountTable({(i, n, j): count(i, n, j) for i, n, j in domain_cells(nmax)})


def binomial(m: int, k: int) -> int:
    """
    Binomial coefficient with the counting conventions used throughout.

    1 when k = 0 (negative m included), 0 when k < 0 or m < k, else m!/(k!(m-k)!).
    The polynomial extension binomial(-1, k) = (-1)^k is deliberately not used.
    """
    if k == 0:
        return 1
    if k < 0 or m < k:
        return 0
    return math.comb(m, k)


def _exact_div(numerator: int, denominator: int, context: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(
            f"{context}: {denominator} does not divide {numerator} (remainder {remainder})"
        )
    return quotient


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError(f"Catalan number undefined for n={n}")
    return _exact_div(math.comb(2 * n, n), n + 1, f"catalan({n})")


def narayana_classic(n: int, k: int) -> int:
    """Number of Dyck paths of semilength n with k peaks."""
    if not 1 <= k <= n:
        raise DomainError(f"Narayana number needs 1 <= k <= n, got n={n}, k={k}")
    return _exact_div(
        math.comb(n, k) * math.comb(n, k - 1), n, f"narayana_classic({n}, {k})"
    )


def check_cell(i: int, n: int, j: int) -> None:
    if not 1 <= i <= j <= n:
        raise DomainError(f"Need 1 <= i <= j <= n, got i={i}, n={n}, j={j}")


def gen_narayana_numerator(i: int, n: int, j: int) -> int:
    """i * C(n, j) * C(n-i-1, j-i), which n always divides."""
    return i * binomial(n, j) * binomial(n - i - 1, j - i)


def gen_narayana(i: int, n: int, j: int) -> int:
    """Number of Dyck paths of semilength n with i returns and j peaks."""
    check_cell(i, n, j)
    return _exact_div(gen_narayana_numerator(i, n, j), n, f"gen_narayana({i}, {n}, {j})")


def lattice_path_count(a: GridPoint, b: GridPoint) -> int:
    """
    Algebraic count of unit North/East paths a -> b.

    Equals the geometric count whenever b lies weakly north-east of a; the
    binomial conventions decide the remaining cases.
    """
    dx = b.x - a.x
    dy = b.y - a.y
    return binomial(dx + dy, dy)


def lgv_endpoints(i: int, n: int, j: int) -> tuple[GridPoint, GridPoint, GridPoint, GridPoint]:
    """Sources and sinks (A1, B1, A2, B2) of the nonintersecting path pair for cell (i, n, j)."""
    return (
        GridPoint(1, i),
        GridPoint(n - j, j),
        GridPoint(1, 0),
        GridPoint(n + 1 - j, j - 1),
    )


def endpoints_feasible(i: int, n: int, j: int) -> bool:
    """True iff B1 is weakly north-east of A1; fails exactly in the j = n cell."""
    check_cell(i, n, j)
    a1, b1, _, _ = lgv_endpoints(i, n, j)
    return b1.x >= a1.x and b1.y >= a1.y


def lgv_matrix(i: int, n: int, j: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Path counts with rows indexed by sources A1, A2 and columns by sinks B1, B2."""
    check_cell(i, n, j)
    a1, b1, a2, b2 = lgv_endpoints(i, n, j)
    return (
        (lattice_path_count(a1, b1), lattice_path_count(a1, b2)),
        (lattice_path_count(a2, b1), lattice_path_count(a2, b2)),
    )


def lgv_count(i: int, n: int, j: int) -> int:
    """Determinant of lgv_matrix: the number of nonintersecting pairs A1->B1, A2->B2."""
    (a1b1, a1b2), (a2b1, a2b2) = lgv_matrix(i, n, j)
    return a1b1 * a2b2 - a1b2 * a2b1


def printed_lgv_count(i: int, n: int, j: int) -> int:
    """
    Product-of-binomials form of the determinant with misplaced arguments.

    It does not reproduce the tables (0 instead of 840 at (4, 10, 6)); kept
    only so that the discrepancy stays pinned by a regression test.
    """
    check_cell(i, n, j)
    return binomial(n - j - 1, j - i) * binomial(n - j, j - 1) - binomial(
        n - j, j - 1 - i
    ) * binomial(n - j - 1, j)
