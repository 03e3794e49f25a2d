"""Dyck paths to parallelogram polyominoes, and polyominoes to nonintersecting path pairs."""

from collections.abc import Iterator
from itertools import combinations, groupby

from narayana.combinatorics.counting import check_cell, endpoints_feasible, lgv_endpoints
from narayana.combinatorics.dyck import resolve_enumeration_bound
from narayana.combinatorics.involution import phi
from narayana.constants import DOWN, EAST, NORTH, UP
from narayana.errors import (
    BoundExceededError,
    EmptyPathError,
    InfeasibleEndpointsError,
    PathParseError,
    PolyominoInvariantError,
)
from narayana.models import (
    BoundaryWord,
    DyckPath,
    GridPoint,
    LatticePathPair,
    ParallelogramPolyomino,
    validate_dyck_word,
)


def ascents_and_descents(p: DyckPath) -> tuple[list[int], list[int]]:
    """Run lengths of the maximal Up runs and Down runs, left to right."""
    ascents: list[int] = []
    descents: list[int] = []
    for char, run in groupby(p.word):
        (ascents if char == UP else descents).append(len(list(run)))
    return ascents, descents


def to_polyomino(p: DyckPath) -> ParallelogramPolyomino:
    """
    Turn each ascent into a vertical segment whose top step points east, and
    each descent into one whose bottom step does; a North step is prepended
    to the upper boundary and appended to the lower one.
    """
    if p.is_empty():
        raise EmptyPathError("The empty path has no polyomino")
    ascents, descents = ascents_and_descents(p)
    upper = NORTH + "".join(NORTH * (a - 1) + EAST for a in ascents)
    lower = "".join(EAST + NORTH * (d - 1) for d in descents) + NORTH
    return ParallelogramPolyomino(upper=BoundaryWord(word=upper), lower=BoundaryWord(word=lower))


def validate_polyomino(q: ParallelogramPolyomino) -> None:
    """Raise PolyominoInvariantError naming the first violated clause."""
    upper = q.upper.word
    lower = q.lower.word
    if not upper or not lower:
        raise PolyominoInvariantError("boundaries must be nonempty")
    if q.upper.north_count != q.lower.north_count:
        raise PolyominoInvariantError(
            f"North counts differ (upper {q.upper.north_count}, lower {q.lower.north_count})"
        )
    if q.upper.east_count != q.lower.east_count:
        raise PolyominoInvariantError(
            f"East counts differ (upper {q.upper.east_count}, lower {q.lower.east_count})"
        )
    if upper[0] != NORTH:
        raise PolyominoInvariantError("upper boundary must start with North")
    if upper[-1] != EAST:
        raise PolyominoInvariantError("upper boundary must end with East")
    if lower[0] != EAST:
        raise PolyominoInvariantError("lower boundary must start with East")
    if lower[-1] != NORTH:
        raise PolyominoInvariantError("lower boundary must end with North")
    upper_height = lower_height = 0
    for step, (u, v) in enumerate(zip(upper[:-1], lower[:-1]), 1):
        upper_height += u == NORTH
        lower_height += v == NORTH
        # Both points sit on the diagonal x + y = step.
        if upper_height <= lower_height:
            raise PolyominoInvariantError(
                f"upper boundary does not lie strictly above the lower one after step {step}"
            )


def from_polyomino(q: ParallelogramPolyomino) -> DyckPath:
    """Inverse of to_polyomino."""
    validate_polyomino(q)
    ascents = [len(block) + 1 for block in q.upper.word[1:].split(EAST)[:-1]]
    descents = [len(block) + 1 for block in q.lower.word[:-1].split(EAST)[1:]]
    word = "".join(UP * a + DOWN * d for a, d in zip(ascents, descents))
    try:
        validate_dyck_word(word)
    except PathParseError as exc:
        raise PolyominoInvariantError(f"boundaries do not encode a Dyck path ({exc})") from exc
    return DyckPath.model_construct(word=word)


def to_lattice_pair(q: ParallelogramPolyomino) -> LatticePathPair:
    """
    Delete the mandatory steps and anchor the remaining paths at the LGV endpoints.

    Upper boundary loses its initial North run, the East step after it and its
    final East step; lower boundary loses its first East and final North step.
    When the upper boundary has a single East step (j = n) those deletions
    overlap: the pair is flagged degenerate with an empty upper path.
    """
    validate_polyomino(q)
    i = q.initial_north_run
    east = q.upper.east_count
    j = q.upper.north_count
    n = j + east - 1
    a1, b1, a2, b2 = lgv_endpoints(i, n, j)
    degenerate = east == 1
    upper_path = "" if degenerate else q.upper.word[i + 1 : -1]
    return LatticePathPair(
        n=n,
        i=i,
        j=j,
        a1=a1,
        b1=b1,
        a2=a2,
        b2=b2,
        upper_path=BoundaryWord(word=upper_path),
        lower_path=BoundaryWord(word=q.lower.word[1:-1]),
        degenerate=degenerate,
    )


def lattice_pair_of(p: DyckPath) -> LatticePathPair:
    """Path with i returns and j peaks -> phi -> polyomino -> path pair for cell (i, n, j)."""
    return to_lattice_pair(to_polyomino(phi(p)))


def monotone_words(a: GridPoint, b: GridPoint) -> Iterator[str]:
    """Every North/East word from a to b."""
    dx = b.x - a.x
    dy = b.y - a.y
    if dx < 0 or dy < 0:
        raise InfeasibleEndpointsError(f"No monotone path from {tuple(a)} to {tuple(b)}")
    length = dx + dy
    for norths in combinations(range(length), dy):
        steps = [EAST] * length
        for index in norths:
            steps[index] = NORTH
        yield "".join(steps)


def nonintersecting_pairs(
    i: int, n: int, j: int, bound: int | None = None
) -> Iterator[LatticePathPair]:
    """
    Brute-force every vertex-disjoint pair A1 -> B1, A2 -> B2 for cell (i, n, j).

    Raises InfeasibleEndpointsError in the j = n cell, where B1 lies left of A1.
    Checks are eager; the pairs themselves are produced lazily.
    """
    check_cell(i, n, j)
    limit = resolve_enumeration_bound(bound)
    if n > limit:
        raise BoundExceededError(f"Pair enumeration for semilength {n}", n, limit)
    a1, b1, a2, b2 = lgv_endpoints(i, n, j)
    if not endpoints_feasible(i, n, j):
        raise InfeasibleEndpointsError(
            f"Cell (i={i}, n={n}, j={j}): B1={tuple(b1)} lies left of A1={tuple(a1)}"
        )
    return _disjoint_pairs(i, n, j, (a1, b1, a2, b2))


def _disjoint_pairs(
    i: int, n: int, j: int, endpoints: tuple[GridPoint, GridPoint, GridPoint, GridPoint]
) -> Iterator[LatticePathPair]:
    a1, b1, a2, b2 = endpoints
    lowers = [BoundaryWord(word=word) for word in monotone_words(a2, b2)]
    lower_points = [set(lower.vertices(a2)) for lower in lowers]
    for word in monotone_words(a1, b1):
        upper = BoundaryWord(word=word)
        upper_points = set(upper.vertices(a1))
        for lower, points in zip(lowers, lower_points):
            if upper_points.isdisjoint(points):
                yield LatticePathPair(
                    n=n, i=i, j=j, a1=a1, b1=b1, a2=a2, b2=b2, upper_path=upper, lower_path=lower
                )
