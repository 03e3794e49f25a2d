"""Dyck path parsing, statistics, enumeration and census."""

import logging
from collections import Counter
from collections.abc import Iterator

from narayana.combinatorics.counting import CountTable
from narayana.config import get_settings
from narayana.constants import DOWN, UP
from narayana.errors import BoundExceededError, DomainError
from narayana.models import DyckPath, PathStats, validate_dyck_word

logger = logging.getLogger(__name__)

EMPTY_PATH = DyckPath.model_construct(word="")


def parse_path(text: str) -> DyckPath:
    """
    Parse a {U, D} word into a validated path.

    Raises ForeignStepError, NegativePrefixError or UnbalancedPathError naming
    the first offending position.
    """
    validate_dyck_word(text)
    return DyckPath.model_construct(word=text)


def render_path(p: DyckPath) -> str:
    return p.word


def word_stats(word: str) -> tuple[int, int, int, int]:
    """(semilength, returns, peaks, initial_ascent) of a valid word, in one pass."""
    height = returns = peaks = initial_ascent = 0
    in_ascent = True
    previous = ""
    for char in word:
        if char == UP:
            height += 1
            if in_ascent:
                initial_ascent += 1
        else:
            in_ascent = False
            height -= 1
            if height == 0:
                returns += 1
            if previous == UP:
                peaks += 1
        previous = char
    return len(word) // 2, returns, peaks, initial_ascent


def stats(p: DyckPath) -> PathStats:
    semilength, returns, peaks, initial_ascent = word_stats(p.word)
    return PathStats(
        semilength=semilength, returns=returns, peaks=peaks, initial_ascent=initial_ascent
    )


def resolve_enumeration_bound(bound: int | None) -> int:
    return get_settings().enumeration_bound if bound is None else bound


def _check_semilength(n: int, bound: int | None, what: str) -> None:
    if n < 0:
        raise DomainError(f"Semilength must be nonnegative, got {n}")
    limit = resolve_enumeration_bound(bound)
    if n > limit:
        raise BoundExceededError(what, n, limit)


def dyck_words(n: int) -> Iterator[str]:
    """Words of semilength n in lexicographic order with U < D. No bound check."""
    stack: list[tuple[str, int, int]] = [("", 0, 0)]
    while stack:
        prefix, ups, downs = stack.pop()
        if downs == n:
            yield prefix
            continue
        # Pushed last, popped first: U branches come out before D branches.
        if downs < ups:
            stack.append((prefix + DOWN, ups, downs + 1))
        if ups < n:
            stack.append((prefix + UP, ups + 1, downs))


def enumerate_dyck(n: int, bound: int | None = None) -> Iterator[DyckPath]:
    """
    All Dyck paths of semilength n, each once, in lexicographic order with U < D.

    The bound is checked eagerly, before the first path is produced.
    """
    _check_semilength(n, bound, f"Enumeration of semilength {n}")
    logger.debug("Enumerating Dyck paths of semilength %d", n)
    return (DyckPath.model_construct(word=word) for word in dyck_words(n))


def census(n: int, bound: int | None = None) -> CountTable:
    """Exact number of semilength-n paths for every (returns, peaks) cell."""
    _check_semilength(n, bound, f"Census of semilength {n}")
    counts: Counter[tuple[int, int]] = Counter()
    for word in dyck_words(n):
        _, returns, peaks, _ = word_stats(word)
        counts[(returns, peaks)] += 1
    table = CountTable({(i, n, j): count for (i, j), count in counts.items()})
    logger.debug("Census of semilength %d: %d paths in %d cells", n, table.total(), len(table))
    return table


def census_upto(nmax: int, bound: int | None = None) -> CountTable:
    """Merged census over 1 <= n <= nmax."""
    _check_semilength(nmax, bound, f"Census up to semilength {nmax}")
    table = CountTable()
    for n in range(1, nmax + 1):
        table = table.merge(census(n, bound))
    return table


def ascent_census(n: int, bound: int | None = None) -> dict[tuple[int, int], int]:
    """Counts keyed by (initial_ascent, peaks): the sizes of the image sets of phi."""
    _check_semilength(n, bound, f"Ascent census of semilength {n}")
    counts: Counter[tuple[int, int]] = Counter()
    for word in dyck_words(n):
        _, _, peaks, initial_ascent = word_stats(word)
        counts[(initial_ascent, peaks)] += 1
    return dict(counts)


def returns_census(n: int, bound: int | None = None) -> dict[int, int]:
    """Counts keyed by number of returns (census summed over peaks)."""
    by_returns: Counter[int] = Counter()
    for (i, _), count in census(n, bound).row(n).items():
        by_returns[i] += count
    return dict(by_returns)
