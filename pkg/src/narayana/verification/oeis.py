"""OEIS b-file parsing and comparison against linearized count arrays."""

import logging
from collections.abc import Iterator
from typing import NamedTuple

from narayana.combinatorics.counting import gen_narayana
from narayana.errors import BFileFormatError
from narayana.models import OeisCheckReport, OeisTarget

logger = logging.getLogger(__name__)

BFILE_COMMENT = "#"
DEFAULT_OFFSET = 1
# OEIS triangles list only the nonzero part of each row.
DROP_TRAILING_ZEROS = True


class Layout(NamedTuple):
    """How a target triangle reads the array N_i(n, j)."""

    i: int
    first_row: int
    reversed_rows: bool


# Row n lists N_i(n, j) for j = i..n; the j = n entry of a row with n > i is the
# trailing zero printed in the tables.
LAYOUTS: dict[OeisTarget, Layout] = {
    OeisTarget.I1_AS_A001263: Layout(1, 2, reversed_rows=False),
    OeisTarget.I2_AS_A108838: Layout(2, 2, reversed_rows=False),
    OeisTarget.I3_REVERSED_AS_A281293: Layout(3, 3, reversed_rows=True),
}


def resolve_drop(drop_trailing_zeros: bool | None) -> bool:
    return DROP_TRAILING_ZEROS if drop_trailing_zeros is None else drop_trailing_zeros


def row_terms(i: int, n: int, reversed_rows: bool, drop_trailing_zeros: bool) -> list[int]:
    values = [gen_narayana(i, n, j) for j in range(i, n + 1)]
    if drop_trailing_zeros and n > i:
        values.pop()
    return values[::-1] if reversed_rows else values


def row_length(layout: Layout, n: int, drop_trailing_zeros: bool) -> int:
    return n - layout.i + (0 if drop_trailing_zeros and n > layout.i else 1)


def row_term(layout: Layout, n: int, k: int, drop_trailing_zeros: bool) -> int:
    """k-th printed entry of row n."""
    if layout.reversed_rows:
        k = row_length(layout, n, drop_trailing_zeros) - 1 - k
    return gen_narayana(layout.i, n, layout.i + k)


def iter_terms(target: OeisTarget, drop_trailing_zeros: bool | None = None) -> Iterator[int]:
    """Infinite linearization of the target's array, read by rows."""
    layout = LAYOUTS[target]
    drop = resolve_drop(drop_trailing_zeros)
    n = layout.first_row
    while True:
        yield from row_terms(layout.i, n, layout.reversed_rows, drop)
        n += 1


def linearize(target: OeisTarget, terms: int, drop_trailing_zeros: bool | None = None) -> list[int]:
    """First `terms` entries of the target linearization."""
    iterator = iter_terms(target, drop_trailing_zeros)
    return [next(iterator) for _ in range(terms)]


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """
    Parse 'index value' lines.

    Blank lines and '#' comments are skipped. Indices must increase strictly.
    """
    entries: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(BFILE_COMMENT):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"expected 'index value', got {line!r}", line_number)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileFormatError(f"non-integer field in {line!r}", line_number) from exc
        if entries and index <= entries[-1][0]:
            raise BFileFormatError(
                f"index {index} does not follow index {entries[-1][0]}", line_number
            )
        entries.append((index, value))
    if not entries:
        raise BFileFormatError("b-file has no data lines")
    return entries


def check_bfile(
    entries: list[tuple[int, int]],
    target: OeisTarget,
    offset: int = DEFAULT_OFFSET,
    drop_trailing_zeros: bool | None = None,
) -> OeisCheckReport:
    """
    Compare b-file entries with the linearization; term k is expected at index offset + k.

    Rows are skipped by length alone, so a sparse index costs a walk over row
    lengths and one count, never the terms in between.
    """
    layout = LAYOUTS[target]
    drop = resolve_drop(drop_trailing_zeros)
    n, row_start = layout.first_row, 0

    checked = 0
    for index, found in entries:
        position = index - offset
        expected: int | None = None
        if position >= 0:
            while position >= row_start + row_length(layout, n, drop):
                row_start += row_length(layout, n, drop)
                n += 1
            expected = row_term(layout, n, position - row_start, drop)
        if expected != found:
            logger.info("Divergence at index %d: expected %s, found %d", index, expected, found)
            return OeisCheckReport(
                target=target,
                offset=offset,
                drop_trailing_zeros=drop,
                terms_checked=checked,
                matched=False,
                first_divergence_index=index,
                expected=expected,
                found=found,
            )
        checked += 1

    return OeisCheckReport(
        target=target,
        offset=offset,
        drop_trailing_zeros=drop,
        terms_checked=checked,
        matched=True,
    )


def check_bfile_text(
    text: str,
    target: OeisTarget,
    offset: int = DEFAULT_OFFSET,
    drop_trailing_zeros: bool | None = None,
) -> OeisCheckReport:
    return check_bfile(parse_bfile(text), target, offset, drop_trailing_zeros)


def render_bfile(
    target: OeisTarget,
    terms: int,
    offset: int = DEFAULT_OFFSET,
    drop_trailing_zeros: bool | None = None,
) -> str:
    """Local b-file for the target linearization."""
    values = linearize(target, terms, drop_trailing_zeros)
    return "".join(f"{offset + k} {value}\n" for k, value in enumerate(values))
