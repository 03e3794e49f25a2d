"""CLI interface for Narayana-Paths."""

import asyncio
import logging
from pathlib import Path
from typing import Annotated, Optional

import typer

from narayana.cli_constants import (
    DEFAULT_VERIFY_NMAX,
    EXIT_MISMATCH,
    EXIT_USAGE,
    LOG_FORMAT,
    MAX_MISMATCHES_TO_DISPLAY,
    MAX_PATHS_TO_DISPLAY,
    TABLE_CORNER,
)
from narayana.combinatorics.counting import check_cell, gen_narayana
from narayana.combinatorics.dyck import census, enumerate_dyck, parse_path, stats
from narayana.combinatorics.involution import phi
from narayana.combinatorics.polyomino import to_lattice_pair, to_polyomino
from narayana.combinatorics.series import gf_expand
from narayana.config import get_settings, parse_log_level
from narayana.errors import DomainError, NarayanaError
from narayana.figure import render_figure
from narayana.models import DyckPath, OeisTarget, Oracle, TableFormat, VerifyRequest
from narayana.verification.oeis import DEFAULT_OFFSET, check_bfile_text, render_bfile
from narayana.verification.supervisor import VerificationSupervisor

app = typer.Typer(help="Narayana-Paths: Dyck paths counted by returns and peaks")

OutputOption = Annotated[
    Optional[Path],
    typer.Option("--output", "-o", help="Write to this file instead of standard output"),
]
BoundOption = Annotated[
    Optional[int],
    typer.Option("--bound", help="Enumeration bound (default from NARAYANA_ENUMERATION_BOUND)"),
]


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text)


def _fail(exc: Exception) -> typer.Exit:
    typer.echo(f"Error: {exc}", err=True)
    return typer.Exit(EXIT_USAGE)


def _parse(text: str) -> DyckPath:
    try:
        return parse_path(text)
    except NarayanaError as exc:
        raise _fail(exc)


def render_table(i: int, nmax: int, table_format: TableFormat) -> str:
    """Rows n = i..nmax, columns j = i..n, values N_i(n, j)."""
    columns = list(range(i, nmax + 1))
    rows = [(n, [gen_narayana(i, n, j) for j in range(i, n + 1)]) for n in columns]

    if table_format == TableFormat.TSV:
        lines = [TABLE_CORNER + "\t" + "\t".join(str(j) for j in columns)]
        lines += [f"{n}\t" + "\t".join(str(v) for v in values) for n, values in rows]
        return "\n".join(lines) + "\n"

    width = max(len(str(v)) for _, values in rows for v in values + [nmax])
    label_width = max(len(TABLE_CORNER), len(str(nmax)))
    header = f"{TABLE_CORNER:>{label_width}} | " + " ".join(f"{j:>{width}}" for j in columns)
    lines = [header, "-" * len(header)]
    lines += [
        f"{n:>{label_width}} | " + " ".join(f"{v:>{width}}" for v in values) for n, values in rows
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


@app.callback()
def main(
    log_level: Annotated[
        Optional[str],
        typer.Option("--log-level", help="Logging level (default from NARAYANA_LOG_LEVEL)"),
    ] = None,
):
    """Configure logging for every subcommand."""
    try:
        settings = get_settings()
        level = parse_log_level(log_level) if log_level else settings.log_level
    except ValueError as exc:
        raise _fail(exc)
    logging.basicConfig(format=LOG_FORMAT, level=level)


@app.command()
def table(
    i: Annotated[int, typer.Option("--i", "-i", help="Number of returns")] = 1,
    nmax: Annotated[int, typer.Option("--nmax", "-n", help="Largest semilength")] = 5,
    table_format: Annotated[
        TableFormat, typer.Option("--format", "-f", help="aligned or tsv")
    ] = TableFormat.ALIGNED,
    output: OutputOption = None,
):
    """
    Print N_i(n, j) for n = i..nmax.

    Example:
        narayana table --i 2 --nmax 6 --format tsv
    """
    table_bound = get_settings().table_bound
    try:
        check_cell(i, nmax, nmax)
        if nmax > table_bound:
            raise DomainError(f"nmax {nmax} exceeds the table bound {table_bound}")
    except NarayanaError as exc:
        raise _fail(exc)
    _emit(render_table(i, nmax, table_format), output)


@app.command()
def verify(
    nmax: Annotated[int, typer.Option("--nmax", "-n", help="Largest semilength")] = (
        DEFAULT_VERIFY_NMAX
    ),
    oracles: Annotated[
        Optional[list[Oracle]],
        typer.Option("--oracle", help="Oracle to include (repeatable; default all)"),
    ] = None,
    bound: BoundOption = None,
    gf_bound: Annotated[
        Optional[int], typer.Option("--gf-bound", help="Generating function order bound")
    ] = None,
    output: OutputOption = None,
):
    """
    Cross-check census, closed form, LGV determinant and generating function.

    Exits 1 when any cell disagrees. An oracle over its bound is reported and skipped.
    """
    try:
        request = VerifyRequest(
            nmax=nmax,
            oracles=oracles or list(Oracle),
            enumeration_bound=bound,
            gf_bound=gf_bound,
        )
    except ValueError as exc:
        raise _fail(exc)

    supervisor = VerificationSupervisor()
    report = asyncio.run(supervisor.verify(request))

    _emit(report.model_dump_json(indent=2) + "\n", output)

    typer.echo(
        f"Checked {len(report.cells)} cells with {', '.join(o.value for o in report.oracles)}: "
        f"{report.mismatches} mismatches",
        err=True,
    )
    for name, message in report.oracle_errors.items():
        typer.echo(f"  oracle {name} failed: {message}", err=True)
    disagreeing = [cell for cell in report.cells if not cell.agree]
    for cell in disagreeing[:MAX_MISMATCHES_TO_DISPLAY]:
        typer.echo(f"  (i={cell.i}, n={cell.n}, j={cell.j}): {cell.values}", err=True)
    if len(disagreeing) > MAX_MISMATCHES_TO_DISPLAY:
        typer.echo(f"  ... and {len(disagreeing) - MAX_MISMATCHES_TO_DISPLAY} more", err=True)

    if not report.ok:
        raise typer.Exit(EXIT_MISMATCH)


@app.command("oeis-check")
def oeis_check(
    bfile: Annotated[Path, typer.Argument(help="Local OEIS b-file")],
    target: Annotated[
        OeisTarget, typer.Option("--target", "-t", help="Triangle to compare against")
    ] = OeisTarget.I1_AS_A001263,
    offset: Annotated[
        int, typer.Option("--offset", help="b-file index of the first term")
    ] = DEFAULT_OFFSET,
    drop_trailing_zeros: Annotated[
        Optional[bool],
        typer.Option(
            "--drop-trailing-zeros/--keep-trailing-zeros",
            help="Omit the j = n zero of each row (default: omit)",
        ),
    ] = None,
    output: OutputOption = None,
):
    """Compare a b-file prefix with the linearized array; exits 1 on divergence."""
    try:
        text = bfile.read_text()
        report = check_bfile_text(text, target, offset, drop_trailing_zeros)
    except (OSError, NarayanaError) as exc:
        raise _fail(exc)

    _emit(report.model_dump_json(indent=2) + "\n", output)
    if not report.matched:
        typer.echo(
            f"Divergence at index {report.first_divergence_index}: "
            f"expected {report.expected}, found {report.found}",
            err=True,
        )
        raise typer.Exit(EXIT_MISMATCH)


@app.command()
def bfile(
    target: Annotated[OeisTarget, typer.Option("--target", "-t")] = OeisTarget.I1_AS_A001263,
    terms: Annotated[int, typer.Option("--terms", help="Number of terms")] = 100,
    offset: Annotated[int, typer.Option("--offset")] = DEFAULT_OFFSET,
    drop_trailing_zeros: Annotated[
        Optional[bool], typer.Option("--drop-trailing-zeros/--keep-trailing-zeros")
    ] = None,
    output: OutputOption = None,
):
    """Write the linearized array in b-file format."""
    _emit(render_bfile(target, terms, offset, drop_trailing_zeros), output)


@app.command()
def figure(
    path: Annotated[str, typer.Argument(help="Dyck path over {U, D}")],
    output: OutputOption = None,
):
    """
    SVG of the path, its image under phi, and the polyomino with A1, B1, A2, B2.

    Example:
        narayana figure UUUDDUDDUUDUUDDDUDUD --output figure.svg
    """
    p = _parse(path)
    try:
        svg = render_figure(p)
    except NarayanaError as exc:
        raise _fail(exc)
    _emit(svg, output)


@app.command("stats")
def stats_command(path: Annotated[str, typer.Argument(help="Dyck path over {U, D}")]):
    """Semilength, returns, peaks and initial ascent of a path."""
    result = stats(_parse(path))
    typer.echo(
        f"semilength={result.semilength} returns={result.returns} "
        f"peaks={result.peaks} initial_ascent={result.initial_ascent}"
    )


@app.command("phi")
def phi_command(path: Annotated[str, typer.Argument(help="Dyck path over {U, D}")]):
    """Image of a path under Deutsch's involution."""
    typer.echo(phi(_parse(path)).word)


@app.command()
def polyomino(path: Annotated[str, typer.Argument(help="Dyck path over {U, D}")]):
    """Polyomino of phi(path) and its trimmed nonintersecting path pair."""
    p = _parse(path)
    try:
        image = phi(p)
        q = to_polyomino(image)
        pair = to_lattice_pair(q)
    except NarayanaError as exc:
        raise _fail(exc)
    typer.echo(f"phi={image.word}")
    typer.echo(f"upper={q.upper.word} lower={q.lower.word}")
    typer.echo(f"A1={tuple(pair.a1)} B1={tuple(pair.b1)} A2={tuple(pair.a2)} B2={tuple(pair.b2)}")
    typer.echo(f"upper_path={pair.upper_path.word or '-'} lower_path={pair.lower_path.word or '-'}")
    if pair.degenerate:
        typer.echo("degenerate: j = n, no upper path")


@app.command("enumerate")
def enumerate_command(
    n: Annotated[int, typer.Argument(help="Semilength")],
    bound: BoundOption = None,
    output: OutputOption = None,
):
    """All Dyck paths of semilength n, one per line, U < D order."""
    try:
        paths = enumerate_dyck(n, bound)
    except NarayanaError as exc:
        raise _fail(exc)
    if output is None:
        for index, p in enumerate(paths):
            if index == MAX_PATHS_TO_DISPLAY:
                typer.echo("... (use --output for the full list)")
                break
            typer.echo(p.word)
    else:
        with output.open("w") as handle:
            for p in paths:
                handle.write(p.word + "\n")


@app.command("census")
def census_command(n: Annotated[int, typer.Argument(help="Semilength")], bound: BoundOption = None):
    """Number of semilength-n paths per (returns, peaks) cell."""
    try:
        row = census(n, bound).row(n)
    except NarayanaError as exc:
        raise _fail(exc)
    for (i, j), count in sorted(row.items()):
        typer.echo(f"{i}\t{j}\t{count}")


@app.command()
def gf(
    order: Annotated[int, typer.Argument(help="Largest x-degree")],
    gf_bound: Annotated[Optional[int], typer.Option("--gf-bound")] = None,
    output: OutputOption = None,
):
    """Generating function coefficients as 'n i j numerator/denominator' lines."""
    try:
        expansion = gf_expand(order, gf_bound)
    except NarayanaError as exc:
        raise _fail(exc)
    _emit("".join(line + "\n" for line in expansion.to_lines()), output)


if __name__ == "__main__":
    app()
