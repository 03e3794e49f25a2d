"""Static SVG figure: a path, its image under phi, and the polyomino with its LGV endpoints."""

import io
import logging

from matplotlib.axes import Axes
from matplotlib.figure import Figure

from narayana.combinatorics.dyck import word_stats
from narayana.combinatorics.involution import phi
from narayana.combinatorics.polyomino import to_lattice_pair, to_polyomino
from narayana.constants import UP
from narayana.errors import EmptyPathError
from narayana.models import DyckPath, FigureLayout, GridPoint

logger = logging.getLogger(__name__)

FIGURE_SIZE = (14.0, 4.5)
PATH_COLOR = "black"
BOUNDARY_COLOR = "tab:blue"
MARK_COLOR = "tab:red"


def path_vertices(p: DyckPath) -> list[GridPoint]:
    height = 0
    points = [GridPoint(0, 0)]
    for step, char in enumerate(p.word, 1):
        height += 1 if char == UP else -1
        points.append(GridPoint(step, height))
    return points


def figure_layout(p: DyckPath) -> FigureLayout:
    """Everything the figure draws, for a nonempty path."""
    if p.is_empty():
        raise EmptyPathError("The empty path has no figure")
    image = phi(p)
    polyomino = to_polyomino(image)
    pair = to_lattice_pair(polyomino)
    return FigureLayout(
        path=path_vertices(p),
        phi_path=path_vertices(image),
        upper_boundary=polyomino.upper.vertices(),
        lower_boundary=polyomino.lower.vertices(),
        marked={"A1": pair.a1, "B1": pair.b1, "A2": pair.a2, "B2": pair.b2},
        degenerate=pair.degenerate,
    )


def _draw_path(ax: Axes, points: list[GridPoint], title: str) -> None:
    xs, ys = zip(*points)
    ax.plot([0, xs[-1]], [0, 0], color="gray", linewidth=0.8)
    ax.plot(xs, ys, color=PATH_COLOR, marker="o", markersize=3)
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")


def render_figure(p: DyckPath) -> str:
    """SVG text; marked points carry the element ids A1, B1, A2, B2."""
    layout = figure_layout(p)
    _, returns, peaks, _ = word_stats(p.word)
    _, _, image_peaks, image_ascent = word_stats(phi(p).word)

    figure = Figure(figsize=FIGURE_SIZE)
    ax_path, ax_image, ax_polyomino = figure.subplots(1, 3)
    _draw_path(ax_path, layout.path, f"{returns} returns, {peaks} peaks")
    image_title = f"phi: initial ascent {image_ascent}, {image_peaks} peaks"
    _draw_path(ax_image, layout.phi_path, image_title)

    for boundary in (layout.upper_boundary, layout.lower_boundary):
        xs, ys = zip(*boundary)
        ax_polyomino.plot(xs, ys, color=BOUNDARY_COLOR, marker="o", markersize=3)
    for name, point in layout.marked.items():
        ax_polyomino.plot([point.x], [point.y], "o", color=MARK_COLOR, markersize=7, gid=name)
        ax_polyomino.annotate(
            f"{name}=({point.x},{point.y})",
            (point.x, point.y),
            textcoords="offset points",
            xytext=(6, 4),
            fontsize=8,
        )
    ax_polyomino.set_title("polyomino" + (" (degenerate pair)" if layout.degenerate else ""))
    ax_polyomino.set_aspect("equal")
    ax_polyomino.grid(True, linewidth=0.3)

    buffer = io.StringIO()
    figure.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug("Rendered figure for %s", p.word)
    return buffer.getvalue()
