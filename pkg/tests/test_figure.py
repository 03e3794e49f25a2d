"""Tests for the SVG figure."""

import pytest

from narayana.combinatorics.dyck import EMPTY_PATH, parse_path
from narayana.errors import EmptyPathError
from narayana.figure import figure_layout, path_vertices, render_figure
from narayana.models import GridPoint

FIGURE_PATH = "UUUDDUDDUUDUUDDDUDUD"


@pytest.fixture
def figure_path():
    """Running example with 4 returns and 6 peaks."""
    return parse_path(FIGURE_PATH)


def test_path_vertices():
    """Test (step, height) vertices."""
    assert path_vertices(parse_path("UUDD")) == [
        GridPoint(0, 0),
        GridPoint(1, 1),
        GridPoint(2, 2),
        GridPoint(3, 1),
        GridPoint(4, 0),
    ]


def test_layout(figure_path):
    """Test the marked points and polyomino corners of the running example."""
    layout = figure_layout(figure_path)
    assert layout.marked == {
        "A1": GridPoint(1, 4),
        "B1": GridPoint(4, 6),
        "A2": GridPoint(1, 0),
        "B2": GridPoint(5, 5),
    }
    assert layout.upper_boundary[-1] == layout.lower_boundary[-1] == GridPoint(5, 6)
    assert len(layout.path) == len(layout.phi_path) == 21
    assert not layout.degenerate


def test_layout_degenerate():
    """Test that a j = n path is flagged."""
    assert figure_layout(parse_path("UDUD")).degenerate


def test_empty_path():
    """Test that the empty path has no figure."""
    with pytest.raises(EmptyPathError):
        render_figure(EMPTY_PATH)


def test_render_svg(figure_path):
    """Test that the SVG carries the four marked points."""
    svg = render_figure(figure_path)
    assert svg.lstrip().startswith("<?xml")
    assert "<svg" in svg
    for name in ("A1", "B1", "A2", "B2"):
        assert f'id="{name}"' in svg

