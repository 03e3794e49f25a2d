"""Narayana-Paths combinatorics: paths, involution, polyominoes, counting, series."""

from narayana.combinatorics.counting import (
    CountTable,
    binomial,
    catalan,
    gen_narayana,
    lattice_path_count,
    lgv_count,
    narayana_classic,
)
from narayana.combinatorics.dyck import census, enumerate_dyck, parse_path, render_path, stats
from narayana.combinatorics.involution import first_return_split, phi
from narayana.combinatorics.polyomino import (
    from_polyomino,
    nonintersecting_pairs,
    to_lattice_pair,
    to_polyomino,
)
from narayana.combinatorics.series import (
    Series3,
    gf_coefficient,
    gf_expand,
    series_add,
    series_inv,
    series_mul,
    series_scale,
    series_sqrt,
)

__all__ = [
    "CountTable",
    "Series3",
    "binomial",
    "catalan",
    "census",
    "enumerate_dyck",
    "first_return_split",
    "from_polyomino",
    "gen_narayana",
    "gf_coefficient",
    "gf_expand",
    "lattice_path_count",
    "lgv_count",
    "narayana_classic",
    "nonintersecting_pairs",
    "parse_path",
    "phi",
    "render_path",
    "series_add",
    "series_inv",
    "series_mul",
    "series_scale",
    "series_sqrt",
    "stats",
    "to_lattice_pair",
    "to_polyomino",
]
