"""Pydantic models for Narayana-Paths data structures."""

from enum import Enum
from typing import NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from narayana.constants import DOWN, EAST, NORTH, UP
from narayana.errors import ForeignStepError, NegativePrefixError, UnbalancedPathError


class Step(str, Enum):
    """Dyck path steps."""

    UP = UP
    DOWN = DOWN


class Direction(str, Enum):
    """Unit lattice steps of a boundary word."""

    NORTH = NORTH
    EAST = EAST


class Oracle(str, Enum):
    """Independent ways of computing N_i(n,j)."""

    CENSUS = "census"
    CLOSED = "closed"
    LGV = "lgv"
    GF = "gf"


class TableFormat(str, Enum):
    """Output layouts for count tables."""

    ALIGNED = "aligned"
    TSV = "tsv"


class OeisTarget(str, Enum):
    """OEIS triangles the count arrays are checked against."""

    I1_AS_A001263 = "i1_as_A001263"
    I2_AS_A108838 = "i2_as_A108838"
    I3_REVERSED_AS_A281293 = "i3_reversed_as_A281293"


class GridPoint(NamedTuple):
    """Integer lattice point."""

    x: int
    y: int


def validate_dyck_word(word: str) -> None:
    """
    Check that `word` is a Dyck word over {U, D}.

    Raises the PathParseError subclass matching the first problem found,
    scanning left to right; positions are 1-based.
    """
    height = 0
    for position, char in enumerate(word, 1):
        if char == UP:
            height += 1
        elif char == DOWN:
            height -= 1
            if height < 0:
                raise NegativePrefixError("Prefix goes below ground level", position)
        else:
            raise ForeignStepError(f"Foreign character {char!r}", position)
    if height != 0:
        raise UnbalancedPathError(f"Path ends at height {height}", len(word))


class DyckPath(BaseModel):
    """Balanced U/D step word that never goes below ground level."""

    model_config = ConfigDict(frozen=True)

    word: str = Field("", description="Steps over {U, D}; empty word is the empty path")

    @field_validator("word")
    @classmethod
    def _check_word(cls, value: str) -> str:
        validate_dyck_word(value)
        return value

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(char) for char in self.word)

    def is_empty(self) -> bool:
        return not self.word

    def __str__(self) -> str:
        return self.word


class PathStats(BaseModel):
    """Statistics of a Dyck path; all zero for the empty path."""

    model_config = ConfigDict(frozen=True)

    semilength: int = Field(..., ge=0)
    returns: int = Field(..., ge=0, description="Down steps landing on ground level")
    peaks: int = Field(..., ge=0, description="Occurrences of UD")
    initial_ascent: int = Field(..., ge=0, description="Length of the maximal Up prefix")


class BoundaryWord(BaseModel):
    """Monotone lattice path over {N, E}."""

    model_config = ConfigDict(frozen=True)

    word: str = Field("", description="Steps over {N, E}")

    @field_validator("word")
    @classmethod
    def _check_alphabet(cls, value: str) -> str:
        for position, char in enumerate(value, 1):
            if char not in (NORTH, EAST):
                raise ValueError(f"Foreign boundary step {char!r} at position {position}")
        return value

    @property
    def north_count(self) -> int:
        return self.word.count(NORTH)

    @property
    def east_count(self) -> int:
        return self.word.count(EAST)

    @property
    def steps(self) -> tuple[Direction, ...]:
        return tuple(Direction(char) for char in self.word)

    def vertices(self, start: GridPoint = GridPoint(0, 0)) -> list[GridPoint]:
        """Lattice points visited, starting point included."""
        x, y = start
        points = [GridPoint(x, y)]
        for char in self.word:
            if char == NORTH:
                y += 1
            else:
                x += 1
            points.append(GridPoint(x, y))
        return points

    def __str__(self) -> str:
        return self.word


class ParallelogramPolyomino(BaseModel):
    """
    Parallelogram polyomino given by its two boundary words from the origin.

    Construction checks only the alphabet; the geometric invariants are
    checked by narayana.combinatorics.polyomino.validate_polyomino so that
    consumers can report which clause fails.
    """

    model_config = ConfigDict(frozen=True)

    upper: BoundaryWord
    lower: BoundaryWord

    @property
    def upper_right(self) -> GridPoint:
        return GridPoint(self.upper.east_count, self.upper.north_count)

    @property
    def initial_north_run(self) -> int:
        word = self.upper.word
        return len(word) - len(word.lstrip(NORTH))


class LatticePathPair(BaseModel):
    """Trimmed polyomino boundaries anchored at the LGV endpoints."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    a1: GridPoint
    b1: GridPoint
    a2: GridPoint
    b2: GridPoint
    upper_path: BoundaryWord
    lower_path: BoundaryWord
    degenerate: bool = Field(False, description="j = n: no monotone upper path exists")

    def upper_vertices(self) -> list[GridPoint]:
        return self.upper_path.vertices(self.a1)

    def lower_vertices(self) -> list[GridPoint]:
        return self.lower_path.vertices(self.a2)

    def is_nonintersecting(self) -> bool:
        return not set(self.upper_vertices()) & set(self.lower_vertices())


class CellCheck(BaseModel):
    """Values reported by each participating oracle for one (i, n, j) cell."""

    i: int
    n: int
    j: int
    values: dict[str, int] = Field(default_factory=dict)
    agree: bool


class VerifyRequest(BaseModel):
    """Request for a multi-oracle verification run."""

    nmax: int = Field(..., ge=1)
    oracles: list[Oracle] = Field(default_factory=lambda: list(Oracle))
    enumeration_bound: Optional[int] = Field(None, ge=0)
    gf_bound: Optional[int] = Field(None, ge=0)


class VerificationReport(BaseModel):
    """Machine-readable result of a verification run."""

    nmax: int
    oracles: list[Oracle]
    oracle_errors: dict[str, str] = Field(default_factory=dict)
    cells: list[CellCheck] = Field(default_factory=list)
    mismatches: int = 0
    ok: bool = True


class OeisCheckReport(BaseModel):
    """Comparison of a b-file prefix against a count-array linearization."""

    target: OeisTarget
    offset: int
    drop_trailing_zeros: bool
    terms_checked: int
    matched: bool
    first_divergence_index: Optional[int] = None
    expected: Optional[int] = None
    found: Optional[int] = None


class FigureLayout(BaseModel):
    """Coordinates drawn by the figure: both paths, the polyomino and the LGV endpoints."""

    path: list[GridPoint] = Field(..., description="(step, height) vertices of the input path")
    phi_path: list[GridPoint] = Field(..., description="Vertices of the image under phi")
    upper_boundary: list[GridPoint]
    lower_boundary: list[GridPoint]
    marked: dict[str, GridPoint] = Field(..., description="A1, B1, A2, B2")
    degenerate: bool = False
