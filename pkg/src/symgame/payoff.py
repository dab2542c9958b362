"""Payoff matrices for symmetric 2x2 games and their effect-space coordinates.

A symmetric game is stored as the row player's payoff matrix

        P = [[a, b],
             [c, d]]

where the row player picks the row i, the column player picks the column j,
and the column player's payoff at (i, j) is P[j][i].  All entries are exact
rationals (``fractions.Fraction``), so every predicate downstream is exact.

The central tool is an orthogonal change of coordinates that splits the four
payoffs into an overall level g0, an own-action contrast ga, an other-action
contrast gb, and an interaction term gab.  Scaled by 1/2 the transform is an
involution, which makes round trips exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, str, float, Fraction]

#: Strategy indices; a position is a (row, column) pair of strategies.
STRATEGIES = (0, 1)
POSITIONS = ((0, 0), (0, 1), (1, 0), (1, 1))

Position = tuple


class TrivialGame(ValueError):
    """Raised when an operation needs a non-constant payoff matrix."""


def _as_fraction(value: Rational, what: str = "payoff") -> Fraction:
    """Coerce an input value to Fraction, converting decimal strings exactly."""
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValueError(f"bad {what} value {value!r}") from exc


@dataclass(frozen=True)
class PayoffMatrix:
    """Row player's payoff matrix of a symmetric 2x2 game.

    Accepts ints, Fractions, or strings like "3", "0.5", "-2/7"; decimal
    strings convert exactly.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> "PayoffMatrix":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("payoff matrix must be 2x2")
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    @classmethod
    def constant(cls, value: Rational) -> "PayoffMatrix":
        v = _as_fraction(value)
        return cls(v, v, v, v)

    def entry(self, i: int, j: int) -> Fraction:
        """Row player's payoff at position (i, j)."""
        return (self.a, self.b, self.c, self.d)[2 * i + j]

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))

    def min_entry(self) -> Fraction:
        return min(self.entries())

    def is_constant(self) -> bool:
        return self.a == self.b == self.c == self.d

    # Linear-space arithmetic; handy for affine families t*P1 + (1-t)*P0.
    def __add__(self, other: "PayoffMatrix") -> "PayoffMatrix":
        if not isinstance(other, PayoffMatrix):
            return NotImplemented
        return PayoffMatrix(self.a + other.a, self.b + other.b,
                            self.c + other.c, self.d + other.d)

    def __sub__(self, other: "PayoffMatrix") -> "PayoffMatrix":
        if not isinstance(other, PayoffMatrix):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, scalar: Rational) -> "PayoffMatrix":
        s = _as_fraction(scalar, "scalar")
        return PayoffMatrix(self.a * s, self.b * s, self.c * s, self.d * s)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class GVector:
    """Effect-space coordinates (g0, ga, gb, gab) of a payoff matrix.

    g0 is the overall payoff level, ga the contrast between the player's own
    two actions, gb the contrast driven by the opponent's action, and gab the
    interaction between the two choices.  Equilibrium structure depends only
    on (ga, gab); the relaxed optimality structure only on (gb, gab).
    """

    g0: Fraction
    ga: Fraction
    gb: Fraction
    gab: Fraction

    def __post_init__(self) -> None:
        for name in ("g0", "ga", "gb", "gab"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name), name))

    def triple(self) -> tuple[Fraction, Fraction, Fraction]:
        """The direction part (ga, gb, gab), dropping the level g0."""
        return (self.ga, self.gb, self.gab)


@dataclass(frozen=True)
class Direction:
    """Unit vector in (ga, gb, gab) space, Euclidean norm 1 within 1e-12."""

    ga: float
    gb: float
    gab: float

    def __post_init__(self) -> None:
        norm = math.sqrt(self.ga ** 2 + self.gb ** 2 + self.gab ** 2)
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"direction norm {norm!r} is not 1")

    def triple(self) -> tuple[float, float, float]:
        return (self.ga, self.gb, self.gab)


@dataclass(frozen=True)
class CubePoint:
    """Exact point on the surface of the unit cube in (ga, gb, gab) space.

    Obtained by max-abs normalization, so max(|ga|, |gb|, |gab|) == 1 and at
    least one coordinate is exactly +-1.
    """

    ga: Fraction
    gb: Fraction
    gab: Fraction

    def __post_init__(self) -> None:
        for name in ("ga", "gb", "gab"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name), name))
        if max(abs(self.ga), abs(self.gb), abs(self.gab)) != 1:
            raise ValueError("cube point must have max-abs coordinate exactly 1")

    def triple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.ga, self.gb, self.gab)


def g_transform(P: PayoffMatrix) -> GVector:
    """Map payoffs (a, b, c, d) to effect coordinates (g0, ga, gb, gab).

    Each output is half a signed sum of the four entries; the matrix of the
    map, scaled by 1/2, is orthogonal and its own inverse.
    """
    a, b, c, d = P.entries()
    return GVector(
        (a + b + c + d) / 2,
        (a + b - c - d) / 2,
        (a - b + c - d) / 2,
        (a - b - c + d) / 2,
    )


def inverse_g_transform(G: GVector) -> PayoffMatrix:
    """Reconstruct the payoff matrix from effect coordinates (exact inverse)."""
    g0, ga, gb, gab = G.g0, G.ga, G.gb, G.gab
    return PayoffMatrix(
        (g0 + ga + gb + gab) / 2,
        (g0 + ga - gb - gab) / 2,
        (g0 - ga + gb - gab) / 2,
        (g0 - ga - gb + gab) / 2,
    )


def center(P: PayoffMatrix) -> PayoffMatrix:
    """Subtract the mean payoff, leaving a matrix with g0 = 0."""
    mean = sum(P.entries()) / 4
    return P - PayoffMatrix.constant(mean)


def normalize_sphere(P: PayoffMatrix) -> Direction:
    """Project (ga, gb, gab) onto the unit sphere (floating point).

    Raises TrivialGame for constant matrices, which have no direction.
    """
    ga, gb, gab = g_transform(P).triple()
    if ga == 0 and gb == 0 and gab == 0:
        raise TrivialGame("constant matrix has no direction")
    x, y, z = float(ga), float(gb), float(gab)
    norm = math.sqrt(x * x + y * y + z * z)
    return Direction(x / norm, y / norm, z / norm)


def normalize_cube(P: PayoffMatrix) -> CubePoint:
    """Project (ga, gb, gab) onto the unit cube surface by max-abs scaling.

    Exact: all coordinates stay rational.  Raises TrivialGame for constant
    matrices.
    """
    ga, gb, gab = g_transform(P).triple()
    m = max(abs(ga), abs(gb), abs(gab))
    if m == 0:
        raise TrivialGame("constant matrix has no cube point")
    return CubePoint(ga / m, gb / m, gab / m)


def transpose_game(P: PayoffMatrix) -> PayoffMatrix:
    """Swap the off-diagonal entries b and c.

    This exchanges the roles of the two contrasts (ga <-> gb), and therefore
    exchanges equilibrium structure with relaxed optimality structure.
    """
    return PayoffMatrix(P.a, P.c, P.b, P.d)


def parse_matrix(text: str) -> PayoffMatrix:
    """Parse the row-major text form "a,b;c,d".

    Entries may be integers, exact decimal strings, or fractions "p/q".
    """
    rows = [r for r in text.strip().split(";")]
    if len(rows) != 2:
        raise ValueError(f"expected 2 rows separated by ';', got {len(rows)} in {text!r}")
    values = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ValueError(f"expected 2 entries per row, got {len(cells)} in {row.strip()!r}")
        for cell in cells:
            values.append(_as_fraction(cell.strip()))
    return PayoffMatrix(*values)


def matrix_from_json(obj: object) -> PayoffMatrix:
    """Build a matrix from the JSON form {"payoff": [[a, b], [c, d]]}."""
    if not isinstance(obj, dict) or "payoff" not in obj:
        raise ValueError("JSON matrix must be an object with a 'payoff' key")
    payoff = obj["payoff"]
    if not isinstance(payoff, (list, tuple)):
        raise ValueError("'payoff' must be a 2x2 array")
    return PayoffMatrix.from_rows(payoff)


def matrices_from_lines(lines: Iterable[str]) -> list[PayoffMatrix]:
    """Parse one matrix per non-empty, non-comment line of text input."""
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_matrix(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return out
