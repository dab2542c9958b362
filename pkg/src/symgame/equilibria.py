"""Pure and mixed equilibria, and the relaxed optimality dual.

Everything here is a weak-inequality predicate over exact rationals.  The
relaxed Pareto notion is deliberately the Nash condition of the transposed
game: each player maximizes the *other's* payoff.  That duality is what makes
the classification machinery symmetric, and it is independent of the
standard (strict-domination) Pareto check, which is kept as an oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from .payoff import POSITIONS, PayoffMatrix, Position, Rational, _as_fraction, transpose_game

PositionSet = FrozenSet[Position]

#: Symmetric mixed profile: the shared probability of playing strategy 0.
MixedProfile = Fraction


def is_pure_ne(P: PayoffMatrix, pos: Position) -> bool:
    """True when neither player can gain by a unilateral switch (ties count)."""
    i, j = pos
    row_ok = P.entry(i, j) >= P.entry(1 - i, j)
    col_ok = P.entry(j, i) >= P.entry(1 - j, i)  # column payoff at (i,j) is P[j][i]
    return row_ok and col_ok


def pure_nash_set(P: PayoffMatrix) -> PositionSet:
    """All pure Nash positions.  Never empty for a symmetric game."""
    return frozenset(pos for pos in POSITIONS if is_pure_ne(P, pos))


def relaxed_po_set(P: PayoffMatrix) -> PositionSet:
    """Positions where each player maximizes the other's payoff.

    Defined as the pure Nash set of the transposed game, so it inherits
    existence and the off-diagonal pairing property.
    """
    return pure_nash_set(transpose_game(P))


def mixed_nash(P: PayoffMatrix) -> Optional[MixedProfile]:
    """The stable interior mixed equilibrium, when the game has one.

    Reported only for games whose pure equilibria sit off the diagonal
    (a < c and d < b): both players mix with p = (d-b)/((a-c)+(d-b)), which
    is then strictly inside (0, 1).  The unstable interior point of
    two-diagonal-equilibrium games is not reported.
    """
    gain0 = P.a - P.c  # gain to playing 0 when the opponent plays 0
    gain1 = P.d - P.b  # gain to playing 1 when the opponent plays 1
    if gain0 < 0 and gain1 < 0:
        return gain1 / (gain0 + gain1)
    return None


def mixed_po(P: PayoffMatrix) -> Optional[MixedProfile]:
    """Mixed profile of the relaxed optimality dual: mixed_nash of the transpose."""
    return mixed_nash(transpose_game(P))


def expected_payoff(P: PayoffMatrix, p_row: Rational, p_col: Rational) -> Tuple[Fraction, Fraction]:
    """Exact expected payoffs (row, column) when each plays 0 with the given probability."""
    pr = _as_fraction(p_row, "probability")
    pc = _as_fraction(p_col, "probability")
    for p in (pr, pc):
        if not 0 <= p <= 1:
            raise ValueError(f"probability {p} outside [0, 1]")
    row_value = Fraction(0)
    col_value = Fraction(0)
    for (i, j) in POSITIONS:
        weight = (pr if i == 0 else 1 - pr) * (pc if j == 0 else 1 - pc)
        row_value += weight * P.entry(i, j)
        col_value += weight * P.entry(j, i)
    return (row_value, col_value)


def standard_pareto_set(P: PayoffMatrix) -> PositionSet:
    """Positions not strictly dominated in both players' payoffs.

    Textbook Pareto optimality over the four outcome pairs; used as a
    cross-check for the relaxed notion, not in the classification itself.
    """
    pairs = {pos: (P.entry(pos[0], pos[1]), P.entry(pos[1], pos[0])) for pos in POSITIONS}
    keep = []
    for pos, (u1, u2) in pairs.items():
        dominated = any(
            v1 > u1 and v2 > u2
            for other, (v1, v2) in pairs.items()
            if other != pos
        )
        if not dominated:
            keep.append(pos)
    return frozenset(keep)
