"""Matrix construction, the effect-space transform, normalization, parsing."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from symgame.payoff import (
    GVector,
    PayoffMatrix,
    TrivialGame,
    center,
    g_transform,
    inverse_g_transform,
    matrices_from_lines,
    matrix_from_json,
    normalize_cube,
    normalize_sphere,
    parse_matrix,
    transpose_game,
)


def random_matrix(rng: random.Random, span: int = 12) -> PayoffMatrix:
    return PayoffMatrix(*(
        Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(4)
    ))


def test_construction_coerces_to_exact_fractions() -> None:
    P = PayoffMatrix("0.5", 1, Fraction(2, 3), "-2/7")
    assert P.a == Fraction(1, 2)
    assert P.b == Fraction(1)
    assert P.c == Fraction(2, 3)
    assert P.d == Fraction(-2, 7)
    assert all(isinstance(x, Fraction) for x in P.entries())


def test_construction_rejects_junk() -> None:
    with pytest.raises(ValueError):
        PayoffMatrix("3", "oops", 1, 2)


def test_from_rows_shape_checks() -> None:
    assert PayoffMatrix.from_rows([[1, 2], [3, 4]]) == PayoffMatrix(1, 2, 3, 4)
    with pytest.raises(ValueError):
        PayoffMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        PayoffMatrix.from_rows([[1, 2]])


def test_entry_indexing_matches_rows() -> None:
    P = PayoffMatrix(1, 2, 3, 4)
    assert [[P.entry(i, j) for j in (0, 1)] for i in (0, 1)] == [list(r) for r in P.rows()]
    assert P.min_entry() == 1
    assert not P.is_constant()
    assert PayoffMatrix.constant(Fraction(5, 3)).is_constant()


def test_linear_arithmetic() -> None:
    P = PayoffMatrix(1, 2, 3, 4)
    Q = PayoffMatrix(4, 3, 2, 1)
    assert P + Q == PayoffMatrix.constant(5)
    assert P - P == PayoffMatrix.constant(0)
    assert 2 * P == PayoffMatrix(2, 4, 6, 8)
    assert P * Fraction(1, 2) == PayoffMatrix(Fraction(1, 2), 1, Fraction(3, 2), 2)
    assert str(P) == "[[1,2],[3,4]]"


def test_g_transform_known_values() -> None:
    cases = [
        (PayoffMatrix(3, 1, 4, 2), (5, -1, 2, 0)),
        (PayoffMatrix(4, 5, 1, 0), (5, 4, 0, -1)),
        (PayoffMatrix(9, 15, 5, 7), (18, 6, -4, -2)),
        (PayoffMatrix(-9, -3, -1, 1), (-6, -6, -4, -2)),
    ]
    for P, (g0, ga, gb, gab) in cases:
        G = g_transform(P)
        assert (G.g0, G.ga, G.gb, G.gab) == (g0, ga, gb, gab)


def test_transform_round_trips_exactly() -> None:
    rng = random.Random(71)
    for _ in range(300):
        P = random_matrix(rng)
        assert inverse_g_transform(g_transform(P)) == P
    for _ in range(300):
        G = GVector(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)))
        H = g_transform(inverse_g_transform(G))
        assert (H.g0, H.ga, H.gb, H.gab) == (G.g0, G.ga, G.gb, G.gab)


def test_pairwise_difference_identities() -> None:
    # The six boundary functionals are signed sums of two effect coordinates.
    rng = random.Random(72)
    for _ in range(200):
        P = random_matrix(rng)
        a, b, c, d = P.entries()
        G = g_transform(P)
        assert G.ga + G.gab == a - c
        assert G.ga - G.gab == b - d
        assert G.gb + G.gab == a - b
        assert G.gb - G.gab == c - d
        assert G.ga + G.gb == a - d
        assert G.ga - G.gb == b - c


def test_center_zeroes_the_level() -> None:
    P = PayoffMatrix(9, 15, 5, 7)
    C = center(P)
    assert g_transform(C).g0 == 0
    assert g_transform(C).triple() == g_transform(P).triple()
    assert (P - C).is_constant()


def test_normalize_sphere() -> None:
    n = normalize_sphere(PayoffMatrix(9, 15, 5, 7))
    ga, gb, gab = n.triple()
    assert abs(ga * ga + gb * gb + gab * gab - 1.0) < 1e-12
    # Proportional to (6, -4, -2).
    assert ga > 0 and gb < 0 and gab < 0
    assert abs(ga / gab - (-3.0)) < 1e-12
    with pytest.raises(TrivialGame):
        normalize_sphere(PayoffMatrix.constant(2))


def test_normalize_cube_is_exact() -> None:
    cp = normalize_cube(PayoffMatrix(9, 15, 5, 7))
    assert cp.triple() == (1, Fraction(-2, 3), Fraction(-1, 3))
    cp2 = normalize_cube(PayoffMatrix(3, 1, 4, 2))
    assert cp2.triple() == (Fraction(-1, 2), 1, 0)
    with pytest.raises(TrivialGame):
        normalize_cube(PayoffMatrix.constant(0))


def test_transpose_swaps_off_diagonal() -> None:
    P = PayoffMatrix(1, 2, 3, 4)
    assert transpose_game(P) == PayoffMatrix(1, 3, 2, 4)
    assert transpose_game(transpose_game(P)) == P
    # The transpose exchanges the two contrast coordinates.
    G, H = g_transform(P), g_transform(transpose_game(P))
    assert (H.ga, H.gb) == (G.gb, G.ga)
    assert (H.g0, H.gab) == (G.g0, G.gab)


def test_parse_matrix_accepts_all_entry_forms() -> None:
    assert parse_matrix("3,1;4,2") == PayoffMatrix(3, 1, 4, 2)
    assert parse_matrix(" 3 , 1 ; 4 , 2 ") == PayoffMatrix(3, 1, 4, 2)
    assert parse_matrix("1/2,-2;0.25,3") == PayoffMatrix(
        Fraction(1, 2), -2, Fraction(1, 4), 3
    )


def test_parse_matrix_errors_name_the_problem() -> None:
    with pytest.raises(ValueError, match="'x'"):
        parse_matrix("3,x;4,2")
    with pytest.raises(ValueError, match="2 rows"):
        parse_matrix("3,1")
    with pytest.raises(ValueError, match="2 entries"):
        parse_matrix("3,1,2;4,2")


def test_matrix_from_json() -> None:
    assert matrix_from_json({"payoff": [[3, 1], [4, 2]]}) == PayoffMatrix(3, 1, 4, 2)
    with pytest.raises(ValueError):
        matrix_from_json({"rows": [[3, 1], [4, 2]]})
    with pytest.raises(ValueError):
        matrix_from_json({"payoff": [[1, 2, 3], [4, 5, 6]]})


def test_matrices_from_lines_skips_blanks_and_comments() -> None:
    lines = ["# header", "", "3,1;4,2", "  ", "0,1;1,0"]
    assert matrices_from_lines(lines) == [PayoffMatrix(3, 1, 4, 2), PayoffMatrix(0, 1, 1, 0)]
    with pytest.raises(ValueError, match="line 2"):
        matrices_from_lines(["1,1;1,1", "nonsense"])
