"""The map of symmetric 2x2 games: regions, vertices, decomposition, unfolding.

Six planes in (ga, gb, gab) space -- ga+-gab = 0, gb+-gab = 0, ga+-gb = 0 --
cut the sphere of non-constant games into 24 congruent triangles.  Each plane
functional equals a pairwise difference of payoff entries, so the triangles
are in bijection with the strict orderings of (a, b, c, d) and every
membership test is an exact rational sign check.

The vertices of the partition are 6 axis directions and 8 cube corners; each
carries a canonical integer payoff matrix with minimum entry 0.  Any
non-trivial game decomposes exactly as

    P = offset * J + scale * (w1*V1 + w2*V2 + w3*V3)

over the three vertices of its triangle, with nonnegative weights summing
to 1.  Projecting to the unit cube (max-abs normalization) and unfolding the
cube into a cross yields planar map coordinates for plotting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .payoff import (
    PayoffMatrix,
    CubePoint,
    TrivialGame,
    g_transform,
    inverse_g_transform,
    normalize_cube,
)

LABELS = ("a", "b", "c", "d")

# Sign patterns of each entry over (ga, gb, gab); row k of the inverse
# transform, doubled.  Used to build canonical vertex matrices.
_ENTRY_PATTERNS = {
    "a": (1, 1, 1),
    "b": (1, -1, -1),
    "c": (-1, 1, -1),
    "d": (-1, -1, 1),
}

#: All strict orderings of the four entries, largest first; index = region id.
ALL_ORDERINGS = tuple(itertools.permutations(LABELS))


class BoundaryGame(ValueError):
    """Raised for tied-entry games, which sit on a partition plane.

    Carries the tied label pairs and the ids of every region whose closure
    contains the game.
    """

    def __init__(self, tied_pairs: tuple, adjacent_region_ids: tuple):
        self.tied_pairs = tuple(tied_pairs)
        self.adjacent_region_ids = tuple(adjacent_region_ids)
        pairs = ", ".join(f"{x}={y}" for x, y in self.tied_pairs)
        super().__init__(
            f"tied entries ({pairs}) lie on a region boundary; "
            f"adjacent regions: {self.adjacent_region_ids}"
        )


@dataclass(frozen=True)
class ElementaryRegion:
    """One of the 24 open spherical triangles, named by its entry ordering."""

    id: int
    ordering: tuple  # labels largest-to-smallest, e.g. ('c','a','d','b')
    sign_vector: tuple  # signs of (a-c, b-d, a-b, c-d, a-d, b-c)

    @property
    def ordering_text(self) -> str:
        return ">".join(self.ordering)

    def representative(self) -> PayoffMatrix:
        """The member game with entries {1,2,3,4} (largest entry gets 4)."""
        value = {label: 4 - rank for rank, label in enumerate(self.ordering)}
        return PayoffMatrix(value["a"], value["b"], value["c"], value["d"])


def _sign_vector(P: PayoffMatrix) -> tuple:
    a, b, c, d = P.entries()
    diffs = (a - c, b - d, a - b, c - d, a - d, b - c)
    return tuple(0 if x == 0 else (1 if x > 0 else -1) for x in diffs)


def _build_regions() -> tuple:
    regions = []
    for idx, ordering in enumerate(ALL_ORDERINGS):
        value = {label: 4 - rank for rank, label in enumerate(ordering)}
        rep = PayoffMatrix(value["a"], value["b"], value["c"], value["d"])
        regions.append(ElementaryRegion(idx, ordering, _sign_vector(rep)))
    return tuple(regions)


REGIONS = _build_regions()
_ORDERING_INDEX = {r.ordering: r.id for r in REGIONS}


def region_of(P: PayoffMatrix) -> ElementaryRegion:
    """The elementary region of a strict-generic game.

    Raises TrivialGame for constant matrices and BoundaryGame for any other
    tie, listing the regions adjacent to the boundary point.
    """
    entries = dict(zip(LABELS, P.entries()))
    if P.is_constant():
        raise TrivialGame("constant matrix belongs to no region")
    tied = tuple(
        (x, y)
        for x, y in itertools.combinations(LABELS, 2)
        if entries[x] == entries[y]
    )
    if tied:
        adjacent = tuple(
            r.id
            for r in REGIONS
            if all(
                entries[r.ordering[k]] >= entries[r.ordering[k + 1]]
                for k in range(3)
            )
        )
        raise BoundaryGame(tied, adjacent)
    ordering = tuple(sorted(LABELS, key=lambda l: entries[l], reverse=True))
    return REGIONS[_ORDERING_INDEX[ordering]]


# ---------------------------------------------------------------------------
# Canonical vertex matrices


@dataclass(frozen=True)
class CanonicalMatrix:
    """Integer matrix with min entry 0 whose g-triple points along ``direction``."""

    direction: tuple  # (ga, gb, gab) signs, axis or corner of the unit cube
    matrix: PayoffMatrix


def _canonical(direction: tuple) -> CanonicalMatrix:
    da, db, dab = direction
    axis = (da, db, dab).count(0) == 2
    # Corner matrices come in two integer shapes: product +1 gives a lone
    # high entry (scale 3), product -1 gives three equal entries (scale 1).
    t = 3 if axis or da * db * dab > 0 else 1
    raw = {
        label: Fraction(t * (p[0] * da + p[1] * db + p[2] * dab), 2)
        for label, p in _ENTRY_PATTERNS.items()
    }
    low = min(raw.values())
    return CanonicalMatrix(
        direction,
        PayoffMatrix(*(raw[label] - low for label in LABELS)),
    )


_AXIS_DIRECTIONS = (
    (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1),
)
_CORNER_DIRECTIONS = tuple(itertools.product((1, -1), repeat=3))
CANONICAL_DIRECTIONS = _AXIS_DIRECTIONS + _CORNER_DIRECTIONS
CANONICAL_MATRICES = {d: _canonical(d) for d in CANONICAL_DIRECTIONS}


def _axes_by_magnitude(region: ElementaryRegion) -> tuple:
    """Indices into (ga, gb, gab) sorted by |value| descending, with signs.

    The ordering and the two leading signs are constant across the region;
    only the sign of the smallest coordinate varies inside a triangle.
    """
    triple = g_transform(region.representative()).triple()
    order = sorted(range(3), key=lambda k: abs(triple[k]), reverse=True)
    signs = tuple(1 if triple[k] > 0 else (-1 if triple[k] < 0 else 0) for k in order)
    return order, signs


def region_vertices(region: ElementaryRegion) -> tuple:
    """The triangle's canonical matrices: (axis, corner_minus, corner_plus).

    The axis vertex is the face center of the region's cube face; the two
    corners share the face and the second coordinate's sign, and differ in
    the sign of the smallest coordinate (minus first, plus second).
    """
    (i_max, i_mid, i_min), (s_max, s_mid, _) = _axes_by_magnitude(region)
    axis = [0, 0, 0]
    axis[i_max] = s_max
    corner_minus = [0, 0, 0]
    corner_minus[i_max] = s_max
    corner_minus[i_mid] = s_mid
    corner_plus = list(corner_minus)
    corner_minus[i_min] = -1
    corner_plus[i_min] = 1
    return (
        CANONICAL_MATRICES[tuple(axis)],
        CANONICAL_MATRICES[tuple(corner_minus)],
        CANONICAL_MATRICES[tuple(corner_plus)],
    )


# ---------------------------------------------------------------------------
# Exact convex decomposition


@dataclass(frozen=True)
class Decomposition:
    """P = trivial_offset * J + scale * sum(weights[k] * vertices[k])."""

    trivial_offset: Fraction
    scale: Fraction
    weights: tuple  # three nonnegative Fractions summing to 1
    vertices: tuple  # (corner_minus, corner_plus, axis) CanonicalMatrix
    region: ElementaryRegion


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _solve3(columns, target) -> tuple:
    """Solve sum(y_k * columns[k]) = target exactly (Cramer's rule)."""
    A = [[columns[k][r] for k in range(3)] for r in range(3)]
    det = _det3(A)
    if det == 0:
        raise ArithmeticError("degenerate vertex triangle")
    out = []
    for k in range(3):
        Ak = [row[:] for row in A]
        for r in range(3):
            Ak[r][k] = target[r]
        out.append(_det3(Ak) / det)
    return tuple(out)


def decompose(P: PayoffMatrix) -> Decomposition:
    """Exact decomposition over the game's triangle vertices.

    The trivial offset is the minimum entry; the rest is solved as a 3x3
    rational linear system in (ga, gb, gab), which lands on nonnegative
    weights because the triangle's cone contains the game.  Tied-entry games
    sit on a shared boundary and are resolved toward the lowest-id adjacent
    region (a vertex matrix, for example, decomposes to itself with weight 1).
    """
    if P.is_constant():
        raise TrivialGame("constant matrix has no decomposition")
    try:
        region = region_of(P)
    except BoundaryGame as exc:
        region = REGIONS[min(exc.adjacent_region_ids)]
    axis, corner_minus, corner_plus = region_vertices(region)
    ordered = (corner_minus, corner_plus, axis)
    target = g_transform(P).triple()
    columns = [g_transform(v.matrix).triple() for v in ordered]
    y = _solve3(columns, target)
    scale = sum(y)
    weights = tuple(yk / scale for yk in y)
    return Decomposition(P.min_entry(), scale, weights, ordered, region)


def reconstruct(dec: Decomposition) -> PayoffMatrix:
    """Rebuild the payoff matrix from a decomposition (must round-trip exactly)."""
    total = PayoffMatrix.constant(dec.trivial_offset)
    for w, v in zip(dec.weights, dec.vertices):
        total = total + (dec.scale * w) * v.matrix
    return total


# ---------------------------------------------------------------------------
# Cube unfolding


@dataclass(frozen=True)
class MapPoint:
    """Planar coordinates on the unfolded cube, plus the source face."""

    u: Fraction
    v: Fraction
    face_tag: str


def unfold(cp: CubePoint) -> MapPoint:
    """Unfold a cube-surface point into the cross layout.

    Layout (all exact):
      gab=+1 face -> central square (u,v) = (ga, gb)
      ga=+-1 faces -> side arms (+-2 -+ gab, gb)
      gb=+-1 faces -> top/bottom arms (ga, +-2 -+ gab)
      gab=-1 face -> four tip triangles, quartered by its diagonals, attached
        to the arm sharing the cut edge; apex of each tip is the face center.
    Points on edges or corners take the gab face first, then ga, then gb;
    ties on the gab=-1 diagonals go to the first matching quarter below.
    """
    ga, gb, gab = cp.triple()
    if abs(gab) == 1:
        if gab > 0:
            return MapPoint(ga, gb, "gab+")
        if ga >= abs(gb):
            return MapPoint(4 - ga, gb, "gab-")
        if ga <= -abs(gb):
            return MapPoint(-4 - ga, gb, "gab-")
        if gb >= abs(ga):
            return MapPoint(ga, 4 - gb, "gab-")
        return MapPoint(ga, -4 - gb, "gab-")
    if abs(ga) == 1:
        if ga > 0:
            return MapPoint(2 - gab, gb, "ga+")
        return MapPoint(-2 + gab, gb, "ga-")
    if gb > 0:
        return MapPoint(ga, 2 - gab, "gb+")
    return MapPoint(ga, -2 + gab, "gb-")


def map_point(P: PayoffMatrix) -> MapPoint:
    """Map a non-constant game onto the unfolded cube."""
    return unfold(normalize_cube(P))


def _arm_transform(i_max: int, s_max: int, i_mid: int, s_mid: int) -> Callable:
    """The unfolding formula of one region's cell, applied to (ga, gb, gab)."""
    if i_max == 2:
        if s_max > 0:
            return lambda t: (t[0], t[1])
        if i_mid == 0:
            if s_mid > 0:
                return lambda t: (4 - t[0], t[1])
            return lambda t: (-4 - t[0], t[1])
        if s_mid > 0:
            return lambda t: (t[0], 4 - t[1])
        return lambda t: (t[0], -4 - t[1])
    if i_max == 0:
        if s_max > 0:
            return lambda t: (2 - t[2], t[1])
        return lambda t: (-2 + t[2], t[1])
    if s_max > 0:
        return lambda t: (t[0], 2 - t[2])
    return lambda t: (t[0], -2 + t[2])


def region_triangle(region: ElementaryRegion) -> tuple:
    """Map coordinates of the region's cell corners (axis, corner-, corner+).

    Each region is drawn inside its own unfolded cell, so cells that share a
    cut edge each keep their copy of it.
    """
    (i_max, i_mid, i_min), (s_max, s_mid, _) = _axes_by_magnitude(region)
    to_plane = _arm_transform(i_max, s_max, i_mid, s_mid)
    axis, corner_minus, corner_plus = region_vertices(region)
    return tuple(
        to_plane(tuple(Fraction(x) for x in vertex.direction))
        for vertex in (axis, corner_minus, corner_plus)
    )


# ---------------------------------------------------------------------------
# Trajectories


@dataclass(frozen=True)
class TrajectorySample:
    """One point of an affine payoff family P(t) = (1-t)*P0 + t*P1."""

    t: Fraction
    matrix: PayoffMatrix
    point: Optional[MapPoint]  # None when the sample is a constant matrix
    game_class: object  # GameClassRecord, or None on boundary/trivial samples
    boundary: bool
    trivial: bool


def trajectory(P0: PayoffMatrix, P1: PayoffMatrix, n: int) -> tuple:
    """Sample the segment from P0 (t=0) to P1 (t=1) at n equally spaced t.

    Samples that land on a region boundary are flagged rather than fatal;
    constant-matrix samples additionally lack a map point.
    """
    from .taxonomy import classify  # deferred: taxonomy builds on this module

    if n < 2:
        raise ValueError("a trajectory needs at least two samples")
    samples = []
    for k in range(n):
        t = Fraction(k, n - 1)
        M = (1 - t) * P0 + t * P1
        trivial = M.is_constant()
        point = None if trivial else map_point(M)
        game_class = None
        boundary = False
        if not trivial:
            try:
                game_class = classify(M).game_class
            except BoundaryGame:
                boundary = True
        samples.append(TrajectorySample(t, M, point, game_class, boundary, trivial))
    return tuple(samples)


# ---------------------------------------------------------------------------
# Monte Carlo region measure

# Entry coefficients over (ga, gb, gab) for vectorized sign classification.
_ENTRY_COEFS = np.array(
    [_ENTRY_PATTERNS[label] for label in LABELS], dtype=np.float64
) / 2.0


def _permutation_lut() -> np.ndarray:
    lut = np.full(256, -1, dtype=np.int64)
    for region in REGIONS:
        idxs = tuple(LABELS.index(l) for l in region.ordering)
        code = ((idxs[0] * 4 + idxs[1]) * 4 + idxs[2]) * 4 + idxs[3]
        lut[code] = region.id
    return lut


_PERM_LUT = _permutation_lut()


@dataclass(frozen=True)
class MCRegionReport:
    """Sampled region/class frequencies with binomial standard errors."""

    n_samples: int
    seed: int
    n_workers: int
    region_counts: tuple  # 24 ints, indexed by region id
    class_counts: tuple  # 9 ints, indexed by class-table row

    def region_fractions(self) -> tuple:
        return tuple(c / self.n_samples for c in self.region_counts)

    def class_fractions(self) -> tuple:
        return tuple(c / self.n_samples for c in self.class_counts)

    def _se(self, count: int) -> float:
        p = count / self.n_samples
        return float(np.sqrt(p * (1.0 - p) / self.n_samples))

    def region_std_errors(self) -> tuple:
        return tuple(self._se(c) for c in self.region_counts)

    def class_std_errors(self) -> tuple:
        return tuple(self._se(c) for c in self.class_counts)


def mc_region_fractions(n_samples: int, seed: int, n_workers: int = 1) -> MCRegionReport:
    """Estimate region and class measures from uniform sphere directions.

    Directions are normalized iid standard normals; each sample is assigned
    to its region by the exact sign pattern (the entry ordering), then rolled
    up to taxonomy classes.  Samples are partitioned across ``n_workers``
    streams derived from (seed, worker index), so results are reproducible
    for a fixed seed and worker count.
    """
    from .taxonomy import region_class_index

    if n_samples < 1:
        raise ValueError("need at least one sample")
    if n_workers < 1:
        raise ValueError("need at least one worker")
    region_counts = np.zeros(24, dtype=np.int64)
    base, rem = divmod(n_samples, n_workers)
    for worker in range(n_workers):
        m = base + (1 if worker < rem else 0)
        if m == 0:
            continue
        rng = np.random.default_rng([seed, worker])
        directions = rng.standard_normal((m, 3))
        # Ordering is scale-invariant, so the explicit normalization cancels.
        entries = directions @ _ENTRY_COEFS.T
        order = np.argsort(-entries, axis=1)
        codes = ((order[:, 0] * 4 + order[:, 1]) * 4 + order[:, 2]) * 4 + order[:, 3]
        region_counts += np.bincount(_PERM_LUT[codes], minlength=24)
    class_counts = [0] * 9
    for region_id, count in enumerate(region_counts):
        class_counts[region_class_index(region_id)] += int(count)
    return MCRegionReport(
        n_samples=n_samples,
        seed=seed,
        n_workers=n_workers,
        region_counts=tuple(int(c) for c in region_counts),
        class_counts=tuple(class_counts),
    )
