"""Deterministic SVG rendering of the unfolded game map.

The drawing lives in map coordinates (the cross silhouette spans [-4, 4] in
both axes) with the y axis flipped for SVG.  Output is assembled from plain
strings with fixed number formatting, so a given set of inputs always gives
byte-identical SVG.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .cartography import MapPoint, REGIONS, region_triangle, region_vertices
from .taxonomy import CLASS_TABLE, region_class_index

#: Fill colors for the nine class-table rows, in table order.
CLASS_COLORS = (
    "#8dd3c7",
    "#ffffb3",
    "#bebada",
    "#fb8072",
    "#80b1d3",
    "#fdb462",
    "#b3de69",
    "#fccde5",
    "#d9d9d9",
)

#: Stroke colors cycled by overlaid trajectories.
TRAJECTORY_COLORS = ("#e41a1c", "#377eb8", "#4daf4a")

VIEW_BOX = "-4.8 -4.8 9.6 9.6"


def _fmt(value) -> str:
    """Fixed decimal formatting (4 places, trailing zeros stripped)."""
    text = f"{float(value):.4f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _xy(u, v) -> str:
    return f"{_fmt(u)},{_fmt(-v)}"


def _triangle_elements() -> list:
    parts = []
    for region in REGIONS:
        color = CLASS_COLORS[region_class_index(region.id)]
        points = " ".join(_xy(u, v) for u, v in region_triangle(region))
        name = CLASS_TABLE[region_class_index(region.id)].display_name
        parts.append(
            f'  <polygon points="{points}" fill="{color}" '
            f'stroke="black" stroke-width="0.02">'
            f"<title>region {region.id}: {region.ordering_text} ({name})</title>"
            f"</polygon>"
        )
    return parts


def _vertex_labels() -> list:
    # The same canonical matrix can sit at one planar point for several
    # regions (cells keep their own copies of cut edges), so dedupe by
    # position before emitting text.
    seen = {}
    for region in REGIONS:
        for vertex, (u, v) in zip(region_vertices(region), region_triangle(region)):
            seen.setdefault((u, v), vertex.matrix)
    parts = []
    for (u, v) in sorted(seen):
        rows = seen[(u, v)].rows()
        top = " ".join(str(x) for x in rows[0])
        bottom = " ".join(str(x) for x in rows[1])
        x, y = _fmt(u), _fmt(-v)
        parts.append(
            f'  <text x="{x}" y="{y}" font-size="0.24" text-anchor="middle" '
            f'font-family="monospace" stroke="white" stroke-width="0.05" '
            f'paint-order="stroke">'
            f'<tspan x="{x}" dy="-0.04">{top}</tspan>'
            f'<tspan x="{x}" dy="0.26">{bottom}</tspan>'
            f"</text>"
        )
    return parts


def _legend() -> list:
    parts = ['  <g font-size="0.24" font-family="sans-serif">']
    for k, record in enumerate(CLASS_TABLE):
        y = -4.65 + 0.3 * k
        parts.append(
            f'    <rect x="-4.7" y="{_fmt(y)}" width="0.22" height="0.22" '
            f'fill="{CLASS_COLORS[k]}" stroke="black" stroke-width="0.01"/>'
        )
        parts.append(
            f'    <text x="-4.42" y="{_fmt(y + 0.19)}">'
            f"{record.display_name} ({record.fraction})</text>"
        )
    parts.append("  </g>")
    return parts


def _split_runs(points: Sequence[Optional[MapPoint]]) -> list:
    """Break a point sequence into drawable runs.

    A run ends at a missing point (trivial sample) or at a jump longer than 1
    map unit, which is how a path looks when it leaves one cut edge of the
    cross and re-enters on another.
    """
    runs = []
    current = []
    previous = None
    for pt in points:
        if pt is None:
            if len(current) > 1:
                runs.append(current)
            current, previous = [], None
            continue
        if previous is not None:
            gap = (pt.u - previous.u) ** 2 + (pt.v - previous.v) ** 2
            if gap > 1:
                if len(current) > 1:
                    runs.append(current)
                current = []
        current.append(pt)
        previous = pt
    if len(current) > 1:
        runs.append(current)
    return runs


def _trajectory_elements(trajectories) -> list:
    parts = []
    for index, points in enumerate(trajectories):
        color = TRAJECTORY_COLORS[index % len(TRAJECTORY_COLORS)]
        for run in _split_runs(points):
            coords = " ".join(_xy(pt.u, pt.v) for pt in run)
            parts.append(
                f'  <polyline points="{coords}" fill="none" '
                f'stroke="{color}" stroke-width="0.05"/>'
            )
        drawn = [pt for pt in points if pt is not None]
        if drawn:
            first, last = drawn[0], drawn[-1]
            parts.append(
                f'  <circle cx="{_fmt(first.u)}" cy="{_fmt(-first.v)}" r="0.09" '
                f'fill="{color}"/>'
            )
            parts.append(
                f'  <circle cx="{_fmt(last.u)}" cy="{_fmt(-last.v)}" r="0.09" '
                f'fill="white" stroke="{color}" stroke-width="0.04"/>'
            )
    return parts


def _marker_elements(markers) -> list:
    parts = []
    for point, label in markers:
        parts.append(
            f'  <circle cx="{_fmt(point.u)}" cy="{_fmt(-point.v)}" r="0.07" '
            f'fill="black"/>'
        )
        if label:
            parts.append(
                f'  <text x="{_fmt(point.u + Fraction(1, 8))}" '
                f'y="{_fmt(-point.v - Fraction(1, 10))}" font-size="0.2" '
                f'font-family="sans-serif">{label}</text>'
            )
    return parts


def render_map(
    markers: Sequence[Tuple[MapPoint, str]] = (),
    trajectories: Sequence[Sequence[Optional[MapPoint]]] = (),
    legend: bool = True,
) -> str:
    """Render the full map with optional game markers and trajectories.

    ``markers`` holds (MapPoint, label) pairs; ``trajectories`` holds
    sequences of MapPoint-or-None in sample order (None entries come from
    constant matrices and simply interrupt the polyline).
    """
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{VIEW_BOX}" '
        f'width="960" height="960">',
        f'  <rect x="-4.8" y="-4.8" width="9.6" height="9.6" fill="white"/>',
    ]
    parts.extend(_triangle_elements())
    parts.extend(_vertex_labels())
    if legend:
        parts.extend(_legend())
    parts.extend(_trajectory_elements(trajectories))
    parts.extend(_marker_elements(markers))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
