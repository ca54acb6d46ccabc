"""Crossing-minimal drawings of ``K_{2,2,n}`` and their geometric realisations.

Two families are provided.  ``type1`` works for every ``n >= 3``: the red
``K_{2,2}`` is a square with crossing diagonals, M and N sit on its top and
bottom sides and the outer vertices form four groups A, B, C, D on the left
and right sides of P.  ``type4`` needs ``n`` odd: the red 4-cycle is a dart
whose reflex corner is vertex 3, N lies inside the dart and M closes its
notch; the outer vertices form two groups on the top and bottom sides.

In both families every edge is a straight segment except a few
exceptional edges carrying one waypoint each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclic import DomainError, c_n, cr3_k22n
from .extraction import k22n_labels, tripartite_labels
from .geometry import Point, signed_area2
from .model import Circle, Edge, GeometricDrawing, K22nLabels, TripartiteLabels, Vertex

__all__ = [
    "VARIANTS",
    "ConstructionSpec",
    "default_groups",
    "group_violations",
    "build",
    "construction_count",
    "exceptional_edges",
    "realize_geometric",
    "extract_labels",
    "to_svg",
]

VARIANTS = ("type1", "type4")
INNER_IDS = ("M1", "M2", "N1", "N2")

# half-size of the red square / dart and of the outer square (before scaling)
_S = 10
_R = 1000


@dataclass(frozen=True)
class ConstructionSpec:
    """Combinatorial description of one optimal drawing."""

    n: int
    variant: str
    groups: Tuple[int, int, int, int]
    bend_savings: int
    red_green: int
    red_red: int

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))


def _halves(n: int) -> List[int]:
    return sorted((n // 2, (n + 1) // 2))


def default_groups(n: int, variant: str) -> Tuple[int, int, int, int]:
    """Group sizes used when none are given.

    For ``type1`` the groups B and D get one vertex each, so that at most one
    group is empty (only for ``n = 3``); see :func:`realize_geometric`.
    """
    if variant == "type4":
        return ((n + 1) // 2, n // 2, 0, 0)
    return ((n + 1) // 2 - 1, 1, n // 2 - 1, 1)


def group_violations(n: int, variant: str, groups: Sequence[int]) -> List[str]:
    """Every violated constraint on the group sizes; empty iff valid."""
    out = []
    if len(groups) != 4:
        return [f"expected 4 group sizes (A, B, C, D), got {len(groups)}"]
    if any(not isinstance(g, int) or isinstance(g, bool) or g < 0 for g in groups):
        return [f"group sizes must be non-negative integers, got {tuple(groups)}"]
    a, b, c, d = groups
    if a + b + c + d != n:
        out.append(f"|A|+|B|+|C|+|D| = {a + b + c + d}, expected n = {n}")
    halves = _halves(n)
    if variant == "type4":
        if c or d:
            out.append("type4 requires C = D = 0")
        if sorted((a, b)) != halves:
            out.append(f"type4 requires {{|A|,|B|}} = {{{halves[0]},{halves[1]}}}, got {{{a},{b}}}")
    else:
        if sorted((a + d, b + c)) != halves:
            out.append(f"type1 requires {{|A∪D|,|B∪C|}} = {{{halves[0]},{halves[1]}}}, got {{{a + d},{b + c}}}")
        if sorted((a + b, c + d)) != halves:
            out.append(f"type1 requires {{|A∪B|,|C∪D|}} = {{{halves[0]},{halves[1]}}}, got {{{a + b},{c + d}}}")
    return out


def build(n: int, variant: str, groups: Optional[Sequence[int]] = None) -> ConstructionSpec:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n!r}")
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}")
    if variant == "type4" and n % 2 == 0:
        raise DomainError(f"type4 is only defined for odd n, got n = {n}")
    if groups is None:
        groups = default_groups(n, variant)
    problems = group_violations(n, variant, groups)
    if problems:
        raise DomainError("invalid group sizes: " + "; ".join(problems))
    if variant == "type4":
        return ConstructionSpec(n, variant, tuple(groups), bend_savings=2, red_green=2 * n - 1, red_red=0)
    return ConstructionSpec(n, variant, tuple(groups), bend_savings=4, red_green=2 * n, red_red=1)


def construction_count(s: ConstructionSpec) -> int:
    """Crossings of the drawing: straight-line count minus what the bends save."""
    total = c_n(s.n) + s.red_green + s.red_red - s.bend_savings
    assert total == cr3_k22n(s.n), "construction recipe disagrees with the closed form"
    return total


# -- geometry ---------------------------------------------------------------


def _diamond(a: Point, b: Point) -> List[Point]:
    """Thin counterclockwise rhombus with tips ``a`` and ``b`` (axis-parallel tips only)."""
    (ax, ay), (bx, by) = a, b
    mx, my = (ax + bx) // 2, (ay + by) // 2
    px, py = (0, 1) if ay == by else (1, 0)
    poly = [a, (mx - px, my - py), b, (mx + px, my + py)]
    return poly if signed_area2(poly) > 0 else [a, (mx + px, my + py), b, (mx - px, my - py)]


def _spread(start: int, span: int, k: int, step_sign: int) -> List[int]:
    """``k`` integer coordinates from ``start`` over ``span`` (one point sits at ``start``)."""
    return [start + step_sign * (span * i // max(k - 1, 1)) for i in range(k)]


def _scale(n: int) -> int:
    # keeps consecutive outer vertices at least one grid unit apart
    return 1 + n // 400


def _labels_from(groups: Sequence[int]) -> List[List[int]]:
    out, k = [], 1
    for size in groups:
        out.append(list(range(k, k + size)))
        k += size
    return out


def _type1_layout(s: ConstructionSpec):
    n, R, S = s.n, _R * _scale(s.n), _S
    a, b, c, d = s.groups
    h = R // 2 - 100
    inner = {"M1": (-S, S), "M2": (S, S), "N1": (S, -S), "N2": (-S, -S)}
    pts = [(-R, y) for y in _spread(R - 100, h, a, -1)]
    pts += [(-R, y) for y in _spread(-R // 2, h, b, -1)]
    pts += [(R, y) for y in _spread(-R + 100, h, c, 1)]
    pts += [(R, y) for y in _spread(R // 2, h, d, 1)]
    A, B, C, D = _labels_from(s.groups)
    # each bent edge goes round the inner circle it would otherwise pass on the wrong side of
    bends = {}
    if C:
        bends[("M1", C[0])] = (-2 * S, -3 * S)
    if B:
        bends[("M2", B[0])] = (-2 * S, 2 * S)
    if A:
        bends[("N1", A[0])] = (2 * S, 3 * S)
    if D:
        bends[("N2", D[0])] = (2 * S, -2 * S)
    return inner, pts, R, bends


def _type4_layout(s: ConstructionSpec):
    n, R, S = s.n, _R * _scale(s.n), _S
    a, b = s.groups[:2]
    h = 3 * R // 4 - 100
    inner = {"M1": (-S, -S), "M2": (-S, S), "N1": (0, 0), "N2": (3 * S, 0)}
    A, B = _labels_from(s.groups)[:2]
    # the smaller group goes on top, where every vertex pays for two red crossings
    top_first = a < b
    top, bottom = (A, B) if top_first else (B, A)
    top_x = _spread(R - 100, h, len(top), -1)
    bottom_x = _spread(-R + 100, h, len(bottom), 1)
    placed = {}
    for k, x in zip(top, top_x):
        placed[k] = (x, R)
    for k, x in zip(bottom, bottom_x):
        placed[k] = (x, -R)
    pts = [placed[k] for k in range(1, n + 1)]
    bends = {
        ("M1", top[-1]): (-R + 10, -R + 10),
        ("M2", bottom[-1]): (4 * S, -1),
    }
    return inner, pts, R, bends


def _layout(s: ConstructionSpec):
    problems = group_violations(s.n, s.variant, s.groups)
    if problems:
        raise DomainError("invalid group sizes: " + "; ".join(problems))
    if s.variant == "type4":
        return _type4_layout(s)
    a, b, c, d = s.groups
    if a == c == 0 or b == d == 0:
        raise DomainError(
            f"groups {tuple(s.groups)}: the type1 layout needs A or C and B or D to be non-empty"
        )
    return _type1_layout(s)


def exceptional_edges(s: ConstructionSpec) -> List[Tuple[str, str]]:
    """The bent edges of the realisation, as ``(inner id, outer id)`` pairs."""
    return [(u, f"P{k}") for (u, k) in _layout(s)[3]]


def realize_geometric(s: ConstructionSpec) -> GeometricDrawing:
    """Exact-coordinate drawing of ``s``.

    Raises :class:`DomainError` for ``type1`` group sizes with both A and C
    empty or both B and D empty; the layout has no crossing-saving bend
    for the missing groups.
    """
    inner, pts, R, bends = _layout(s)
    circles = (
        Circle("M", _diamond(inner["M1"], inner["M2"]), "cw"),
        Circle("N", _diamond(inner["N1"], inner["N2"]), "cw"),
        Circle("P", [(-R, -R), (R, -R), (R, R), (-R, R)], "ccw"),
    )
    vertices = [Vertex(vid, vid[0], int(vid[1]), inner[vid]) for vid in INNER_IDS]
    vertices += [Vertex(f"P{k}", "P", k, p) for k, p in enumerate(pts, 1)]
    edges = [Edge(m, v) for m in ("M1", "M2") for v in ("N1", "N2")]
    for u in INNER_IDS:
        for k in range(1, s.n + 1):
            w = bends.get((u, k))
            edges.append(Edge(u, f"P{k}", (w,) if w else ()))
    parts = {
        "M": ("M1", "M2"),
        "N": ("N1", "N2"),
        "P": tuple(f"P{k}" for k in range(1, s.n + 1)),
    }
    return GeometricDrawing(circles, vertices, edges, parts)


def extract_labels(s: ConstructionSpec) -> Tuple[K22nLabels, TripartiteLabels]:
    """Labels read off the realised drawing of ``s``."""
    d = realize_geometric(s)
    return k22n_labels(d, 1 if s.variant == "type1" else 4), tripartite_labels(d)


# -- rendering --------------------------------------------------------------


def _fmt(v) -> str:
    # exact rationals rendered with a fixed number of decimals for byte-stable output
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


def to_svg(d: GeometricDrawing, size: int = 800) -> str:
    """Deterministic SVG rendering: circles as polygons, one ``<path>`` per edge."""
    P = d.circle("P").polygon
    R = max(max(abs(x), abs(y)) for x, y in P)
    k = size / (2 * R * 1.05)

    def xy(p) -> str:
        return f"{_fmt(size / 2 + p[0] * k)},{_fmt(size / 2 - p[1] * k)}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        "<style>.red{stroke:#c0392b}.green{stroke:#27ae60}path{fill:none;stroke-width:1}"
        "polygon{fill:none;stroke:#333}text{font-size:10px}</style>",
    ]
    for c in d.circles:
        pts = " ".join(xy(p) for p in c.polygon)
        lines.append(f'<polygon class="circle" data-name="{c.name}" points="{pts}"/>')
    for e in d.edges:
        pts = d.polyline(e)
        path = "M" + " L".join(xy(p) for p in pts)
        cls = "red" if d.is_red(e) else "green"
        lines.append(f'<path class="{cls}" data-edge="{e.u}-{e.v}" d="{path}"/>')
    for v in d.vertices:
        x, y = xy(v.point).split(",")
        lines.append(f'<circle cx="{x}" cy="{y}" r="2"/><text x="{x}" y="{y}">{v.id}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
