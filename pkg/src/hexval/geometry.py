"""Finite point-line incidence geometries.

A Geometry is a partial linear space with points 0..n-1 and lines given as
sorted point tuples. Construction canonicalizes the line order, validates
the partial-linear-space axiom and caches the collinearity graph and the
distance matrix (BFS per point). Disconnected point pairs get an explicit
``INF`` sentinel rather than a large number.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

INF = math.inf


class GeometryError(ValueError):
    """Raised when input violates a geometry axiom."""


@dataclass(frozen=True)
class OrderSpec:
    """Order (s, t): s+1 points per line, t+1 lines per point.

    A component is None when the geometry is not uniform in it (or the
    uniform value would be degenerate, e.g. a single line per point count
    of 1).
    """

    s: Optional[int]
    t: Optional[int]


@dataclass(frozen=True)
class Grid:
    """A (3x3)-subgrid: 9 points, 3 row lines and 3 column lines.

    cells[i][j] is collinear with cells[i'][j'] iff i == i' or j == j'.
    Canonical form: the minimal point sits at cell (0, 0), the remaining
    rows and columns are ordered by their minimal point, and rows hold the
    lexicographically smaller of the two parallel classes through the
    minimal point.
    """

    cells: Tuple[Tuple[int, int, int], ...]
    row_lines: Tuple[int, int, int]
    col_lines: Tuple[int, int, int]

    def points(self) -> frozenset:
        return frozenset(p for row in self.cells for p in row)


class Geometry:
    """Immutable partial linear space with cached distance data."""

    def __init__(self, num_points: int, lines: Iterable[Sequence[int]],
                 name: str = ""):
        canon = sorted({tuple(sorted(line)) for line in lines})
        self.num_points = num_points
        self.lines: Tuple[Tuple[int, ...], ...] = tuple(canon)
        self.name = name
        self._validate()
        self._build_graph()

    def _validate(self):
        seen_pairs: Dict[Tuple[int, int], Tuple[int, ...]] = {}
        for line in self.lines:
            if len(line) < 2:
                raise GeometryError(f"line {line} has fewer than 2 points")
            if len(set(line)) != len(line):
                raise GeometryError(f"duplicate point in line {line}")
            for p in line:
                if not 0 <= p < self.num_points:
                    raise GeometryError(f"point {p} out of range")
            for i in range(len(line)):
                for j in range(i + 1, len(line)):
                    pair = (line[i], line[j])
                    if pair in seen_pairs:
                        raise GeometryError(
                            f"points {pair[0]},{pair[1]} lie on two lines: "
                            f"{seen_pairs[pair]} and {line}")
                    seen_pairs[pair] = line

    def _build_graph(self):
        n = self.num_points
        nbrs = [set() for _ in range(n)]
        lines_through: List[List[int]] = [[] for _ in range(n)]
        for li, line in enumerate(self.lines):
            for p in line:
                lines_through[p].append(li)
                nbrs[p].update(q for q in line if q != p)
        self.neighbors: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in nbrs)
        self.lines_through: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(v) for v in lines_through)
        self.neighbor_masks: Tuple[int, ...] = tuple(
            sum(1 << q for q in t) for t in self.neighbors)
        self.line_masks: Tuple[int, ...] = tuple(
            sum(1 << p for p in line) for line in self.lines)
        self.dist = [self._bfs(p) for p in range(n)]

    def _bfs(self, start: int) -> List:
        row = [INF] * self.num_points
        row[start] = 0
        q = deque([start])
        while q:
            x = q.popleft()
            for y in self.neighbors[x]:
                if row[y] is INF:
                    row[y] = row[x] + 1
                    q.append(y)
        return row

    # -- basic queries ---------------------------------------------------

    def is_connected(self) -> bool:
        return self.num_points == 0 or INF not in self.dist[0]

    def diameter(self):
        if self.num_points == 0:
            return 0
        if not self.is_connected():
            return INF
        return max(max(row) for row in self.dist)

    def distance_distribution(self, p: int) -> List[int]:
        """Count of points at each distance 0..diameter from p."""
        counts = Counter(self.dist[p])
        top = max(d for d in counts if d is not INF)
        return [counts.get(i, 0) for i in range(int(top) + 1)]

    def line_index(self, a: int, b: int) -> Optional[int]:
        """Index of the unique line through two collinear points."""
        for li in self.lines_through[a]:
            if b in self.lines[li]:
                return li
        return None

    def third_point(self, a: int, b: int) -> Optional[int]:
        """Third point of the line through a and b (3-point lines only)."""
        li = self.line_index(a, b)
        if li is None:
            return None
        line = self.lines[li]
        return next(p for p in line if p != a and p != b)

    def __repr__(self):
        label = self.name or "geometry"
        return f"<{label}: {self.num_points} points, {len(self.lines)} lines>"


def build(num_points: int, lines: Iterable[Sequence[int]],
          name: str = "") -> Geometry:
    return Geometry(num_points, lines, name)


# -- axiom checkers ------------------------------------------------------


@dataclass(frozen=True)
class NearPolygonReport:
    is_near_polygon: bool
    diameter: object
    witness: Optional[Tuple[int, int]] = None  # (point, line index)


def check_near_polygon(g: Geometry) -> NearPolygonReport:
    """(NP1) connected; (NP2) unique nearest point on every line."""
    if not g.is_connected():
        return NearPolygonReport(False, INF)
    diam = g.diameter()
    for x in range(g.num_points):
        row = g.dist[x]
        for li, line in enumerate(g.lines):
            best = min(row[p] for p in line)
            if sum(1 for p in line if row[p] == best) != 1:
                return NearPolygonReport(False, diam, witness=(x, li))
    return NearPolygonReport(True, diam)


@dataclass(frozen=True)
class HexagonReport:
    is_generalized_hexagon: bool
    reason: str = ""
    witness: Optional[tuple] = None


def check_generalized_hexagon(g: Geometry) -> HexagonReport:
    """Near hexagon + (GH1) >= 2 lines per point + (GH2) unique common
    neighbor at distance 2."""
    np_report = check_near_polygon(g)
    if not np_report.is_near_polygon:
        return HexagonReport(False, "not a near polygon", np_report.witness)
    if np_report.diameter != 3:
        return HexagonReport(False, f"diameter {np_report.diameter} != 3")
    for p in range(g.num_points):
        if len(g.lines_through[p]) < 2:
            return HexagonReport(False, "point on fewer than 2 lines", (p,))
    for x in range(g.num_points):
        for y in range(x + 1, g.num_points):
            if g.dist[x][y] == 2:
                common = set(g.neighbors[x]) & set(g.neighbors[y])
                if len(common) != 1:
                    return HexagonReport(
                        False, "distance-2 pair without unique common "
                        "neighbor", (x, y, sorted(common)))
    return HexagonReport(True)


def order_of(g: Geometry) -> OrderSpec:
    line_sizes = {len(line) for line in g.lines}
    point_degrees = {len(g.lines_through[p]) for p in range(g.num_points)}
    s = line_sizes.pop() - 1 if len(line_sizes) == 1 else None
    t = point_degrees.pop() - 1 if len(point_degrees) == 1 else None
    if s is not None and s < 1:
        s = None
    if t is not None and t < 1:
        t = None
    return OrderSpec(s, t)


def common_neighbor_profile(g: Geometry) -> Counter:
    """Histogram of common-neighbor counts over distance-2 point pairs."""
    hist: Counter = Counter()
    for x in range(g.num_points):
        nx = set(g.neighbors[x])
        for y in range(x + 1, g.num_points):
            if g.dist[x][y] == 2:
                hist[len(nx & set(g.neighbors[y]))] += 1
    return hist


def dual(g: Geometry) -> Geometry:
    """Interchange points and lines: new point i = old line i, new lines =
    pencils of old lines through each old point."""
    pencils = [g.lines_through[p] for p in range(g.num_points)]
    name = f"dual({g.name})" if g.name else ""
    return Geometry(len(g.lines), pencils, name)


# -- grids ---------------------------------------------------------------


def _complete_grid(g: Geometry, p11, p12, p21, p22):
    """Try to extend a 4-cycle (rows p11-p12, p21-p22) to a full grid."""
    p13 = g.third_point(p11, p12)
    p23 = g.third_point(p21, p22)
    p31 = g.third_point(p11, p21)
    p32 = g.third_point(p12, p22)
    if g.dist[p13][p23] != 1 or g.dist[p31][p32] != 1:
        return None
    p33 = g.third_point(p13, p23)
    if p33 != g.third_point(p31, p32):
        return None
    pts = {p11, p12, p13, p21, p22, p23, p31, p32, p33}
    if len(pts) != 9:
        return None
    return frozenset(pts)


def _canonical_grid(g: Geometry, pts: frozenset) -> Grid:
    lines = [li for li in {g.line_index(a, b)
                           for a in pts for b in pts
                           if a < b and g.dist[a][b] == 1}
             if set(g.lines[li]) <= pts]
    assert len(lines) == 6
    # split the 6 lines into the two parallel classes
    classes: List[List[int]] = []
    rest = sorted(lines)
    first = rest[0]
    cls1 = [li for li in rest if li == first
            or not set(g.lines[li]) & set(g.lines[first])]
    cls2 = [li for li in rest if li not in cls1]
    p0 = min(pts)
    row_cls, col_cls = cls1, cls2
    row0 = next(li for li in row_cls if p0 in g.lines[li])
    col0 = next(li for li in col_cls if p0 in g.lines[li])
    if g.lines[col0] < g.lines[row0]:
        row_cls, col_cls = col_cls, row_cls
        row0, col0 = col0, row0
    rows = [row0] + sorted((li for li in row_cls if li != row0),
                           key=lambda li: g.lines[li])
    cols = [col0] + sorted((li for li in col_cls if li != col0),
                           key=lambda li: g.lines[li])
    cells = tuple(
        tuple(next(iter(set(g.lines[r]) & set(g.lines[c]))) for c in cols)
        for r in rows)
    return Grid(cells, tuple(rows), tuple(cols))


def enumerate_grids(g: Geometry) -> List[Grid]:
    """All (3x3)-subgrids, one per point set, in deterministic order."""
    for line in g.lines:
        if len(line) != 3:
            raise GeometryError("grid enumeration requires 3-point lines")
    found: Dict[frozenset, Grid] = {}
    for x in range(g.num_points):
        nx = set(g.neighbors[x])
        for y in range(x + 1, g.num_points):
            if g.dist[x][y] != 2:
                continue
            common = sorted(nx & set(g.neighbors[y]))
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    pts = _complete_grid(g, x, common[i], common[j], y)
                    if pts is not None and pts not in found:
                        found[pts] = _canonical_grid(g, pts)
    return [found[k] for k in sorted(found, key=sorted)]


def grids_through_point(grids: List[Grid], p: int) -> List[Grid]:
    return [gr for gr in grids if p in gr.points()]


# -- ovoids --------------------------------------------------------------


def find_ovoids(g: Geometry) -> List[Tuple[int, ...]]:
    """All point sets meeting every line exactly once.

    Exact-cover backtracking over lines, branching on the uncovered line
    with the fewest available points.
    """
    n_lines = len(g.lines)
    results: List[Tuple[int, ...]] = []
    chosen: List[int] = []

    def search(covered_lines: int, forbidden: int):
        if covered_lines == (1 << n_lines) - 1:
            results.append(tuple(sorted(chosen)))
            return
        best_li, best_cands = None, None
        for li in range(n_lines):
            if covered_lines >> li & 1:
                continue
            cands = [p for p in g.lines[li] if not forbidden >> p & 1]
            if best_cands is None or len(cands) < len(best_cands):
                best_li, best_cands = li, cands
                if not cands:
                    return
        for p in best_cands:
            new_cov = covered_lines
            ok = True
            for li in g.lines_through[p]:
                if new_cov >> li & 1:
                    ok = False
                    break
                new_cov |= 1 << li
            if not ok:
                continue
            chosen.append(p)
            search(new_cov, forbidden | (1 << p) | g.neighbor_masks[p])
            chosen.pop()

    if n_lines:
        search(0, 0)
    return sorted(results)


# -- bound and induced valuations ---------------------------------------


def near_hexagon_point_bound(s: int, t: int) -> int:
    """Upper bound on the point count of a near hexagon of order (s, t);
    equality characterizes generalized hexagons."""
    if s < 1 or t < 1:
        raise ValueError("order parameters must be >= 1")
    return (s + 1) * (s * s * t * t + s * t + 1)


def induced_valuation(ambient: Geometry, sub_points: Sequence[int],
                      sub_lines: Iterable[Sequence[int]],
                      x: int) -> List[int]:
    """Valuation y -> d(x, y) - d(x, sub_points) induced on a full
    isometrically embedded subgeometry; values in sub_points order."""
    sub_points = list(sub_points)
    index = {p: i for i, p in enumerate(sub_points)}
    relabeled = [[index[p] for p in line] for line in sub_lines]
    sub = Geometry(len(sub_points), relabeled)
    for i, p in enumerate(sub_points):
        for j, q in enumerate(sub_points):
            if sub.dist[i][j] != ambient.dist[p][q]:
                raise GeometryError(
                    f"not isometrically embedded: points {p},{q} have "
                    f"ambient distance {ambient.dist[p][q]} but internal "
                    f"distance {sub.dist[i][j]}")
    base = min(ambient.dist[x][p] for p in sub_points)
    values = [ambient.dist[x][p] - base for p in sub_points]
    for line in relabeled:
        vals = sorted(values[i] for i in line)
        if not (vals.count(vals[0]) == 1
                and all(v == vals[0] + 1 for v in vals[1:])):
            raise GeometryError(
                f"induced function is not a semi-valuation on line {line}")
    return values


# -- text format ---------------------------------------------------------


def to_text(g: Geometry) -> str:
    """Geometry text format: `points N` then one sorted line per row."""
    rows = [f"points {g.num_points}"]
    rows.extend(" ".join(str(p) for p in line) for line in g.lines)
    return "\n".join(rows) + "\n"


def from_text(text: str, name: str = "") -> Geometry:
    rows = [r.strip() for r in text.splitlines() if r.strip()]
    if not rows or not rows[0].startswith("points "):
        raise GeometryError("missing 'points N' header")
    try:
        n = int(rows[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise GeometryError("malformed 'points N' header") from exc
    lines = []
    for row in rows[1:]:
        try:
            lines.append([int(tok) for tok in row.split()])
        except ValueError as exc:
            raise GeometryError(f"malformed line row {row!r}") from exc
    return Geometry(n, lines, name)
