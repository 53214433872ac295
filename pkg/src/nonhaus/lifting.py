"""Path and homotopy lifting through the glued origins.

Paths in the base are piecewise-linear rational coordinate functions on
[0, 1].  Lifting is trivial over the regular locus (the projection is
injective there); all freedom sits at the zero times, where a lift picks
one of the k origins.  Lifts of a path are therefore enumerable, and a
homotopy lift reduces to an origin assignment on the zero set of the
homotopy's coordinate field.

Homotopy fields are values on a rational grid, interpolated affinely on
the two triangles of each cell (all cells split along the same diagonal,
lower-left to upper-right).  The zero set of such a field is an exact PL
1-complex; its connected components carry the lifting constraints:

* chart model: an origin assignment must be constant on every connected
  zero component, because the chart of one origin contains no other
  origin, so assignments are locally constant along the zero set;
* ball model: the origin set has pseudometric diameter zero, so every
  pointwise assignment is continuous and lifts exist non-uniquely.  The
  optional constancy rule instead forces one origin across the whole zero
  set, reproducing the verdict that treats origin-valued maps as constant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .embedding import BasePoint
from .errors import (
    AssignmentDomainMismatch,
    IndexOutOfRange,
    NonpositiveBasepoint,
    StartMismatch,
    ZeroPlateau,
    ZeroPlateau2D,
)
from .projection import project
from .space import (
    CanonicalPoint,
    Origin,
    OriginChart,
    Regular,
    SpaceConfig,
    TopologyModel,
    open_contains,
)


@dataclass(frozen=True)
class PLPath:
    """Piecewise-linear rational coordinate function on [0, 1].

    Construction normalizes the data: any segment whose endpoints have
    opposite signs is split at its interior root, so after construction
    the coordinate vanishes only at breakpoints.  Plateaus at zero are not
    rejected here; operations that need isolated zero times raise
    ``ZeroPlateau`` when they meet one.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = [(Fraction(t), Fraction(x)) for t, x in self.breakpoints]
        if len(pts) < 2:
            raise ValueError("a path needs at least two breakpoints")
        if pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("parameter must span [0, 1]")
        for (t0, _), (t1, _) in zip(pts, pts[1:]):
            if not t0 < t1:
                raise ValueError("breakpoint parameters must be strictly increasing")
        normalized: list[tuple[Fraction, Fraction]] = []
        for (t0, x0), (t1, x1) in zip(pts, pts[1:]):
            normalized.append((t0, x0))
            if x0 * x1 < 0:
                root = t0 + (t1 - t0) * x0 / (x0 - x1)
                normalized.append((root, Fraction(0)))
        normalized.append(pts[-1])
        object.__setattr__(self, "breakpoints", tuple(normalized))

    def eval(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError(f"parameter {t} outside [0, 1]")
        pts = self.breakpoints
        for (t0, x0), (t1, x1) in zip(pts, pts[1:]):
            if t0 <= t <= t1:
                if t == t0:
                    return x0
                return x0 + (x1 - x0) * (t - t0) / (t1 - t0)
        return pts[-1][1]


def zero_times(path: PLPath) -> list[Fraction]:
    """Sorted parameters where the coordinate vanishes; rejects plateaus."""
    times = []
    pts = path.breakpoints
    for idx, (t, x) in enumerate(pts):
        if x == 0:
            if idx + 1 < len(pts) and pts[idx + 1][1] == 0:
                raise ZeroPlateau(f"coordinate stays 0 on [{t}, {pts[idx + 1][0]}]")
            times.append(t)
    return times


def bounce_path(x0: Fraction) -> PLPath:
    """Path from x0 through coordinate 0 at t = 1/2 and back to x0."""
    x0 = Fraction(x0)
    if x0 <= 0:
        raise NonpositiveBasepoint(f"basepoint must be positive, got {x0}")
    return PLPath(((Fraction(0), x0), (Fraction(1, 2), Fraction(0)), (Fraction(1), x0)))


@dataclass(frozen=True)
class LiftedPath:
    """A lift: the base path plus one canonical point per breakpoint.

    The regular part is forced (the projection is injective off the
    origins); origin choices at zero times are the only freedom.  The
    record is not validated on construction; :func:`verify_lift_continuity`
    performs the checks and reports a witness on mismatch.
    """

    base: PLPath
    values: tuple[CanonicalPoint, ...]

    @property
    def start(self) -> CanonicalPoint:
        return self.values[0]

    def origin_choices(self) -> tuple[tuple[Fraction, int], ...]:
        out = []
        for (t, x), v in zip(self.base.breakpoints, self.values):
            if x == 0 and isinstance(v, Origin):
                out.append((t, v.index))
        return tuple(out)

    def point_at(self, t: Fraction) -> CanonicalPoint:
        t = Fraction(t)
        for (bt, _), v in zip(self.base.breakpoints, self.values):
            if bt == t:
                return v
        return Regular(self.base.eval(t))


def enumerate_lifts(path: PLPath, start: CanonicalPoint, cfg: SpaceConfig) -> list[LiftedPath]:
    """All lifts of the path from the given start, in lexicographic origin order.

    With m free zero times there are exactly k^m lifts.  A start over
    coordinate 0 must be an origin and pins that zero time's choice.
    """
    zts = zero_times(path)
    c0 = path.breakpoints[0][1]
    pinned: dict[Fraction, int] = {}
    if c0 == 0:
        if not isinstance(start, Origin):
            raise StartMismatch("path starts at coordinate 0; start must be an origin")
        if start.index > cfg.k:
            raise IndexOutOfRange(f"origin {start.index} not in 1..{cfg.k}")
        pinned[Fraction(0)] = start.index
    else:
        if start != Regular(c0):
            raise StartMismatch(f"start {start} does not project onto coordinate {c0}")
    free = [t for t in zts if t not in pinned]
    lifts = []
    for combo in itertools.product(range(1, cfg.k + 1), repeat=len(free)):
        choice = dict(pinned)
        choice.update(zip(free, combo))
        values = tuple(
            Origin(choice[t]) if x == 0 else Regular(x) for t, x in path.breakpoints
        )
        lift = LiftedPath(base=path, values=values)
        verdict = verify_lift_continuity(lift, cfg)
        if not verdict.ok:
            raise AssertionError(f"constructed lift failed verification: {verdict.witness}")
        lifts.append(lift)
    return lifts


@dataclass(frozen=True)
class SegmentModulus:
    """Exact Lipschitz record of one segment: distance scales by |slope|."""

    t0: Fraction
    t1: Fraction
    slope_abs: Fraction


@dataclass(frozen=True)
class ContinuityVerdict:
    """Result of lift verification with its continuity modulus.

    In the ball model the pseudometric pulls back to the coordinate
    distance, so each segment is exactly Lipschitz with constant |slope|.
    In the chart model the verdict additionally records that each zero
    time is isolated and that the chart of the chosen origin contains the
    approaching regular points, so the single-point origin choice is a
    limit of the regular part.
    """

    ok: bool
    model: str
    lipschitz: Optional[Fraction]
    segments: tuple[SegmentModulus, ...]
    witness: Optional[str] = None
    note: str = ""


def verify_lift_continuity(lift: LiftedPath, cfg: SpaceConfig) -> ContinuityVerdict:
    """Check projection exactness and produce the continuity modulus."""
    zero_times(lift.base)  # plateau inputs are rejected, not reported as verdicts
    pts = lift.base.breakpoints
    model = cfg.model.value
    if len(lift.values) != len(pts):
        return ContinuityVerdict(
            ok=False, model=model, lipschitz=None, segments=(),
            witness="value list does not match breakpoints",
        )
    for (t, x), v in zip(pts, lift.values):
        if project(v) != BasePoint(x):
            return ContinuityVerdict(
                ok=False, model=model, lipschitz=None, segments=(),
                witness=f"projection mismatch at t={t}: lift value {v} over coordinate {x}",
            )
        if x != 0 and v != Regular(x):
            return ContinuityVerdict(
                ok=False, model=model, lipschitz=None, segments=(),
                witness=f"regular part not forced at t={t}",
            )
        if x == 0 and (not isinstance(v, Origin) or not 1 <= v.index <= cfg.k):
            return ContinuityVerdict(
                ok=False, model=model, lipschitz=None, segments=(),
                witness=f"zero time t={t} does not carry a valid origin",
            )
    segments = tuple(
        SegmentModulus(t0, t1, abs(x1 - x0) / (t1 - t0))
        for (t0, x0), (t1, x1) in zip(pts, pts[1:])
    )
    lipschitz = max((s.slope_abs for s in segments), default=Fraction(0))
    note = "pseudometric pulls back to coordinate distance; per-segment bound is exact"
    if cfg.model is TopologyModel.QUOTIENT:
        for idx, ((t, x), v) in enumerate(zip(pts, lift.values)):
            if x != 0:
                continue
            neighbours = [pts[j][1] for j in (idx - 1, idx + 1) if 0 <= j < len(pts)]
            assert isinstance(v, Origin)
            for nb in neighbours:
                if not open_contains(OriginChart(v.index, 2 * abs(nb)), Regular(nb)):
                    return ContinuityVerdict(
                        ok=False, model=model, lipschitz=lipschitz, segments=segments,
                        witness=f"chart of origin {v.index} misses approach value {nb}",
                    )
        note = (
            "zero times are isolated and the chart of the chosen origin contains all "
            "small regular points, so the origin choice is a limit of the regular part"
        )
    return ContinuityVerdict(
        ok=True, model=model, lipschitz=lipschitz, segments=segments, note=note,
    )


@dataclass(frozen=True)
class MonodromyObstruction:
    """k distinct lifts of one loop from one start point.

    A fibre action by loops needs unique lifting; this certificate shows
    the prerequisite failing on the bounce path.
    """

    k: int
    model: str
    x0: Fraction
    path: PLPath
    lifts: tuple[LiftedPath, ...]
    statement: str


_MONODROMY_STATEMENT = (
    "all recorded lifts share their start point and project onto the same path, yet "
    "differ at a zero time; no fibre action by loops can be defined without unique lifting"
)


def monodromy_verdict(x0: Fraction, cfg: SpaceConfig) -> MonodromyObstruction:
    path = bounce_path(x0)
    lifts = enumerate_lifts(path, Regular(Fraction(x0)), cfg)
    return MonodromyObstruction(
        k=cfg.k,
        model=cfg.model.value,
        x0=Fraction(x0),
        path=path,
        lifts=tuple(lifts),
        statement=_MONODROMY_STATEMENT,
    )


def recheck_monodromy(cert: MonodromyObstruction) -> list[str]:
    failures: list[str] = []
    cfg = SpaceConfig(cert.k, TopologyModel(cert.model))
    if len(cert.lifts) != cert.k:
        failures.append(f"expected {cert.k} lifts, certificate holds {len(cert.lifts)}")
    starts = {lift.start for lift in cert.lifts}
    if len(starts) != 1:
        failures.append("lifts do not share a start point")
    seen = set()
    for n, lift in enumerate(cert.lifts):
        if lift.base != cert.path:
            failures.append(f"lift {n} is over a different path")
        if not verify_lift_continuity(lift, cfg).ok:
            failures.append(f"lift {n} fails verification")
        seen.add(lift.values)
    if len(seen) != len(cert.lifts):
        failures.append("lifts are not pairwise distinct")
    return failures


# ---------------------------------------------------------------------------
# Homotopy fields and the exact zero-set complex


@dataclass(frozen=True)
class HomotopyField:
    """Coordinate field of a homotopy on a triangulated rational grid.

    ``values[a][b]`` is the value at (s_breaks[a], t_breaks[b]).  Each cell
    is split into two triangles along the diagonal from its lower-left to
    its upper-right corner; the field is affine on every triangle and
    continuous by shared vertex values.  A triangle whose three vertex
    values vanish is rejected: its zero set would be two-dimensional.
    """

    s_breaks: tuple[Fraction, ...]
    t_breaks: tuple[Fraction, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        s = tuple(Fraction(v) for v in self.s_breaks)
        t = tuple(Fraction(v) for v in self.t_breaks)
        vals = tuple(tuple(Fraction(v) for v in row) for row in self.values)
        for breaks in (s, t):
            if len(breaks) < 2 or breaks[0] != 0 or breaks[-1] != 1:
                raise ValueError("grid breaks must span [0, 1]")
            if any(not a < b for a, b in zip(breaks, breaks[1:])):
                raise ValueError("grid breaks must be strictly increasing")
        if len(vals) != len(s) or any(len(row) != len(t) for row in vals):
            raise ValueError("value grid does not match the breaks")
        object.__setattr__(self, "s_breaks", s)
        object.__setattr__(self, "t_breaks", t)
        object.__setattr__(self, "values", vals)
        for tri in _triangles(self):
            if all(v == 0 for _, v in tri):
                corners = ", ".join(f"({p[0]}, {p[1]})" for p, _ in tri)
                raise ZeroPlateau2D(f"triangle {corners} is identically zero")

    def value_at(self, s: Fraction, t: Fraction) -> Fraction:
        s, t = Fraction(s), Fraction(t)
        a = _cell_index(self.s_breaks, s)
        b = _cell_index(self.t_breaks, t)
        s0, s1 = self.s_breaks[a], self.s_breaks[a + 1]
        t0, t1 = self.t_breaks[b], self.t_breaks[b + 1]
        fs, ft = (s - s0) / (s1 - s0), (t - t0) / (t1 - t0)
        v00, v01 = self.values[a][b], self.values[a][b + 1]
        v10, v11 = self.values[a + 1][b], self.values[a + 1][b + 1]
        if ft <= fs:  # lower triangle: (s0,t0), (s1,t0), (s1,t1)
            return v00 + (v10 - v00) * fs + (v11 - v10) * ft
        return v00 + (v01 - v00) * ft + (v11 - v01) * fs

    def bottom_path(self) -> PLPath:
        return PLPath(tuple((s, self.values[a][0]) for a, s in enumerate(self.s_breaks)))

    def top_path(self) -> PLPath:
        return PLPath(tuple((s, self.values[a][-1]) for a, s in enumerate(self.s_breaks)))


def _cell_index(breaks: tuple[Fraction, ...], v: Fraction) -> int:
    if not breaks[0] <= v <= breaks[-1]:
        raise ValueError(f"{v} outside the grid")
    for i in range(len(breaks) - 1):
        if v < breaks[i + 1]:
            return i
    return len(breaks) - 2


Node = tuple[Fraction, Fraction]
Triangle = tuple[tuple[Node, Fraction], tuple[Node, Fraction], tuple[Node, Fraction]]


def _triangles(field: HomotopyField) -> Iterator[Triangle]:
    """All triangles in deterministic order: cells row by row, lower then upper."""
    s, t, vals = field.s_breaks, field.t_breaks, field.values
    for a in range(len(s) - 1):
        for b in range(len(t) - 1):
            n00, n10 = (s[a], t[b]), (s[a + 1], t[b])
            n01, n11 = (s[a], t[b + 1]), (s[a + 1], t[b + 1])
            v00, v10 = vals[a][b], vals[a + 1][b]
            v01, v11 = vals[a][b + 1], vals[a + 1][b + 1]
            yield ((n00, v00), (n10, v10), (n11, v11))
            yield ((n00, v00), (n11, v11), (n01, v01))


def make_merging_field() -> HomotopyField:
    """The two-crossing field whose zero set merges both zero times.

    Bottom edge is the double-dip path through (0, 3/16), (1/4, 0),
    (1/2, -1/16), (3/4, 0), (1, 3/16); the field adds t/8, so the top edge
    is strictly positive and the zero set is a single arc joining the
    bottom zero times 1/4 and 3/4 with apex (1/2, 1/2).
    """
    f0 = {
        Fraction(0): Fraction(3, 16),
        Fraction(1, 4): Fraction(0),
        Fraction(1, 2): Fraction(-1, 16),
        Fraction(3, 4): Fraction(0),
        Fraction(1): Fraction(3, 16),
    }
    s_breaks = tuple(f0)
    t_breaks = (Fraction(0), Fraction(1))
    values = tuple(tuple(f0[s] + t / 8 for t in t_breaks) for s in s_breaks)
    return HomotopyField(s_breaks=s_breaks, t_breaks=t_breaks, values=values)


@dataclass(frozen=True)
class ZeroSegment:
    """Exact zero segment of one triangle; a == b marks a single touch point."""

    a: Node
    b: Node


@dataclass(frozen=True)
class ZeroComponent:
    index: int
    segments: tuple[int, ...]
    bottom_touches: tuple[Fraction, ...]


@dataclass(frozen=True)
class ZeroSetComplex:
    """Zero set of a field as segments plus endpoint-identified components."""

    segments: tuple[ZeroSegment, ...]
    components: tuple[ZeroComponent, ...]

    def component_of_touch(self, s: Fraction) -> Optional[int]:
        for comp in self.components:
            if s in comp.bottom_touches:
                return comp.index
        return None


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:  # path compression
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def _edge_zero(p: Node, vp: Fraction, q: Node, vq: Fraction) -> Node:
    """Exact zero of the affine function on the edge p-q (signs must differ)."""
    lam = vp / (vp - vq)
    return (p[0] + lam * (q[0] - p[0]), p[1] + lam * (q[1] - p[1]))


def _triangle_zero_segment(tri: Triangle) -> Optional[ZeroSegment]:
    zeros = [p for p, v in tri if v == 0]
    pos = [(p, v) for p, v in tri if v > 0]
    neg = [(p, v) for p, v in tri if v < 0]
    if len(zeros) == 3:
        raise ZeroPlateau2D("triangle is identically zero")
    if len(zeros) == 2:
        return ZeroSegment(zeros[0], zeros[1])
    if len(zeros) == 1:
        if pos and neg:
            q = _edge_zero(pos[0][0], pos[0][1], neg[0][0], neg[0][1])
            return ZeroSegment(zeros[0], q)
        return ZeroSegment(zeros[0], zeros[0])  # single touch point
    if pos and neg:
        single, others = (pos[0], neg) if len(pos) == 1 else (neg[0], pos)
        a = _edge_zero(single[0], single[1], others[0][0], others[0][1])
        b = _edge_zero(single[0], single[1], others[1][0], others[1][1])
        return ZeroSegment(a, b)
    return None


def extract_zero_set(field: HomotopyField) -> ZeroSetComplex:
    """Per-triangle zero segments with exact endpoints, grouped into components.

    Adjacent triangles share their zero crossings exactly, so identifying
    equal endpoints with a union-find recovers the connected components of
    the zero set; no tolerance is involved.
    """
    segments: list[ZeroSegment] = []
    for tri in _triangles(field):
        seg = _triangle_zero_segment(tri)
        if seg is not None:
            segments.append(seg)
    uf = _UnionFind()
    for seg in segments:
        uf.union(seg.a, seg.b)
    roots: dict[Node, list[int]] = {}
    order: list[Node] = []
    for idx, seg in enumerate(segments):
        root = uf.find(seg.a)
        if root not in roots:
            roots[root] = []
            order.append(root)
        roots[root].append(idx)
    components = []
    for comp_idx, root in enumerate(order):
        members = roots[root]
        touches = sorted(
            {
                end[0]
                for idx in members
                for end in (segments[idx].a, segments[idx].b)
                if end[1] == 0
            }
        )
        components.append(
            ZeroComponent(index=comp_idx, segments=tuple(members), bottom_touches=tuple(touches))
        )
    return ZeroSetComplex(segments=tuple(segments), components=tuple(components))


# ---------------------------------------------------------------------------
# Homotopy lifting


@dataclass(frozen=True)
class LiftsEnumerated:
    """All admissible per-component origin assignments, lexicographically."""

    assignments: tuple[tuple[tuple[int, int], ...], ...]  # ((component, origin), ...)
    note: str


@dataclass(frozen=True)
class NoLift:
    """Conflict certificate: one component meets incompatible boundary origins.

    ``component`` indexes the zero-set component carrying the conflict;
    None marks the global-constancy rule, which treats the whole zero set
    as one component.
    """

    component: Optional[int]
    constraints: tuple[tuple[Fraction, int], ...]
    note: str


@dataclass(frozen=True)
class NonUniqueExistence:
    """Ball-model outcome: lifts exist and are wildly non-unique."""

    component_count: int
    count_formula: str
    note: str


LiftCertificate = Union[LiftsEnumerated, NoLift, NonUniqueExistence]

_CHART_JUSTIFICATION = (
    "the chart of one origin contains no other origin, so a continuous origin "
    "assignment is constant along every connected zero component"
)
_BALL_JUSTIFICATION = (
    "the origin set has pseudometric diameter zero, so every pointwise origin "
    "assignment on the zero set yields a continuous lift"
)
_CONSTANCY_JUSTIFICATION = (
    "the constancy rule treats any origin-valued map as constant across the whole "
    "zero set, so incompatible boundary origins leave no lift"
)


def attempt_homotopy_lift(
    field: HomotopyField,
    bottom_assignment: dict[Fraction, int],
    cfg: SpaceConfig,
    paper_constancy: bool = False,
) -> LiftCertificate:
    """Decide whether the boundary origin assignment extends over the field.

    The regular part of any lift is forced; only the origin choices on the
    zero set are in question.  The assignment must be defined exactly on
    the zero times of the bottom edge.
    """
    bottom = field.bottom_path()
    zts = zero_times(bottom)
    assignment = {Fraction(t): int(i) for t, i in bottom_assignment.items()}
    if set(assignment) != set(zts):
        raise AssignmentDomainMismatch(
            f"assignment domain {sorted(assignment)} != zero times {zts}"
        )
    for origin in assignment.values():
        if not 1 <= origin <= cfg.k:
            raise IndexOutOfRange(f"origin {origin} not in 1..{cfg.k}")
    complex_ = extract_zero_set(field)

    if cfg.model is TopologyModel.PSEUDOMETRIC:
        if not paper_constancy:
            return NonUniqueExistence(
                component_count=len(complex_.components),
                count_formula=f"{cfg.k}^{len(complex_.components)} component-constant "
                "assignments; arbitrary pointwise assignments lift as well",
                note=_BALL_JUSTIFICATION,
            )
        distinct = sorted(set(assignment.values()))
        if len(distinct) > 1:
            return NoLift(
                component=None,
                constraints=tuple(sorted(assignment.items())),
                note=_CONSTANCY_JUSTIFICATION,
            )
        forced = distinct[0] if distinct else None
        options = [forced] if forced is not None else list(range(1, cfg.k + 1))
        if complex_.components:
            assignments = tuple(
                tuple((comp.index, origin) for comp in complex_.components)
                for origin in options
            )
        else:
            assignments = ((),)
        return LiftsEnumerated(
            assignments=assignments,
            note=_CONSTANCY_JUSTIFICATION,
        )

    per_component: list[list[int]] = []
    for comp in complex_.components:
        constrained = sorted({assignment[s] for s in comp.bottom_touches})
        if len(constrained) > 1:
            return NoLift(
                component=comp.index,
                constraints=tuple((s, assignment[s]) for s in comp.bottom_touches),
                note=_CHART_JUSTIFICATION,
            )
        per_component.append(constrained if constrained else list(range(1, cfg.k + 1)))
    assignments = tuple(
        tuple((comp.index, origin) for comp, origin in zip(complex_.components, combo))
        for combo in itertools.product(*per_component)
    )
    return LiftsEnumerated(assignments=assignments, note=_CHART_JUSTIFICATION)


@dataclass(frozen=True)
class HomotopyLiftRecord:
    """Self-contained certificate: inputs plus the lifting outcome."""

    field: HomotopyField
    assignment: tuple[tuple[Fraction, int], ...]
    model: str
    paper_constancy: bool
    result: LiftCertificate


def homotopy_lift_record(
    field: HomotopyField,
    bottom_assignment: dict[Fraction, int],
    cfg: SpaceConfig,
    paper_constancy: bool = False,
) -> HomotopyLiftRecord:
    result = attempt_homotopy_lift(field, bottom_assignment, cfg, paper_constancy)
    return HomotopyLiftRecord(
        field=field,
        assignment=tuple(sorted((Fraction(t), int(i)) for t, i in bottom_assignment.items())),
        model=cfg.model.value,
        paper_constancy=paper_constancy,
        result=result,
    )


def recheck_homotopy_record(record: HomotopyLiftRecord, k: int) -> list[str]:
    """Re-run the component computation and compare with the recorded outcome."""
    cfg = SpaceConfig(k, TopologyModel(record.model))
    result = attempt_homotopy_lift(
        record.field, dict(record.assignment), cfg, record.paper_constancy
    )
    failures = []
    if result != record.result:
        failures.append("recomputed lifting outcome differs from the recorded one")
    if isinstance(record.result, NoLift):
        origins = {origin for _, origin in record.result.constraints}
        if len(origins) < 2:
            failures.append("conflict certificate lacks two distinct required origins")
    return failures
