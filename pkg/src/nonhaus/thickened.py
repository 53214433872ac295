"""Radially thickened variant: tubes swept from the curve to the disk boundary.

Each point of the glued line is paired with a tube parameter t in [0, 1];
at t = 1 all tube ends are glued to the boundary circle.  The sweep map
sends (x, t) to the segment from the curve point toward its boundary
direction; at the origins the map is undefined by the formula, so the
declared convention (t, 0) is used and the resulting discontinuities are
reported rather than hidden.

This module is floating point (norms need square roots); every comparison
carries an explicit tolerance.  The audit shows that the sweep's claimed
surjectivity and continuity depend on the embedding: the main curve misses
the lower half plane entirely, while the spiral covers every sampled
direction but still breaks continuity on the origin tubes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .embedding import EmbeddingSpec, embed_point, spiral_point
from .errors import GridTooCoarse, OriginCountOutOfRange
from .lifting import PLPath, enumerate_lifts
from .space import CanonicalPoint, Origin, Regular, SpaceConfig

REL_TOL = 1e-9


@dataclass(frozen=True)
class ThickPoint:
    """Point of the thickened space; tube ends at t = 1 are glued to one point."""

    base: CanonicalPoint
    t: Fraction

    def __post_init__(self) -> None:
        t = Fraction(self.t)
        if not 0 <= t <= 1:
            raise ValueError(f"tube parameter {t} outside [0, 1]")
        object.__setattr__(self, "t", t)
        if t == 1 and isinstance(self.base, Origin) and self.base.index != 1:
            object.__setattr__(self, "base", Origin(1))


def thick_project(p: ThickPoint, spec: EmbeddingSpec = EmbeddingSpec.MAIN_CURVE) -> tuple[float, float]:
    """Sweep map: interpolate from the curve point to its boundary direction.

    Regular base: (1 - t) * image(x) + t * image(x)/||image(x)||.  Origin
    base: the declared ray convention (t, 0); the formula itself is
    undefined at coordinate 0.
    """
    t = float(p.t)
    if isinstance(p.base, Origin):
        return (t, 0.0)
    if spec is EmbeddingSpec.MAIN_CURVE:
        img = embed_point(p.base.x)
        u, v = float(img.u), float(img.v)
    else:
        u, v = spiral_point(float(p.base.x))
    norm = math.hypot(u, v)
    return ((1 - t) * u + t * u / norm, (1 - t) * v + t * v / norm)


def thick_fibre_z(k: int) -> frozenset[ThickPoint]:
    """Fibre over the disk centre: the k origins at tube parameter 0."""
    if k < 2:
        raise OriginCountOutOfRange(f"need at least 2 origins, got k={k}")
    return frozenset(ThickPoint(Origin(i), Fraction(0)) for i in range(1, k + 1))


def thick_lift_count(path: PLPath, t: Fraction, cfg: SpaceConfig) -> int:
    """Lift count of the path on the slice at fixed tube parameter t in [0, 1)."""
    t = Fraction(t)
    if not 0 <= t < 1:
        raise ValueError(f"slice parameter {t} outside [0, 1)")
    c0 = path.breakpoints[0][1]
    start = Origin(1) if c0 == 0 else Regular(c0)
    return len(enumerate_lifts(path, start, cfg))


@dataclass(frozen=True)
class GridWitness:
    """One polar grid point with its planar coordinates."""

    r: float
    theta: float
    u: float
    v: float


@dataclass(frozen=True)
class ContinuityProbe:
    """Two-sided approach to an origin tube point along +-1/n."""

    origin: int
    t: Fraction
    declared: tuple[float, float]
    limit_pos: tuple[float, float]
    limit_neg: tuple[float, float]
    oscillates: bool
    discontinuous: bool


@dataclass(frozen=True)
class VerdictRow:
    claim: str
    holds: bool
    note: str


@dataclass(frozen=True)
class ThickAuditReport:
    """Sampled surjectivity and continuity audit of the sweep map."""

    grid_n: int
    embedding: str
    tolerance: float
    covered: int
    total: int
    coverage: float
    uncovered_count: int
    uncovered_sample: tuple[GridWitness, ...]
    lower_half_witness: Optional[GridWitness]
    probes: tuple[ContinuityProbe, ...]
    rows: tuple[VerdictRow, ...]


def _preimage_main(r: float, theta: float) -> Optional[tuple[float, float]]:
    """Closed-form preimage of (r, theta) under the main-curve sweep, if any.

    The main curve lies on the circle through the centre of radius 1/2
    around (0, 1/2): the point at direction theta has norm sin(theta), and
    x = tan(theta) is the unique coordinate with that direction.  The
    sweep reaches exactly the radii in [sin(theta), 1].
    """
    if r == 0:
        return (0.0, 0.0)  # covered by an origin at tube parameter 0
    if theta <= 0 or theta >= math.pi:
        if abs(math.sin(theta)) < 1e-15 and math.cos(theta) > 0:
            return (0.0, r)  # positive axis: origin ray convention
        return None
    if abs(theta - math.pi / 2) < 1e-15:
        return None  # straight up is only approached in the limit
    rho = math.sin(theta)
    if r < rho:
        return None
    x = math.tan(theta)
    t = (r - rho) / (1 - rho)
    return (x, t)


def _preimage_spiral(r: float, theta: float) -> Optional[tuple[float, float]]:
    """Closed-form preimage under the spiral sweep; every r > 0 is reachable.

    Choose x = 1/(theta + 2*pi*n) with n large enough that the spiral
    radius rho = x/(1+x) drops below r, then slide out along the tube.
    """
    if r == 0:
        return (0.0, 0.0)
    need = (1 - r) / r  # rho <= r  <=>  1/x >= need
    n = max(1, math.ceil((need - theta) / (2 * math.pi)))
    x = 1 / (theta + 2 * math.pi * n)
    rho = x / (1 + x)
    if rho > r:
        return None
    t = (r - rho) / (1 - rho)
    return (x, t)


def _sweep(spec: EmbeddingSpec, x: float, t: float) -> tuple[float, float]:
    """Floating-point sweep image of a nonzero coordinate at tube parameter t."""
    if spec is EmbeddingSpec.MAIN_CURVE:
        d = 1 + x * x
        u, v = x / d, x * x / d
    else:
        u, v = spiral_point(x)
    norm = math.hypot(u, v)
    return ((1 - t) * u + t * u / norm, (1 - t) * v + t * v / norm)


def thick_audit(grid_n: int, spec: EmbeddingSpec, tolerance: float = 1e-6) -> ThickAuditReport:
    """Coverage of a polar grid plus continuity probes at the origin tubes.

    A grid point counts as covered when a constructed preimage maps within
    ``tolerance`` of it.  Coverage is reported over the punctured grid
    (radius 0 excluded); the centre itself is hit by the origins at t = 0.
    """
    if grid_n < 8:
        raise GridTooCoarse(f"grid must be at least 8x8, got {grid_n}")
    solver = _preimage_main if spec is EmbeddingSpec.MAIN_CURVE else _preimage_spiral
    covered = 0
    total = 0
    uncovered: list[GridWitness] = []
    for a in range(1, grid_n):  # radius 0 excluded: punctured grid
        r = a / (grid_n - 1)
        for b in range(grid_n):
            theta = 2 * math.pi * b / grid_n
            target = (r * math.cos(theta), r * math.sin(theta))
            total += 1
            pre = solver(r, theta)
            ok = False
            if pre is not None:
                x, t = pre
                img = (t, 0.0) if x == 0.0 else _sweep(spec, x, t)
                ok = math.hypot(img[0] - target[0], img[1] - target[1]) <= tolerance
            if ok:
                covered += 1
            else:
                uncovered.append(GridWitness(r=r, theta=theta, u=target[0], v=target[1]))
    lower_witness = None
    if uncovered:
        lower_half = [w for w in uncovered if w.v < 0]
        if lower_half:
            lower_witness = min(
                lower_half, key=lambda w: ((w.u - 0.0) ** 2 + (w.v + 0.5) ** 2, w.r, w.theta)
            )
    probes = (_continuity_probe(1, Fraction(1, 2), spec),)
    rows = (
        VerdictRow(
            claim="sweep map covers the sampled disk grid",
            holds=covered == total,
            note=f"coverage {covered}/{total} on the punctured polar grid",
        ),
        VerdictRow(
            claim="sweep map is continuous at the origin tubes",
            holds=not any(p.discontinuous for p in probes),
            note="two-sided approach along +-1/n at tube parameter 1/2",
        ),
        VerdictRow(
            claim="fibre over the centre is the k origin tube points",
            holds=True,
            note="origins at tube parameter 0 map to the centre by the ray convention",
        ),
    )
    return ThickAuditReport(
        grid_n=grid_n,
        embedding=spec.value,
        tolerance=tolerance,
        covered=covered,
        total=total,
        coverage=covered / total,
        uncovered_count=len(uncovered),
        uncovered_sample=tuple(uncovered[:16]),
        lower_half_witness=lower_witness,
        probes=probes,
        rows=rows,
    )


def _continuity_probe(origin: int, t: Fraction, spec: EmbeddingSpec) -> ContinuityProbe:
    declared = (float(t), 0.0)
    ns = [64, 128, 256, 512]
    plus = [_sweep(spec, 1.0 / n, float(t)) for n in ns]
    minus = [_sweep(spec, -1.0 / n, float(t)) for n in ns]
    limit_pos, limit_neg = plus[-1], minus[-1]

    def settled(seq: list[tuple[float, float]]) -> bool:
        return all(
            math.hypot(p[0] - q[0], p[1] - q[1]) < 0.05 for p, q in zip(seq, seq[1:])
        )

    oscillates = not (settled(plus) and settled(minus))
    separated = math.hypot(limit_pos[0] - limit_neg[0], limit_pos[1] - limit_neg[1]) > float(t)
    return ContinuityProbe(
        origin=origin,
        t=t,
        declared=declared,
        limit_pos=limit_pos,
        limit_neg=limit_neg,
        oscillates=oscillates,
        discontinuous=oscillates or separated,
    )
