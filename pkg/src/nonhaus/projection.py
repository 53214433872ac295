"""The projection from the glued line onto the base curve, and its certificates.

The projection sends a regular point to the base point with the same
coordinate and every origin to the accumulation point.  It is one-sheeted
over the regular locus; the whole failure of the covering axioms happens
over the accumulation point, whose fibre is the full origin set.

Certificates produced here are plain data: each can be re-checked from
scratch with :func:`nonhaus.space.open_contains` and :func:`fibre`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .embedding import ACCUMULATION, BasePoint
from .errors import (
    EqualIndices,
    IndexOutOfRange,
    NonpositiveRadius,
    SingularPoint,
)
from .space import (
    BasicOpen,
    CanonicalPoint,
    InseparabilityRule,
    Origin,
    Regular,
    SpaceConfig,
    TopologyModel,
    basic_open,
    coord,
    open_contains,
)


def project(p: CanonicalPoint) -> BasePoint:
    """Coordinate projection; all origins land on the accumulation point."""
    return BasePoint(coord(p))


def fibre(y: BasePoint, cfg: SpaceConfig) -> frozenset[CanonicalPoint]:
    """Preimage of a base point: k origins over the accumulation point, else a singleton."""
    if y.is_accumulation:
        return frozenset(Origin(i) for i in range(1, cfg.k + 1))
    return frozenset({Regular(y.x)})


def regular_inverse(y: BasePoint) -> CanonicalPoint:
    """The unique preimage over the regular locus."""
    if y.is_accumulation:
        raise SingularPoint("the fibre over the accumulation point has more than one point")
    return Regular(y.x)


@dataclass(frozen=True)
class PairWitness:
    """Inseparability of one origin pair inside the preimage of the window.

    ``common`` is the rule evaluated at radii (eps, eps); it lies in the
    basic open of either origin and projects into the window.
    """

    i: int
    j: int
    rule: InseparabilityRule
    common: Regular
    open_i: BasicOpen
    open_j: BasicOpen


@dataclass(frozen=True)
class EvenCoverFailure:
    """Certificate that no window around the accumulation point is evenly covered.

    The three-step conclusion mirrors the fibre/inseparability argument:
    the full fibre sits inside the preimage of the window; pairwise
    inseparability forces any disjoint open family to put all origins in
    one member; that member then contains k preimages of one base point,
    so no member maps injectively onto the window.
    """

    k: int
    model: str
    eps: Fraction
    fibre: tuple[CanonicalPoint, ...]
    witnesses: tuple[PairWitness, ...]
    conclusion: tuple[str, str, str]


_EVEN_COVER_CONCLUSION = (
    "the fibre over the accumulation point has k points, all inside the preimage of the window",
    "for every origin pair, the recorded common point lies in both basic opens, so no disjoint "
    "open family can split the origins between members",
    "the member containing the origins contains k preimages of the accumulation point, so it "
    "cannot map injectively onto the window",
)


def even_cover_certificate(eps: Fraction, cfg: SpaceConfig) -> EvenCoverFailure:
    """Build the even-covering failure certificate for the window (-eps, eps)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveRadius(f"window radius must be positive, got {eps}")
    origins = [Origin(i) for i in range(1, cfg.k + 1)]
    witnesses = []
    for a in range(len(origins)):
        for b in range(a + 1, len(origins)):
            rule = InseparabilityRule(origins[a].index, origins[b].index)
            witnesses.append(
                PairWitness(
                    i=origins[a].index,
                    j=origins[b].index,
                    rule=rule,
                    common=rule.common_point(eps, eps),
                    open_i=basic_open(origins[a], eps, cfg),
                    open_j=basic_open(origins[b], eps, cfg),
                )
            )
    return EvenCoverFailure(
        k=cfg.k,
        model=cfg.model.value,
        eps=eps,
        fibre=tuple(origins),
        witnesses=tuple(witnesses),
        conclusion=_EVEN_COVER_CONCLUSION,
    )


def recheck_even_cover(cert: EvenCoverFailure) -> list[str]:
    """Re-derive every component of the certificate; returns failure messages."""
    failures: list[str] = []
    cfg = SpaceConfig(cert.k, TopologyModel(cert.model))
    expected_fibre = fibre(ACCUMULATION, cfg)
    if frozenset(cert.fibre) != expected_fibre or len(cert.fibre) != cert.k:
        failures.append("fibre record does not match the fibre over the accumulation point")
    if len(cert.witnesses) != cert.k * (cert.k - 1) // 2:
        failures.append("missing origin-pair witnesses")
    for w in cert.witnesses:
        if w.common != w.rule.common_point(cert.eps, cert.eps):
            failures.append(f"witness ({w.i},{w.j}): common point disagrees with the rule")
        if not (open_contains(w.open_i, w.common) and open_contains(w.open_j, w.common)):
            failures.append(f"witness ({w.i},{w.j}): common point escapes one of the opens")
        if not abs(coord(w.common)) < cert.eps:
            failures.append(f"witness ({w.i},{w.j}): common point projects outside the window")
    return failures


@dataclass(frozen=True)
class OriginJoinPath:
    """PL path inside the preimage of the window joining two origins.

    Breakpoints are (time, point) pairs; the coordinate interpolates
    linearly between them, so every interior point stays inside the
    preimage of the window as well.
    """

    eps: Fraction
    breakpoints: tuple[tuple[Fraction, CanonicalPoint], ...]

    @property
    def start(self) -> CanonicalPoint:
        return self.breakpoints[0][1]

    @property
    def end(self) -> CanonicalPoint:
        return self.breakpoints[-1][1]


def preimage_connected_certificate(eps: Fraction, cfg: SpaceConfig) -> list[OriginJoinPath]:
    """Chain of PL paths joining consecutive origins through one regular point.

    Each path runs origin i -> regular eps/2 -> origin i+1; all breakpoint
    coordinates have absolute value below eps, so the whole chain stays in
    the preimage of the window.  This witnesses that the preimage cannot
    split into disjoint sheets.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveRadius(f"window radius must be positive, got {eps}")
    via = Regular(eps / 2)
    paths = []
    for i in range(1, cfg.k):
        paths.append(
            OriginJoinPath(
                eps=eps,
                breakpoints=(
                    (Fraction(0), Origin(i)),
                    (Fraction(1, 2), via),
                    (Fraction(1), Origin(i + 1)),
                ),
            )
        )
    return paths


def recheck_origin_join(paths: list[OriginJoinPath], cfg: SpaceConfig) -> list[str]:
    failures: list[str] = []
    for n, path in enumerate(paths):
        if not (isinstance(path.start, Origin) and isinstance(path.end, Origin)):
            failures.append(f"path {n}: endpoints are not origins")
            continue
        if path.start.index + 1 != path.end.index:
            failures.append(f"path {n}: does not join consecutive origins")
        for t, p in path.breakpoints:
            if not abs(coord(p)) < path.eps:
                failures.append(f"path {n}: breakpoint at t={t} leaves the window preimage")
    expected = cfg.k - 1
    if len(paths) != expected:
        failures.append(f"expected {expected} joining paths, got {len(paths)}")
    return failures


@dataclass(frozen=True)
class SectionWitness:
    """Two sections over the window that agree off the accumulation point.

    Both send a nonzero coordinate x to the regular point x; at the
    accumulation point one picks origin i, the other origin j.  Sampled
    agreement plus the disagreement at the accumulation point witnesses
    that the stalk there is not separated.
    """

    i: int
    j: int
    eps: Fraction
    samples: tuple[Fraction, ...]
    agreement_locus: str
    disagreement: tuple[CanonicalPoint, CanonicalPoint]

    def section_value(self, which: int, y: BasePoint) -> CanonicalPoint:
        if y.is_accumulation:
            return Origin(which)
        return Regular(y.x)


def section_witness(eps: Fraction, i: int, j: int, cfg: SpaceConfig) -> SectionWitness:
    """Build the two-section witness; sampling points fixed at +-eps/2, +-eps/4."""
    eps = Fraction(eps)
    if eps <= 0:
        raise NonpositiveRadius(f"window radius must be positive, got {eps}")
    if i == j:
        raise EqualIndices("the two sections must pick distinct origins")
    for idx in (i, j):
        if not 1 <= idx <= cfg.k:
            raise IndexOutOfRange(f"origin {idx} not in 1..{cfg.k}")
    samples = (-eps / 2, -eps / 4, eps / 4, eps / 2)
    return SectionWitness(
        i=i,
        j=j,
        eps=eps,
        samples=samples,
        agreement_locus=f"every nonzero coordinate of the window (-{eps}, {eps})",
        disagreement=(Origin(i), Origin(j)),
    )


def recheck_section_witness(w: SectionWitness) -> list[str]:
    failures: list[str] = []
    if w.i == w.j:
        failures.append("section indices coincide")
    for x in w.samples:
        y = BasePoint(x)
        vi, vj = w.section_value(w.i, y), w.section_value(w.j, y)
        if vi != vj:
            failures.append(f"sections disagree at coordinate {x} off the accumulation point")
        if project(vi) != y or project(vj) != y:
            failures.append(f"section value at {x} does not project back")
    vi, vj = w.section_value(w.i, ACCUMULATION), w.section_value(w.j, ACCUMULATION)
    if vi == vj:
        failures.append("sections fail to disagree at the accumulation point")
    if w.disagreement != (vi, vj):
        failures.append("recorded disagreement pair does not match the sections")
    if project(vi) != ACCUMULATION or project(vj) != ACCUMULATION:
        failures.append("section value at the accumulation point does not project back")
    return failures
