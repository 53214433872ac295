"""Deck transformations and loop classification over the glued origins.

A deck transformation commutes with the projection.  The projection is
injective off the origins, so a deck transformation fixes every regular
point and can only permute the origins; every permutation works, giving a
group of order k!.  :func:`deck_rigidity` encodes the rejection rule for
candidates that move a regular point.

Loops are classified by their crossing word: one letter per sign-changing
passage through coordinate 0, carrying the origin label of the passage.
In the chart model, a downward and an upward crossing can only be merged
by a homotopy whose zero-set component is labeled by one common origin,
so adjacent same-origin letters cancel and nothing else does.  In the
ball model any origin relabeling is free, so every loop class is empty.
:func:`contract_loop` realizes empty classes by an explicit staged
homotopy, each stage accepted by the homotopy-lifting engine.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    IndexOutOfRange,
    NotNullhomotopic,
    OriginCountOutOfRange,
    UnlabeledZeroTime,
)
from .lifting import (
    HomotopyField,
    LiftCertificate,
    NoLift,
    PLPath,
    attempt_homotopy_lift,
    zero_times,
)
from .projection import project
from .space import (
    CanonicalPoint,
    Origin,
    Regular,
    SpaceConfig,
    TopologyModel,
    pseudo_dist,
)


@dataclass(frozen=True)
class DeckElement:
    """A permutation of the origin indices 1..k, given by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise IndexOutOfRange(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def k(self) -> int:
        return len(self.images)

    def apply(self, i: int) -> int:
        if not 1 <= i <= self.k:
            raise IndexOutOfRange(f"origin {i} not in 1..{self.k}")
        return self.images[i - 1]

    def compose(self, other: "DeckElement") -> "DeckElement":
        """self after other: (self * other)(i) = self(other(i))."""
        if self.k != other.k:
            raise IndexOutOfRange("cannot compose permutations of different degree")
        return DeckElement(tuple(self.apply(other.apply(i)) for i in range(1, self.k + 1)))

    def inverse(self) -> "DeckElement":
        inv = [0] * self.k
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return DeckElement(tuple(inv))

    @classmethod
    def identity(cls, k: int) -> "DeckElement":
        return cls(tuple(range(1, k + 1)))


def deck_apply(g: DeckElement, p: CanonicalPoint) -> CanonicalPoint:
    """Permute origins, fix regular points (they are label-free)."""
    if isinstance(p, Origin):
        return Origin(g.apply(p.index))
    return p


def default_samples(k: int) -> tuple[CanonicalPoint, ...]:
    origins = tuple(Origin(i) for i in range(1, k + 1))
    return origins + (Regular(1), Regular(-1), Regular(Fraction(5, 2)))


@dataclass(frozen=True)
class DeckReport:
    """Exact sample checks: commutes with projection, isometry, invertible."""

    k: int
    sample_count: int
    projection_ok: bool
    isometry_ok: bool
    inverse_ok: bool


def deck_verify(g: DeckElement, samples: Optional[list[CanonicalPoint]] = None) -> DeckReport:
    pts = list(samples) if samples is not None else list(default_samples(g.k))
    ginv = g.inverse()
    projection_ok = all(project(deck_apply(g, p)) == project(p) for p in pts)
    isometry_ok = all(
        pseudo_dist(deck_apply(g, p), deck_apply(g, q)) == pseudo_dist(p, q)
        for p in pts
        for q in pts
    )
    inverse_ok = all(deck_apply(ginv, deck_apply(g, p)) == p for p in pts)
    return DeckReport(
        k=g.k,
        sample_count=len(pts),
        projection_ok=projection_ok,
        isometry_ok=isometry_ok,
        inverse_ok=inverse_ok,
    )


@dataclass(frozen=True)
class DeckGroupTable:
    """All k! deck elements with their composition table.

    ``table[i][j]`` indexes the element elements[i] * elements[j].  The
    homomorphism check confirms pointwise that applying elements[j] then
    elements[i] equals applying their composition; faithfulness holds
    because distinct permutations move some origin differently.
    """

    k: int
    elements: tuple[DeckElement, ...]
    table: tuple[tuple[int, ...], ...]
    homomorphism_ok: bool
    faithful_ok: bool
    noncommuting_pair: Optional[tuple[int, int]]


def _compose_images(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    # image tuple of g after h, composing raw tuples (hot path for k! x k! tables)
    return tuple(g[h[i] - 1] for i in range(len(g)))


def deck_group(k: int) -> DeckGroupTable:
    if not 2 <= k <= 6:
        raise OriginCountOutOfRange(f"group table supported for 2 <= k <= 6, got {k}")
    elements = tuple(DeckElement(perm) for perm in itertools.permutations(range(1, k + 1)))
    index = {g.images: i for i, g in enumerate(elements)}
    table = tuple(
        tuple(index[_compose_images(g.images, h.images)] for h in elements) for g in elements
    )
    samples = default_samples(k)
    if k <= 4:
        pairs = [(g, h) for g in elements for h in elements]
    else:
        rng = random.Random(k)
        pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(100)]
    homomorphism_ok = all(
        deck_apply(g, deck_apply(h, p)) == deck_apply(g.compose(h), p)
        for g, h in pairs
        for p in samples
    )
    faithful_ok = len({g.images for g in elements}) == math.factorial(k)
    noncommuting = None
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            if g.compose(h) != h.compose(g):
                noncommuting = (i, j)
                break
        if noncommuting:
            break
    return DeckGroupTable(
        k=k,
        elements=elements,
        table=table,
        homomorphism_ok=homomorphism_ok,
        faithful_ok=faithful_ok,
        noncommuting_pair=noncommuting,
    )


def recheck_deck_group(tbl: DeckGroupTable) -> list[str]:
    failures: list[str] = []
    if len(tbl.elements) != math.factorial(tbl.k):
        failures.append(f"expected {math.factorial(tbl.k)} elements")
    index = {g.images: i for i, g in enumerate(tbl.elements)}
    for i, g in enumerate(tbl.elements):
        for j, h in enumerate(tbl.elements):
            if tbl.table[i][j] != index[_compose_images(g.images, h.images)]:
                failures.append(f"composition table wrong at ({i}, {j})")
                return failures
    if not (tbl.homomorphism_ok and tbl.faithful_ok):
        failures.append("recorded verification flags are not all set")
    return failures


@dataclass(frozen=True)
class RigidityVerdict:
    """Outcome of the deck-candidate rejection rule.

    A candidate that moves a regular point cannot commute with the
    projection: the recorded witness is the pair of distinct projected
    coordinates.  Pure origin permutations are accepted; every deck
    transformation is of that form, determined by its action on origins.
    """

    accepted: bool
    permutation: DeckElement
    moved_witness: Optional[tuple[Fraction, Fraction]]
    conclusion: str


_RIGIDITY_CONCLUSION = (
    "the projection is injective on the regular locus, so a deck transformation fixes "
    "every regular point and is uniquely determined by its action on the origins"
)


def deck_rigidity(
    permutation: DeckElement,
    moved_regular: tuple[tuple[Fraction, Fraction], ...] = (),
) -> RigidityVerdict:
    """Accept a candidate (origin permutation, regular part) iff the regular part is identity.

    ``moved_regular`` lists claimed moves x -> y of regular points; the
    first genuine move is rejected with the projected coordinates as witness.
    """
    for x, y in moved_regular:
        x, y = Fraction(x), Fraction(y)
        if x != y:
            return RigidityVerdict(
                accepted=False,
                permutation=permutation,
                moved_witness=(x, y),
                conclusion="moving a regular point changes its projection: "
                f"{x} != {y}",
            )
    return RigidityVerdict(
        accepted=True,
        permutation=permutation,
        moved_witness=None,
        conclusion=_RIGIDITY_CONCLUSION,
    )


# ---------------------------------------------------------------------------
# Loops, crossing words, contraction


@dataclass(frozen=True)
class LabeledLoop:
    """PL coordinate loop with an origin label at every zero time."""

    path: PLPath
    labels: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        labels = tuple(sorted((Fraction(t), int(i)) for t, i in self.labels))
        object.__setattr__(self, "labels", labels)
        c0, c1 = self.path.breakpoints[0][1], self.path.breakpoints[-1][1]
        if c0 == 0 or c0 != c1:
            raise ValueError("loop must start and end at one nonzero coordinate")
        zts = zero_times(self.path)
        have = [t for t, _ in labels]
        if have != zts:
            missing = sorted(set(zts) - set(have))
            raise UnlabeledZeroTime(
                f"labels {have} do not match zero times {zts}"
                + (f"; missing {missing}" if missing else "")
            )

    def label_map(self) -> dict[Fraction, int]:
        return dict(self.labels)

    @property
    def basepoint(self) -> Fraction:
        return self.path.breakpoints[0][1]


def probe_loop(first: int, second: int) -> LabeledLoop:
    """Standard probe: down through one origin at t=1/4, up through another at t=3/4."""
    path = PLPath(
        (
            (Fraction(0), Fraction(1)),
            (Fraction(1, 4), Fraction(0)),
            (Fraction(1, 2), Fraction(-1)),
            (Fraction(3, 4), Fraction(0)),
            (Fraction(1), Fraction(1)),
        )
    )
    return LabeledLoop(path=path, labels=((Fraction(1, 4), first), (Fraction(3, 4), second)))


@dataclass(frozen=True)
class Word:
    """Crossing word: (origin index, direction) letters, +1 downward, -1 upward."""

    letters: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True, eq=True)
class ReducedWord(Word):
    """A word with no adjacent same-origin opposite-direction pair."""

    def __post_init__(self) -> None:
        for (i, s), (j, r) in zip(self.letters, self.letters[1:]):
            if i == j and s == -r:
                raise ValueError(f"adjacent cancelling pair at origin {i}")


def crossing_word(loop: LabeledLoop) -> Word:
    """One letter per sign-changing zero passage; touches emit no letter."""
    labels = loop.label_map()
    pts = loop.path.breakpoints
    letters = []
    for idx, (t, x) in enumerate(pts):
        if x != 0:
            continue
        if t not in labels:
            raise UnlabeledZeroTime(f"no origin label at zero time {t}")
        before, after = pts[idx - 1][1], pts[idx + 1][1]
        if before > 0 > after:
            letters.append((labels[t], 1))
        elif before < 0 < after:
            letters.append((labels[t], -1))
    return Word(tuple(letters))


def reduce_word(w: Word) -> ReducedWord:
    """Cancel adjacent same-origin opposite-direction pairs until none remain.

    The stack pass yields the normal form; any cancellation order gives the
    same result (free reduction is confluent).
    """
    stack: list[tuple[int, int]] = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return ReducedWord(tuple(stack))


def loop_class(loop: LabeledLoop, cfg: SpaceConfig) -> ReducedWord:
    """Loop class under the model: crossing word reduced (chart) or empty (ball)."""
    if cfg.model is TopologyModel.PSEUDOMETRIC:
        crossing_word(loop)  # still validates labels and zero times
        return ReducedWord(())
    return reduce_word(crossing_word(loop))


@dataclass(frozen=True)
class ContractionStage:
    """One homotopy stage: a field, its boundary assignment, and the acceptance."""

    kind: str  # "remove-touch" | "remove-crossing-pair" | "straighten"
    field: HomotopyField
    assignment: tuple[tuple[Fraction, int], ...]
    certificate: LiftCertificate
    removed: tuple[Fraction, ...]
    top: PLPath
    top_labels: tuple[tuple[Fraction, int], ...]


@dataclass(frozen=True)
class ContractionCertificate:
    """Chain of accepted stages from the loop to the constant loop."""

    loop: LabeledLoop
    model: str
    stages: tuple[ContractionStage, ...]
    basepoint: Fraction


def _stage_field(path: PLPath, new_values: dict[Fraction, Fraction]) -> HomotopyField:
    """Linear-in-t field from the path (bottom) to the edited path (top)."""
    s_breaks = tuple(t for t, _ in path.breakpoints)
    bottom = {t: x for t, x in path.breakpoints}
    top = dict(bottom)
    top.update(new_values)
    values = tuple((bottom[s], top[s]) for s in s_breaks)
    return HomotopyField(s_breaks=s_breaks, t_breaks=(Fraction(0), Fraction(1)), values=values)


def _classify_zero(path: PLPath, t: Fraction) -> str:
    pts = path.breakpoints
    idx = next(i for i, (bt, _) in enumerate(pts) if bt == t)
    before, after = pts[idx - 1][1], pts[idx + 1][1]
    return "crossing" if before * after < 0 else "touch"


def _remove_touch(path: PLPath, t: Fraction) -> dict[Fraction, Fraction]:
    pts = path.breakpoints
    idx = next(i for i, (bt, _) in enumerate(pts) if bt == t)
    before, after = pts[idx - 1][1], pts[idx + 1][1]
    sign = 1 if before > 0 else -1
    bump = min(abs(before), abs(after)) / 2
    return {t: sign * bump}


def _remove_excursion(path: PLPath, t_a: Fraction, t_b: Fraction) -> dict[Fraction, Fraction]:
    """Straighten the stretch around [t_a, t_b] between its nonzero flanks."""
    pts = path.breakpoints
    ia = next(i for i, (bt, _) in enumerate(pts) if bt == t_a)
    ib = next(i for i, (bt, _) in enumerate(pts) if bt == t_b)
    p, cp = pts[ia - 1]
    q, cq = pts[ib + 1]
    out = {}
    for t, _ in pts[ia : ib + 1]:
        out[t] = cp + (cq - cp) * (t - p) / (q - p)
    return out


def contract_loop(loop: LabeledLoop, cfg: SpaceConfig) -> ContractionCertificate:
    """Stage-by-stage contraction of a null-class loop to its basepoint.

    Touch passages are pushed off zero first (their zero component touches
    the boundary at a single time, so any label is admissible); crossing
    pairs are then removed one cancellation at a time, each stage's zero
    component touching exactly the two boundary times of the pair.  In the
    chart model the pair must carry one common origin, mirroring the word
    reduction; in the ball model any adjacent pair may be merged.  A final
    straight-line stage with empty zero set reaches the constant loop.
    """
    if len(loop_class(loop, cfg)) != 0:
        raise NotNullhomotopic(
            f"loop class {loop_class(loop, cfg).letters} is nonempty in {cfg.model.value}"
        )
    stages: list[ContractionStage] = []
    path, labels = loop.path, loop.label_map()
    while True:
        zts = zero_times(path)
        if not zts:
            break
        kinds = {t: _classify_zero(path, t) for t in zts}
        touches = [t for t in zts if kinds[t] == "touch"]
        if touches:
            target = touches[0]
            new_values = _remove_touch(path, target)
            kind = "remove-touch"
            removed = (target,)
        else:
            crossings = zts
            pair = None
            if cfg.model is TopologyModel.QUOTIENT:
                for t1, t2 in zip(crossings, crossings[1:]):
                    if labels[t1] == labels[t2]:
                        pair = (t1, t2)
                        break
            else:
                pair = (crossings[0], crossings[1])
            if pair is None:
                raise NotNullhomotopic("no adjacent cancelling pair; word is reduced")
            new_values = _remove_excursion(path, *pair)
            kind = "remove-crossing-pair"
            removed = pair
        field = _stage_field(path, new_values)
        assignment = {t: labels[t] for t in zts}
        certificate = attempt_homotopy_lift(field, assignment, cfg, paper_constancy=False)
        if isinstance(certificate, NoLift):
            raise NotNullhomotopic(
                f"stage for {removed} rejected: component {certificate.component} "
                f"meets constraints {certificate.constraints}"
            )
        top = field.top_path()
        labels = {t: i for t, i in labels.items() if t not in removed}
        stages.append(
            ContractionStage(
                kind=kind,
                field=field,
                assignment=tuple(sorted(assignment.items())),
                certificate=certificate,
                removed=removed,
                top=top,
                top_labels=tuple(sorted(labels.items())),
            )
        )
        path = top
    base = loop.basepoint
    final_values = {t: base for t, _ in path.breakpoints}
    field = _stage_field(path, final_values)
    certificate = attempt_homotopy_lift(field, {}, cfg, paper_constancy=False)
    stages.append(
        ContractionStage(
            kind="straighten",
            field=field,
            assignment=(),
            certificate=certificate,
            removed=(),
            top=field.top_path(),
            top_labels=(),
        )
    )
    return ContractionCertificate(
        loop=loop, model=cfg.model.value, stages=tuple(stages), basepoint=base
    )


def recheck_contraction(cert: ContractionCertificate, k: int) -> list[str]:
    """Re-run every stage acceptance and verify the chaining to the constant loop."""
    failures: list[str] = []
    cfg = SpaceConfig(k, TopologyModel(cert.model))
    current = cert.loop.path
    for n, stage in enumerate(cert.stages):
        if stage.field.bottom_path() != current:
            failures.append(f"stage {n}: bottom edge does not chain from the previous stage")
        result = attempt_homotopy_lift(stage.field, dict(stage.assignment), cfg, False)
        if result != stage.certificate:
            failures.append(f"stage {n}: recorded acceptance does not reproduce")
        if isinstance(result, NoLift):
            failures.append(f"stage {n}: stage is not accepted")
        if stage.top != stage.field.top_path():
            failures.append(f"stage {n}: recorded top path mismatch")
        current = stage.top
    if any(x != cert.basepoint for _, x in current.breakpoints):
        failures.append("final stage does not reach the constant loop at the basepoint")
    return failures
