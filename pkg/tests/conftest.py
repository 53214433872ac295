"""Shared fixtures and independent oracles used across the suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from nonhaus.lifting import LiftedPath, PLPath, verify_lift_continuity, zero_times
from nonhaus.space import Origin, Regular, SpaceConfig, TopologyModel


@pytest.fixture
def quotient2() -> SpaceConfig:
    return SpaceConfig(2, TopologyModel.QUOTIENT)


@pytest.fixture
def pseudo2() -> SpaceConfig:
    return SpaceConfig(2, TopologyModel.PSEUDOMETRIC)


@pytest.fixture
def quotient3() -> SpaceConfig:
    return SpaceConfig(3, TopologyModel.QUOTIENT)


def double_dip_path() -> PLPath:
    return PLPath(
        (
            (Fraction(0), Fraction(3, 16)),
            (Fraction(1, 4), Fraction(0)),
            (Fraction(1, 2), Fraction(-1, 16)),
            (Fraction(3, 4), Fraction(0)),
            (Fraction(1), Fraction(3, 16)),
        )
    )


def triple_dip_path() -> PLPath:
    return PLPath(
        (
            (Fraction(0), Fraction(1)),
            (Fraction(1, 6), Fraction(0)),
            (Fraction(1, 3), Fraction(-1)),
            (Fraction(1, 2), Fraction(0)),
            (Fraction(2, 3), Fraction(1)),
            (Fraction(5, 6), Fraction(0)),
            (Fraction(1), Fraction(-1)),
        )
    )


def brute_force_lifts(path: PLPath, start, cfg: SpaceConfig) -> list[LiftedPath]:
    """Oracle: try every origin assignment and keep the verified lifts.

    Independent of enumerate_lifts: it does not special-case pinned zero
    times; the start constraint is enforced by comparing the first value.
    """
    zts = zero_times(path)
    lifts = []
    for combo in itertools.product(range(1, cfg.k + 1), repeat=len(zts)):
        choice = dict(zip(zts, combo))
        values = tuple(
            Origin(choice[t]) if x == 0 else Regular(x) for t, x in path.breakpoints
        )
        lift = LiftedPath(base=path, values=values)
        if lift.values[0] != start:
            continue
        if verify_lift_continuity(lift, cfg).ok:
            lifts.append(lift)
    return lifts


def random_fraction(rng: random.Random, span: int = 1000, nonzero: bool = False) -> Fraction:
    num = rng.randint(-span, span)
    while nonzero and num == 0:
        num = rng.randint(-span, span)
    return Fraction(num, rng.randint(1, span))
