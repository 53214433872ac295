from fractions import Fraction

import pytest

from conftest import brute_force_lifts, double_dip_path, triple_dip_path
from nonhaus.errors import (
    AssignmentDomainMismatch,
    NonpositiveBasepoint,
    StartMismatch,
    ZeroPlateau,
    ZeroPlateau2D,
)
from nonhaus.lifting import (
    HomotopyField,
    LiftedPath,
    LiftsEnumerated,
    NoLift,
    NonUniqueExistence,
    PLPath,
    attempt_homotopy_lift,
    bounce_path,
    enumerate_lifts,
    extract_zero_set,
    homotopy_lift_record,
    make_merging_field,
    monodromy_verdict,
    recheck_homotopy_record,
    recheck_monodromy,
    verify_lift_continuity,
    zero_times,
)  # noqa: F401  (zero_times used in edge-case tests)
from nonhaus.space import Origin, Regular, SpaceConfig, TopologyModel


class TestPLPath:
    def test_bounce_values(self):
        g = bounce_path(1)
        # the two affine pieces are 1 - 2t and 2t - 1
        assert g.eval(Fraction(1, 4)) == Fraction(1, 2)
        assert g.eval(Fraction(1, 2)) == 0
        assert g.eval(Fraction(7, 8)) == Fraction(3, 4)

    def test_bounce_needs_positive_basepoint(self):
        with pytest.raises(NonpositiveBasepoint):
            bounce_path(0)

    def test_zero_times(self):
        assert zero_times(bounce_path(1)) == [Fraction(1, 2)]
        assert zero_times(double_dip_path()) == [Fraction(1, 4), Fraction(3, 4)]

    def test_crossing_normalized_to_breakpoint(self):
        path = PLPath(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(-1))))
        assert zero_times(path) == [Fraction(1, 2)]
        assert path.eval(Fraction(1, 2)) == 0

    def test_plateau_rejected(self):
        path = PLPath(
            ((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(0)), (Fraction(1), Fraction(1)))
        )
        with pytest.raises(ZeroPlateau):
            zero_times(path)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            PLPath(((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(1))))
        with pytest.raises(ValueError):
            PLPath(((Fraction(0), Fraction(1)), (Fraction(0), Fraction(2)), (Fraction(1), Fraction(1))))


class TestEnumerateLifts:
    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_bounce_lift_count(self, k):
        cfg = SpaceConfig(k)
        lifts = enumerate_lifts(bounce_path(1), Regular(1), cfg)
        assert len(lifts) == k
        midpoints = [lift.point_at(Fraction(1, 2)) for lift in lifts]
        assert midpoints == [Origin(i) for i in range(1, k + 1)]  # lexicographic

    def test_no_zero_times_single_lift(self):
        path = PLPath(((Fraction(0), Fraction(1)), (Fraction(1), Fraction(2))))
        for k in (2, 5):
            assert len(enumerate_lifts(path, Regular(1), SpaceConfig(k))) == 1

    def test_double_dip_against_oracle(self):
        cfg = SpaceConfig(2)
        path = double_dip_path()
        lifts = enumerate_lifts(path, Regular(Fraction(3, 16)), cfg)
        oracle = brute_force_lifts(path, Regular(Fraction(3, 16)), cfg)
        assert len(lifts) == 4
        assert [l.values for l in lifts] == [l.values for l in oracle]

    @pytest.mark.parametrize("k", [2, 3])
    def test_count_law_all_dip_paths(self, k):
        cfg = SpaceConfig(k)
        for path, m in [(bounce_path(1), 1), (double_dip_path(), 2), (triple_dip_path(), 3)]:
            start = Regular(path.breakpoints[0][1])
            lifts = enumerate_lifts(path, start, cfg)
            assert len(lifts) == k**m
            assert len(brute_force_lifts(path, start, cfg)) == k**m

    def test_start_mismatch(self):
        with pytest.raises(StartMismatch):
            enumerate_lifts(bounce_path(1), Regular(2), SpaceConfig(2))
        with pytest.raises(StartMismatch):
            enumerate_lifts(bounce_path(1), Origin(1), SpaceConfig(2))

    def test_zero_start_pins_first_choice(self):
        path = PLPath(((Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))))
        cfg = SpaceConfig(3)
        lifts = enumerate_lifts(path, Origin(2), cfg)
        assert len(lifts) == 1
        assert lifts[0].values[0] == Origin(2)

    def test_lifts_distinct_at_zero_time(self):
        cfg = SpaceConfig(3)
        lifts = enumerate_lifts(bounce_path(1), Regular(1), cfg)
        seen = {lift.point_at(Fraction(1, 2)) for lift in lifts}
        assert len(seen) == len(lifts)

    def test_projection_exact_at_samples(self):
        from nonhaus.projection import project
        from nonhaus.embedding import BasePoint

        cfg = SpaceConfig(2)
        path = double_dip_path()
        for lift in enumerate_lifts(path, Regular(Fraction(3, 16)), cfg):
            pts = path.breakpoints
            for (t0, _), (t1, _) in zip(pts, pts[1:]):
                for j in range(1, 17):
                    t = t0 + (t1 - t0) * Fraction(j, 17)
                    assert project(lift.point_at(t)) == BasePoint(path.eval(t))


class TestContinuityVerdict:
    def test_bounce_modulus(self):
        for model in TopologyModel:
            cfg = SpaceConfig(2, model)
            for x0 in (Fraction(1), Fraction(3, 2)):
                lifts = enumerate_lifts(bounce_path(x0), Regular(x0), cfg)
                for lift in lifts:
                    verdict = verify_lift_continuity(lift, cfg)
                    assert verdict.ok
                    assert verdict.lipschitz == 2 * x0

    def test_tampered_regular_value(self):
        cfg = SpaceConfig(2)
        lift = enumerate_lifts(bounce_path(1), Regular(1), cfg)[0]
        # replace the start value (over coordinate 1) with the wrong point
        tampered = LiftedPath(base=lift.base, values=(Regular(2),) + lift.values[1:])
        verdict = verify_lift_continuity(tampered, cfg)
        assert not verdict.ok
        assert "mismatch" in verdict.witness

    def test_tampered_origin_out_of_range(self):
        cfg = SpaceConfig(2)
        lift = enumerate_lifts(bounce_path(1), Regular(1), cfg)[0]
        values = list(lift.values)
        values[1] = Origin(7)
        verdict = verify_lift_continuity(LiftedPath(lift.base, tuple(values)), cfg)
        assert not verdict.ok

    def test_plateau_propagates(self):
        path = PLPath(
            ((Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(0)), (Fraction(1), Fraction(1)))
        )
        lift = LiftedPath(path, (Origin(1), Origin(1), Regular(1)))
        with pytest.raises(ZeroPlateau):
            verify_lift_continuity(lift, SpaceConfig(2))


class TestMonodromy:
    @pytest.mark.parametrize("k", [2, 5])
    def test_obstruction(self, k):
        cert = monodromy_verdict(1, SpaceConfig(k))
        assert len(cert.lifts) == k
        assert len({lift.start for lift in cert.lifts}) == 1
        assert recheck_monodromy(cert) == []

    def test_nonpositive_basepoint(self):
        with pytest.raises(NonpositiveBasepoint):
            monodromy_verdict(0, SpaceConfig(2))

    def test_recheck_catches_dropped_lift(self):
        import dataclasses

        cert = monodromy_verdict(1, SpaceConfig(3))
        bad = dataclasses.replace(cert, lifts=cert.lifts[:2])
        assert recheck_monodromy(bad) != []


class TestMergingField:
    def test_key_values(self):
        field = make_merging_field()
        assert field.value_at(Fraction(1, 2), 0) == Fraction(-1, 16)
        assert field.value_at(0, Fraction(1, 2)) == Fraction(3, 16) + Fraction(1, 16)
        top_min = min(field.value_at(s, 1) for s in field.s_breaks)
        assert top_min == Fraction(1, 16)

    def test_bottom_edge_is_double_dip(self):
        assert make_merging_field().bottom_path() == double_dip_path()

    def test_all_zero_triangle_rejected(self):
        with pytest.raises(ZeroPlateau2D):
            HomotopyField(
                s_breaks=(Fraction(0), Fraction(1, 2), Fraction(1)),
                t_breaks=(Fraction(0), Fraction(1)),
                values=(
                    (Fraction(0), Fraction(0)),
                    (Fraction(0), Fraction(0)),
                    (Fraction(1), Fraction(1)),
                ),
            )


class TestZeroSet:
    def test_merging_field_complex(self):
        complex_ = extract_zero_set(make_merging_field())
        assert len(complex_.components) == 1
        comp = complex_.components[0]
        assert comp.bottom_touches == (Fraction(1, 4), Fraction(3, 4))
        endpoints = [e for i in comp.segments for e in
                     (complex_.segments[i].a, complex_.segments[i].b)]
        assert max(endpoints, key=lambda e: e[1]) == (Fraction(1, 2), Fraction(1, 2))

    def test_segments_satisfy_field_equation(self):
        field = make_merging_field()
        complex_ = extract_zero_set(field)
        for seg in complex_.segments:
            for s, t in (seg.a, seg.b):
                assert field.value_at(s, t) == 0

    def test_positive_field_empty_complex(self):
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1)),
            values=((Fraction(1), Fraction(2)), (Fraction(1), Fraction(1))),
        )
        complex_ = extract_zero_set(field)
        assert complex_.segments == ()
        assert complex_.components == ()

    def test_zero_edge_is_one_component(self):
        # an entire vertical grid line at zero: one component, one bottom touch
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1, 2), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1)),
            values=(
                (Fraction(1), Fraction(1)),
                (Fraction(0), Fraction(0)),
                (Fraction(-1), Fraction(-1)),
            ),
        )
        complex_ = extract_zero_set(field)
        assert len(complex_.components) == 1
        assert complex_.components[0].bottom_touches == (Fraction(1, 2),)
        ends = {
            e
            for i in complex_.components[0].segments
            for e in (complex_.segments[i].a, complex_.segments[i].b)
        }
        assert (Fraction(1, 2), Fraction(0)) in ends
        assert (Fraction(1, 2), Fraction(1)) in ends

    def test_interior_crossing_matches_normalized_bottom(self):
        # the bottom edge changes sign inside a cell; the inserted breakpoint
        # and the extracted zero endpoint are the same exact rational
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1)),
            values=((Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))),
        )
        assert zero_times(field.bottom_path()) == [Fraction(1, 2)]
        complex_ = extract_zero_set(field)
        assert len(complex_.components) == 1
        assert complex_.components[0].bottom_touches == (Fraction(1, 2),)

    def test_isolated_touch_point(self):
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1, 2), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1)),
            values=(
                (Fraction(1), Fraction(1)),
                (Fraction(0), Fraction(1)),
                (Fraction(1), Fraction(1)),
            ),
        )
        complex_ = extract_zero_set(field)
        assert len(complex_.components) == 1
        comp = complex_.components[0]
        assert comp.bottom_touches == (Fraction(1, 2),)
        for i in comp.segments:
            assert complex_.segments[i].a == complex_.segments[i].b


class TestAttemptHomotopyLift:
    def setup_method(self):
        self.field = make_merging_field()
        self.conflict = {Fraction(1, 4): 1, Fraction(3, 4): 2}
        self.consistent = {Fraction(1, 4): 1, Fraction(3, 4): 1}

    def test_quotient_conflict(self, quotient2):
        result = attempt_homotopy_lift(self.field, self.conflict, quotient2)
        assert isinstance(result, NoLift)
        assert result.component == 0
        assert result.constraints == ((Fraction(1, 4), 1), (Fraction(3, 4), 2))

    def test_side_exit_and_interior_crossing(self, quotient2):
        # zero arc from the bottom crossing out through a side edge: the
        # single bottom constraint is always satisfiable
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1)),
            values=((Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))),
        )
        result = attempt_homotopy_lift(field, {Fraction(1, 2): 2}, quotient2)
        assert isinstance(result, LiftsEnumerated)
        assert result.assignments == (((0, 2),),)

    def test_quotient_consistent(self, quotient2):
        result = attempt_homotopy_lift(self.field, self.consistent, quotient2)
        assert isinstance(result, LiftsEnumerated)
        assert result.assignments == (((0, 1),),)

    def test_pseudometric_free(self, pseudo2):
        result = attempt_homotopy_lift(self.field, self.conflict, pseudo2)
        assert isinstance(result, NonUniqueExistence)
        assert result.component_count == 1

    def test_pseudometric_constancy_rule(self, pseudo2):
        result = attempt_homotopy_lift(self.field, self.conflict, pseudo2, paper_constancy=True)
        assert isinstance(result, NoLift)
        assert result.component is None

    def test_constancy_rule_constant_assignment(self, pseudo2):
        result = attempt_homotopy_lift(self.field, self.consistent, pseudo2, paper_constancy=True)
        assert isinstance(result, LiftsEnumerated)
        assert result.assignments == (((0, 1),),)

    def test_assignment_domain_mismatch(self, quotient2):
        with pytest.raises(AssignmentDomainMismatch):
            attempt_homotopy_lift(self.field, {Fraction(1, 4): 1}, quotient2)

    def test_component_oracle_confirms_conflict(self, quotient2):
        # independent oracle: try every component assignment against the
        # boundary constraints, one constraint per touched zero time
        complex_ = extract_zero_set(self.field)
        k = quotient2.k

        def satisfying(assignment):
            out = []
            import itertools

            for combo in itertools.product(range(1, k + 1), repeat=len(complex_.components)):
                ok = all(
                    combo[comp.index] == assignment[s]
                    for comp in complex_.components
                    for s in comp.bottom_touches
                )
                if ok:
                    out.append(combo)
            return out

        assert satisfying(self.conflict) == []
        assert satisfying(self.consistent) == [(1,)]

    def test_free_component_enumeration(self, quotient2):
        # a strictly interior zero arc has no boundary constraint: k choices
        field = HomotopyField(
            s_breaks=(Fraction(0), Fraction(1, 2), Fraction(1)),
            t_breaks=(Fraction(0), Fraction(1, 2), Fraction(1)),
            values=(
                (Fraction(1), Fraction(1), Fraction(1)),
                (Fraction(1), Fraction(-1), Fraction(1)),
                (Fraction(1), Fraction(1), Fraction(1)),
            ),
        )
        result = attempt_homotopy_lift(field, {}, quotient2)
        assert isinstance(result, LiftsEnumerated)
        comp_count = len(extract_zero_set(field).components)
        assert comp_count == 1
        assert len(result.assignments) == quotient2.k

    def test_record_recheck(self, quotient2, pseudo2):
        for cfg, constancy in ((quotient2, False), (pseudo2, False), (pseudo2, True)):
            record = homotopy_lift_record(self.field, self.conflict, cfg, constancy)
            assert recheck_homotopy_record(record, cfg.k) == []

    def test_record_recheck_catches_tampering(self, quotient2):
        import dataclasses

        record = homotopy_lift_record(self.field, self.consistent, quotient2, False)
        bad = dataclasses.replace(
            record, result=LiftsEnumerated(assignments=(((0, 2),),), note="")
        )
        assert recheck_homotopy_record(bad, quotient2.k) != []
