import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nonhaus.errors import (
    IndexOutOfRange,
    NotNullhomotopic,
    OriginCountOutOfRange,
    UnlabeledZeroTime,
)
from nonhaus.lifting import LiftsEnumerated, NoLift, PLPath, attempt_homotopy_lift
from nonhaus.projection import project
from nonhaus.space import Origin, Regular, pseudo_dist
from nonhaus.symmetry import (
    DeckElement,
    LabeledLoop,
    Word,
    contract_loop,
    crossing_word,
    deck_apply,
    deck_group,
    deck_rigidity,
    deck_verify,
    loop_class,
    probe_loop,
    recheck_contraction,
    recheck_deck_group,
    reduce_word,
)


class TestDeckElement:
    def test_apply(self):
        swap = DeckElement((2, 1))
        assert deck_apply(swap, Origin(1)) == Origin(2)
        assert deck_apply(swap, Regular(5)) == Regular(5)

    def test_identity_fixes_everything(self):
        e = DeckElement.identity(3)
        for p in (Origin(1), Origin(3), Regular(-2)):
            assert deck_apply(e, p) == p

    def test_non_bijection_rejected(self):
        with pytest.raises(IndexOutOfRange):
            DeckElement((1, 1))

    def test_three_cycle_order(self):
        g = DeckElement((2, 3, 1))
        assert g.compose(g).compose(g) == DeckElement.identity(3)

    def test_inverse(self):
        g = DeckElement((3, 1, 2))
        assert g.compose(g.inverse()) == DeckElement.identity(3)


class TestDeckVerify:
    def test_swap_checks(self):
        report = deck_verify(DeckElement((2, 1)))
        assert report.projection_ok and report.isometry_ok and report.inverse_ok

    def test_cycle_checks(self):
        report = deck_verify(DeckElement((2, 3, 1)))
        assert report.projection_ok and report.isometry_ok and report.inverse_ok

    @given(st.permutations(list(range(1, 5))))
    def test_projection_equivariance(self, images):
        g = DeckElement(tuple(images))
        for p in [Origin(i) for i in range(1, 5)] + [Regular(3), Regular(Fraction(-1, 7))]:
            assert project(deck_apply(g, p)) == project(p)

    @given(st.permutations(list(range(1, 5))))
    def test_isometry(self, images):
        g = DeckElement(tuple(images))
        pts = [Origin(1), Origin(4), Regular(2), Regular(Fraction(-5, 3))]
        for p in pts:
            for q in pts:
                assert pseudo_dist(deck_apply(g, p), deck_apply(g, q)) == pseudo_dist(p, q)


class TestDeckGroup:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_order_and_checks(self, k):
        table = deck_group(k)
        assert len(table.elements) == math.factorial(k)
        assert table.homomorphism_ok
        assert table.faithful_ok
        assert recheck_deck_group(table) == []

    def test_k2_abelian(self):
        assert deck_group(2).noncommuting_pair is None

    def test_k3_noncommuting_witness(self):
        table = deck_group(3)
        i, j = table.noncommuting_pair
        g, h = table.elements[i], table.elements[j]
        assert deck_apply(g.compose(h), Origin(1)) != deck_apply(h.compose(g), Origin(1)) or \
            g.compose(h) != h.compose(g)

    def test_k_out_of_range(self):
        with pytest.raises(OriginCountOutOfRange):
            deck_group(1)
        with pytest.raises(OriginCountOutOfRange):
            deck_group(7)

    def test_table_closed(self):
        table = deck_group(3)
        n = len(table.elements)
        assert all(0 <= entry < n for row in table.table for entry in row)

    def test_homomorphism_random_pairs(self):
        rng = random.Random(7)
        table = deck_group(5)
        samples = [Origin(i) for i in range(1, 6)] + [Regular(1), Regular(-1)]
        for _ in range(100):
            g = rng.choice(table.elements)
            h = rng.choice(table.elements)
            for p in samples:
                assert deck_apply(g, deck_apply(h, p)) == deck_apply(g.compose(h), p)


class TestDeckRigidity:
    def test_moved_regular_rejected(self):
        verdict = deck_rigidity(DeckElement((2, 1)), moved_regular=((Fraction(1), Fraction(2)),))
        assert not verdict.accepted
        assert verdict.moved_witness == (Fraction(1), Fraction(2))

    def test_pure_permutations_accepted(self):
        import itertools

        for k in (2, 3, 4):
            for images in itertools.permutations(range(1, k + 1)):
                verdict = deck_rigidity(DeckElement(images))
                assert verdict.accepted

    def test_identity_moves_allowed(self):
        # listing x -> x is not a move
        verdict = deck_rigidity(DeckElement((1, 2)), moved_regular=((Fraction(3), Fraction(3)),))
        assert verdict.accepted


class TestCrossingWords:
    def test_same_origin_excursion(self):
        loop = probe_loop(1, 1)
        assert crossing_word(loop) == Word(((1, 1), (1, -1)))

    def test_two_origin_excursion(self):
        loop = probe_loop(1, 2)
        assert crossing_word(loop) == Word(((1, 1), (2, -1)))

    def test_loop_avoiding_zero(self):
        path = PLPath(((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(2)), (Fraction(1), Fraction(1))))
        loop = LabeledLoop(path, ())
        assert crossing_word(loop) == Word(())

    def test_touch_emits_no_letter(self):
        path = PLPath(
            (
                (Fraction(0), Fraction(1)),
                (Fraction(1, 2), Fraction(0)),
                (Fraction(1), Fraction(1)),
            )
        )
        loop = LabeledLoop(path, ((Fraction(1, 2), 1),))
        assert crossing_word(loop) == Word(())

    def test_unlabeled_zero_time(self):
        path = probe_loop(1, 2).path
        with pytest.raises(UnlabeledZeroTime):
            LabeledLoop(path, ((Fraction(1, 4), 1),))


class TestReduceWord:
    def test_single_cancellation(self):
        assert reduce_word(Word(((1, 1), (1, -1)))).letters == ()

    def test_no_cancellation(self):
        w = Word(((1, 1), (2, -1)))
        assert reduce_word(w).letters == w.letters

    def test_nested_cancellation(self):
        w = Word(((1, 1), (2, -1), (2, 1), (1, -1)))
        assert reduce_word(w).letters == ()

    def test_confluence_random_orders(self):
        # cancel pairs in random positions until stuck; compare with the stack pass
        rng = random.Random(13)

        def reduce_randomly(letters):
            letters = list(letters)
            while True:
                sites = [
                    i
                    for i in range(len(letters) - 1)
                    if letters[i][0] == letters[i + 1][0]
                    and letters[i][1] == -letters[i + 1][1]
                ]
                if not sites:
                    return tuple(letters)
                i = rng.choice(sites)
                del letters[i : i + 2]

        for _ in range(1000):
            letters = tuple(
                (rng.randint(1, 3), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))
            )
            expected = reduce_word(Word(letters)).letters
            for _ in range(3):
                assert reduce_randomly(letters) == expected


class TestLoopClass:
    def test_two_origin_loop_split(self, quotient2, pseudo2):
        loop = probe_loop(1, 2)
        assert len(loop_class(loop, quotient2)) == 2
        assert len(loop_class(loop, pseudo2)) == 0

    def test_same_origin_loop_trivial(self, quotient2):
        assert len(loop_class(probe_loop(1, 1), quotient2)) == 0

    def test_loop_avoiding_zero_trivial(self, quotient2, pseudo2):
        path = PLPath(((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(3)), (Fraction(1), Fraction(1))))
        loop = LabeledLoop(path, ())
        for cfg in (quotient2, pseudo2):
            assert len(loop_class(loop, cfg)) == 0


class TestContraction:
    def test_same_origin_loop_stages(self, quotient2):
        cert = contract_loop(probe_loop(1, 1), quotient2)
        kinds = [s.kind for s in cert.stages]
        assert kinds == ["remove-crossing-pair", "straighten"]
        first = cert.stages[0].certificate
        assert isinstance(first, LiftsEnumerated)
        # one zero component, forced to origin 1 by the excursion's labels
        assert first.assignments == (((0, 1),),)
        assert recheck_contraction(cert, quotient2.k) == []

    def test_two_origin_loop_not_contractible_quotient(self, quotient2):
        with pytest.raises(NotNullhomotopic):
            contract_loop(probe_loop(1, 2), quotient2)

    def test_two_origin_loop_contracts_pseudometric(self, pseudo2):
        cert = contract_loop(probe_loop(1, 2), pseudo2)
        assert recheck_contraction(cert, pseudo2.k) == []

    def test_loop_avoiding_zero_single_stage(self, quotient2):
        path = PLPath(((Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(2)), (Fraction(1), Fraction(1))))
        cert = contract_loop(LabeledLoop(path, ()), quotient2)
        assert [s.kind for s in cert.stages] == ["straighten"]
        from nonhaus.lifting import extract_zero_set

        assert extract_zero_set(cert.stages[0].field).segments == ()

    def test_touch_loop_contracts(self, quotient2):
        path = PLPath(
            (
                (Fraction(0), Fraction(1)),
                (Fraction(1, 2), Fraction(0)),
                (Fraction(1), Fraction(1)),
            )
        )
        loop = LabeledLoop(path, ((Fraction(1, 2), 2),))
        cert = contract_loop(loop, quotient2)
        assert [s.kind for s in cert.stages] == ["remove-touch", "straighten"]
        assert recheck_contraction(cert, quotient2.k) == []

    def test_nested_word_contracts(self, quotient3):
        # down o1, up o2, down o2, up o1: reduces inner pair then outer pair
        path = PLPath(
            (
                (Fraction(0), Fraction(1)),
                (Fraction(1, 8), Fraction(0)),
                (Fraction(2, 8), Fraction(-1)),
                (Fraction(3, 8), Fraction(0)),
                (Fraction(4, 8), Fraction(1)),
                (Fraction(5, 8), Fraction(0)),
                (Fraction(6, 8), Fraction(-1)),
                (Fraction(7, 8), Fraction(0)),
                (Fraction(1), Fraction(1)),
            )
        )
        loop = LabeledLoop(
            path,
            (
                (Fraction(1, 8), 1),
                (Fraction(3, 8), 2),
                (Fraction(5, 8), 2),
                (Fraction(7, 8), 1),
            ),
        )
        assert len(loop_class(loop, quotient3)) == 0
        cert = contract_loop(loop, quotient3)
        assert [s.kind for s in cert.stages] == [
            "remove-crossing-pair",
            "remove-crossing-pair",
            "straighten",
        ]
        assert recheck_contraction(cert, quotient3.k) == []

    def test_stages_accepted_by_engine(self, quotient2):
        cert = contract_loop(probe_loop(2, 2), quotient2)
        for stage in cert.stages:
            result = attempt_homotopy_lift(
                stage.field, dict(stage.assignment), quotient2, False
            )
            assert not isinstance(result, NoLift)
            assert result == stage.certificate

    def test_classifier_engine_consistency(self, quotient2, pseudo2):
        loops = [probe_loop(1, 1), probe_loop(1, 2), probe_loop(2, 1), probe_loop(2, 2)]
        for loop in loops:
            trivial = len(loop_class(loop, quotient2)) == 0
            if trivial:
                assert recheck_contraction(contract_loop(loop, quotient2), 2) == []
            else:
                with pytest.raises(NotNullhomotopic):
                    contract_loop(loop, quotient2)
            # ball model: always contractible
            assert recheck_contraction(contract_loop(loop, pseudo2), 2) == []
