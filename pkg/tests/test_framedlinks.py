import json
import random

import pytest

from kirbycalc.certify import AbelianGroup
from kirbycalc.framedlinks import (DOTTED, PLAIN, Component, FramedLinkModel,
                                   IllegalMove, ModelError, apply_script,
                                   hopf_link_model, zero_model)


def model(framings, linking, marks=None):
    marks = marks or [True] * len(framings)
    comps = [Component(PLAIN, f, m) for f, m in zip(framings, marks)]
    return FramedLinkModel(comps, linking)


class TestModelInvariants:
    def test_symmetry_required(self):
        with pytest.raises(ModelError):
            model([0, 0], [[0, 1], [0, 0]])

    def test_diagonal_must_match_framing(self):
        with pytest.raises(ModelError):
            model([1, 0], [[0, 0], [0, 0]])

    def test_dotted_has_no_framing(self):
        with pytest.raises(ModelError):
            Component(DOTTED, 3)
        with pytest.raises(ModelError):
            FramedLinkModel([Component(DOTTED)], [[2]])

    def test_json_roundtrip(self):
        m = zero_model(2).add_hopf_pair().blow_up(-1)
        data = json.loads(json.dumps(m.to_json()))
        assert FramedLinkModel.from_json(data) == m


class TestSlide:
    def test_framing_formula(self):
        m = model([2, 3], [[2, 1], [1, 3]])
        assert m.slide(0, 1, 1).framing(0) == 7
        assert m.slide(0, 1, -1).framing(0) == 3

    def test_zero_data_closed_under_slides(self):
        m = zero_model(2)
        assert m.slide(0, 1, 1) == m
        assert m.slide(1, 0, -1) == m

    def test_opposite_signs_cancel(self):
        m = model([2, -1, 3], [[2, 1, 0], [1, -1, 2], [0, 2, 3]])
        assert m.slide(0, 2, 1).slide(0, 2, -1) == m

    def test_symmetry_preserved(self):
        m = model([2, -1, 3], [[2, 1, 0], [1, -1, 2], [0, 2, 3]])
        s = m.slide(1, 2, 1)
        for i in range(3):
            for j in range(3):
                assert s.link(i, j) == s.link(j, i)

    def test_dotted_rejected(self):
        m = FramedLinkModel([Component(DOTTED), Component(PLAIN, 0, True)],
                            [[0, 1], [1, 0]])
        with pytest.raises(IllegalMove) as err:
            m.slide(0, 1, 1)
        assert "cannot slide over non-dotted" in str(err.value)
        with pytest.raises(IllegalMove):
            m.slide(1, 0, 1)


class TestBlowMoves:
    def test_blow_up_then_down_is_identity(self):
        m = model([5, -2], [[5, 3], [3, -2]])
        for sign in (1, -1):
            assert m.blow_up(sign).blow_down(2) == m

    def test_meridian_example(self):
        # +1-framed unknot linking a single 0-framed component once
        m = model([1, 0], [[1, 1], [1, 0]])
        down = m.blow_down(0)
        assert down.framing(0) == -1
        m = model([-1, 0], [[-1, 1], [1, 0]])
        assert m.blow_down(0).framing(0) == 1

    def test_blow_down_requires_unit_framing(self):
        with pytest.raises(IllegalMove):
            model([2], [[2]]).blow_down(0)

    def test_blow_down_requires_mark(self):
        m = model([1], [[1]], marks=[False])
        with pytest.raises(IllegalMove) as err:
            m.blow_down(0)
        assert "unknotted" in str(err.value)


class TestHopfPairs:
    def test_add_then_remove_round_trips(self):
        m = zero_model(2)
        assert m.add_hopf_pair().remove_hopf_pair(2, 3) == m
        assert m.add_distant_unknot().components[-1].framing == 0

    def test_framed_two_handle_rejected(self):
        m = FramedLinkModel([Component(DOTTED), Component(PLAIN, 2, True)],
                            [[0, 1], [1, 2]])
        with pytest.raises(IllegalMove) as err:
            m.remove_hopf_pair(0, 1)
        assert "framing 0" in str(err.value)

    def test_linked_pair_rejected(self):
        m = FramedLinkModel(
            [Component(DOTTED), Component(PLAIN, 0, True), Component(PLAIN, 0, True)],
            [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
        with pytest.raises(IllegalMove) as err:
            m.remove_hopf_pair(0, 1)
        assert "links component" in str(err.value)


class TestSlideOverDotted:
    def test_even_framing_change(self):
        m = FramedLinkModel([Component(PLAIN, 0, True), Component(DOTTED)],
                            [[0, 1], [1, 0]])
        assert m.slide_over_dotted(0, 1, 1).framing(0) == 2
        assert m.slide_over_dotted(0, 1, 1).slide_over_dotted(0, 1, 1).framing(0) == 4

    def test_opposite_applications_cancel(self):
        m = FramedLinkModel([Component(PLAIN, 4, True), Component(DOTTED)],
                            [[4, 1], [1, 0]])
        assert m.slide_over_dotted(0, 1, 1).slide_over_dotted(0, 1, -1) == m

    def test_zero_linking_rejected(self):
        m = FramedLinkModel([Component(PLAIN, 0, True), Component(DOTTED)],
                            [[0, 0], [0, 0]])
        with pytest.raises(IllegalMove):
            m.slide_over_dotted(0, 1, 1)


class TestSurgeryInvariants:
    def test_gpr_check_examples(self):
        assert zero_model(2).gpr_hypothesis_check().passes
        report = hopf_link_model().gpr_hypothesis_check()
        assert not report.passes and (0, 1) in report.nonzero_entries
        assert zero_model(1).gpr_hypothesis_check().passes

    def test_gpr_rejects_dotted(self):
        with pytest.raises(ModelError):
            zero_model(1).add_hopf_pair().gpr_hypothesis_check()

    def test_h1_examples(self):
        assert zero_model(2).h1_of_surgery() == AbelianGroup(2)
        assert hopf_link_model().h1_of_surgery().is_trivial()
        assert model([1], [[1]]).h1_of_surgery().is_trivial()
        assert model([-1], [[-1]]).h1_of_surgery().is_trivial()

    def test_h1_rejects_dotted(self):
        with pytest.raises(ModelError):
            zero_model(1).add_hopf_pair().h1_of_surgery()

    def test_gpr_invariant_under_slides(self):
        rng = random.Random(77)
        m = zero_model(3)
        for _ in range(60):
            u = rng.randrange(3)
            v = rng.randrange(3)
            if u == v:
                continue
            m = m.slide(u, v, rng.choice((1, -1)))
            assert m.gpr_hypothesis_check().passes

    def test_h1_invariant_under_moves(self):
        rng = random.Random(123)
        for _ in range(40):
            n = rng.randrange(1, 5)
            linking = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    v = rng.randrange(-5, 6)
                    linking[i][j] = linking[j][i] = v
            m = model([linking[i][i] for i in range(n)], linking)
            h1 = m.h1_of_surgery()
            for _ in range(6):
                kind = rng.choice(("slide", "blow_up", "blow_down"))
                if kind == "slide" and len(m) >= 2:
                    u, v = rng.sample(range(len(m)), 2)
                    m = m.slide(u, v, rng.choice((1, -1)))
                elif kind == "blow_up":
                    m = m.blow_up(rng.choice((1, -1)))
                else:
                    targets = [i for i in range(len(m))
                               if m.components[i].unknotted
                               and m.linking[i][i] in (1, -1)]
                    if targets:
                        m = m.blow_down(rng.choice(targets))
                assert m.h1_of_surgery() == h1


class TestScripts:
    def test_apply_script(self):
        script = [{"move": "blow_up", "sign": 1},
                  {"move": "slide", "u": 0, "v": 2, "sign": 1},
                  {"move": "blow_down", "i": 2}]
        m = apply_script(zero_model(2), script)
        # blow-up, slide across it, blow-down: net effect is the identity
        assert m == zero_model(2)

    def test_bad_step_reports_index(self):
        with pytest.raises(IllegalMove) as err:
            apply_script(zero_model(2), [{"move": "slide", "u": 0, "v": 0}])
        assert "step 0" in str(err.value)

    def test_unknown_move(self):
        with pytest.raises(IllegalMove):
            apply_script(zero_model(1), [{"move": "warp"}])
