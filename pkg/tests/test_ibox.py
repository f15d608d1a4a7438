"""Interval boxes with equal end letters and their Lambda invariants."""

import pytest

from qcluster.cartan_weyl import WeylWord, preset, reduced_words_of_longest_element
from qcluster.errors import FormulaNotApplicableError
from qcluster.gls import Lambda_vars, build_gls
from qcluster.ibox import IBox, boxes_commute, lambda_boxes, minor_box, pbw_of_box, support
from qcluster.pbw_g import L_pairing

A2 = preset("A2")
WORD = WeylWord((1, 2, 1), A2)
B2 = preset("B2")
WORD_B2 = WeylWord((1, 2, 1, 2), B2)


def fixture_words():
    out = []
    for label in ("A2", "B2", "G2", "A3"):
        d = preset(label)
        out.extend(reduced_words_of_longest_element(d))
    return out


def all_boxes(word):
    return [
        IBox(word, a, b)
        for a in range(1, word.r + 1)
        for b in range(a, word.r + 1)
        if word.letter(a) == word.letter(b)
    ]


class TestIBoxConstruction:
    def test_valid_boxes(self):
        box = IBox(WORD, 1, 3)
        assert box.letter == 1
        assert IBox(WORD, 2, 2).letter == 2

    def test_mismatched_end_letters(self):
        with pytest.raises(ValueError):
            IBox(WORD, 1, 2)

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            IBox(WORD, 3, 1)
        with pytest.raises(ValueError):
            IBox(WORD, 0, 1)
        with pytest.raises(ValueError):
            IBox(WORD, 1, 4)

    def test_support(self):
        assert support(IBox(WORD, 1, 3)) == (1, 3)
        assert support(IBox(WORD, 2, 2)) == (2,)
        assert support(IBox(WORD_B2, 1, 3)) == (1, 3)

    def test_pbw_indicator(self):
        assert pbw_of_box(IBox(WORD, 1, 3)) == (1, 0, 1)
        assert pbw_of_box(IBox(WORD, 2, 2)) == (0, 1, 0)

    def test_minor_boxes(self):
        assert minor_box(WORD, 3) == IBox(WORD, 1, 3)
        assert minor_box(WORD, 2) == IBox(WORD, 2, 2)
        assert minor_box(WORD_B2, 4) == IBox(WORD_B2, 2, 4)


class TestCommutation:
    def test_nested_boxes_commute(self):
        assert boxes_commute(IBox(WORD, 1, 1), IBox(WORD, 2, 2))
        assert boxes_commute(IBox(WORD, 1, 3), IBox(WORD, 2, 2))

    def test_non_commuting(self):
        assert not boxes_commute(IBox(WORD, 1, 1), IBox(WORD, 3, 3))

    def test_word_mismatch(self):
        with pytest.raises(ValueError):
            boxes_commute(IBox(WORD, 1, 1), IBox(WORD_B2, 1, 1))

    def test_symmetric(self):
        for w in fixture_words():
            boxes = all_boxes(w)
            for b1 in boxes:
                for b2 in boxes:
                    assert boxes_commute(b1, b2) == boxes_commute(b2, b1)


class TestLambdaBoxes:
    def test_agrees_with_variable_lambda_on_minors(self):
        gls = build_gls(A2, WORD)
        assert lambda_boxes(WORD, minor_box(WORD, 1), minor_box(WORD, 2)) == Lambda_vars(gls, 1, 2)
        assert lambda_boxes(WORD, minor_box(WORD, 1), minor_box(WORD, 3)) == Lambda_vars(gls, 1, 3)

    def test_refuses_outside_applicability(self):
        with pytest.raises(FormulaNotApplicableError) as exc_info:
            lambda_boxes(WORD, IBox(WORD, 1, 1), IBox(WORD, 3, 3))
        assert exc_info.value.code == "formula-not-applicable"

    def test_skew_on_commuting_pairs(self):
        for w in fixture_words():
            boxes = all_boxes(w)
            for b1 in boxes:
                for b2 in boxes:
                    if not boxes_commute(b1, b2):
                        continue
                    try:
                        val = lambda_boxes(w, b1, b2)
                    except FormulaNotApplicableError:
                        continue
                    assert lambda_boxes(w, b2, b1) == -val

    def test_matches_indicator_pairing(self):
        for w in fixture_words():
            boxes = all_boxes(w)
            for b1 in boxes:
                for b2 in boxes:
                    try:
                        val = lambda_boxes(w, b1, b2)
                    except FormulaNotApplicableError:
                        continue
                    assert val == L_pairing(w, pbw_of_box(b1), pbw_of_box(b2))

    def test_minor_agreement_across_types(self):
        for w in fixture_words():
            gls = build_gls(w.datum, w)
            for s in range(1, w.r + 1):
                for t in range(1, w.r + 1):
                    try:
                        val = lambda_boxes(w, minor_box(w, s), minor_box(w, t))
                    except FormulaNotApplicableError:
                        continue
                    assert val == Lambda_vars(gls, s, t)

    def test_word_mismatch(self):
        with pytest.raises(ValueError):
            lambda_boxes(WORD, IBox(WORD, 1, 1), IBox(WORD_B2, 1, 1))
