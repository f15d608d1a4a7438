"""Interval combinatorics on words: i-boxes, supports, and box pairings.

An i-box [a, b] is an interval whose end letters agree; it labels a module
whose PBW vector is the indicator of its support.  The closed Lambda formula
below is proven only under explicit applicability conditions and the
operation refuses outside them rather than extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan_weyl import WeylWord
from .errors import FormulaNotApplicableError
from .pbw_g import PBWVector, _lambda_cached

__all__ = [
    "IBox",
    "support",
    "boxes_commute",
    "lambda_boxes",
    "pbw_of_box",
    "minor_box",
]


@dataclass(frozen=True)
class IBox:
    """An interval [a, b] of word positions with matching end letters."""

    word: WeylWord
    a: int
    b: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))
        r = self.word.r
        if not (1 <= self.a <= self.b <= r):
            raise ValueError(f"invalid i-box [{self.a}, {self.b}] in a word of length {r}")
        if self.word.letters[self.a - 1] != self.word.letters[self.b - 1]:
            raise ValueError(
                f"invalid i-box [{self.a}, {self.b}]: end letters differ"
            )

    @property
    def letter(self) -> int:
        return self.word.letters[self.a - 1]


def support(box: IBox) -> tuple[int, ...]:
    """Positions u in [a, b] carrying the box letter; contains both ends."""
    letters = box.word.letters
    return tuple(u for u in range(box.a, box.b + 1) if letters[u - 1] == box.letter)


def boxes_commute(box1: IBox, box2: IBox) -> bool:
    """The nesting predicate (a1)_- < a2 <= b2 < (b1)_+, in either orientation."""
    if box1.word != box2.word:
        raise ValueError("boxes live on different words")
    word = box1.word

    def nests(outer: IBox, inner: IBox) -> bool:
        return word.k_minus(outer.a) < inner.a and inner.b < word.k_plus(outer.b)

    return nests(box1, box2) or nests(box2, box1)


def lambda_boxes(word: WeylWord, box1: IBox, box2: IBox) -> int:
    """Lambda of two box modules as the double sum of the skew form.

    Valid when box1 = [x, y], box2 = [x', y'] satisfy x > (x')_- or
    y_+ > y', or when the boxes commute; refused otherwise.
    """
    if box1.word != word or box2.word != word:
        raise ValueError("boxes do not belong to the given word")
    cond_a = box1.a > word.k_minus(box2.a)
    cond_b = word.k_plus(box1.b) > box2.b
    if not (cond_a or cond_b or boxes_commute(box1, box2)):
        raise FormulaNotApplicableError(
            f"formula-not-applicable: [{box1.a},{box1.b}] vs [{box2.a},{box2.b}]"
        )
    lam = _lambda_cached(word)
    return sum(lam[u - 1][v - 1] for u in support(box1) for v in support(box2))


def pbw_of_box(box: IBox) -> PBWVector:
    """The 0/1 PBW vector supported on the box positions."""
    supp = set(support(box))
    return tuple(1 if k in supp else 0 for k in range(1, box.word.r + 1))


def minor_box(word: WeylWord, k: int) -> IBox:
    """The box [k_min, k] labeling the k-th cluster variable of the word."""
    return IBox(word, word.k_min(k), k)
