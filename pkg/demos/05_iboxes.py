"""
Interval boxes and their skew invariants
========================================

An i-box [a,b] is an interval in a reduced word whose end letters agree.  A
closed formula computes the skew invariant of two boxes whenever an
applicability predicate holds; outside it the library refuses rather than
guessing.
"""

from qcluster import (
    FormulaNotApplicableError,
    IBox,
    Lambda_vars,
    WeylWord,
    boxes_commute,
    build_gls,
    lambda_boxes,
    minor_box,
    pbw_of_box,
    preset,
    support,
)

datum = preset("A2")
word = WeylWord((1, 2, 1), datum)
gls = build_gls(datum, word)

box13 = IBox(word, 1, 3)
print("support of [1,3]:", support(box13))
print("pbw indicator of [1,3]:", pbw_of_box(box13))

# the k-th variable of the seed is the box [k_min, k]
for k in (1, 2, 3):
    mb = minor_box(word, k)
    print(f"minor box of position {k}: [{mb.a},{mb.b}]")

# invariants of commuting boxes are skew
b1, b2 = IBox(word, 1, 1), IBox(word, 2, 2)
print("[1,1] and [2,2] commute:", boxes_commute(b1, b2))
print("lambda([1,1],[2,2]) =", lambda_boxes(word, b1, b2))
print("lambda([2,2],[1,1]) =", lambda_boxes(word, b2, b1))

# on minor boxes the formula reproduces the seed's Lambda matrix
print("matches Lambda_vars(1,2):", lambda_boxes(word, minor_box(word, 1), minor_box(word, 2)) == Lambda_vars(gls, 1, 2))

# outside the predicate the formula refuses
try:
    lambda_boxes(word, IBox(word, 1, 1), IBox(word, 3, 3))
except FormulaNotApplicableError as err:
    print("refused:", err)
