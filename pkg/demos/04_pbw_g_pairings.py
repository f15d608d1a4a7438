"""
PBW vectors, g-vectors, and skew pairings
=========================================

PBW exponent vectors and g-vectors are related by mutually inverse triangular
maps.  Three integer-valued pairings live on top of them: L on PBW vectors,
and the right/left forms on g-vectors.  On converted vectors the right form
factors through L.
"""

from qcluster import (
    GL_pairing,
    GR_pairing,
    L_pairing,
    WeylWord,
    build_gls,
    g_to_pbw,
    is_dual_pair,
    pbw_of_cluster_monomial,
    pbw_to_g,
    preset,
    transfer_matrix,
)

datum = preset("A2")
word = WeylWord((1, 2, 1), datum)
gls = build_gls(datum, word)

# conversions
for a in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]:
    print("pbw", a, "-> g", pbw_to_g(word, a))
print("g (-1,0,1) -> pbw", g_to_pbw(word, (-1, 0, 1)))
print("g (-1,0,0) -> pbw", g_to_pbw(word, (-1, 0, 0)), " (outside the category)")

# cluster monomials have additive PBW vectors
print("pbw of monomial e3:", pbw_of_cluster_monomial(word, (0, 0, 1)))

# the pairings on the worked rank-2 values
g1, g2r, g2l = (1, 0, 0), (-1, 0, 1), (-1, 1, 0)
print("L((1,0,0),(0,0,1)) =", L_pairing(word, (1, 0, 0), (0, 0, 1)))
print("GR(g1, g2) =", GR_pairing(gls, g1, g2r))
print("GL(g1, g2) =", GL_pairing(gls, g1, g2l))
print("dual pair law on ((1,0,0), (-1,0,0)):", is_dual_pair((1, 0, 0), (-1, 0, 0)))

# the right pairing of converted vectors equals L of the inputs
a, b = (2, 1, 0), (0, 1, 3)
print("GR(conv a, conv b) == L(a, b):",
      GR_pairing(gls, pbw_to_g(word, a), pbw_to_g(word, b)) == L_pairing(word, a, b))

# the matrix identity behind it: rows of T are the minors' PBW vectors
print("transfer matrix:", transfer_matrix(word))
