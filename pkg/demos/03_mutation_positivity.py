"""
Mutation, Laurent expansions, positivity
========================================

Mutating a seed produces a new cluster variable by an exchange relation and
exact division in the quantum torus.  Every expansion stays Laurent with
nonnegative coefficients, and each has a well-defined degree and codegree.
"""

from qcluster import WeylWord, build_gls, codegree, degree, mutate_seed, mutate_seq, preset

datum = preset("A2")
gls = build_gls(datum, WeylWord((1, 2, 1), datum))
seed = gls.seed

mutated = mutate_seed(seed, 1)
print("new variable:", mutated.vars[0])
print("degree:   ", degree(gls.pair, mutated.vars[0]))
print("codegree: ", codegree(gls.pair, mutated.vars[0]))

# mutation is an involution
back = mutate_seed(mutated, 1)
print("mu_1 twice restores the seed:", back.vars == seed.vars and back.pair == seed.pair)

# a deeper walk in G2: variables grow but stay positive
datum = preset("G2")
gls = build_gls(datum, WeylWord((1, 2, 1, 2, 1, 2), datum))
s = mutate_seq(gls.seed, (1, 2, 3, 2, 1))
print("G2 after (1,2,3,2,1):")
for i, v in enumerate(s.vars, start=1):
    print(f"  var {i}: {v.n_terms()} terms, positive={v.is_positive()}, "
          f"degree={degree(gls.pair, v)}")
