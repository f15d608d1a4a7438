"""
Seeds from reduced words
========================

A reduced word for the longest Weyl group element determines a quantum seed:
an exchange matrix from the word's combinatorics and a skew form from the
invariant bilinear form on weights.
"""

import json

from qcluster import WeylWord, build_gls, gls_report, preset, reduced_words_of_longest_element

datum = preset("B2")
print("Cartan matrix:", datum.cartan)
print("symmetrizers:", datum.symmetrizers)

# every reduced word of w0 gives a seed
for word in reduced_words_of_longest_element(datum):
    print("reduced word:", word.letters)

word = WeylWord((1, 2, 1, 2), datum)
print("beta sequence (root coords):", word.beta_root_coords())

gls = build_gls(datum, word)
print("exchangeable positions:", gls.pair.ex)
print("frozen positions:", gls.pair.frozen)
print("exchange matrix:", gls.pair.B)
print("skew form L:", gls.pair.L)

# the compatibility identity: columns of B pair with L to -2 d_i
print("d =", gls.pair.d)

# variable weights and normalization exponents
print("weights:", gls.var_weights)
print("c exponents:", gls.c_consts)

# the full report, as the CLI prints it
print(json.dumps(gls_report(gls), indent=2, sort_keys=True))
