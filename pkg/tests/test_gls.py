"""Seeds from reduced words: exchange matrix, skew forms, Lambda, invariants."""

import pytest

from qcluster.cartan_weyl import WeylWord, preset, reduced_words_of_longest_element
from qcluster.errors import IncompatiblePairError, NotReducedError
from qcluster.gls import (
    Lambda_vars,
    build_gls,
    gls_report,
    lambda_matrix,
    lambda_tilde,
)

A2 = preset("A2")
GOLDEN = WeylWord((1, 2, 1), A2)


@pytest.fixture(scope="module")
def gls():
    return build_gls(A2, GOLDEN)


def all_w0_words(label, limit=None):
    d = preset(label)
    return d, reduced_words_of_longest_element(d, limit=limit)


class TestLambdaMatrix:
    def test_golden_values(self):
        lam = lambda_matrix(A2, GOLDEN)
        assert lam == ((0, 1, -1), (-1, 0, 1), (1, -1, 0))

    def test_skew_symmetric_with_zero_diagonal(self):
        for label in ("B2", "G2"):
            d, words = all_w0_words(label)
            for w in words:
                lam = lambda_matrix(d, w)
                for a in range(w.r):
                    assert lam[a][a] == 0
                    for b in range(w.r):
                        assert lam[a][b] == -lam[b][a]

    def test_rejects_non_reduced_word(self):
        with pytest.raises(NotReducedError):
            lambda_matrix(A2, WeylWord((1, 1), A2))


class TestBuildGls:
    def test_exchange_matrix_and_partition(self, gls):
        assert gls.pair.B == ((0,), (-1,), (1,))
        assert gls.pair.ex == (1,)
        assert gls.pair.frozen == (2, 3)

    def test_torus_form_realizes_compatibility(self, gls):
        assert gls.pair.L == ((0, 1, -1), (-1, 0, 0), (1, 0, 0))
        assert gls.pair.d == (2,)
        assert gls.orientation == "transposed"

    def test_b2_exchange_matrix_by_hand(self):
        d = preset("B2")
        g = build_gls(d, WeylWord((1, 2, 1, 2), d))
        assert g.pair.B == ((0, 1), (-2, 0), (1, -1), (0, 1))
        assert g.pair.ex == (1, 2)
        assert g.pair.d == (4, 2)

    def test_minus_two_d_identity(self):
        for label, limit in [("A2", None), ("B2", None), ("G2", None), ("A3", None), ("B3", 6), ("C3", 6)]:
            d, words = all_w0_words(label, limit)
            for w in words:
                g = build_gls(d, w)
                B, L, ex = g.pair.B, g.pair.L, g.pair.ex
                for c, pos in enumerate(ex):
                    for j in range(w.r):
                        want = -2 * d.symmetrizers[w.letter(pos) - 1] if j == pos - 1 else 0
                        got = sum(L[j][i] * B[i][c] for i in range(w.r))
                        assert got == want

    def test_variable_weights(self, gls):
        # wt_k = w_{<=k} varpi_{i_k} - varpi_{i_k}, in varpi coordinates
        assert gls.var_weights[0] == (-2, 1)    # -alpha_1
        assert gls.var_weights[1] == (-1, -1)   # -varpi_1 - varpi_2
        assert gls.var_weights[2] == (-1, -1)
        assert gls.c_consts == (1, 1, 1)

    def test_rejects_non_reduced(self):
        with pytest.raises(NotReducedError):
            build_gls(A2, WeylWord((2, 2, 1), A2))

    def test_rejects_foreign_word(self):
        b2 = preset("B2")
        with pytest.raises(ValueError):
            build_gls(b2, GOLDEN)

    def test_initial_vars_are_generators(self, gls):
        for k, var in enumerate(gls.seed.vars):
            assert set(var.support()) == {tuple(1 if i == k else 0 for i in range(3))}


class TestLambdaVars:
    def test_golden_values(self, gls):
        assert Lambda_vars(gls, 1, 2) == 1
        assert Lambda_vars(gls, 1, 3) == -1
        assert Lambda_vars(gls, 2, 3) == 0

    def test_skew_extension_and_diagonal(self, gls):
        assert Lambda_vars(gls, 3, 1) == 1
        assert Lambda_vars(gls, 2, 1) == -1
        for s in (1, 2, 3):
            assert Lambda_vars(gls, s, s) == 0

    def test_out_of_range(self, gls):
        with pytest.raises(IndexError):
            Lambda_vars(gls, 0, 1)
        with pytest.raises(IndexError):
            Lambda_vars(gls, 1, 4)

    def test_matches_torus_commutation(self, gls):
        # Lambda(M_s, M_t) is the v exponent in M_s M_t = v^{2 Lambda} M_t M_s
        L = gls.pair.L
        for s in range(3):
            for t in range(3):
                assert Lambda_vars(gls, s + 1, t + 1) == L[s][t]


class TestLambdaTilde:
    def test_golden_value(self, gls):
        assert lambda_tilde(gls, 1, 2) == 1

    def test_diagonal_is_half_weight_norm(self, gls):
        for s in (1, 2, 3):
            wt = gls.var_weights[s - 1]
            assert lambda_tilde(gls, s, s) == A2.bilinear_form_int(wt, wt) // 2

    def test_nonnegative_across_types(self):
        for label in ("A2", "B2", "G2", "A3"):
            d, words = all_w0_words(label, limit=2)
            for w in words:
                g = build_gls(d, w)
                for s in range(1, w.r + 1):
                    for t in range(1, w.r + 1):
                        assert lambda_tilde(g, s, t) >= 0


def test_gls_report_shape(gls):
    rep = gls_report(gls)
    assert rep["word"] == [1, 2, 1]
    assert rep["ex"] == [1]
    assert rep["frozen"] == [2, 3]
    assert rep["d"] == [2]
    assert rep["compatibility"]["holds"] is True
    assert rep["compatibility"]["orientation"] == "transposed"
    assert rep["Lambda"] == [[0, 1, -1], [-1, 0, 0], [1, 0, 0]]
    import json

    json.dumps(rep)


def test_naive_orientation_alone_would_fail():
    # the untransposed form pairs with B to +2d on the golden word, so the
    # builder must flip; reaching "transposed" proves the arbiter ran
    for label in ("A2", "B2", "G2", "A3"):
        d, words = all_w0_words(label, limit=4)
        for w in words:
            assert build_gls(d, w).orientation == "transposed"
