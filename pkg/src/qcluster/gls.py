"""Quantum seeds built from reduced Weyl words.

From a reduced word the constructor produces the exchange matrix, the
q-commutation matrix of the unipotent-minor cluster, the skew form lambda on
the word's positive roots, the pairwise Lambda invariants of the cluster
variables, their weights, and normalization constants.

The q-commutation matrix is only pinned up to a global sign by the
triangular data, so the constructor tries both orientations and keeps the
one satisfying (L B)|_{K x K_ex} = -2 diag(d); the choice is recorded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan_weyl import CartanDatum, Weight, WeylWord, weight_add, weight_sub
from .cluster_core import CompatiblePair, QuantumSeed, initial_seed
from .errors import IncompatiblePairError, NonIntegralError, NotReducedError

__all__ = [
    "GLSSeed",
    "build_gls",
    "lambda_matrix",
    "Lambda_vars",
    "lambda_tilde",
    "gls_report",
]

IntMatrix = tuple[tuple[int, ...], ...]


def lambda_matrix(datum: CartanDatum, word: WeylWord) -> IntMatrix:
    """The skew form lambda_ab = (-1)^{delta(a>b)} delta(a!=b) (beta_a, beta_b)."""
    if not word.is_reduced:
        raise NotReducedError(f"not-reduced: {word.letters}")
    betas = word.beta_sequence()
    r = word.r
    out = [[0] * r for _ in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            val = datum.bilinear_form_int(betas[a], betas[b])
            out[a][b] = val
            out[b][a] = -val
    return tuple(tuple(row) for row in out)


def _exchange_matrix(word: WeylWord) -> tuple[IntMatrix, tuple[int, ...]]:
    """The K x K_ex exchange matrix of the word, plus the exchangeable positions."""
    datum = word.datum
    r = word.r
    ex = word.exchangeable_positions()
    a = datum.cartan
    rows = []
    for s in range(1, r + 1):
        s_plus = word.k_plus(s)
        row = []
        for t in ex:
            t_plus = word.k_plus(t)
            i_s = word.letters[s - 1]
            i_t = word.letters[t - 1]
            if s == t_plus:
                row.append(1)
            elif s == word.k_minus(t):
                row.append(-1)
            elif s < t < s_plus < t_plus:
                row.append(-a[i_s - 1][i_t - 1])
            elif t < s < t_plus < s_plus:
                row.append(a[i_s - 1][i_t - 1])
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows), ex


def _naive_l_matrix(datum: CartanDatum, word: WeylWord) -> IntMatrix:
    """Upper-triangular data l_st = (varpi_s - w_{<=s} varpi_s, varpi_t + w_{<=t} varpi_t)."""
    r = word.r
    lefts = []
    rights = []
    for k in range(1, r + 1):
        i = word.letters[k - 1]
        moved = word.act(datum.varpi(i), k)
        lefts.append(weight_sub(datum.varpi(i), moved))
        rights.append(weight_add(datum.varpi(i), moved))
    out = [[0] * r for _ in range(r)]
    for s in range(r):
        for t in range(s + 1, r):
            val = datum.bilinear_form_int(lefts[s], rights[t])
            out[s][t] = val
            out[t][s] = -val
    return tuple(tuple(row) for row in out)


def _transpose(m: IntMatrix) -> IntMatrix:
    return tuple(tuple(m[j][i] for j in range(len(m))) for i in range(len(m)))


@dataclass(frozen=True)
class GLSSeed:
    """The quantum seed of a reduced word, with its pairing data."""

    word: WeylWord
    seed: QuantumSeed
    lambda_i: IntMatrix
    Lambda: IntMatrix
    var_weights: tuple[Weight, ...]
    c_consts: tuple[int, ...]
    orientation: str

    @property
    def datum(self) -> CartanDatum:
        return self.word.datum

    @property
    def pair(self) -> CompatiblePair:
        return self.seed.pair


def build_gls(datum: CartanDatum, word: WeylWord) -> GLSSeed:
    """Build the seed of a reduced word; fails loudly if no orientation works."""
    if word.datum != datum:
        raise ValueError("word was built over a different Cartan datum")
    if not word.is_reduced:
        raise NotReducedError(f"not-reduced: {word.letters}")
    r = word.r
    B, ex = _exchange_matrix(word)
    naive = _naive_l_matrix(datum, word)
    d = tuple(2 * datum.symmetrizers[word.letters[t - 1] - 1] for t in ex)

    def identity_holds(L: IntMatrix) -> bool:
        for c, t in enumerate(ex):
            for j in range(r):
                want = -d[c] if j + 1 == t else 0
                if sum(L[j][i] * B[i][c] for i in range(r)) != want:
                    return False
        return True

    if identity_holds(naive):
        torus_L, orientation = naive, "upper-triangular"
    elif identity_holds(_transpose(naive)):
        torus_L, orientation = _transpose(naive), "transposed"
    else:
        raise IncompatiblePairError(
            "incompatible-pair: (L B) = -2 diag(d) fails under both orientations"
        )

    pair = CompatiblePair(torus_L, B, ex, d)
    weights = tuple(
        weight_sub(word.act(datum.varpi(word.letters[k - 1]), k), datum.varpi(word.letters[k - 1]))
        for k in range(1, r + 1)
    )
    seed = initial_seed(pair, weights)
    Lambda = tuple(tuple(-x for x in row) for row in naive)
    c_consts = []
    for wt in weights:
        norm = datum.bilinear_form_int(wt, wt)
        if norm % 2:
            raise NonIntegralError("non-integral: odd self-pairing of a variable weight")
        c_consts.append(norm // 2)
    return GLSSeed(
        word=word,
        seed=seed,
        lambda_i=lambda_matrix(datum, word),
        Lambda=Lambda,
        var_weights=weights,
        c_consts=tuple(c_consts),
        orientation=orientation,
    )


def Lambda_vars(gls: GLSSeed, s: int, t: int) -> int:
    """Lambda(M_s, M_t) for the word's cluster variables (skew in s, t)."""
    r = gls.word.r
    if not (1 <= s <= r and 1 <= t <= r):
        raise IndexError(f"positions ({s}, {t}) outside 1..{r}")
    return gls.Lambda[s - 1][t - 1]


def lambda_tilde(gls: GLSSeed, s: int, t: int) -> int:
    """(Lambda(M_s, M_t) + (wt_s, wt_t)) / 2, refused when not an integer."""
    val = Lambda_vars(gls, s, t) + gls.datum.bilinear_form_int(
        gls.var_weights[s - 1], gls.var_weights[t - 1]
    )
    if val % 2:
        raise NonIntegralError(f"non-integral: odd pairing sum {val} at ({s}, {t})")
    return val // 2


def gls_report(gls: GLSSeed) -> dict:
    """The JSON-facing summary of a constructed seed."""
    pair = gls.pair
    r = gls.word.r
    rhs = [
        [sum(pair.L[j][i] * pair.B[i][c] for i in range(r)) for c in range(len(pair.ex))]
        for j in range(r)
    ]
    return {
        "word": list(gls.word.letters),
        "B": [list(row) for row in pair.B],
        "L": [list(row) for row in pair.L],
        "lambda": [list(row) for row in gls.lambda_i],
        "Lambda": [list(row) for row in gls.Lambda],
        "ex": list(pair.ex),
        "frozen": list(pair.frozen),
        "d": list(pair.d),
        "weights": [list(w) for w in gls.var_weights],
        "c_consts": list(gls.c_consts),
        "compatibility": {
            "identity": "(L B)|ex = -2 diag(d)",
            "orientation": gls.orientation,
            "product": rhs,
            "holds": True,
        },
    }
