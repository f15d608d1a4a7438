"""PBW-decomposition vectors, g-vectors, and the skew pairings built on them.

Vectors are plain integer tuples indexed by word positions (1-based in the
mathematics, 0-based in the tuples).  The triangular maps between the two
coordinate systems are mutually inverse over Z; the left-sided g-vector has
no closed formula here and enters as data, constrained by the dual-pair law.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan_weyl import WeylWord
from .gls import GLSSeed, lambda_matrix

__all__ = [
    "PBWVector",
    "GVector",
    "pbw_to_g",
    "g_to_pbw",
    "pbw_of_cluster_monomial",
    "L_pairing",
    "GR_pairing",
    "GL_pairing",
    "is_dual_pair",
    "transfer_matrix",
    "transfer_identity_holds",
]

PBWVector = tuple[int, ...]
GVector = tuple[int, ...]


def _check_length(word: WeylWord, vec: tuple[int, ...], name: str) -> tuple[int, ...]:
    out = tuple(int(x) for x in vec)
    if len(out) != word.r:
        raise ValueError(f"{name} must have one entry per word position ({word.r})")
    return out


def pbw_to_g(word: WeylWord, a: PBWVector) -> GVector:
    """g_k = a_k - a_{k_+}, reading a_{r+1} = 0."""
    a = _check_length(word, a, "PBW vector")
    out = []
    for k in range(1, word.r + 1):
        kp = word.k_plus(k)
        out.append(a[k - 1] - (a[kp - 1] if kp <= word.r else 0))
    return tuple(out)


def g_to_pbw(word: WeylWord, g: GVector) -> tuple[tuple[int, ...], bool]:
    """Invert pbw_to_g: a_k = sum of g_j over j >= k with the same letter.

    The flag reports whether the result is a genuine PBW vector (all entries
    nonnegative); negative entries belong to the localized setting only.
    """
    g = _check_length(word, g, "g-vector")
    letters = word.letters
    out = []
    for k in range(1, word.r + 1):
        out.append(sum(g[j - 1] for j in range(k, word.r + 1) if letters[j - 1] == letters[k - 1]))
    return tuple(out), all(x >= 0 for x in out)


def pbw_of_cluster_monomial(word: WeylWord, m: tuple[int, ...]) -> PBWVector:
    """PBW vector of the cluster monomial with exponents m >= 0."""
    m = _check_length(word, m, "monomial exponent")
    if any(x < 0 for x in m):
        raise ValueError("cluster monomial exponents must be nonnegative")
    letters = word.letters
    return tuple(
        sum(m[j - 1] for j in range(k, word.r + 1) if letters[j - 1] == letters[k - 1])
        for k in range(1, word.r + 1)
    )


@lru_cache(maxsize=None)
def _lambda_cached(word: WeylWord) -> tuple[tuple[int, ...], ...]:
    return lambda_matrix(word.datum, word)


def L_pairing(word: WeylWord, a_x: PBWVector, a_y: PBWVector) -> int:
    """The skew pairing sum_{a,b} (a_x)_a (a_y)_b lambda_ab."""
    a_x = _check_length(word, a_x, "left PBW vector")
    a_y = _check_length(word, a_y, "right PBW vector")
    lam = _lambda_cached(word)
    total = 0
    for i, xi in enumerate(a_x):
        if xi:
            row = lam[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(a_y) if yj)
    return total


def _g_pairing(gls: GLSSeed, g_x: GVector, g_y: GVector) -> int:
    g_x = _check_length(gls.word, g_x, "left g-vector")
    g_y = _check_length(gls.word, g_y, "right g-vector")
    total = 0
    for i, xi in enumerate(g_x):
        if xi:
            row = gls.Lambda[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(g_y) if yj)
    return total


def GR_pairing(gls: GLSSeed, g_x: GVector, g_y: GVector) -> int:
    """sum (g_x)_a (g_y)_b Lambda(M_a, M_b) on right-sided g-vectors."""
    return _g_pairing(gls, g_x, g_y)


def GL_pairing(gls: GLSSeed, g_x: GVector, g_y: GVector) -> int:
    """The same Lambda-bilinear form, evaluated on left-sided g-vectors."""
    return _g_pairing(gls, g_x, g_y)


def is_dual_pair(g_right_of_l: GVector, g_left_of_r: GVector) -> bool:
    """Validation law for dual pairs: g^R(L) + g^L(R) = 0."""
    return len(g_right_of_l) == len(g_left_of_r) and all(
        x + y == 0 for x, y in zip(g_right_of_l, g_left_of_r)
    )


def transfer_matrix(word: WeylWord) -> tuple[tuple[int, ...], ...]:
    """T_jk = 1 iff j >= k and the letters at j and k agree.

    Row s is the PBW vector of the s-th cluster variable, so
    T lambda T^t equals the Lambda matrix of the word's seed.
    """
    letters = word.letters
    r = word.r
    return tuple(
        tuple(1 if j >= k and letters[j - 1] == letters[k - 1] else 0 for k in range(1, r + 1))
        for j in range(1, r + 1)
    )


def transfer_identity_holds(gls: GLSSeed) -> bool:
    """Check T lambda T^t = Lambda exactly."""
    t = transfer_matrix(gls.word)
    lam = gls.lambda_i
    r = gls.word.r
    for s in range(r):
        for u in range(r):
            val = sum(t[s][a] * lam[a][b] * t[u][b] for a in range(r) for b in range(r))
            if val != gls.Lambda[s][u]:
                return False
    return True
