"""Compatible pairs, quantum seeds, mutation, dominance order, degree/codegree.

A seed keeps every cluster variable expanded in the torus of the initial
frame; mutation rewrites the exchanged variable there and never re-bases.
Positions (the index k of a variable) are 1-based in the public API.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan_weyl import Weight, weight_add, weight_scale
from .errors import IncompatiblePairError, NotPointedError
from .qtorus import (
    Matrix,
    QLaurent,
    TorusElement,
    exact_div_right,
    skew_value,
    torus_from_json,
    torus_to_json,
    x_pow,
)

__all__ = [
    "CompatiblePair",
    "QuantumSeed",
    "initial_seed",
    "mutate_pair",
    "mutate_seed",
    "mutate_seq",
    "frame_monomial",
    "dominance_leq",
    "degree",
    "codegree",
    "vars_q_commute",
    "seed_to_json",
    "seed_from_json",
]


@dataclass(frozen=True)
class CompatiblePair:
    """A skew-symmetric L with an exchange matrix B satisfying B^t L = diag(d).

    ``B`` is K x K_ex; ``ex[c]`` is the 1-based K-position of column c and
    ``d[c]`` the positive integer with sum_k B[k][c] L[k][j] = d[c] on the
    diagonal position and 0 elsewhere.
    """

    L: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]
    ex: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        L = tuple(tuple(int(x) for x in row) for row in self.L)
        B = tuple(tuple(int(x) for x in row) for row in self.B)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "ex", tuple(int(x) for x in self.ex))
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        n = len(L)
        if any(len(row) != n for row in L):
            raise ValueError("L must be square")
        if any(L[i][j] != -L[j][i] for i in range(n) for j in range(n)):
            raise ValueError("L must be skew-symmetric")
        m = len(self.ex)
        if len(B) != n or any(len(row) != m for row in B):
            raise ValueError("B must be K x K_ex")
        if len(self.d) != m or any(x < 1 for x in self.d):
            raise ValueError("d must be positive, one entry per exchangeable column")
        if len(set(self.ex)) != m or any(not 1 <= k <= n for k in self.ex):
            raise ValueError("ex must be distinct 1-based positions")
        for c in range(m):
            for j in range(n):
                want = self.d[c] if self.ex[c] == j + 1 else 0
                got = sum(B[k][c] * L[k][j] for k in range(n))
                if got != want:
                    raise IncompatiblePairError(
                        f"incompatible-pair: (B^t L)[{c}][{j}] = {got}, expected {want}"
                    )

    @property
    def rank(self) -> int:
        return len(self.L)

    @property
    def frozen(self) -> tuple[int, ...]:
        ex = set(self.ex)
        return tuple(k for k in range(1, self.rank + 1) if k not in ex)

    def column_of(self, k: int) -> int:
        """Column index of the exchangeable position k; ValueError if frozen."""
        try:
            return self.ex.index(k)
        except ValueError:
            raise ValueError(f"position {k} is frozen") from None

    def b_column(self, k: int) -> tuple[int, ...]:
        c = self.column_of(k)
        return tuple(row[c] for row in self.B)


def mutate_pair(pair: CompatiblePair, k: int) -> CompatiblePair:
    """Matrix mutation in direction k; involutive and compatibility-preserving."""
    c = pair.column_of(k)
    n = pair.rank
    ki = k - 1
    col = [pair.B[i][c] for i in range(n)]
    newB = []
    for i in range(n):
        row = []
        for cc in range(len(pair.ex)):
            b = pair.B[i][cc]
            if i == ki or pair.ex[cc] == k:
                row.append(-b)
            else:
                bkj = pair.B[ki][cc]
                row.append(b + max(0, col[i]) * max(0, bkj) - max(0, -col[i]) * max(0, -bkj))
        newB.append(tuple(row))
    # E is the identity except in column k
    e_col = [max(0, -col[i]) if i != ki else -1 for i in range(n)]

    def E(i: int, j: int) -> int:
        if j == ki:
            return e_col[i]
        return 1 if i == j else 0

    newL = tuple(
        tuple(
            sum(E(i, a) * pair.L[i][j] * E(j, b) for i in range(n) for j in range(n))
            for b in range(n)
        )
        for a in range(n)
    )
    return CompatiblePair(newL, tuple(newB), pair.ex, pair.d)


@dataclass(frozen=True)
class QuantumSeed:
    """A compatible pair plus per-variable expansions in the initial torus."""

    pair: CompatiblePair
    vars: tuple[TorusElement, ...]
    weights: tuple[Weight, ...] | None = None
    history: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vars", tuple(self.vars))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))
        object.__setattr__(self, "history", tuple(int(k) for k in self.history))
        if len(self.vars) != self.pair.rank:
            raise ValueError("one expansion per torus generator is required")

    @property
    def initial_L(self) -> Matrix:
        return self.vars[0].L


def initial_seed(pair: CompatiblePair, weights: tuple[Weight, ...] | None = None) -> QuantumSeed:
    n = pair.rank
    gens = tuple(x_pow(pair.L, tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
    return QuantumSeed(pair, gens, weights, ())


def frame_monomial(seed: QuantumSeed, c: tuple[int, ...]) -> TorusElement:
    """X^c of the current seed, expanded in the initial torus.

    Equals v^{sum_{i>j} c_i c_j l_ij} * vars[1]^{c_1} * ... in increasing
    order, with l the current pair's matrix; reduces to x_pow(c) at the
    initial seed.
    """
    cvec = tuple(int(x) for x in c)
    if len(cvec) != seed.pair.rank:
        raise ValueError("exponent length does not match the seed rank")
    if any(x < 0 for x in cvec):
        raise ValueError("frame monomials need nonnegative exponents")
    Lc = seed.pair.L
    pref = sum(
        cvec[i] * cvec[j] * Lc[i][j] for i in range(len(cvec)) for j in range(i)
    )
    out = TorusElement.one(seed.initial_L) * QLaurent.v_power(pref)
    for i, ci in enumerate(cvec):
        if ci:
            out = out * seed.vars[i] ** ci
    return out


def mutate_seed(seed: QuantumSeed, k: int) -> QuantumSeed:
    """Seed mutation: exchange variable k and mutate the pair.

    The new variable X^{a'} + X^{a''} of the mutated frame is rewritten in
    the initial torus via X^a = v^{L(a,e_k)} X^{a+e_k} X_k^{-1}.
    """
    pair = seed.pair
    c = pair.column_of(k)
    n = pair.rank
    ki = k - 1
    col = [pair.B[i][c] for i in range(n)]
    a_plus = tuple(-1 if i == ki else max(0, col[i]) for i in range(n))
    a_minus = tuple(-1 if i == ki else max(0, -col[i]) for i in range(n))
    e_k = tuple(1 if i == ki else 0 for i in range(n))
    total = TorusElement.zero(seed.initial_L)
    for a in (a_plus, a_minus):
        lifted = tuple(x + y for x, y in zip(a, e_k))
        pref = skew_value(pair.L, a, e_k)
        total = total + frame_monomial(seed, lifted) * QLaurent.v_power(pref)
    new_var = exact_div_right(total, seed.vars[ki])
    new_vars = tuple(new_var if i == ki else v for i, v in enumerate(seed.vars))
    new_weights = None
    if seed.weights is not None:
        zero = (0,) * len(seed.weights[0])
        wt_plus = zero
        wt_minus = zero
        for i in range(n):
            wt_plus = weight_add(wt_plus, weight_scale(a_plus[i], seed.weights[i]))
            wt_minus = weight_add(wt_minus, weight_scale(a_minus[i], seed.weights[i]))
        if wt_plus == wt_minus:
            new_weights = tuple(
                wt_plus if i == ki else w for i, w in enumerate(seed.weights)
            )
    return QuantumSeed(mutate_pair(pair, k), new_vars, new_weights, seed.history + (k,))


def mutate_seq(seed: QuantumSeed, ks: tuple[int, ...]) -> QuantumSeed:
    for k in ks:
        seed = mutate_seed(seed, k)
    return seed


def dominance_leq(pair: CompatiblePair, b_lo: tuple[int, ...], b_hi: tuple[int, ...]) -> bool:
    """True iff b_hi - b_lo = B v for some integer v >= 0.

    Compatibility gives the closed-form candidate v_c = -(L diff)_{ex_c}/d_c,
    verified against B v = diff afterwards.
    """
    n = pair.rank
    diff = tuple(x - y for x, y in zip(b_hi, b_lo))
    if len(diff) != n:
        raise ValueError("exponent length does not match the pair rank")
    Ldiff = [sum(pair.L[j][i] * diff[i] for i in range(n)) for j in range(n)]
    v = []
    for c, pos in enumerate(pair.ex):
        num = -Ldiff[pos - 1]
        if num % pair.d[c] or num < 0:
            return False
        v.append(num // pair.d[c])
    return all(
        sum(pair.B[j][c] * v[c] for c in range(len(v))) == diff[j] for j in range(n)
    )


def _extremal_exponent(pair: CompatiblePair, P: TorusElement, *, maximal: bool) -> tuple[int, ...]:
    if P.is_zero():
        raise ValueError("degree of the zero element")
    exps = list(P.terms)
    if maximal:
        found = [e for e in exps if all(dominance_leq(pair, o, e) for o in exps)]
    else:
        found = [e for e in exps if all(dominance_leq(pair, e, o) for o in exps)]
    if len(found) != 1:
        if maximal:
            raise NotPointedError("not-pointed: no unique dominance-maximal exponent")
        raise NotPointedError(
            "not-copointed: no unique dominance-minimal exponent", copointed=True
        )
    return found[0]


def degree(pair: CompatiblePair, P: TorusElement) -> tuple[int, ...]:
    """The unique dominance-maximal exponent of a pointed element."""
    return _extremal_exponent(pair, P, maximal=True)


def codegree(pair: CompatiblePair, P: TorusElement) -> tuple[int, ...]:
    """The unique dominance-minimal exponent of a copointed element."""
    return _extremal_exponent(pair, P, maximal=False)


def vars_q_commute(seed: QuantumSeed) -> bool:
    """Check vars[i] vars[j] = v^{2 L_ij} vars[j] vars[i] for the current L."""
    n = seed.pair.rank
    for i in range(n):
        for j in range(i + 1, n):
            lhs = seed.vars[i] * seed.vars[j]
            rhs = (seed.vars[j] * seed.vars[i]) * QLaurent.v_power(2 * seed.pair.L[i][j])
            if lhs != rhs:
                return False
    return True


def seed_to_json(seed: QuantumSeed) -> dict:
    return {
        "L": [list(row) for row in seed.pair.L],
        "B": [list(row) for row in seed.pair.B],
        "ex": list(seed.pair.ex),
        "d": list(seed.pair.d),
        "vars": [torus_to_json(v) for v in seed.vars],
        "history": list(seed.history),
    }


def seed_from_json(obj: dict, initial_L: Matrix) -> QuantumSeed:
    pair = CompatiblePair(
        tuple(tuple(row) for row in obj["L"]),
        tuple(tuple(row) for row in obj["B"]),
        tuple(obj["ex"]),
        tuple(obj["d"]),
    )
    gens = tuple(torus_from_json(initial_L, item) for item in obj["vars"])
    return QuantumSeed(pair, gens, None, tuple(obj["history"]))
