"""Cartan data, weights, the invariant bilinear form, and Weyl-word combinatorics.

Weights live in the fundamental-weight basis as plain integer tuples.  Words
carry 1-based letters; every position argument in the public API is 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple

from .errors import FormNotComputableError, NonIntegralError, NotReducedError

__all__ = [
    "Weight",
    "CartanDatum",
    "WeylWord",
    "PositionMaps",
    "weight_add",
    "weight_sub",
    "weight_neg",
    "weight_scale",
    "preset",
    "preset_labels",
    "datum_from_json",
    "positive_roots",
    "longest_word_length",
    "reduced_words_of_longest_element",
]

Weight = tuple[int, ...]


def weight_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def weight_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def weight_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def weight_scale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def _solve_unique(
    mat: tuple[tuple[int, ...], ...], rhs: tuple[int, ...]
) -> tuple[Fraction, ...] | None:
    """Solve mat*x = rhs over the rationals; None unless a unique solution exists."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    row = 0
    pivots: list[int] = []
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        scale = aug[row][col]
        aug[row] = [x / scale for x in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < n:
        # singular: no unique solution, whether or not the system is consistent
        return None
    x = [Fraction(0)] * n
    for rr, c in enumerate(pivots):
        x[c] = aug[rr][n]
    return tuple(x)


@dataclass(frozen=True)
class CartanDatum:
    """A symmetrizable generalized Cartan matrix with positive symmetrizers.

    ``cartan[i][j]`` is ``a_ij = <h_i, alpha_j>``; ``symmetrizers[i]`` is the
    positive integer d_i with d_i * a_ij symmetric, normalized so that
    (alpha_i, alpha_i) = 2 * d_i.
    """

    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        a = tuple(tuple(int(x) for x in row) for row in self.cartan)
        d = tuple(int(x) for x in self.symmetrizers)
        object.__setattr__(self, "cartan", a)
        object.__setattr__(self, "symmetrizers", d)
        n = len(a)
        if any(len(row) != n for row in a):
            raise ValueError("cartan matrix must be square")
        if len(d) != n:
            raise ValueError("symmetrizers length must match the rank")
        if any(x < 1 for x in d):
            raise ValueError("symmetrizers must be positive integers")
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("cartan diagonal entries must equal 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal cartan entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise ValueError("cartan zero pattern must be symmetric")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ValueError("cartan matrix is not symmetrized by d")

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def index_set(self) -> range:
        return range(1, self.rank + 1)

    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def varpi(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def alpha(self, i: int) -> Weight:
        """Simple root alpha_i = sum_j a_ji * varpi_j."""
        self._check_index(i)
        return tuple(self.cartan[j][i - 1] for j in range(self.rank))

    def pairing(self, i: int, lam: Weight) -> int:
        """<h_i, lam>: the i-th fundamental-weight coordinate."""
        self._check_index(i)
        return lam[i - 1]

    def reflect(self, i: int, lam: Weight) -> Weight:
        """Simple reflection s_i(lam) = lam - <h_i, lam> alpha_i."""
        self._check_index(i)
        c = lam[i - 1]
        if c == 0:
            return tuple(lam)
        col = self.alpha(i)
        return tuple(x - c * y for x, y in zip(lam, col))

    @cached_property
    def _inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...] | None:
        n = self.rank
        cols = []
        for j in range(n):
            rhs = tuple(1 if i == j else 0 for i in range(n))
            sol = _solve_unique(self.cartan, rhs)
            if sol is None:
                return None
            cols.append(sol)
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def root_coords(self, lam: Weight) -> tuple[Fraction, ...] | None:
        """Coordinates of lam in the simple-root basis, when uniquely determined."""
        inv = self._inverse_cartan
        if inv is not None:
            return tuple(sum((row[j] * lam[j] for j in range(self.rank)), Fraction(0)) for row in inv)
        return _solve_unique(self.cartan, tuple(lam))

    def in_root_lattice(self, lam: Weight) -> bool:
        coords = self.root_coords(lam)
        return coords is not None and all(x.denominator == 1 for x in coords)

    def bilinear_form(self, lam: Weight, mu: Weight) -> Fraction:
        """The invariant symmetric form, fixed by (alpha_i, varpi_j) = d_i delta_ij."""
        x = self.root_coords(lam)
        if x is not None:
            return sum(
                (x[i] * self.symmetrizers[i] * mu[i] for i in range(self.rank)),
                Fraction(0),
            )
        y = self.root_coords(mu)
        if y is not None:
            return sum(
                (lam[i] * self.symmetrizers[i] * y[i] for i in range(self.rank)),
                Fraction(0),
            )
        raise FormNotComputableError(
            "form-not-computable: neither argument has root coordinates"
        )

    def bilinear_form_int(self, lam: Weight, mu: Weight) -> int:
        val = self.bilinear_form(lam, mu)
        if val.denominator != 1:
            raise NonIntegralError(f"non-integral: form value {val} is not an integer")
        return int(val)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError(f"index {i} outside 1..{self.rank}")


class PositionMaps(NamedTuple):
    k_plus: int
    k_minus: int
    k_min: int
    k_max: int


@dataclass(frozen=True)
class WeylWord:
    """A sequence of simple-reflection indices together with its Cartan datum."""

    letters: tuple[int, ...]
    datum: CartanDatum

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        for x in letters:
            if not 1 <= x <= self.datum.rank:
                raise ValueError(f"letter {x} outside 1..{self.datum.rank}")

    @property
    def r(self) -> int:
        return len(self.letters)

    def letter(self, k: int) -> int:
        self._check_pos(k)
        return self.letters[k - 1]

    def act(self, lam: Weight, prefix_len: int) -> Weight:
        """Apply w_{<=prefix_len} = s_{i_1} ... s_{i_prefix_len} to lam."""
        if not 0 <= prefix_len <= self.r:
            raise IndexError(f"prefix length {prefix_len} outside 0..{self.r}")
        out = tuple(lam)
        for k in range(prefix_len, 0, -1):
            out = self.datum.reflect(self.letters[k - 1], out)
        return out

    @cached_property
    def _beta_alpha(self) -> tuple[tuple[int, ...], ...]:
        """Root coordinates of beta_k = w_{<k} alpha_{i_k}, for every k."""
        a = self.datum.cartan
        n = self.datum.rank
        out = []
        for k in range(1, self.r + 1):
            x = [1 if j == self.letters[k - 1] - 1 else 0 for j in range(n)]
            for pos in range(k - 1, 0, -1):
                i = self.letters[pos - 1] - 1
                x[i] -= sum(a[i][j] * x[j] for j in range(n))
            out.append(tuple(x))
        return tuple(out)

    @cached_property
    def is_reduced(self) -> bool:
        """True iff every beta_k is a positive root."""
        return all(all(c >= 0 for c in beta) for beta in self._beta_alpha)

    def beta_root_coords(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_reduced:
            raise NotReducedError(f"not-reduced: {self.letters}")
        return self._beta_alpha

    def beta_sequence(self) -> tuple[Weight, ...]:
        """The positive roots beta_k in fundamental-weight coordinates."""
        a = self.datum.cartan
        n = self.datum.rank
        return tuple(
            tuple(sum(a[i][j] * x[j] for j in range(n)) for i in range(n))
            for x in self.beta_root_coords()
        )

    def position_maps(self, k: int) -> PositionMaps:
        self._check_pos(k)
        same = [j for j in range(1, self.r + 1) if self.letters[j - 1] == self.letters[k - 1]]
        after = [j for j in same if j > k]
        before = [j for j in same if j < k]
        return PositionMaps(
            k_plus=min(after) if after else self.r + 1,
            k_minus=max(before) if before else 0,
            k_min=min(same),
            k_max=max(same),
        )

    def k_plus(self, k: int) -> int:
        return self.position_maps(k).k_plus

    def k_minus(self, k: int) -> int:
        return self.position_maps(k).k_minus

    def k_min(self, k: int) -> int:
        return self.position_maps(k).k_min

    def k_max(self, k: int) -> int:
        return self.position_maps(k).k_max

    def exchangeable_positions(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.r + 1) if self.k_plus(k) <= self.r)

    def frozen_positions(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.r + 1) if self.k_plus(k) == self.r + 1)

    def weyl_matrix(self) -> tuple[Weight, ...]:
        """Columns w(varpi_j): a faithful fingerprint of the Weyl element."""
        return tuple(self.act(self.datum.varpi(j), self.r) for j in self.datum.index_set)

    def _check_pos(self, k: int) -> None:
        if not 1 <= k <= self.r:
            raise IndexError(f"position {k} outside 1..{self.r}")


_MAX_ROOTS = 10_000


def positive_roots(datum: CartanDatum) -> frozenset[tuple[int, ...]]:
    """All positive roots in simple-root coordinates (finite type only)."""
    a = datum.cartan
    n = datum.rank
    roots = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = set(roots)
    while frontier:
        new = set()
        for x in frontier:
            for i in range(n):
                y = list(x)
                y[i] -= sum(a[i][j] * x[j] for j in range(n))
                ty = tuple(y)
                if all(c >= 0 for c in ty) and ty not in roots:
                    new.add(ty)
        roots |= new
        frontier = new
        if len(roots) > _MAX_ROOTS:
            raise ValueError("root system is not finite")
    return frozenset(roots)


def longest_word_length(datum: CartanDatum) -> int:
    return len(positive_roots(datum))


def reduced_words_of_longest_element(
    datum: CartanDatum, limit: int | None = None
) -> list[WeylWord]:
    """Reduced words of w0, in lexicographic order, optionally truncated."""
    target = longest_word_length(datum)
    out: list[WeylWord] = []

    def extend(prefix: list[int]) -> None:
        if limit is not None and len(out) >= limit:
            return
        if len(prefix) == target:
            out.append(WeylWord(tuple(prefix), datum))
            return
        for i in datum.index_set:
            cand = WeylWord(tuple(prefix) + (i,), datum)
            if cand.is_reduced:
                extend(list(cand.letters))

    extend([])
    return out


_PRESETS: dict[str, tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]] = {
    "A1": (((2,),), (1,)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    "A3": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)),
    "B2": (((2, -1), (-2, 2)), (2, 1)),
    "B3": (((2, -1, 0), (-1, 2, -1), (0, -2, 2)), (2, 2, 1)),
    "C3": (((2, -1, 0), (-1, 2, -2), (0, -1, 2)), (1, 1, 2)),
    "G2": (((2, -1), (-3, 2)), (3, 1)),
}


def preset_labels() -> tuple[str, ...]:
    return tuple(sorted(_PRESETS))


def preset(label: str) -> CartanDatum:
    key = label.strip().upper()
    if key not in _PRESETS:
        raise ValueError(f"unknown preset {label!r}; choose from {', '.join(preset_labels())}")
    cartan, d = _PRESETS[key]
    return CartanDatum(cartan, d, label=key)


def datum_from_json(text: str) -> CartanDatum:
    """Load a datum from ``{"type": ..., "cartan": [[...]], "symmetrizers": [...]}``.

    ``cartan`` + ``symmetrizers`` take precedence; a bare ``type`` selects a preset.
    """
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("cartan document must be a JSON object")
    if "cartan" in obj:
        if "symmetrizers" not in obj:
            raise ValueError("cartan document needs symmetrizers alongside the matrix")
        return CartanDatum(
            tuple(tuple(row) for row in obj["cartan"]),
            tuple(obj["symmetrizers"]),
            label=obj.get("type"),
        )
    if "type" in obj:
        return preset(obj["type"])
    raise ValueError("cartan document needs a 'cartan' matrix or a 'type' label")
