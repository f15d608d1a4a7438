"""The based quantum torus T(L).

Elements are sparse Laurent polynomials in q-commuting generators X_k over
Z[v^{+-1}] with v = q^(1/2): the basis monomials X^a satisfy

    X^a * X^b = v^{L(a,b)} X^{a+b},   L(a,b) = sum_ij a_i l_ij b_j,

which pins every q-power in the module.  All arithmetic is exact.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotDivisibleError

__all__ = [
    "QLaurent",
    "TorusElement",
    "x_pow",
    "skew_value",
    "exact_div_right",
    "q_commutator_exponent",
    "torus_to_json",
    "torus_from_json",
]


class QLaurent:
    """An integer Laurent polynomial in v, stored as {exponent: coefficient}."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._c = {int(p): int(c) for p, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> QLaurent:
        return cls()

    @classmethod
    def one(cls) -> QLaurent:
        return cls({0: 1})

    @classmethod
    def v_power(cls, n: int, coeff: int = 1) -> QLaurent:
        return cls({n: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> QLaurent:
        out: dict[int, int] = {}
        for p, c in pairs:
            out[p] = out.get(p, 0) + c
        return cls(out)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    def shift(self, n: int) -> QLaurent:
        """Multiply by v^n."""
        if n == 0:
            return self
        return QLaurent({p + n: c for p, c in self._c.items()})

    def __bool__(self) -> bool:
        return bool(self._c)

    def __neg__(self) -> QLaurent:
        return QLaurent({p: -c for p, c in self._c.items()})

    def __add__(self, other: QLaurent | int) -> QLaurent:
        other = _coerce(other)
        out = dict(self._c)
        for p, c in other._c.items():
            out[p] = out.get(p, 0) + c
        return QLaurent(out)

    __radd__ = __add__

    def __sub__(self, other: QLaurent | int) -> QLaurent:
        return self + (-_coerce(other))

    def __rsub__(self, other: QLaurent | int) -> QLaurent:
        return _coerce(other) + (-self)

    def __mul__(self, other: QLaurent | int) -> QLaurent:
        if isinstance(other, int):
            return QLaurent({p: c * other for p, c in self._c.items()})
        out: dict[int, int] = {}
        for p, c in self._c.items():
            for q, e in other._c.items():
                k = p + q
                out[k] = out.get(k, 0) + c * e
        return QLaurent(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def divide_exact(self, other: QLaurent) -> QLaurent | None:
        """Return self / other in Z[v^{+-1}], or None when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return QLaurent.zero()
        p_min = min(self._c)
        q_min = min(other._c)
        num = [0] * (max(self._c) - p_min + 1)
        for p, c in self._c.items():
            num[p - p_min] = c
        den = [0] * (max(other._c) - q_min + 1)
        for p, c in other._c.items():
            den[p - q_min] = c
        quot: dict[int, int] = {}
        lead = len(den) - 1
        while any(num):
            top = max(i for i, c in enumerate(num) if c)
            if top < lead:
                return None
            q, rem = divmod(num[top], den[lead])
            if rem:
                return None
            off = top - lead
            quot[off + p_min - q_min] = q
            for i, c in enumerate(den):
                num[off + i] -= q * c
        return QLaurent(quot)

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        bits = []
        for p, c in self.pairs():
            if p == 0:
                bits.append(f"{c}")
            elif p == 1:
                bits.append(f"{c}*v" if c != 1 else "v")
            else:
                bits.append(f"{c}*v^{p}" if c != 1 else f"v^{p}")
        return " + ".join(bits).replace("+ -", "- ")


def _coerce(x: QLaurent | int) -> QLaurent:
    if isinstance(x, QLaurent):
        return x
    return QLaurent({0: int(x)})


Matrix = tuple[tuple[int, ...], ...]
Exponent = tuple[int, ...]


def skew_value(L: Matrix, a: Exponent, b: Exponent) -> int:
    """L(a,b) = sum_ij a_i l_ij b_j."""
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = L[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


class TorusElement:
    """A sparse element of T(L) in the basis {X^a}."""

    __slots__ = ("L", "terms")

    def __init__(self, L: Matrix, terms: dict[Exponent, QLaurent] | None = None):
        self.L = tuple(tuple(int(x) for x in row) for row in L)
        clean: dict[Exponent, QLaurent] = {}
        for exp, coef in (terms or {}).items():
            if not coef.is_zero():
                clean[tuple(int(x) for x in exp)] = coef
        self.terms = clean

    @classmethod
    def zero(cls, L: Matrix) -> TorusElement:
        return cls(L, {})

    @classmethod
    def one(cls, L: Matrix) -> TorusElement:
        return x_pow(L, (0,) * len(L))

    def is_zero(self) -> bool:
        return not self.terms

    def is_positive(self) -> bool:
        """True iff every coefficient lies in Z_{>=0}[v^{+-1}]."""
        return all(c.is_positive() for c in self.terms.values())

    def support(self) -> tuple[Exponent, ...]:
        return tuple(sorted(self.terms))

    def coefficient(self, exp: Exponent) -> QLaurent:
        return self.terms.get(tuple(exp), QLaurent.zero())

    def n_terms(self) -> int:
        return len(self.terms)

    def _require_same_torus(self, other: TorusElement) -> None:
        if self.L != other.L:
            raise ValueError("mixed-torus operation: elements carry different L matrices")

    def __neg__(self) -> TorusElement:
        return TorusElement(self.L, {e: -c for e, c in self.terms.items()})

    def __add__(self, other: TorusElement) -> TorusElement:
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._require_same_torus(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return TorusElement(self.L, out)

    def __sub__(self, other: TorusElement) -> TorusElement:
        return self + (-other)

    def __mul__(self, other: TorusElement | QLaurent | int) -> TorusElement:
        if isinstance(other, (QLaurent, int)):
            c = _coerce(other)
            return TorusElement(self.L, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, TorusElement):
            return NotImplemented
        self._require_same_torus(other)
        out: dict[Exponent, QLaurent] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                c = (ca * cb).shift(skew_value(self.L, a, b))
                s = out.get(e)
                out[e] = c if s is None else s + c
        return TorusElement(self.L, out)

    def __rmul__(self, other: QLaurent | int) -> TorusElement:
        if isinstance(other, (QLaurent, int)):
            # scalars are central, so left and right scaling agree
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> TorusElement:
        if n < 0:
            raise ValueError("negative powers require exact division")
        out = TorusElement.one(self.L)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.L == other.L and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.L, frozenset((e, c) for e, c in self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"({coef!r})*X^{list(exp)}" for exp, coef in sorted(self.terms.items())]
        return " + ".join(bits)


def x_pow(L: Matrix, a: Iterable[int]) -> TorusElement:
    """The basis monomial X^a (unit coefficient by the basis normalization)."""
    exp = tuple(int(x) for x in a)
    if len(exp) != len(L):
        raise ValueError(f"exponent length {len(exp)} does not match rank {len(L)}")
    return TorusElement(L, {exp: QLaurent.one()})


def _coordinate_box(P: TorusElement, Q: TorusElement) -> tuple[Exponent, Exponent]:
    """Per-coordinate bounds that any quotient of P by Q must satisfy."""
    n = len(P.L)
    lo = []
    hi = []
    for i in range(n):
        p_vals = [e[i] for e in P.terms]
        q_vals = [e[i] for e in Q.terms]
        lo.append(min(p_vals) - min(q_vals))
        hi.append(max(p_vals) - max(q_vals))
    return tuple(lo), tuple(hi)


def exact_div_right(P: TorusElement, Q: TorusElement) -> TorusElement:
    """The unique R with R * Q = P, if it exists in T(L).

    Lex leading-term elimination; per-coordinate quotient bounds guarantee
    termination, raising on any input that is not exactly divisible.
    """
    P._require_same_torus(Q)
    if Q.is_zero():
        raise ZeroDivisionError("division by the zero torus element")
    if P.is_zero():
        return TorusElement.zero(P.L)
    lo, hi = _coordinate_box(P, Q)
    q_lead = max(Q.terms)
    cq = Q.terms[q_lead]
    rem = dict(P.terms)
    quot: dict[Exponent, QLaurent] = {}
    while rem:
        r_lead = max(rem)
        a = tuple(x - y for x, y in zip(r_lead, q_lead))
        if any(x < l or x > h for x, l, h in zip(a, lo, hi)):
            raise NotDivisibleError("not-divisible: quotient exponent escapes its box")
        c = rem[r_lead].shift(-skew_value(P.L, a, q_lead)).divide_exact(cq)
        if c is None:
            raise NotDivisibleError("not-divisible: coefficient division fails")
        quot[a] = c
        for b, cb in Q.terms.items():
            e = tuple(x + y for x, y in zip(a, b))
            delta = (c * cb).shift(skew_value(P.L, a, b))
            s = rem.get(e, QLaurent.zero()) - delta
            if s.is_zero():
                rem.pop(e, None)
            else:
                rem[e] = s
    return TorusElement(P.L, quot)


def torus_to_json(P: TorusElement) -> list[dict]:
    """Canonical serialization: terms sorted by exponent, coefficients by power."""
    return [
        {"exp": list(exp), "coef": [[p, c] for p, c in coef.pairs()]}
        for exp, coef in sorted(P.terms.items())
    ]


def torus_from_json(L: Matrix, data: list[dict]) -> TorusElement:
    terms: dict[Exponent, QLaurent] = {}
    for item in data:
        exp = tuple(int(x) for x in item["exp"])
        coef = QLaurent.from_pairs((int(p), int(c)) for p, c in item["coef"])
        if exp in terms:
            raise ValueError("duplicate exponent in serialized element")
        terms[exp] = coef
    return TorusElement(L, terms)


def q_commutator_exponent(L: Matrix, a: Exponent, b: Exponent) -> int:
    """The integer m with X^a X^b = v^m X^b X^a."""
    return skew_value(L, a, b) - skew_value(L, b, a)
