"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of non-negative exponents. A :class:`Polynomial`
maps monomials to nonzero :class:`~fractions.Fraction` coefficients and never
changes after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class WeightVector(tuple):
    """Positive rational weights, one per variable."""

    def __new__(cls, weights: Iterable):
        w = tuple(_as_fraction(x) for x in weights)
        if not w:
            raise ValueError("empty weight vector")
        if any(x <= 0 for x in w):
            raise ValueError(f"weights must be positive, got {w}")
        return super().__new__(cls, w)

    @classmethod
    def standard(cls, n: int) -> "WeightVector":
        return cls([1] * n)

    @property
    def total(self) -> Fraction:
        return sum(self, Fraction(0))

    def __repr__(self) -> str:
        return "WeightVector(" + ", ".join(str(x) for x in self) + ")"


def weighted_degree(m: Sequence[int], w: Sequence) -> Fraction:
    if len(m) != len(w):
        raise ValueError(f"monomial of length {len(m)} against {len(w)} weights")
    return sum((Fraction(e) * wi for e, wi in zip(m, w)), Fraction(0))


class TermOrder:
    """Weighted-graded reverse lexicographic order.

    Monomials are compared first by weighted degree, then by reverse
    lexicographic order with variable precedence x_0 > x_1 > ... > x_{n-1}.
    Positive weights make the order global (1 is the smallest monomial).
    """

    kind = "weighted-graded-reverse-lexicographic"

    def __init__(self, weights: Sequence):
        self.weights = WeightVector(weights)
        self._cache: Dict[Monomial, tuple] = {}

    @classmethod
    def grevlex(cls, n: int) -> "TermOrder":
        return cls(WeightVector.standard(n))

    @property
    def n(self) -> int:
        return len(self.weights)

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = (weighted_degree(m, self.weights), tuple(-e for e in reversed(m)))
            self._cache[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def describe(self, variables: Optional[Sequence[str]] = None) -> dict:
        names = list(variables) if variables is not None else [f"x{i}" for i in range(self.n)]
        return {
            "kind": self.kind,
            "weights": [str(w) for w in self.weights],
            "precedence": names,
            "tie_break": "reverse-lexicographic, last variable smallest",
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, TermOrder) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(("TermOrder", tuple(self.weights)))

    def __repr__(self) -> str:
        return f"TermOrder({list(map(str, self.weights))})"


class Polynomial:
    """Immutable polynomial in ``n`` variables with rational coefficients."""

    __slots__ = ("n", "_terms", "_hash", "_lead")

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None, n: Optional[int] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                c = _as_fraction(c)
                if c:
                    clean[m] = clean.get(m, Fraction(0)) + c
            clean = {m: c for m, c in clean.items() if c}
        if n is None:
            if not clean:
                raise ValueError("variable count required for the zero polynomial")
            n = len(next(iter(clean)))
        for m in clean:
            if len(m) != n:
                raise ValueError(f"monomial {m} does not have {n} exponents")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
        self.n = n
        self._terms = clean
        self._hash = None
        self._lead = {}

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction], n: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        p._lead = {}
        return p

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw({}, n)

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        c = _as_fraction(c)
        return cls._raw({(0,) * n: c} if c else {}, n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for {n} variables")
        m = tuple(1 if j == i else 0 for j in range(n))
        return cls._raw({m: Fraction(1)}, n)

    @classmethod
    def monomial(cls, m: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(m): c}, len(m))

    # -- accessors -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        lead = self._lead.get(order)
        if lead is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading term")
            lead = max(self._terms, key=order.key)
            self._lead[order] = lead
        return lead

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def sorted_terms(self, order: TermOrder):
        """Terms in decreasing order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial._raw(terms, self.n)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()}, self.n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw({m: c * v for m, v in self._terms.items()}, self.n)

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        """Multiply by the single term ``c * x^m``."""
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw({monomial_mul(k, m): c * v for k, v in self._terms.items()}, self.n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = monomial_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in terms.items() if c}, self.n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, i: int) -> "Polynomial":
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for {self.n} variables")
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                terms[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return Polynomial._raw(terms, self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- grading ---------------------------------------------------------

    def weighted_degrees(self, w: Sequence) -> set:
        return {weighted_degree(m, w) for m in self._terms}

    def is_homogeneous(self, w: Sequence) -> bool:
        return len(self.weighted_degrees(w)) <= 1

    def homogeneous_part(self, d, w: Sequence) -> "Polynomial":
        d = _as_fraction(d)
        return Polynomial._raw(
            {m: c for m, c in self._terms.items() if weighted_degree(m, w) == d}, self.n
        )

    # -- display ---------------------------------------------------------

    def render(self, variables: Optional[Sequence[str]] = None, order: Optional[TermOrder] = None) -> str:
        """Text form accepted by :func:`poleorder.parser.parse_polynomial`."""
        names = list(variables) if variables is not None else [f"x{i}" for i in range(self.n)]
        if not self._terms:
            return "0"
        order = order or TermOrder.grevlex(self.n)
        pieces = []
        for m, c in self.sorted_terms(order):
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r}, n={self.n})"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    return p * q


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    return p.diff(i)


def graded_components(p: Polynomial, w: Sequence) -> Dict[Fraction, Polynomial]:
    """Split ``p`` into its weighted-homogeneous pieces, keyed by degree."""
    if len(w) != p.n:
        raise ValueError(f"{len(w)} weights for {p.n} variables")
    parts: Dict[Fraction, Dict[Monomial, Fraction]] = {}
    for m, c in p.items():
        parts.setdefault(weighted_degree(m, w), {})[m] = c
    return {d: Polynomial._raw(t, p.n) for d, t in sorted(parts.items())}


def euler_operator(p: Polynomial, w: Sequence) -> Polynomial:
    """Apply the weighted Euler field sum_i w_i x_i d/dx_i."""
    terms = {}
    for m, c in p.items():
        d = weighted_degree(m, w)
        if d:
            terms[m] = c * d
    return Polynomial._raw(terms, p.n)


def monomials_of_degree(d, w: Sequence) -> list:
    """All monomials of weighted degree exactly ``d`` (finite since w > 0)."""
    d = _as_fraction(d)
    w = [_as_fraction(x) for x in w]
    n = len(w)
    out = []
    if d < 0:
        return out

    def rec(i, remaining, prefix):
        if i == n - 1:
            e = remaining / w[i]
            if e.denominator == 1:
                out.append(prefix + (int(e),))
            return
        e = 0
        while e * w[i] <= remaining:
            rec(i + 1, remaining - e * w[i], prefix + (e,))
            e += 1

    rec(0, d, ())
    return out


def poly_sum(polys: Iterable[Polynomial], n: int) -> Polynomial:
    return reduce(lambda a, b: a + b, polys, Polynomial.zero(n))
