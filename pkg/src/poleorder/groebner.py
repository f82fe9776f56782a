"""Buchberger's algorithm with cofactor tracking, normal forms, staircases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polyalg import (
    Monomial,
    Polynomial,
    TermOrder,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis plus, for each element, its expression in the
    original generators: ``basis[j] == sum(transform[j][i] * generators[i])``.
    """

    generators: Tuple[Polynomial, ...]
    basis: Tuple[Polynomial, ...]
    order: TermOrder
    transform: Tuple[Tuple[Polynomial, ...], ...]

    @property
    def n(self) -> int:
        return self.generators[0].n

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit_ideal(self) -> bool:
        return any(not any(m) for m in self.leading_monomials())

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form_with_cofactors(p, self).remainder


@dataclass(frozen=True)
class DivisionResult:
    remainder: Polynomial
    cofactors: Tuple[Polynomial, ...]


def _reduce(p: Dict[Monomial, Fraction], basis, leads, order, n):
    """Fully reduce the term dict ``p``; returns (remainder, quotients)."""
    work = dict(p)
    quotients: List[Dict[Monomial, Fraction]] = [dict() for _ in basis]
    rem: Dict[Monomial, Fraction] = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        for j, (lm, lc) in enumerate(leads):
            if monomial_divides(lm, m):
                q = monomial_quotient(m, lm)
                coef = c / lc
                qj = quotients[j]
                qj[q] = qj.get(q, 0) + coef
                for gm, gc in basis[j].items():
                    t = monomial_mul(gm, q)
                    v = work.get(t, 0) - coef * gc
                    if v:
                        work[t] = v
                    else:
                        work.pop(t, None)
                break
        else:
            rem[m] = c
            del work[m]
    qpolys = [Polynomial._raw({k: v for k, v in q.items() if v}, n) for q in quotients]
    return Polynomial._raw(rem, n), qpolys


def _combine(coeffs: Sequence[Polynomial], rows, r: int, n: int) -> List[Polynomial]:
    out = [Polynomial.zero(n) for _ in range(r)]
    for q, row in zip(coeffs, rows):
        if q.is_zero():
            continue
        for i in range(r):
            if not row[i].is_zero():
                out[i] = out[i] + q * row[i]
    return out


def buchberger(gens: Sequence[Polynomial], order: Optional[TermOrder] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are pruned with the product criterion and Buchberger's chain
    criterion, and always processed smallest lcm first, so the run is
    deterministic. The reduced basis is returned monic and sorted by
    increasing leading monomial.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError("generators live in different polynomial rings")
    order = order or TermOrder.grevlex(n)
    if order.n != n:
        raise ValueError("term order has the wrong number of variables")
    r = len(gens)
    one = Polynomial.constant(1, n)
    zero = Polynomial.zero(n)

    G: List[Polynomial] = []
    T: List[List[Polynomial]] = []
    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        G.append(g)
        T.append([one if k == i else zero for k in range(r)])

    leads = [(g.leading_monomial(order), g.leading_coefficient(order)) for g in G]
    pairs = set()
    for j in range(len(G)):
        for i in range(j):
            pairs.add((i, j))

    def lcm_of(pair):
        return monomial_lcm(leads[pair[0]][0], leads[pair[1]][0])

    while pairs:
        pair = min(pairs, key=lambda p: (order.key(lcm_of(p)), p))
        pairs.discard(pair)
        i, j = pair
        mi, ci = leads[i]
        mj, cj = leads[j]
        lcm = monomial_lcm(mi, mj)
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue
        # chain criterion
        chained = False
        for k in range(len(G)):
            if k in (i, j) or not monomial_divides(leads[k][0], lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chained = True
                break
        if chained:
            continue
        ui, uj = monomial_quotient(lcm, mi), monomial_quotient(lcm, mj)
        s = G[i].mul_term(ui, 1 / ci) - G[j].mul_term(uj, 1 / cj)
        s_t = [T[i][k].mul_term(ui, 1 / ci) - T[j][k].mul_term(uj, 1 / cj) for k in range(r)]
        rem, qs = _reduce(s._terms, G, leads, order, n)
        if rem.is_zero():
            continue
        sub = _combine(qs, T, r, n)
        new_t = [a - b for a, b in zip(s_t, sub)]
        idx = len(G)
        G.append(rem)
        T.append(new_t)
        leads.append((rem.leading_monomial(order), rem.leading_coefficient(order)))
        for k in range(idx):
            pairs.add((k, idx))

    # minimal basis: drop elements whose leading monomial is a multiple of another's
    keep = []
    for a in range(len(G)):
        ma = leads[a][0]
        redundant = False
        for b in range(len(G)):
            if a == b:
                continue
            mb = leads[b][0]
            if monomial_divides(mb, ma) and (mb != ma or b < a):
                redundant = True
                break
        if not redundant:
            keep.append(a)

    basis, transform = [], []
    for a in keep:
        inv = 1 / leads[a][1]
        basis.append(G[a].scale(inv))
        transform.append(tuple(x.scale(inv) for x in T[a]))
    basis, transform = _autoreduce(basis, transform, order, r, n)
    ranked = sorted(range(len(basis)), key=lambda k: order.key(basis[k].leading_monomial(order)))
    return GroebnerBasis(
        generators=gens,
        basis=tuple(basis[k] for k in ranked),
        order=order,
        transform=tuple(transform[k] for k in ranked),
    )


def _autoreduce(basis, transform, order, r, n):
    changed = True
    while changed:
        changed = False
        leads = [(g.leading_monomial(order), Fraction(1)) for g in basis]
        for a, g in enumerate(basis):
            lm = leads[a][0]
            others = [b for b in range(len(basis)) if b != a]
            tail = {m: c for m, c in g.items() if m != lm}
            rem, qs = _reduce(tail, [basis[b] for b in others], [leads[b] for b in others], order, n)
            if rem._terms == tail:
                continue
            sub = _combine(qs, [transform[b] for b in others], r, n)
            basis[a] = rem + Polynomial._raw({lm: Fraction(1)}, n)
            transform[a] = tuple(x - y for x, y in zip(transform[a], sub))
            changed = True
    return basis, transform


def normal_form_with_cofactors(p: Polynomial, gb: GroebnerBasis) -> DivisionResult:
    """Divide ``p`` by the basis; cofactors refer to the original generators.

    ``p == sum(cofactors[i] * gb.generators[i]) + remainder`` holds exactly.
    """
    n = gb.n
    if p.n != n:
        raise ValueError(f"variable count mismatch: {p.n} vs {n}")
    r = len(gb.generators)
    if p.is_zero():
        return DivisionResult(Polynomial.zero(n), tuple(Polynomial.zero(n) for _ in range(r)))
    leads = [(g.leading_monomial(gb.order), g.leading_coefficient(gb.order)) for g in gb.basis]
    rem, qs = _reduce(p._terms, gb.basis, leads, gb.order, n)
    cof = _combine(qs, gb.transform, r, n)
    return DivisionResult(rem, tuple(cof))


def quotient_basis(gb: GroebnerBasis) -> Optional[List[Monomial]]:
    """Standard monomials of the quotient ring, or ``None`` if there are
    infinitely many. The list is sorted increasingly in the basis order."""
    n = gb.n
    leads = gb.leading_monomials()
    if not leads:
        return None
    start = (0,) * n
    if start in leads:
        return []
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in leads):
            return None
    seen = {start}
    stack = [start]
    while stack:
        m = stack.pop()
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt in seen or any(monomial_divides(lm, nxt) for lm in leads):
                continue
            seen.add(nxt)
            stack.append(nxt)
    return sorted(seen, key=gb.order.key)


def supported_only_at_origin(gens: Sequence[Polynomial], order: Optional[TermOrder] = None) -> bool:
    """True iff the ideal has a finite-dimensional quotient whose only point
    is the origin (every variable is nilpotent modulo the ideal)."""
    gb = buchberger(gens, order)
    staircase = quotient_basis(gb)
    if staircase is None:
        return False
    dim = len(staircase)
    if dim == 0:
        return True
    n = gb.n
    for i in range(n):
        power = Polynomial.monomial(tuple(dim if j == i else 0 for j in range(n)))
        if not gb.normal_form(power).is_zero():
            return False
    return True
