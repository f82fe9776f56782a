"""Classes of A dx / f^k in H' and the pole order filtration.

Every class has a unique representative

    sum_beta c_beta * x^beta dx / f^{l(beta)}

over Milnor-basis monomials with integer spectral value l(beta). It is found
by Griffiths-Dwork reduction. With w_{(i)} the (n-1)-form such that
dx_i ^ w_{(i)} = dx,

    d(g w_{(i)} / f^{k-1}) = (d_i g) dx / f^{k-1} - (k-1) g (d_i f) dx / f^k,

so modulo exact forms

    (sum_i g_i d_i f) dx / f^k  ==  (sum_i d_i g_i) dx / ((k-1) f^{k-1}).

Homogeneous numerators whose Euler degree deg_w(A) + sum(w) - k is nonzero
give exact forms (contract with the weighted Euler field) and are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .groebner import normal_form_with_cofactors
from .polyalg import Monomial, Polynomial, weighted_degree
from .singularity import SingularityProfile


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    coeffs: Dict[Monomial, Fraction]
    profile: SingularityProfile

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.profile is other.profile and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if self.profile is not other.profile:
            raise ValueError("classes belong to different singularities")
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            s = out.get(b, 0) + c
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        return CohomologyClass(out, self.profile)

    def scale(self, c) -> "CohomologyClass":
        c = Fraction(c)
        if not c:
            return CohomologyClass({}, self.profile)
        return CohomologyClass({b: c * v for b, v in self.coeffs.items()}, self.profile)

    def __neg__(self) -> "CohomologyClass":
        return self.scale(-1)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def pole_level(self, beta: Monomial) -> int:
        return int(self.profile.spectral[beta])

    def vector(self) -> Dict[int, Fraction]:
        """Coordinates against ``profile.integral_basis()``."""
        index = {b: i for i, b in enumerate(self.profile.integral_basis())}
        return {index[b]: c for b, c in self.coeffs.items()}

    def __repr__(self) -> str:
        body = ", ".join(f"{b}: {c}" for b, c in sorted(self.coeffs.items()))
        return f"CohomologyClass({{{body}}})"


@dataclass(frozen=True)
class FiltrationTable:
    dims: Tuple[int, ...]
    hprime_dim: int


def euler_degree(A: Polynomial, k: int, profile: SingularityProfile) -> Fraction:
    degs = A.weighted_degrees(profile.w)
    if len(degs) != 1:
        raise ValueError("numerator must be a nonzero weighted-homogeneous polynomial")
    return degs.pop() + profile.weight_sum - k


def reduce_class(A: Polynomial, k: int, profile: SingularityProfile) -> CohomologyClass:
    """Canonical representative of [A dx / f^k]."""
    if k < 1:
        raise ValueError(f"pole order must be at least 1, got {k}")
    if A.n != profile.n:
        raise ValueError(f"variable count mismatch: {A.n} vs {profile.n}")
    w, sw, gb = profile.w, profile.weight_sum, profile.jacobian_gb
    coeffs: Dict[Monomial, Fraction] = {}
    level = k
    current = A.homogeneous_part(level - sw, w)
    while not current.is_zero():
        div = normal_form_with_cofactors(current, gb)
        for b, c in div.remainder.items():
            s = coeffs.get(b, 0) + c
            if s:
                coeffs[b] = s
            else:
                coeffs.pop(b, None)
        if level == 1:
            # cofactors would have negative weighted degree here
            break
        div_sum = Polynomial.zero(profile.n)
        for i, g in enumerate(div.cofactors):
            div_sum = div_sum + g.diff(i)
        level -= 1
        current = div_sum.homogeneous_part(level - sw, w).scale(Fraction(1, level))
    return CohomologyClass(coeffs, profile)


def class_is_zero(c: CohomologyClass) -> bool:
    return not c.coeffs


def max_pole_level(c: CohomologyClass) -> Optional[int]:
    if not c.coeffs:
        return None
    return max(c.pole_level(b) for b in c.coeffs)


def pole_filtration_dims(profile: SingularityProfile, l_max: int) -> FiltrationTable:
    """dim P_l H' for l = 0..l_max, counted on the spectrum."""
    if l_max < 0:
        raise ValueError("l_max must be non-negative")
    levels = [int(profile.spectral[b]) for b in profile.integral_basis()]
    dims = tuple(sum(1 for v in levels if v <= l + 1) for l in range(l_max + 1))
    return FiltrationTable(dims=dims, hprime_dim=len(levels))


def class_from_monomial(beta: Monomial, profile: SingularityProfile) -> CohomologyClass:
    """The basis class [x^beta dx / f^{l(beta)}]; beta must have integer l."""
    ell = profile.spectral[beta]
    if ell.denominator != 1:
        raise ValueError(f"{beta} has non-integer spectral value {ell}")
    return CohomologyClass({beta: Fraction(1)}, profile)


def numerator_degree_for_pole(k: int, profile: SingularityProfile) -> Fraction:
    """Weighted degree a numerator needs to have Euler degree 0 at pole k."""
    return k - profile.weight_sum


def spectral_value(beta: Monomial, profile: SingularityProfile) -> Fraction:
    return weighted_degree(tuple(e + 1 for e in beta), profile.w)
