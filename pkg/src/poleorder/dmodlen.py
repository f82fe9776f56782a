"""D-module lengths and membership tests for meromorphic germs h / f^k.

A germ s lies in the intersection-cohomology preimage L exactly when every
form s * x^beta dx is exact, and in the D-module generated by 1/f^(l+1)
exactly when every such class has pole order at most l+1. Both reduce to a
finite check because only beta of one weighted degree per homogeneous piece
of h can produce a class of Euler degree zero.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .derham import (
    CohomologyClass,
    FiltrationTable,
    max_pole_level,
    pole_filtration_dims,
    reduce_class,
)
from .errors import DomainError, GenericAgreementViolated, MultipleOrNonIsolatedSingularities
from .groebner import buchberger, normal_form_with_cofactors, supported_only_at_origin
from .linalg import EchelonSpace
from .polyalg import Polynomial, graded_components, monomials_of_degree
from .singularity import SingularityProfile, build_profile, jacobian_generators

log = logging.getLogger(__name__)

IN_L = "in_L"


@dataclass(frozen=True)
class MeromorphicGerm:
    """The germ ``numerator / f**pole``."""

    numerator: Polynomial
    pole: int

    def __post_init__(self):
        if self.pole < 0:
            raise ValueError("pole order must be non-negative")

    def derivative(self, i: int, f: Polynomial) -> "MeromorphicGerm":
        h, k = self.numerator, self.pole
        return MeromorphicGerm(h.diff(i) * f - (h * f.diff(i)).scale(k), k + 1)

    def times(self, p: Polynomial) -> "MeromorphicGerm":
        return MeromorphicGerm(self.numerator * p, self.pole)


def normalize_germ(s: MeromorphicGerm, f: Polynomial) -> Tuple[MeromorphicGerm, Optional[str]]:
    """Cancel powers of f from the numerator; the note says what was done."""
    h, k = s.numerator, s.pole
    if h.is_zero():
        return MeromorphicGerm(h, 0), ("zero numerator" if k else None)
    gb = buchberger([f])
    cancelled = 0
    while k > 0:
        div = normal_form_with_cofactors(h, gb)
        if not div.remainder.is_zero():
            break
        h, k = div.cofactors[0], k - 1
        cancelled += 1
    note = None
    if cancelled:
        note = f"cancelled f^{cancelled} from the numerator"
        log.info("germ not reduced: %s", note)
    return MeromorphicGerm(h, k), note


def witness_classes(s: MeromorphicGerm, profile: SingularityProfile) -> List[Tuple[tuple, CohomologyClass]]:
    """All classes [s * x^beta dx] that can be nonzero, with their beta."""
    s, _ = normalize_germ(s, profile.f)
    h, k = s.numerator, s.pole
    out = []
    if k == 0 or h.is_zero():
        return out
    w, sw = profile.w, profile.weight_sum
    for d, part in graded_components(h, w).items():
        for beta in monomials_of_degree(k - sw - d, w):
            out.append((beta, reduce_class(part.mul_term(beta, 1), k, profile)))
    return out


def vilonen_membership(s: MeromorphicGerm, profile: SingularityProfile) -> bool:
    return all(not c.coeffs for _, c in witness_classes(s, profile))


def power_membership(s: MeromorphicGerm, l: int, profile: SingularityProfile) -> bool:
    """Is s in the D-module generated by 1 / f^(l+1)?"""
    if l < 0:
        raise ValueError("l must be non-negative")
    for _, c in witness_classes(s, profile):
        top = max_pole_level(c)
        if top is not None and top > l + 1:
            return False
    return True


def min_power_index(s: MeromorphicGerm, profile: SingularityProfile) -> Union[int, str]:
    levels = [max_pole_level(c) for _, c in witness_classes(s, profile)]
    levels = [v for v in levels if v is not None]
    if not levels:
        return IN_L
    return max(levels) - 1


def submodule_length(gens: Sequence[MeromorphicGerm], profile: SingularityProfile) -> int:
    """Length of D*M / L for M generated by ``gens``: the dimension of the
    span of all classes [s_j x^beta dx]."""
    reduced = [normalize_germ(s, profile.f)[0] for s in gens]
    if not any(s.pole >= 1 and not s.numerator.is_zero() for s in reduced):
        raise GenericAgreementViolated(
            "need a generator h/f^k with k >= 1 and f not dividing h"
        )
    span = EchelonSpace()
    for s in reduced:
        for _, c in witness_classes(s, profile):
            if c.coeffs:
                span.insert(c.vector())
    return span.rank


def length_power_quotient(profile: SingularityProfile, l: int) -> int:
    """Length of D(1/f^(l+1)) / L, i.e. dim P_l H'."""
    return pole_filtration_dims(profile, l).dims[l]


def length_hodge_quotient(profile: SingularityProfile, l: int) -> int:
    """Length of D F_l / L, i.e. dim F_l H'; F = P for quasi-homogeneous f."""
    return length_power_quotient(profile, l)


def reduced_genus(profile: SingularityProfile) -> int:
    return sum(1 for b in profile.integral_basis() if profile.spectral[b] == 1)


@dataclass(frozen=True)
class LengthReport:
    hprime_dim: int
    pole_dims: FiltrationTable
    reduced_genus: int
    quotient_lengths: Tuple[int, ...]
    total_length_O_star_Z: int
    length_quotient_by_O: int
    composition_series: Tuple[Tuple[str, int], ...]
    notes: Tuple[str, ...] = field(default=())


def meromorphic_length_report(profile: SingularityProfile, l_max: Optional[int] = None) -> LengthReport:
    if l_max is None:
        l_max = profile.n - 2
    table = pole_filtration_dims(profile, l_max)
    h = table.hprime_dim
    series = (("O", 1), ("L_Z", 1), ("delta_o", h))
    notes = (
        "total length counts O, L_Z and dim H' copies of delta_o",
        "length_quotient_by_O counts the composition factors of O(*Z)/O",
        "Hodge and pole order filtrations coincide for quasi-homogeneous f",
    )
    if l_max < profile.n - 2:
        notes += (f"l_max = {l_max} < n - 2: quotient lengths may not reach dim H'",)
    return LengthReport(
        hprime_dim=h,
        pole_dims=table,
        reduced_genus=reduced_genus(profile),
        quotient_lengths=table.dims,
        total_length_O_star_Z=2 + h,
        length_quotient_by_O=1 + h,
        composition_series=series,
        notes=notes,
    )


def algebraic_report(g: Polynomial, l_max: Optional[int] = None) -> LengthReport:
    """Report for a polynomial g after checking that Sing(g = 0) is {0}."""
    if g.constant_term():
        raise DomainError("g(0) != 0: the origin is not on the hypersurface")
    if g.is_zero():
        raise DomainError("the zero polynomial does not define a hypersurface")
    ideal = [g] + jacobian_generators(g)
    if not supported_only_at_origin(ideal):
        raise MultipleOrNonIsolatedSingularities(
            "singular locus of g = 0 is not exactly the origin"
        )
    return meromorphic_length_report(build_profile(g), l_max)

