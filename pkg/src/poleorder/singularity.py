"""Jacobian ideal, Milnor number, weights and spectral values of f."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import DomainError, NonIsolated, NotQuasiHomogeneous
from .groebner import GroebnerBasis, buchberger, quotient_basis, supported_only_at_origin
from .linalg import solve_unique
from .polyalg import Monomial, Polynomial, TermOrder, WeightVector

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SingularityProfile:
    f: Polynomial
    w: WeightVector
    mu: int
    basis: Tuple[Monomial, ...]
    spectral: Dict[Monomial, Fraction]
    jacobian_gb: GroebnerBasis
    notes: Tuple[str, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.f.n

    @property
    def order(self) -> TermOrder:
        return self.jacobian_gb.order

    @property
    def weight_sum(self) -> Fraction:
        return self.w.total

    def spectrum(self) -> List[Fraction]:
        """Spectral values sorted increasingly, with multiplicity."""
        return sorted(self.spectral.values())

    def integral_basis(self) -> List[Monomial]:
        """Milnor basis monomials with integer spectral value."""
        return [b for b in self.basis if self.spectral[b].denominator == 1]


def jacobian_generators(f: Polynomial) -> List[Polynomial]:
    return [f.diff(i) for i in range(f.n)]


def detect_weights(f: Polynomial) -> Optional[WeightVector]:
    """The unique positive w with sum(w_i m_i) == 1 on every monomial of f.

    Returns ``None`` when the linear system is inconsistent, underdetermined,
    or its solution has a non-positive entry.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no weights")
    support = sorted(f.monomials())
    sol = solve_unique([list(m) for m in support], [1] * len(support))
    if sol is None or any(x <= 0 for x in sol):
        return None
    return WeightVector(sol)


def _check_domain(f: Polynomial) -> None:
    if f.is_zero():
        raise DomainError("the zero polynomial does not define a hypersurface")
    if f.n < 3:
        raise DomainError(f"need at least 3 variables, got {f.n}")
    if f.constant_term():
        raise DomainError("f(0) != 0: the origin is not on the hypersurface")


def milnor_number(f: Polynomial) -> int:
    """Dimension of the Milnor algebra, computed globally.

    Only valid as a local invariant because the Jacobian ideal is required to
    be supported at the origin alone; otherwise :class:`NonIsolated`.
    """
    _check_domain(f)
    w = detect_weights(f)
    order = TermOrder(w) if w is not None else TermOrder.grevlex(f.n)
    jac = jacobian_generators(f)
    gb = buchberger(jac, order)
    staircase = quotient_basis(gb)
    if staircase is None:
        raise NonIsolated("Milnor algebra is infinite-dimensional")
    if not staircase:
        raise DomainError("the origin is a smooth point of f = 0")
    if not supported_only_at_origin(jac, order):
        raise NonIsolated("critical points of f away from the origin")
    return len(staircase)


def build_profile(f: Polynomial) -> SingularityProfile:
    _check_domain(f)
    jac = jacobian_generators(f)
    w = detect_weights(f)
    if w is None:
        # an infinite Milnor algebra outranks the weight failure
        if quotient_basis(buchberger(jac)) is None:
            raise NonIsolated("Milnor algebra is infinite-dimensional")
        raise NotQuasiHomogeneous(
            "support of f admits no unique positive weight vector of degree 1"
        )
    order = TermOrder(w)
    gb = buchberger(jac, order)
    staircase = quotient_basis(gb)
    if staircase is None:
        raise NonIsolated("Milnor algebra is infinite-dimensional")
    if not staircase:
        raise DomainError("the origin is a smooth point of f = 0")
    if not supported_only_at_origin(jac, order):
        raise NonIsolated("critical points of f away from the origin")
    spectral = {b: sum((Fraction(e + 1) * wi for e, wi in zip(b, w)), Fraction(0)) for b in staircase}
    notes = (
        "weights detected from the support of f; no coordinate change attempted",
        "monodromy is semisimple for quasi-homogeneous f, so H' is the eigenvalue-1 part",
    )
    log.debug("profile: n=%d mu=%d weights=%s", f.n, len(staircase), w)
    return SingularityProfile(
        f=f, w=w, mu=len(staircase), basis=tuple(staircase), spectral=spectral,
        jacobian_gb=gb, notes=notes,
    )
