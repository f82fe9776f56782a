"""Brute-force referee for H' by exact linear algebra.

Forms with poles along f = 0 are written over a common denominator: an
n-form with pole at most K is ``A dx / f^K`` and an (n-1)-form with pole at
most K-1 is ``sum_I g_I dx_I / f^{K-1}``. Only one Euler degree is
materialized at a time (degree 0 carries all the cohomology). The
differential is computed from scratch with the exterior derivative, with no
use of Gröbner bases or of the Milnor algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .derham import FiltrationTable
from .errors import NotStabilized
from .linalg import EchelonSpace
from .polyalg import Monomial, Polynomial, monomials_of_degree
from .singularity import SingularityProfile

Form = Dict[Tuple[int, ...], Polynomial]

MAX_POLE_CAP_STEPS = 4


def exterior_derivative(form: Form, j: int, f: Polynomial) -> Form:
    """d of ``sum_I g_I dx_I / f^j``, returned as numerators over f^(j+1)."""
    n = f.n
    df = [f.diff(k) for k in range(n)]
    out: Form = {}
    for I, g in form.items():
        if g.is_zero():
            continue
        for k in range(n):
            if k in I:
                continue
            sign = -1 if sum(1 for i in I if i < k) % 2 else 1
            term = f * g.diff(k) - (g * df[k]).scale(j)
            if term.is_zero():
                continue
            J = tuple(sorted(I + (k,)))
            prev = out.get(J)
            term = term.scale(sign)
            out[J] = term if prev is None else prev + term
    return {J: g for J, g in out.items() if not g.is_zero()}


@dataclass(eq=False)
class TruncatedComplex:
    """Degree-``euler_degree`` slice of Omega^{n-1} -> Omega^n at pole cap K.

    ``basis_n[r]`` is the monomial m of ``m dx / f^K``; ``basis_nminus1[c]``
    is ``(i, m)`` for ``m dx_{[n] minus i} / f^(K-1)``. ``d_matrix[c]`` is
    the sparse column ``{r: value}`` of the image of generator c.
    """

    profile: SingularityProfile
    pole_cap: int
    euler_degree: Fraction
    basis_n: List[Monomial]
    basis_nminus1: List[Tuple[int, Monomial]]
    d_matrix: List[Dict[int, Fraction]]
    _index: Dict[Monomial, int] = field(repr=False, default_factory=dict)

    def coordinates(self, numerator: Polynomial) -> Dict[int, Fraction]:
        """Coordinates of ``numerator dx / f^K``; numerator must live in the slice."""
        out = {}
        for m, c in numerator.items():
            r = self._index.get(m)
            if r is None:
                raise ValueError(f"monomial {m} is outside this slice of the complex")
            out[r] = c
        return out

    @property
    def cokernel_dim(self) -> int:
        return len(self.basis_n) - _levels(self)[0].rank


def build_truncated_complex(profile: SingularityProfile, K: int, euler_degree=0) -> TruncatedComplex:
    if K < 1:
        raise ValueError("pole cap must be at least 1")
    return _build(profile, K, Fraction(euler_degree))


@lru_cache(maxsize=64)
def _build(profile: SingularityProfile, K: int, e: Fraction) -> TruncatedComplex:
    f, w, n = profile.f, profile.w, profile.n
    sw = w.total
    basis_n = monomials_of_degree(K - sw + e, w)
    index = {m: r for r, m in enumerate(basis_n)}
    full = tuple(range(n))
    gens: List[Tuple[int, Monomial]] = []
    columns: List[Dict[int, Fraction]] = []
    for i in range(n):
        I = tuple(k for k in range(n) if k != i)
        for m in monomials_of_degree(K - 1 - sw + w[i] + e, w):
            image = exterior_derivative({I: Polynomial.monomial(m)}, K - 1, f)
            num = image.get(full, Polynomial.zero(n))
            gens.append((i, m))
            columns.append({index[t]: c for t, c in num.items()})
    return TruncatedComplex(profile, K, e, basis_n, gens, columns, index)


@lru_cache(maxsize=64)
def _levels(cx: TruncatedComplex) -> Tuple[EchelonSpace, ...]:
    """levels[j] spans d(forms) plus n-forms with pole <= j, j = 0..K."""
    image = EchelonSpace(cx.d_matrix)
    spaces = [image]
    f, w = cx.profile.f, cx.profile.w
    current = image
    K = cx.pole_cap
    for j in range(1, K + 1):
        current = current.copy()
        lift = f ** (K - j)
        for m in monomials_of_degree(j - w.total + cx.euler_degree, w):
            current.insert(cx.coordinates(lift.mul_term(m, 1)))
        spaces.append(current)
    return tuple(spaces)


def stable_pole_cap(profile: SingularityProfile, K: Optional[int]) -> int:
    n = profile.n
    if K is not None:
        if K < n:
            raise ValueError(f"pole cap must be at least n = {n}")
        lo = build_truncated_complex(profile, K - 1).cokernel_dim
        hi = build_truncated_complex(profile, K).cokernel_dim
        if lo != hi:
            raise NotStabilized(f"cokernel dimension {lo} at cap {K - 1} but {hi} at cap {K}")
        return K
    K = n
    for _ in range(MAX_POLE_CAP_STEPS):
        try:
            return stable_pole_cap(profile, K)
        except NotStabilized:
            K += 1
    raise NotStabilized(f"no stable pole cap up to {K}")


def oracle_hprime_dim(profile: SingularityProfile, K: Optional[int] = None) -> int:
    K = stable_pole_cap(profile, K)
    return build_truncated_complex(profile, K).cokernel_dim


def oracle_pole_dims(profile: SingularityProfile, l_max: int, K: Optional[int] = None) -> FiltrationTable:
    K = stable_pole_cap(profile, K)
    cx = build_truncated_complex(profile, K)
    levels = _levels(cx)
    base = levels[0].rank
    dims = tuple(levels[min(l + 1, K)].rank - base for l in range(l_max + 1))
    return FiltrationTable(dims=dims, hprime_dim=levels[K].rank - base)


def _slice_vector(A: Polynomial, k: int, profile: SingularityProfile, K: int):
    """Coordinates of the Euler-degree-0 part of A dx / f^k at pole cap K."""
    cx = build_truncated_complex(profile, K)
    part = A.homogeneous_part(k - profile.weight_sum, profile.w)
    return cx, cx.coordinates(part * profile.f ** (K - k))


def oracle_class_vanishes(A: Polynomial, k: int, profile: SingularityProfile, K: Optional[int] = None) -> bool:
    if k < 0:
        raise ValueError("pole order must be non-negative")
    K = stable_pole_cap(profile, max(K or profile.n, k, profile.n))
    cx, vec = _slice_vector(A, k, profile, K)
    return _levels(cx)[0].contains(vec)


def oracle_pole_level(A: Polynomial, k: int, profile: SingularityProfile, K: Optional[int] = None) -> Optional[int]:
    """Least j such that [A dx / f^k] has a representative with pole <= j,
    or ``None`` when the class is zero."""
    K = stable_pole_cap(profile, max(K or profile.n, k, profile.n))
    cx, vec = _slice_vector(A, k, profile, K)
    for j, space in enumerate(_levels(cx)):
        if space.contains(vec):
            return None if j == 0 else j
    raise AssertionError("class not captured at its own pole order")


def d_squared_vanishes(profile: SingularityProfile, K: int) -> bool:
    """Compose d: Omega^{n-2} -> Omega^{n-1} with the assembled d_matrix.

    Each (n-2)-form generator at pole K-2 is differentiated, expanded in
    ``basis_nminus1`` coordinates and pushed through ``d_matrix``.
    """
    if K < 2:
        raise ValueError("need K >= 2 to reach the (n-2)-forms")
    cx = build_truncated_complex(profile, K)
    f, w, n = profile.f, profile.w, profile.n
    sw = w.total
    col_index = {g: c for c, g in enumerate(cx.basis_nminus1)}
    for J in combinations(range(n), n - 2):
        missing = [k for k in range(n) if k not in J]
        deg = K - 2 - sw + sum(w[k] for k in missing) + cx.euler_degree
        for m in monomials_of_degree(deg, w):
            image = exterior_derivative({J: Polynomial.monomial(m)}, K - 2, f)
            total: Dict[int, Fraction] = {}
            for I, g in image.items():
                (i,) = [k for k in range(n) if k not in I]
                for t, c in g.items():
                    col = cx.d_matrix[col_index[(i, t)]]
                    for r, v in col.items():
                        total[r] = total.get(r, 0) + c * v
            if any(total.values()):
                return False
    return True
