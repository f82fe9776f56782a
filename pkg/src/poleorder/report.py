"""Serializable analysis reports.

Rationals are written as strings ("1/3", "2"); integers stay integers. Key
order is fixed so identical requests give byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .derham import pole_filtration_dims
from .dmodlen import meromorphic_length_report
from .oracle import oracle_pole_dims, stable_pole_cap
from .singularity import SingularityProfile

KEYS = (
    "input", "variables", "weights", "mu", "spectral", "hprime_dim", "pole_dims",
    "reduced_genus", "quotient_lengths", "total_length_including_O",
    "length_quotient_by_O", "oracle", "version", "order",
)


@dataclass(frozen=True)
class Report:
    input: str
    variables: List[str]
    weights: List[Fraction]
    mu: int
    spectral: List[Fraction]
    hprime_dim: int
    pole_dims: List[int]
    reduced_genus: int
    quotient_lengths: List[int]
    total_length_including_O: int
    length_quotient_by_O: int
    oracle: Optional[dict]
    version: str
    order: dict

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in KEYS}
        d["weights"] = [str(w) for w in self.weights]
        d["spectral"] = [str(s) for s in self.spectral]
        d["variables"] = list(self.variables)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        missing = [k for k in KEYS if k not in d]
        if missing:
            raise ValueError(f"report is missing keys {missing}")
        kw = {k: d[k] for k in KEYS}
        kw["weights"] = [Fraction(w) for w in d["weights"]]
        kw["spectral"] = [Fraction(s) for s in d["spectral"]]
        return cls(**kw)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @property
    def oracle_agrees(self) -> Optional[bool]:
        return None if self.oracle is None else self.oracle["agrees"]

    def to_text(self) -> str:
        lines = [
            f"input: {self.input}",
            f"variables: {', '.join(self.variables)}",
            f"weights: {', '.join(str(w) for w in self.weights)}",
            f"Milnor number: {self.mu}",
            f"spectrum: {' '.join(str(s) for s in self.spectral)}",
            f"dim H': {self.hprime_dim}",
            f"dim P_l H' (l = 0..): {self.pole_dims}",
            f"reduced genus: {self.reduced_genus}",
            f"length D(1/f^(l+1))/L (l = 0..): {self.quotient_lengths}",
            f"length O(*Z), counting O: {self.total_length_including_O}",
            f"length O(*Z)/O: {self.length_quotient_by_O}",
        ]
        if self.oracle is not None:
            o = self.oracle
            verdict = "agrees" if o["agrees"] else "DISAGREES"
            lines.append(f"oracle (pole cap {o['pole_cap']}): dim H' {o['hprime_dim']}, "
                         f"pole dims {o['pole_dims']} -- {verdict}")
        lines.append(f"order: {self.order['kind']}, precedence {' > '.join(self.order['precedence'])}")
        lines.append(f"version: {self.version}")
        return "\n".join(lines)


def consistency_checks(report: Report) -> dict:
    """Internal laws every report must satisfy."""
    n = len(report.variables)
    dims = report.pole_dims
    values = sorted(report.spectral)
    checks = {
        "pole_dims_monotone": all(a <= b for a, b in zip(dims, dims[1:])),
        "pole_dims_reach_hprime": len(dims) < n - 1 or dims[n - 2] == report.hprime_dim,
        "genus_is_first_piece": not dims or report.reduced_genus == dims[0],
        "spectrum_symmetric": values == sorted(n - s for s in values),
        "mu_matches_spectrum": len(values) == report.mu,
    }
    if report.oracle is not None:
        checks["oracle_agrees"] = bool(report.oracle["agrees"])
    return checks


def build_report(text: str, variables: Sequence[str], profile: SingularityProfile,
                 l_max: int, with_oracle: bool = False, pole_cap: Optional[int] = None) -> Report:
    lengths = meromorphic_length_report(profile, l_max)
    oracle = None
    if with_oracle:
        cap = stable_pole_cap(profile, pole_cap)
        table = oracle_pole_dims(profile, l_max, cap)
        spectral = pole_filtration_dims(profile, l_max)
        oracle = {
            "pole_cap": cap,
            "hprime_dim": table.hprime_dim,
            "pole_dims": list(table.dims),
            "agrees": table == spectral,
        }
    return Report(
        input=text,
        variables=list(variables),
        weights=list(profile.w),
        mu=profile.mu,
        spectral=profile.spectrum(),
        hprime_dim=lengths.hprime_dim,
        pole_dims=list(lengths.pole_dims.dims),
        reduced_genus=lengths.reduced_genus,
        quotient_lengths=list(lengths.quotient_lengths),
        total_length_including_O=lengths.total_length_O_star_Z,
        length_quotient_by_O=lengths.length_quotient_by_O,
        oracle=oracle,
        version=__version__,
        order=profile.order.describe(variables),
    )
