"""Built-in test corpus of quasi-homogeneous isolated singularities."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Dict, List


def brieskorn_pham(exponents, variables=None) -> Dict[str, object]:
    names = list(variables or ["x", "y", "z", "w", "v"][: len(exponents)])
    text = " + ".join(f"{v}^{a}" for v, a in zip(names, exponents))
    mu = 1
    for a in exponents:
        mu *= a - 1
    return {"name": "BP" + "_".join(map(str, exponents)), "poly": text, "vars": names, "mu": mu}


def builtin_corpus(max_mu: int = 125) -> List[Dict[str, object]]:
    """Brieskorn-Pham surfaces with exponents 2..6 plus non-diagonal and
    higher-dimensional examples. Each entry carries its Milnor number."""
    entries = [brieskorn_pham(t) for t in combinations_with_replacement(range(2, 7), 3)]
    xyz = ["x", "y", "z"]
    entries += [
        {"name": "cubic_xyz", "poly": "x^3 + y^3 + z^3 + x*y*z", "vars": xyz, "mu": 8},
        {"name": "klein_quartic", "poly": "x^3*y + y^3*z + z^3*x", "vars": xyz, "mu": 27},
        {"name": "D4", "poly": "x^2*y + y^3 + z^2", "vars": xyz, "mu": 4},
        {"name": "E7", "poly": "x^3 + x*y^3 + z^2", "vars": xyz, "mu": 7},
        {"name": "D5_cubed", "poly": "x^2*y + y^4 + z^3", "vars": xyz, "mu": 10},
        {"name": "chain_cubic", "poly": "x^3 + x*y^2 + z^3", "vars": xyz, "mu": 8},
        brieskorn_pham((2, 2, 2, 2)),
        brieskorn_pham((2, 2, 3, 3)),
        brieskorn_pham((2, 3, 3, 3)),
        brieskorn_pham((3, 3, 3, 3)),
        brieskorn_pham((2, 2, 2, 2, 2)),
        brieskorn_pham((2, 2, 2, 3, 3)),
    ]
    return [e for e in entries if e["mu"] <= max_mu]
