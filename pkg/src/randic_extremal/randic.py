"""Randić index: exact, floating, from edge-type signatures and closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_radical import ZERO, RadicalValue, reciprocal_sqrt, scale, sqrt
from .graph_core import EdgeTypeSignature, Graph, edge_type_signature

FAMILY_NAMES = ("LAMBDA1", "GAMMA1", "LAMBDA2", "GAMMA2", "REGULAR3")


class FamilyParameterError(ValueError):
    pass


@lru_cache(maxsize=65536)
def _signature_value(key: tuple[tuple[tuple[int, int], int], ...]) -> RadicalValue:
    total = ZERO
    for (i, j), c in key:
        total = total + scale(reciprocal_sqrt(i * j), c)
    return total


def randic_of_signature(sig) -> RadicalValue:
    """``sum m_ij / sqrt(i j)`` over the edge types of ``sig``."""
    if not isinstance(sig, EdgeTypeSignature):
        sig = EdgeTypeSignature(sig)
    return _signature_value(sig.key())


def randic_exact(g: Graph) -> RadicalValue:
    return randic_of_signature(edge_type_signature(g))


def randic_exact_by_edges(g: Graph) -> RadicalValue:
    """Edge-by-edge exact sum; kept separate from the signature route."""
    deg = g.degrees()
    total = ZERO
    for u, v in g.edges():
        total = total + reciprocal_sqrt(deg[u] * deg[v])
    return total


def randic_float(g: Graph) -> float:
    deg = g.degrees()
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges())


@dataclass(frozen=True)
class FamilyValueId:
    name: str
    n: int
    k: int

    def __post_init__(self):
        name = self.name.upper()
        object.__setattr__(self, "name", name)
        if name not in FAMILY_NAMES:
            raise FamilyParameterError(f"unknown family {self.name!r}")
        n, k = self.n, self.k
        if name in ("LAMBDA1", "GAMMA1") and k < 3:
            raise FamilyParameterError(f"{name} needs k >= 3, got k={k}")
        if name in ("LAMBDA2", "GAMMA2") and k < 4:
            raise FamilyParameterError(f"{name} needs k >= 4, got k={k}")
        if name == "REGULAR3" and (k < 3 or n != 2 * k - 2):
            raise FamilyParameterError(f"REGULAR3 needs k >= 3 and n = 2k-2, got n={n}, k={k}")
        lowest = {"LAMBDA1": 2 * k - 1, "GAMMA1": 2 * k + 1, "LAMBDA2": 2 * k, "GAMMA2": 2 * k - 2}
        if name in lowest and n < lowest[name]:
            raise FamilyParameterError(f"{name} with k={k} needs n >= {lowest[name]}, got n={n}")


# Deficits below n/2 for each family, written exactly as the closed forms.
_DEFICIT = {
    # (5 - 2 sqrt 6) / 6
    "LAMBDA1": scale(RadicalValue.rational(5) - scale(sqrt(6), 2), Fraction(1, 6)),
    # (7 - (sqrt 6 + 3 sqrt 2)) / 6
    "GAMMA1": scale(RadicalValue.rational(7) - (sqrt(6) + scale(sqrt(2), 3)), Fraction(1, 6)),
    # (5 - 2 sqrt 6) / 3
    "LAMBDA2": scale(RadicalValue.rational(5) - scale(sqrt(6), 2), Fraction(1, 3)),
    # (6 - (2 sqrt 3 + sqrt 6)) / 3
    "GAMMA2": scale(RadicalValue.rational(6) - (scale(sqrt(3), 2) + sqrt(6)), Fraction(1, 3)),
    "REGULAR3": ZERO,
}


def family_deficit(name: str) -> RadicalValue:
    """Constant ``c`` with ``R = n/2 - c`` for every member of the family."""
    return _DEFICIT[name.upper()]


def family_value(fid: FamilyValueId) -> RadicalValue:
    """Closed-form Randić index shared by all members of a family."""
    return RadicalValue.rational(Fraction(fid.n, 2)) - _DEFICIT[fid.name]
