"""Counts of reducible rational configurations with a marked common node.

A k-component configuration of total degree d through a constraint tuple,
with a chosen node lying on every component, is enumerated as an ordered
sum over positive degree splits and constraint distributions, matched at
the node by the k-fold diagonal class, then divided by k!.  Constraint
points are labeled (general position), so no further automorphism factors
arise.  An optional decoration class at the node (the ambient class, or a
line class in P^3) cups onto the first diagonal slot; by the symmetry of
the diagonal the choice of slot is immaterial.

Also provides the two-sided boundary pairing used by the Chern-class
reduction: classes against the space of two-component stable maps with
prescribed component degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Tuple

from .algebra import (
    binomial,
    constraint_classes,
    diagonal_pairs,
    diagonal_triples,
    weighted_partitions,
)
from .gw0 import GWTable, gw0, n_plane

__all__ = [
    "SplitProfile",
    "tau2_p2",
    "tau_common_node",
    "tau_common_node_p3",
    "boundary_pairing",
]


@dataclass(frozen=True)
class SplitProfile:
    """One term of a common-node sum: degrees, constraint split, decoration."""

    degrees: Tuple[int, ...]
    points: Tuple[int, ...]
    lines: Tuple[int, ...]
    node_decoration: int

    def __post_init__(self) -> None:
        if any(e <= 0 for e in self.degrees):
            raise ValueError("component degrees must be positive")
        if len(self.points) != len(self.degrees) or len(self.lines) != len(self.degrees):
            raise ValueError("constraint split must match the number of components")


def tau2_p2(d: int) -> int:
    """Two-component plane configurations through 3d - 2 points with a marked node:

        (1/2) sum_{d1 + d2 = d} C(3d-2, 3d1-1) d1 d2 n_{d1} n_{d2}.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += binomial(3 * d - 2, 3 * d1 - 1) * d1 * d2 * n_plane(d1) * n_plane(d2)
    half, rem = divmod(total, 2)
    assert rem == 0, "two-component sum must be even"
    return half


def _ordered_degree_splits(d: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    if k == 1:
        return ((d,),) if d >= 1 else ()
    out = []
    for first in range(1, d):
        for rest in _ordered_degree_splits(d - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)


def tau_common_node(
    n: int,
    d: int,
    points: int,
    lines: int,
    arity: int,
    decoration: int = 0,
    table: Optional[GWTable] = None,
) -> Fraction:
    """Configurations of `arity` components sharing a marked node.

    The node matching across components is the arity-fold diagonal; the
    decoration exponent (0 for none, 2 for a node on a generic line/point
    locus) cups onto the first slot.  Ordered enumeration divided by
    arity! counts unordered configurations once.
    """
    if arity not in (2, 3):
        raise ValueError(f"unsupported arity {arity}")
    if decoration not in (0, 2):
        raise ValueError(f"invalid node decoration h^{decoration}")
    mu = constraint_classes(n, points, lines)
    if arity == 2:
        diag = [((e1, e2), Fraction(1)) for e1, e2 in diagonal_pairs(n)]
    else:
        diag = diagonal_triples(n)
    total = Fraction(0)
    for degrees in _ordered_degree_splits(d, arity):
        for split, weight in weighted_partitions(mu, arity):
            for exponents, coeff in diag:
                decorated = (exponents[0] + decoration,) + tuple(exponents[1:])
                if decorated[0] > n:
                    continue
                term = Fraction(weight) * coeff
                for deg_i, side_i, node_i in zip(degrees, split, decorated):
                    factor = gw0(n, deg_i, side_i + (node_i,), table)
                    if factor == 0:
                        term = Fraction(0)
                        break
                    term *= factor
                total += term
    return total / factorial(arity)


def tau_common_node_p3(
    d: int,
    points: int,
    lines: int,
    arity: int,
    decoration: int = 0,
    table: Optional[GWTable] = None,
) -> Fraction:
    """`tau_common_node` specialized to P^3."""
    return tau_common_node(3, d, points, lines, arity, decoration, table)


def boundary_pairing(
    n: int,
    d1: int,
    d2: int,
    side1: Tuple[int, ...],
    side2: Tuple[int, ...],
    table: Optional[GWTable] = None,
) -> Fraction:
    """Pairing against the two-component stratum with component degrees (d1, d2).

    Each side carries its share of the constraints plus any extra classes
    (an evaluation-class power on the side carrying the special marked
    point, say); the connecting node contributes one diagonal pair.  Both
    degrees must be strictly positive: ghost components are accounted for
    elsewhere (they are exactly what the corrected cotangent class
    subtracts).
    """
    if d1 < 1 or d2 < 1:
        raise ValueError("strata require strictly positive component degrees")
    # Summing the per-side balances and eliminating the diagonal exponent:
    # sigma(side1) + sigma(side2) must equal (n+1)(d1+d2) + n - 4.
    sigma = sum(e - 1 for e in side1 + side2)
    expected = (n + 1) * (d1 + d2) + n - 4
    if sigma != expected:
        raise ValueError("sides are not dimension-balanced for this stratum")
    total = Fraction(0)
    for e, e_dual in diagonal_pairs(n):
        lhs = gw0(n, d1, side1 + (e,), table)
        if lhs == 0:
            continue
        rhs = gw0(n, d2, side2 + (e_dual,), table)
        if rhs:
            total += Fraction(lhs * rhs)
    return total
