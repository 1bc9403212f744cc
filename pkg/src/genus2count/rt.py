"""Symplectic invariants of P^2 and P^3 via the two composition laws.

The genus-two invariant with a tuple of point/line constraints reduces to
four-slot genus-zero invariants by applying the genus-reducing law twice:
each application trades one unit of genus for a sum over Poincare-dual
pairs of extra fixed insertions.  A four-slot genus-zero invariant (four
marked points at fixed cross-ratio) is then expanded by the
component-splitting law: a sum over degree splits, constraint
distributions and diagonal pairs of products of three-slot invariants.

Three-slot genus-zero invariants with fixed marked points are ordinary
enumerative counts, so they evaluate through :func:`genus2count.gw0.gw0`;
a degree-zero side contributes a classical triple intersection and only
when it carries no constraints.  A fundamental-class slot deletes (a fixed
unconstrained point on the domain adds no moduli), which is *different*
from the vanishing of a free-marked-point insertion inside `gw0`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .algebra import binomial, diagonal_pairs, triple_product
from .gw0 import GWTable, gw0, n_plane

__all__ = [
    "ConstraintProfile",
    "RTQuery",
    "rt0_3pt",
    "rt0_4pt",
    "rt_genus_reduce",
    "rt2_p2_closed",
]


@dataclass(frozen=True)
class ConstraintProfile:
    """The constraint tuple: ambient, degree, point and line counts."""

    ambient_dim: int
    degree: int
    points: int
    lines: int

    def __post_init__(self) -> None:
        if self.ambient_dim not in (2, 3):
            raise ValueError(f"unsupported ambient P^{self.ambient_dim}")
        if self.points < 0 or self.lines < 0:
            raise ValueError("constraint counts must be nonnegative")
        if self.lines and self.ambient_dim != 3:
            raise ValueError("line constraints only make sense in P^3")

    def classes(self) -> Tuple[int, ...]:
        return (self.ambient_dim,) * self.points + (2,) * self.lines

    def genus2_balanced(self) -> bool:
        if self.ambient_dim == 2:
            return self.lines == 0 and self.points == 3 * self.degree - 2
        return 2 * self.points + self.lines == 4 * self.degree - 3


@dataclass(frozen=True)
class RTQuery:
    """A symplectic-invariant request: genus, degree, fixed slots, constraints."""

    genus: int
    insertions: Tuple[int, ...]
    profile: ConstraintProfile

    def __post_init__(self) -> None:
        if self.genus not in (0, 1, 2):
            raise ValueError("genus must be 0, 1 or 2")


def _eval_slots(
    n: int,
    d: int,
    slots: Tuple[int, ...],
    points: int,
    lines: int,
    table: Optional[GWTable],
) -> int:
    """Invariant with at most three fixed slots after fundamental deletion."""
    kept = tuple(e for e in slots if e != 0)
    if d == 0:
        # Degree zero: the map is constant, so a constrained marked point
        # kills the count generically and three slots pair classically.
        if points or lines:
            return 0
        if len(kept) > 3:
            raise ValueError("degree-zero invariant with more than three insertions")
        padded = kept + (0,) * (3 - len(kept))
        return triple_product(n, *padded)
    mu = (n,) * points + (2,) * lines
    return gw0(n, d, kept + mu, table)


def rt0_3pt(
    n: int,
    d: int,
    alpha: int,
    beta: int,
    gamma: int,
    points: int = 0,
    lines: int = 0,
    table: Optional[GWTable] = None,
) -> int:
    """Three-slot genus-zero invariant; equals the enumerative count."""
    return _eval_slots(n, d, (alpha, beta, gamma), points, lines, table)


def rt0_4pt(
    n: int,
    d: int,
    slots: Tuple[int, int, int, int],
    points: int = 0,
    lines: int = 0,
    table: Optional[GWTable] = None,
) -> int:
    """Four-slot genus-zero invariant via the component-splitting law.

    The four marked points sit at a fixed cross-ratio; degenerating it
    splits the domain into two three-slot sides joined at a node.  Slots
    one and two stay on the first side, slots three and four on the
    second; the node contributes a diagonal pair and the constraints
    distribute with binomial weights per species.
    """
    if len(slots) != 4:
        raise ValueError("expected exactly four slots")
    if any(e == 0 for e in slots):
        return _eval_slots(n, d, slots, points, lines, table)
    a1, a2, a3, a4 = slots
    total = 0
    for d1 in range(d + 1):
        d2 = d - d1
        for p1 in range(points + 1):
            for q1 in range(lines + 1):
                weight = binomial(points, p1) * binomial(lines, q1)
                for e, e_dual in diagonal_pairs(n):
                    lhs = _eval_slots(n, d1, (a1, a2, e), p1, q1, table)
                    if lhs == 0:
                        continue
                    rhs = _eval_slots(
                        n, d2, (e_dual, a3, a4), points - p1, lines - q1, table
                    )
                    if rhs:
                        total += weight * lhs * rhs
    return total


def rt_genus_reduce(query: RTQuery, table: Optional[GWTable] = None) -> int:
    """Reduce genus with diagonal-pair insertions down to genus zero.

    Each genus-reducing step appends one Poincare-dual pair of fixed
    slots; starting from genus two with no insertions this terminates in a
    sum of four-slot genus-zero invariants.  Queries that would leave more
    than four genus-zero slots are out of scope and rejected.
    """
    prof = query.profile
    n, d = prof.ambient_dim, prof.degree
    if query.genus == 0:
        slots = query.insertions
        if len(slots) > 4:
            raise ValueError("genus-zero invariants support at most four fixed slots")
        if len(slots) == 4:
            return rt0_4pt(n, d, slots, prof.points, prof.lines, table)
        return _eval_slots(n, d, slots, prof.points, prof.lines, table)
    total = 0
    for e, e_dual in diagonal_pairs(n):
        sub = RTQuery(query.genus - 1, query.insertions + (e, e_dual), prof)
        total += rt_genus_reduce(sub, table)
    return total


def rt2_p2_closed(d: int) -> int:
    """Closed form of the genus-two plane invariant through 3d - 2 points:

        6 d^2 n_d + sum_{d1 + d2 = d} d1^3 d2^3 C(3d-2, 3d1-1) n_{d1} n_{d2}.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    total = 6 * d * d * n_plane(d)
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            d1 ** 3 * d2 ** 3 * binomial(3 * d - 2, 3 * d1 - 1) * n_plane(d1) * n_plane(d2)
        )
    return total
