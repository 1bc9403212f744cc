"""Intersection numbers on moduli of stable rational maps through constraints.

The one-component space V1 consists of degree-d maps from the sphere with
one special marked point (where the evaluation class a = ev* O(1) and the
corrected cotangent-type class c lives) and one constrained marked point
per element of the constraint tuple.  The engine evaluates

    < a^w c^j ,  V1(d, S) >

for an arbitrary insertion multiset S by a three-term rewrite of one c
factor at a time:

    c = (1/d^2) ( H  -  2 d a  +  sum_{d1+d2=d, d1,d2>0} d2^2 [B(d1,d2)] ),

where H is the divisor of maps meeting a fixed codimension-two linear
subspace (an extra h^2 insertion) and [B(d1,d2)] is the two-component
boundary stratum whose first component of degree d1 carries the special
point.  Restricting the remaining monomial to a boundary stratum gives

  * a splitting term: the first component is again a V1-type problem with
    an extra node insertion, matched to the second component by a diagonal
    pair, plus
  * a ghost term from the stratum where the node collides with the special
    point: the diagonal class cups onto the evaluation power there, and the
    remaining c factors restrict to the corrected cotangent class of the
    reattached first component, so the term recurses with one factor fewer.
    Collision strata carrying a constrained marked point contribute nothing
    (the relevant cotangent-type integrals on the marked-sphere factor
    vanish, and multi-point collisions die by cup-product overflow).

Base cases: with no c factors the pairing is the genus-zero invariant with
an extra h^w insertion at the special point, and it vanishes when w = 0 or
when the multiset contains a fundamental-class entry (a genuinely free
marked point fibers the space with one-dimensional fibers).

The two-component space V2 (P^3) carries two special points identified
under evaluation; its pairings reduce per component to V1-type problems
with the diagonal matching cupped onto the evaluation powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .algebra import binomial, constraint_classes, diagonal_pairs, weighted_bipartitions
from .gw0 import GWTable, gw0, n_plane
from .nodecounts import tau2_p2, tau_common_node

__all__ = [
    "MonomialQuery",
    "ReductionState",
    "pair_v1",
    "pair_v1_p2_closed",
    "pair_v2",
    "pair_v2_symmetric",
    "s1_count",
    "s1_pairings_p3",
    "s2_count",
    "space_dimension",
]


def space_dimension(n: int, space: str) -> int:
    """Complex dimension of the pairing space for genus-two balanced constraints."""
    if space == "V1":
        return 2 if n == 2 else 4
    if space == "V2":
        if n != 3:
            raise ValueError("V2 pairings are defined on P^3 only")
        return 2
    raise ValueError(f"unknown space {space!r}")


@dataclass(frozen=True)
class MonomialQuery:
    """An intersection-number request against V1 or V2.

    `exponents` is (i, j) for V1 and (i, j1, j2) for V2, recording the
    power of the evaluation class and of the corrected cotangent class on
    each component.  The total degree must equal the space dimension.
    """

    ambient_dim: int
    degree: int
    points: int
    lines: int
    space: str
    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        dim = space_dimension(self.ambient_dim, self.space)
        if self.space == "V1" and len(self.exponents) != 2:
            raise ValueError("V1 monomials take exponents (i, j)")
        if self.space == "V2" and len(self.exponents) != 3:
            raise ValueError("V2 monomials take exponents (i, j1, j2)")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")
        if sum(self.exponents) != dim:
            raise ValueError(
                f"monomial degree {sum(self.exponents)} != dim {dim} of {self.space}"
            )
        if self.ambient_dim == 2:
            balanced = self.lines == 0 and self.points == 3 * self.degree - 2
        else:
            balanced = 2 * self.points + self.lines == 4 * self.degree - 3
        if not balanced:
            raise ValueError("constraint tuple is not genus-two balanced")


@dataclass(frozen=True)
class _Task:
    """One weighted evaluation request over a configuration profile."""

    ambient_dim: int
    degree: int
    insertions: Tuple[int, ...]
    ev_power: int
    cot_power: int

    def measure(self) -> Tuple[int, int]:
        # Strictly decreasing along every rewrite: the cotangent exponent
        # drops on the non-boundary terms and the degree drops into each
        # boundary component at the same reduced exponent.
        return (self.cot_power, self.degree)


@dataclass
class ReductionState:
    """Memo and termination bookkeeping for the rewrite engine."""

    table: Optional[GWTable] = None
    memo: Dict[_Task, Fraction] = field(default_factory=dict)

    def pair(self, task: _Task, parent: Optional[Tuple[int, int]] = None) -> Fraction:
        measure = task.measure()
        assert parent is None or measure < parent, "rewrite measure failed to decrease"
        cached = self.memo.get(task)
        if cached is not None:
            return cached
        value = self._evaluate(task)
        self.memo[task] = value
        return value

    def _evaluate(self, task: _Task) -> Fraction:
        n, d = task.ambient_dim, task.degree
        w, j = task.ev_power, task.cot_power
        if w > n:
            return Fraction(0)
        if 0 in task.insertions:
            # A free marked point: every monomial term restricted to the
            # collision strata misses the dimension by one.
            return Fraction(0)
        if j == 0:
            if w == 0:
                return Fraction(0)
            return Fraction(gw0(n, d, task.insertions + (w,), self.table))
        measure = task.measure()
        total = self.pair(
            _Task(n, d, task.insertions + (2,), w, j - 1), measure
        )
        total -= 2 * d * self.pair(_Task(n, d, task.insertions, w + 1, j - 1), measure)
        for d1 in range(1, d):
            d2 = d - d1
            total += d2 * d2 * self._boundary(task, d1, d2, measure)
        return total / (d * d)

    def _boundary(
        self, task: _Task, d1: int, d2: int, measure: Tuple[int, int]
    ) -> Fraction:
        n = task.ambient_dim
        w, jp = task.ev_power, task.cot_power - 1
        total = Fraction(0)
        for left, right, weight in weighted_bipartitions(task.insertions):
            for e, e_dual in diagonal_pairs(n):
                child = gw0(n, d2, right + (e_dual,), self.table)
                if child == 0:
                    continue
                root = self.pair(_Task(n, d1, left + (e,), w, jp), measure)
                total += weight * child * root
                if jp >= 1 and w + e <= n:
                    # Node-at-special-point stratum: the diagonal class cups
                    # onto the evaluation power and the remaining cotangent
                    # factors restrict to the corrected class of the
                    # reattached first component.
                    ghost = self.pair(_Task(n, d1, left, w + e, jp - 1), measure)
                    if ghost:
                        total += weight * child * ghost
        return total


_DEFAULT_STATE = ReductionState()


def _state(table: Optional[GWTable], state: Optional[ReductionState]) -> ReductionState:
    if state is not None:
        return state
    if table is not None:
        return ReductionState(table=table)
    return _DEFAULT_STATE


def pair_v1(
    n: int,
    d: int,
    points: int,
    lines: int,
    ev_power: int,
    cot_power: int,
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Fraction:
    """<a^i c^j, V1> for a genus-two balanced constraint tuple."""
    MonomialQuery(n, d, points, lines, "V1", (ev_power, cot_power))
    if ev_power > n:
        return Fraction(0)
    mu = constraint_classes(n, points, lines)
    st = _state(table, state)
    return st.pair(_Task(n, d, tuple(sorted(mu)), ev_power, cot_power))


def pair_v1_p2_closed(d: int, ev_power: int, cot_power: int) -> Fraction:
    """Independent closed forms of the plane V1 pairings.

    <a^2> = n_d;  <a c> = (1/d)(-n_d + (1/2) sum d1^2 d2^2 C(3d-2,3d1-1) n n);
    <c^2> = -(1/2) sum d1 d2 C(3d-2,3d1-1) n n.  Oracle for the engine.
    """
    if (ev_power, cot_power) == (2, 0):
        return Fraction(n_plane(d))
    if (ev_power, cot_power) == (1, 1):
        s = sum(
            d1 * d1 * d2 * d2 * binomial(3 * d - 2, 3 * d1 - 1) * n_plane(d1) * n_plane(d2)
            for d1 in range(1, d)
            for d2 in (d - d1,)
        )
        return Fraction(-n_plane(d) + Fraction(s, 2), d)
    if (ev_power, cot_power) == (0, 2):
        s = sum(
            d1 * d2 * binomial(3 * d - 2, 3 * d1 - 1) * n_plane(d1) * n_plane(d2)
            for d1 in range(1, d)
            for d2 in (d - d1,)
        )
        return Fraction(-s, 2)
    raise ValueError("plane V1 monomials have total degree two")


def pair_v2(
    d: int,
    points: int,
    lines: int,
    ev_power: int,
    cot_powers: Tuple[int, int],
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Fraction:
    """<a^i c_1^{j1} c_2^{j2}, V2> on P^3.

    V2 is the union over positive degree splits of pairs of one-component
    spaces whose special points share their evaluation; the shared value
    carries the evaluation power and the diagonal matching.  Ordered
    enumeration halved counts each unordered configuration once.
    """
    MonomialQuery(3, d, points, lines, "V2", (ev_power,) + tuple(cot_powers))
    j1, j2 = cot_powers
    mu = constraint_classes(3, points, lines)
    st = _state(table, state)
    total = Fraction(0)
    for d1 in range(1, d):
        d2 = d - d1
        for left, right, weight in weighted_bipartitions(mu):
            for e, e_dual in diagonal_pairs(3):
                if ev_power + e > 3:
                    continue
                first = st.pair(_Task(3, d1, left, ev_power + e, j1))
                if first == 0:
                    continue
                second = st.pair(_Task(3, d2, right, e_dual, j2))
                total += weight * first * second
    return total / 2


def pair_v2_symmetric(
    d: int,
    points: int,
    lines: int,
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Dict[str, Fraction]:
    """The symmetric V2 pairings entering every correction formula.

    Keys: 'a_c'   = <a (c_1 + c_2)>,
          'c_sq'  = <c_1^2 + c_2^2>,
          'c_c'   = <c_1 c_2>,
          'a_a'   = <a^2>  (the common node on a generic line).
    """
    st = _state(table, state)
    a_c = pair_v2(d, points, lines, 1, (1, 0), state=st) + pair_v2(
        d, points, lines, 1, (0, 1), state=st
    )
    c_sq = pair_v2(d, points, lines, 0, (2, 0), state=st) + pair_v2(
        d, points, lines, 0, (0, 2), state=st
    )
    c_c = pair_v2(d, points, lines, 0, (1, 1), state=st)
    a_a = pair_v2(d, points, lines, 2, (0, 0), state=st)
    return {"a_c": a_c, "c_sq": c_sq, "c_c": c_c, "a_a": a_a}


def s1_count(
    n: int,
    d: int,
    points: int,
    lines: int = 0,
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Fraction:
    """Number of rational degree-d cuspidal plane curves through the constraints:

        <3a^2 + 3ac + c^2, V1> - tau_2.

    On P^3 the cuspidal locus is not compact; only its pairings are
    defined (see :func:`s1_pairings_p3`).
    """
    if n != 2:
        raise ValueError("the cuspidal count is a plane quantity; use s1_pairings_p3")
    st = _state(table, state)
    value = (
        3 * pair_v1(2, d, points, lines, 2, 0, state=st)
        + 3 * pair_v1(2, d, points, lines, 1, 1, state=st)
        + pair_v1(2, d, points, lines, 0, 2, state=st)
    )
    return value - tau2_p2(d)


def s1_pairings_p3(
    d: int,
    points: int,
    lines: int,
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Tuple[Fraction, Fraction]:
    """Evaluation- and cotangent-class pairings of the closed cuspidal locus:

        <a, S1>  = <6a^3c + 4a^2c^2 + ac^3, V1> - <4a^2 + a(c_1+c_2), V2>,
        <c, S1>  = <4a^3c + 6a^2c^2 + 4ac^3 + c^4, V1> - tau_3.
    """
    st = _state(table, state)
    v1 = {
        (i, j): pair_v1(3, d, points, lines, i, j, state=st)
        for (i, j) in ((3, 1), (2, 2), (1, 3), (0, 4))
    }
    v2 = pair_v2_symmetric(d, points, lines, state=st)
    tau3 = tau_common_node(3, d, points, lines, 3, 0, st.table)
    a_pairing = (
        6 * v1[(3, 1)] + 4 * v1[(2, 2)] + v1[(1, 3)] - (4 * v2["a_a"] + v2["a_c"])
    )
    c_pairing = 4 * v1[(3, 1)] + 6 * v1[(2, 2)] + 4 * v1[(1, 3)] + v1[(0, 4)] - tau3
    return a_pairing, c_pairing


def s2_count(
    d: int,
    points: int,
    lines: int,
    table: Optional[GWTable] = None,
    state: Optional[ReductionState] = None,
) -> Fraction:
    """Two-component rational configurations in P^3 joined at a tacnode:

        <6a^2 + 4a(c_1+c_2) + (c_1^2+c_2^2) + c_1 c_2, V2> - 3 tau_3.
    """
    st = _state(table, state)
    v2 = pair_v2_symmetric(d, points, lines, state=st)
    tau3 = tau_common_node(3, d, points, lines, 3, 0, st.table)
    return 6 * v2["a_a"] + 4 * v2["a_c"] + v2["c_sq"] + v2["c_c"] - 3 * tau3
