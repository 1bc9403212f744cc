"""Genus-zero Gromov-Witten invariants of P^2 and P^3.

All invariants are honest enumerative counts of rational curves.  The
plane numbers n_d (degree-d rationals through 3d - 1 points) satisfy the
quadratic recursion

    n_d = sum_{d1 + d2 = d}  n_{d1} n_{d2} (d1^2 d2^2 C(3d-4, 3d1-2)
                                            - d1^3 d2 C(3d-4, 3d1-1)),

with n_1 = 1.  On P^3 every invariant with insertions from {h^2, h^3} is
reconstructed from the single base case <h^3, h^3>_1 = 1 (one line through
two points) by associativity of the quantum product: the relation obtained
from four fixed insertion slots (h, h, h^2, g) expresses the count with a
point insertion in terms of counts with more line insertions and products
of lower-degree counts, and two choices of g pin everything down.

Normalization applied before keying: fundamental-class insertions make an
invariant vanish (an unconstrained marked point inflates the dimension),
each divisor insertion h^1 deletes and multiplies by the degree, and
dimension-imbalanced keys are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .algebra import binomial, triple_product, weighted_bipartitions

__all__ = [
    "GWKey",
    "GWTable",
    "DEFAULT_TABLE",
    "n_plane",
    "gw0",
    "N_p3",
    "wdvv_relation_residual",
]


@dataclass(frozen=True)
class GWKey:
    """Normalized memoization key: ambient, degree, sorted insertion exponents.

    Invariants: no exponent-0 or exponent-1 entries (eliminated by
    normalization) and the dimension balance holds; anything else is zero
    and never cached.
    """

    ambient_dim: int
    degree: int
    insertions: Tuple[int, ...]


class GWTable:
    """Write-once cache of genus-zero invariants.

    Racing writers of the same key must write equal values; re-recording a
    key with a different value is a hard error.  Hit/miss counters back the
    cache-reuse diagnostics of the CLI.
    """

    def __init__(self) -> None:
        self._values: Dict[GWKey, int] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._values)

    def lookup(self, key: GWKey) -> Optional[int]:
        value = self._values.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def record(self, key: GWKey, value: int) -> None:
        existing = self._values.get(key)
        if existing is not None:
            if existing != value:
                raise AssertionError(f"cache collision at {key}: {existing} != {value}")
            return
        self._values[key] = value

    def items(self) -> Iterable[Tuple[GWKey, int]]:
        return self._values.items()

    def stats(self) -> Dict[str, int]:
        return {"entries": len(self._values), "hits": self.hits, "misses": self.misses}


DEFAULT_TABLE = GWTable()

_N_PLANE: Dict[int, int] = {1: 1}


def n_plane(d: int) -> int:
    """Number of rational degree-d plane curves through 3d - 1 generic points."""
    if d <= 0:
        raise ValueError("plane counts are defined for d >= 1")
    known = _N_PLANE.get(d)
    if known is not None:
        return known
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        total += (
            n_plane(d1)
            * n_plane(d2)
            * (
                d1 * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2)
                - d1 ** 3 * d2 * binomial(3 * d - 4, 3 * d1 - 1)
            )
        )
    _N_PLANE[d] = total
    return total


def _normalize(n: int, d: int, insertions: Iterable[int]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Apply the axioms; return (divisor multiplier, sorted key) or None if zero."""
    factor = 1
    kept = []
    for e in insertions:
        if e < 0:
            raise ValueError(f"negative insertion exponent {e}")
        if e > n:
            return None
        if e == 0:
            # Fundamental class: a free marked point fibers the moduli
            # space with one-dimensional fibers, so the count vanishes.
            return None
        if e == 1:
            factor *= d
        else:
            kept.append(e)
    return factor, tuple(sorted(kept))


def _balanced(n: int, d: int, insertions: Tuple[int, ...]) -> bool:
    return sum(e - 1 for e in insertions) == (n + 1) * d + n - 3


def gw0(n: int, d: int, insertions: Iterable[int], table: Optional[GWTable] = None) -> int:
    """Genus-zero invariant of P^n with the given basis-exponent insertions.

    Degree zero is defined only for exactly three insertions and equals the
    triple intersection number; negative degree is an error.  Unbalanced or
    overflow keys return 0.
    """
    if n not in (2, 3):
        raise ValueError(f"unsupported ambient P^{n}")
    if d < 0:
        raise ValueError("negative degree")
    ins = tuple(insertions)
    if d == 0:
        if len(ins) != 3:
            raise ValueError("degree-zero invariants require exactly three insertions")
        return triple_product(n, *ins)
    normalized = _normalize(n, d, ins)
    if normalized is None:
        return 0
    factor, key_ins = normalized
    if not _balanced(n, d, key_ins):
        return 0
    if n == 2:
        # Balance forces the key to be 3d - 1 point classes.
        return factor * n_plane(d)
    if table is None:
        table = DEFAULT_TABLE
    key = GWKey(3, d, key_ins)
    cached = table.lookup(key)
    if cached is not None:
        return factor * cached
    a = sum(1 for e in key_ins if e == 2)
    b = sum(1 for e in key_ins if e == 3)
    value = _solve_p3(a, b, d, table)
    table.record(key, value)
    return factor * value


def N_p3(d: int, points: int, lines: int, table: Optional[GWTable] = None) -> int:
    """Rational degree-d curves in P^3 through `points` points and `lines` lines."""
    if 2 * points + lines != 4 * d:
        raise ValueError("genus-zero balance requires 2p + q = 4d")
    return gw0(3, d, (3,) * points + (2,) * lines, table)


def _split_products(
    pair12: Tuple[int, int],
    pair34: Tuple[int, int],
    d: int,
    spectators: Tuple[int, ...],
    table: GWTable,
) -> int:
    """Sum over strictly positive degree splits of the four-slot pairing.

    Spectator insertions distribute with binomial weights; the matching
    condition at the connecting node contributes one diagonal pair (e, e')
    with e + e' = 3.
    """
    total = 0
    for d1 in range(1, d):
        d2 = d - d1
        for left, right, weight in weighted_bipartitions(spectators):
            for e in range(4):
                lhs = gw0(3, d1, pair12 + (e,) + left, table)
                if lhs == 0:
                    continue
                rhs = gw0(3, d2, (3 - e,) + pair34 + right, table)
                if rhs:
                    total += weight * lhs * rhs
    return total


def _relation_splits(d: int, g4: int, spectators: Tuple[int, ...], table: GWTable) -> int:
    """Split terms of the associativity relation on slots (h, h, h^2, h^g4).

    Returns S12 - S13: the positive-split part of pairing (12|34) minus
    that of pairing (13|24).
    """
    s12 = _split_products((1, 1), (2, g4), d, spectators, table)
    s13 = _split_products((1, 2), (1, g4), d, spectators, table)
    return s12 - s13


def _solve_p3(a: int, b: int, d: int, table: GWTable) -> int:
    """Solve for the normalized P^3 invariant with a h^2's and b h^3's.

    The relation on slots (h, h, h^2, g) with spectators S reads

        <h^2 h^2 g S>_d + S12 = kappa * d * <h^3 g S>_d + S13,

    kappa = 2 for g = h^2 and 1 for g = h^3 (the target multiset appears
    once from each end of the second pairing when g = h^2).  Combining the
    two choices of g eliminates the higher-line-count end and grounds the
    recursion in strictly lower degree.
    """
    if a + 2 * b != 4 * d:
        return 0
    if d == 1 and (a, b) == (0, 2):
        return 1

    def N(a2: int, b2: int) -> int:
        return gw0(3, d, (2,) * a2 + (3,) * b2, table)

    if b >= 2:
        spectators3 = (2,) * a + (3,) * (b - 2)
        rel3 = _relation_splits(d, 3, spectators3, table)
        if a >= 1:
            spectators2 = (2,) * (a - 1) + (3,) * (b - 1)
            rel2 = _relation_splits(d, 2, spectators2, table)
            value = Fraction(rel2 - rel3, d)
        else:
            value = Fraction(N(2, b - 1) + rel3, d)
    elif b == 1:
        if a >= 3:
            # Solve the g = h^2 relation at (a - 2, 2) for its point-killed end.
            spectators = (2,) * (a - 3) + (3,)
            rel2 = _relation_splits(d, 2, spectators, table)
            value = Fraction(2 * d * N(a - 2, 2) - rel2)
        else:
            # (2, 1) occurs only at d = 1; use the g = h^3 relation at (0, 2).
            rel3 = _relation_splits(d, 3, (), table)
            value = Fraction(d * N(0, 2) - rel3)
    else:
        # Pure line insertions: solve the g = h^2 relation at (a - 2, 1).
        spectators = (2,) * (a - 3)
        rel2 = _relation_splits(d, 2, spectators, table)
        value = Fraction(2 * d * N(a - 2, 1) - rel2)

    if value.denominator != 1:
        raise AssertionError(f"non-integral invariant at (a={a}, b={b}, d={d}): {value}")
    return int(value)


def wdvv_relation_residual(
    d: int,
    gammas: Tuple[int, int, int, int],
    spectators: Tuple[int, ...],
    table: Optional[GWTable] = None,
) -> int:
    """Full associativity residual: pairing (12|34) minus pairing (13|24).

    Includes the degree-zero ends (triple intersections on a side carrying
    no spectators).  Must vanish identically; exercised by the property
    suite as an independent consistency check on the reconstruction.
    """
    if table is None:
        table = DEFAULT_TABLE
    g1, g2, g3, g4 = gammas

    def pairing(x1: int, x2: int, x3: int, x4: int) -> int:
        total = 0
        for d1 in range(d + 1):
            d2 = d - d1
            for left, right, weight in weighted_bipartitions(spectators):
                for e in range(4):
                    if d1 == 0:
                        if left:
                            continue
                        lhs = triple_product(3, x1, x2, e)
                    else:
                        lhs = gw0(3, d1, (x1, x2, e) + left, table)
                    if lhs == 0:
                        continue
                    if d2 == 0:
                        if right:
                            continue
                        rhs = triple_product(3, 3 - e, x3, x4)
                    else:
                        rhs = gw0(3, d2, (3 - e, x3, x4) + right, table)
                    if rhs:
                        total += weight * lhs * rhs
        return total

    return pairing(g1, g2, g3, g4) - pairing(g1, g3, g2, g4)
