"""Exact scalars and the cohomology ring of projective space.

Everything downstream reduces to arithmetic in H*(P^n; Q) for n = 2, 3,
with the basis {h^0, ..., h^n} given by powers of the hyperplane class h.
Scalars are exact rationals end to end: the reduction engine carries 1/d^2
prefactors and 1/2 symmetry factors, even though every final count is an
integer (asserted at the reporting layer).

Constraint dictionary: a point is h^n, a line in P^3 is h^2, the ambient
(fundamental) class is h^0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

__all__ = [
    "ExactRational",
    "binomial",
    "CohClass",
    "basis_class",
    "cup",
    "integral",
    "triple_product",
    "DiagonalDecomposition",
    "diagonal",
    "diagonal_pairs",
    "diagonal_triples",
    "constraint_classes",
    "weighted_bipartitions",
    "weighted_partitions",
]

# The universal scalar: arbitrary-precision rational, always stored in
# lowest terms with positive denominator.  `fractions.Fraction` already
# guarantees both invariants, so it *is* the type.
ExactRational = Fraction


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class CohClass:
    """Element of H*(P^n) as a coefficient vector over {h^0, ..., h^n}."""

    ambient_dim: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.ambient_dim not in (2, 3):
            raise ValueError(f"ambient dimension must be 2 or 3, got {self.ambient_dim}")
        if len(self.coeffs) != self.ambient_dim + 1:
            raise ValueError("coefficient vector must have length ambient_dim + 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def is_basis_power(self) -> bool:
        nonzero = [(k, c) for k, c in enumerate(self.coeffs) if c]
        return len(nonzero) == 1 and nonzero[0][1] == 1


def basis_class(n: int, k: int) -> CohClass:
    """The basis class h^k on P^n."""
    if not 0 <= k <= n:
        raise ValueError(f"exponent {k} out of range for P^{n}")
    coeffs = tuple(Fraction(1) if i == k else Fraction(0) for i in range(n + 1))
    return CohClass(n, coeffs)


def cup(x: CohClass, y: CohClass) -> CohClass:
    """Cup product: h^i . h^j = h^(i+j) when i + j <= n, else 0."""
    if x.ambient_dim != y.ambient_dim:
        raise ValueError("cup product requires matching ambient dimensions")
    n = x.ambient_dim
    out = [Fraction(0)] * (n + 1)
    for i, ci in enumerate(x.coeffs):
        if not ci:
            continue
        for j, cj in enumerate(y.coeffs):
            if cj and i + j <= n:
                out[i + j] += ci * cj
    return CohClass(n, tuple(out))


def integral(x: CohClass) -> Fraction:
    """Pairing with the fundamental class: the h^n coefficient."""
    return x.coeffs[x.ambient_dim]


def triple_product(n: int, i: int, j: int, k: int) -> int:
    """Integral of h^i . h^j . h^k over P^n (0 or 1)."""
    return 1 if i + j + k == n else 0


@dataclass(frozen=True)
class DiagonalDecomposition:
    """Kuenneth expansion of a k-fold diagonal class of P^n.

    Each term is (tuple of k basis exponents, coefficient).  For k = 2 the
    terms pair every basis class with its Poincare dual; for k = 3 the
    terms come from the cup product of two pairwise diagonals in the
    triple ring, so every exponent tuple sums to (k - 1) * n.
    """

    ambient_dim: int
    arity: int
    terms: Tuple[Tuple[Tuple[int, ...], Fraction], ...]


def _product_ring_cup(
    a: Dict[Tuple[int, ...], Fraction],
    b: Dict[Tuple[int, ...], Fraction],
    n: int,
) -> Dict[Tuple[int, ...], Fraction]:
    # Cup product in H*(P^n)^{\otimes k}: exponents add slotwise, any slot
    # overflowing n kills the term.
    out: Dict[Tuple[int, ...], Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(x > n for x in e):
                continue
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def diagonal(n: int, k: int) -> DiagonalDecomposition:
    """Diagonal class of (P^n)^k, k in {2, 3}."""
    if k == 2:
        terms = tuple(((i, n - i), Fraction(1)) for i in range(n + 1))
        return DiagonalDecomposition(n, 2, terms)
    if k == 3:
        d12 = {(i, n - i, 0): Fraction(1) for i in range(n + 1)}
        d23 = {(0, j, n - j): Fraction(1) for j in range(n + 1)}
        expansion = _product_ring_cup(d12, d23, n)
        terms = tuple(sorted(expansion.items()))
        return DiagonalDecomposition(n, 3, terms)
    raise ValueError(f"unsupported diagonal arity {k}")


def diagonal_pairs(n: int) -> List[Tuple[int, int]]:
    """Exponent pairs (i, n - i) of the two-fold diagonal."""
    return [(i, n - i) for i in range(n + 1)]


def diagonal_triples(n: int) -> List[Tuple[Tuple[int, int, int], Fraction]]:
    """Exponent triples with coefficients of the three-fold diagonal."""
    return [(e, c) for e, c in diagonal(n, 3).terms]


def constraint_classes(n: int, points: int, lines: int) -> Tuple[int, ...]:
    """Basis exponents of a constraint tuple: points are h^n, lines h^2 (P^3 only)."""
    if points < 0 or lines < 0:
        raise ValueError("constraint counts must be nonnegative")
    if lines and n != 3:
        raise ValueError("line constraints only make sense in P^3")
    return (n,) * points + (2,) * lines


def weighted_bipartitions(
    items: Sequence[int],
) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """Distributions of a labeled multiset into two sides.

    Yields (left, right, weight); weight is the number of ways to pick
    which labeled copies go left, i.e. a product of binomials per distinct
    value.  Constraints are labeled (general position), so this is the
    correct multiplicity for every splitting sum in the engine.
    """
    values = sorted(set(items))
    counts = [list(items).count(v) for v in values]
    for take in product(*(range(c + 1) for c in counts)):
        left: List[int] = []
        right: List[int] = []
        weight = 1
        for v, c, t in zip(values, counts, take):
            left.extend([v] * t)
            right.extend([v] * (c - t))
            weight *= math.comb(c, t)
        yield tuple(left), tuple(right), weight


def weighted_partitions(
    items: Sequence[int], parts: int
) -> Iterator[Tuple[Tuple[Tuple[int, ...], ...], int]]:
    """Distributions of a labeled multiset into `parts` ordered sides."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if parts == 1:
        yield (tuple(sorted(items)),), 1
        return
    for left, rest, w in weighted_bipartitions(items):
        for tail, w2 in weighted_partitions(rest, parts - 1):
            yield (left,) + tail, w * w2
