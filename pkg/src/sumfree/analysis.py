"""Density formulas, structure checks and desk-scale theorem verification.

All densities, slacks and thresholds are exact rationals; several of the
checked inequalities are tight (slack exactly zero), so nothing here may
go through floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .arith import divisors, is_prime, prime_factors
from .construct import middle_third, outer_bands
from .errors import CapacityError
from .enumeration import (
    DEFAULT_GROUND_CAP,
    count_sum_free,
    enumerate_maximum,
)
from .groups import Element, GroupSpec, abelian_groups_of_order, index2_subgroups
from .universe import (
    ElemSet,
    GroupUniverse,
    IntervalUniverse,
    is_maximal_sum_free,
    is_sum_free,
)


def density_formula(g: GroupSpec) -> tuple[Fraction, int]:
    """Closed-form maximum sum-free density of a finite abelian group.

    Three cases by the prime divisors of the order modulo 3:
      1. some prime divisor p = 2 (mod 3), p least such: 1/3 + 1/(3p)
      2. otherwise 3 divides the order: 1/3
      3. all prime divisors = 1 (mod 3): 1/3 - 1/(3m), m the exponent.
    The value times the order is always an integer.
    """
    order = g.order
    if order < 2:
        raise ValueError("density formula needs a nontrivial group")
    primes = sorted(prime_factors(order))
    low = [p for p in primes if p % 3 == 2]
    if low:
        return Fraction(1, 3) + Fraction(1, 3 * low[0]), 1
    if order % 3 == 0:
        return Fraction(1, 3), 2
    m = g.exponent()
    return Fraction(1, 3) - Fraction(1, 3 * m), 3


@dataclass(frozen=True)
class DensityReport:
    """Brute-force maximum density next to the closed-form value."""

    group: GroupSpec
    mu: Fraction
    witness: ElemSet
    v: Fraction
    v_case: int
    agree: bool


def density_report(g: GroupSpec, cap: int = DEFAULT_GROUND_CAP) -> DensityReport:
    """Measure the maximum sum-free density by exhaustive search."""
    maxima = enumerate_maximum(GroupUniverse(g), cap)
    witness = maxima[0]
    mu = Fraction(witness.cardinality, g.order)
    v, case = density_formula(g)
    return DensityReport(g, mu, witness, v, case, mu == v)


def verify_index2_structure(g: GroupSpec, cap: int = DEFAULT_GROUND_CAP) -> Optional[bool]:
    """Check that the half-order sum-free sets are exactly the nontrivial
    cosets of the index-2 subgroups.

    Returns None for odd order (no index-2 subgroup, nothing to check).
    Asserts the two cardinality bounds on the way: no sum-free set
    exceeds half the order, and the coset construction reaches it.
    """
    order = g.order
    if order % 2 != 0:
        return None
    maxima = enumerate_maximum(GroupUniverse(g), cap)
    max_card = maxima[0].cardinality
    if max_card > order // 2:
        raise AssertionError("sum-free set above half the group order")
    half_sets = {
        frozenset(s.members()) for s in maxima if s.cardinality == order // 2
    }
    full = frozenset(range(order))
    cosets = {full - h.members for h in index2_subgroups(g)}
    if not cosets:
        raise AssertionError("even order but no index-2 subgroup")
    if max_card < order // 2:
        raise AssertionError("coset of an index-2 subgroup was missed")
    return half_sets == cosets


def coset_floor_check(g: GroupSpec, cap: int = DEFAULT_GROUND_CAP) -> bool:
    """Maximum sum-free cardinality reaches order/q, q the least prime divisor."""
    q = sorted(prime_factors(g.order))[0]
    maxima = enumerate_maximum(GroupUniverse(g), cap)
    return maxima[0].cardinality >= g.order // q


@dataclass(frozen=True)
class WeightedDensityReport:
    """Outcome of the two-band weighted density inequality for one modulus."""

    n: int
    ok: bool
    min_slack: Fraction
    tight_divisors: tuple[int, ...]
    slack_by_divisor: dict[int, Fraction]


def weighted_density_check(n: int) -> WeightedDensityReport:
    """Check 4/7 * d1 + 3/7 * d2 >= 2/7 over every proper divisor subgroup.

    d_i is the density of the i-th band of Z_n inside the subgroup of
    multiples of d, for each divisor d < n.  The identity is excluded
    from the second band, so the trivial subgroup case d = n is vacuous
    and skipped by convention.  Exact rational arithmetic throughout.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    band1 = set(middle_third(n).members())
    band2 = set(outer_bands(n).members())
    target = Fraction(2, 7)
    slacks: dict[int, Fraction] = {}
    for d in divisors(n):
        if d == n:
            continue
        sub_order = n // d
        c1 = sum(1 for x in range(d, n, d) if x in band1)
        c2 = sum(1 for x in range(d, n, d) if x in band2)
        lhs = Fraction(4 * c1, 7 * sub_order) + Fraction(3 * c2, 7 * sub_order)
        slacks[d] = lhs - target
    min_slack = min(slacks.values())
    tight = tuple(d for d, s in sorted(slacks.items()) if s == 0)
    return WeightedDensityReport(n, min_slack >= 0, min_slack, tight, slacks)


@dataclass(frozen=True)
class StructureVerdict:
    """pass, vacuous, or fail plus the violated clause."""

    status: str
    detail: Optional[str] = None


def structure_verdict(s: ElemSet) -> StructureVerdict:
    """Classify a sum-free set of integers against the large-set structure law.

    Sets with fewer than 5k/12 + 2 elements (k the maximum) are out of
    reach of the law: vacuous.  Above the threshold the set must consist
    solely of odd numbers, or mix parities with minimum at least the
    cardinality and at most (k - 2|S| + 3)/4 elements in [1, k/2].
    """
    u = s.universe
    if not isinstance(u, IntervalUniverse):
        raise ValueError("structure law applies to integer interval sets")
    if not is_sum_free(u, s):
        raise ValueError("set is not sum-free")
    members = s.members()
    if not members:
        return StructureVerdict("vacuous")
    k = members[-1]
    size = len(members)
    if 12 * size < 5 * k + 24:
        return StructureVerdict("vacuous")
    if all(x % 2 == 1 for x in members):
        return StructureVerdict("pass", "all-odd")
    if all(x % 2 == 0 for x in members):
        return StructureVerdict("fail", "parity")
    if members[0] < size:
        return StructureVerdict("fail", "minimum")
    low = sum(1 for x in members if 2 * x <= k)
    if 4 * low > k - 2 * size + 3:
        return StructureVerdict("fail", "low-half")
    return StructureVerdict("pass", "mixed")


def decomposition_ratio(n: int, cap: int = 33) -> Fraction:
    """f(n) against the odd-count plus top-interval-count decomposition.

    Exact value of f(n) / (f(ceil(n/3), n) + 2^ceil(n/2)); the
    approximation it probes is asymptotic, so this is a trend readout,
    not an identity.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > cap:
        raise CapacityError(f"decomposition ratio capped at n <= {cap}")
    f = count_sum_free(IntervalUniverse(1, n))
    f_tail = count_sum_free(IntervalUniverse((n + 2) // 3, n))
    f_odd = 1 << ((n + 1) // 2)
    return Fraction(f, f_tail + f_odd)


def singleton_maximal_groups(
    max_order: int,
) -> list[tuple[GroupSpec, tuple[Element, ...]]]:
    """Abelian groups of order 2..max_order holding a maximal sum-free
    singleton, with their witnesses (each witness has prime order)."""
    out = []
    for order in range(2, max_order + 1):
        for g in abelian_groups_of_order(order):
            u = GroupUniverse(g)
            witnesses = tuple(
                g.element_at(i)
                for i in range(1, order)
                if is_maximal_sum_free(u, ElemSet.from_values(u, [i]))
            )
            if witnesses:
                for w in witnesses:
                    if not is_prime(g.element_order(w)):
                        raise AssertionError(
                            f"witness {w.index} in {g.moduli} has composite order"
                        )
                out.append((g, witnesses))
    return out


def pair_maximal_groups(max_order: int) -> list[tuple[GroupSpec, ElemSet]]:
    """All (abelian group, set) pairs with a maximal sum-free set of
    cardinality 2, for orders 2..max_order."""
    out = []
    for order in range(2, max_order + 1):
        for g in abelian_groups_of_order(order):
            u = GroupUniverse(g)
            for pair in combinations(range(1, order), 2):
                s = ElemSet.from_values(u, pair)
                if is_maximal_sum_free(u, s):
                    out.append((g, s))
    return out


def even_order_leading_term(
    g: GroupSpec, cap: int = DEFAULT_GROUND_CAP
) -> tuple[int, Fraction]:
    """Leading count estimate (2^V - 1) * 2^(order/2) for even order,
    with the ratio of the exact count to it.  Report only; the estimate
    is asymptotic."""
    order = g.order
    if order % 2 != 0:
        raise ValueError("leading term applies to even order only")
    leading = ((1 << g.even_component_count()) - 1) * (1 << (order // 2))
    exact = count_sum_free(GroupUniverse(g), cap)
    return leading, Fraction(exact, leading)
