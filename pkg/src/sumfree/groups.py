"""Finite abelian groups presented as direct sums of cyclic groups.

A group is an ordered tuple of cyclic moduli (empty tuple = trivial group).
Elements carry both a coordinate tuple and a canonical mixed-radix index in
[0, order), with the first modulus least significant.  Every bit array and
serialized set in this package addresses group elements by that index, so
enumeration order, sharding and golden files are deterministic.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .arith import partitions, prime_factors
from .errors import CapacityError

DEFAULT_MAX_ORDER = 1 << 20


@dataclass(frozen=True)
class Element:
    """A group element: residue coordinates plus the canonical index."""

    coords: tuple[int, ...]
    index: int


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group Z_m1 x Z_m2 x ... under componentwise addition."""

    moduli: tuple[int, ...]

    @cached_property
    def order(self) -> int:
        return math.prod(self.moduli)

    @cached_property
    def decomposition(self) -> tuple[int, ...]:
        """Prime-power cyclic factors (sorted multiset).

        Each modulus is CRT-split into its prime-power parts; the resulting
        multiset is a complete invariant of the isomorphism class.
        """
        parts: list[int] = []
        for m in self.moduli:
            parts.extend(p ** e for p, e in prime_factors(m).items())
        return tuple(sorted(parts))

    @cached_property
    def _radices(self) -> tuple[int, ...]:
        """Place values of the mixed-radix encoding (first modulus least significant)."""
        radices = []
        r = 1
        for m in self.moduli:
            radices.append(r)
            r *= m
        return tuple(radices)

    # element plumbing ----------------------------------------------------

    def element(self, coords: Iterable[int]) -> Element:
        c = tuple(coords)
        if len(c) != len(self.moduli):
            raise ValueError(f"expected {len(self.moduli)} coordinates, got {len(c)}")
        for x, m in zip(c, self.moduli):
            if not 0 <= x < m:
                raise ValueError(f"invalid element: coordinate {x} not in [0, {m})")
        return Element(c, self.coords_to_index(c))

    def element_at(self, index: int) -> Element:
        if not 0 <= index < self.order:
            raise ValueError(f"invalid element index {index} for order {self.order}")
        return Element(self.index_to_coords(index), index)

    def coords_to_index(self, coords: Sequence[int]) -> int:
        return sum(x * r for x, r in zip(coords, self._radices))

    def index_to_coords(self, index: int) -> tuple[int, ...]:
        out = []
        for m in self.moduli:
            index, x = divmod(index, m)
            out.append(x)
        return tuple(out)

    def identity(self) -> Element:
        return Element((0,) * len(self.moduli), 0)

    def add(self, a: Element, b: Element) -> Element:
        c = tuple((x + y) % m for x, y, m in zip(a.coords, b.coords, self.moduli))
        return Element(c, self.coords_to_index(c))

    def neg(self, a: Element) -> Element:
        c = tuple((-x) % m for x, m in zip(a.coords, self.moduli))
        return Element(c, self.coords_to_index(c))

    def add_index(self, i: int, j: int) -> int:
        a, b = self.index_to_coords(i), self.index_to_coords(j)
        return self.coords_to_index(
            tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))
        )

    def neg_index(self, i: int) -> int:
        return self.coords_to_index(
            tuple((-x) % m for x, m in zip(self.index_to_coords(i), self.moduli))
        )

    # derived structure ----------------------------------------------------

    def element_order(self, a: Element) -> int:
        """Least k >= 1 with k*a = identity; divides the group order."""
        return math.lcm(*(m // math.gcd(x, m) for x, m in zip(a.coords, self.moduli))) \
            if self.moduli else 1

    def exponent(self) -> int:
        """Largest order of any element (the lcm of the moduli)."""
        return math.lcm(*self.moduli) if self.moduli else 1

    def even_component_count(self) -> int:
        """Number of even prime-power factors in the canonical decomposition."""
        return sum(1 for q in self.decomposition if q % 2 == 0)

    def to_json_dict(self) -> dict:
        """Wire form {"moduli": [...]}; elements travel as canonical indices."""
        return {"moduli": list(self.moduli)}


def make_group(moduli: Iterable[int], max_order: int = DEFAULT_MAX_ORDER) -> GroupSpec:
    """Build a GroupSpec, validating moduli and the order cap."""
    mods = tuple(int(m) for m in moduli)
    for m in mods:
        if m < 2:
            raise ValueError(f"invalid modulus {m}: must be >= 2")
    order = math.prod(mods)
    if order > max_order:
        raise CapacityError(f"group order {order} exceeds cap {max_order}")
    return GroupSpec(mods)


def group_from_json(data: dict, max_order: int = DEFAULT_MAX_ORDER) -> GroupSpec:
    """Parse the wire form {"moduli": [...]}."""
    if not isinstance(data, dict) or "moduli" not in data:
        raise ValueError('expected an object of the form {"moduli": [...]}')
    return make_group(data["moduli"], max_order)


@dataclass(frozen=True)
class Subgroup:
    """A verified subgroup, stored as the frozenset of member indices.

    The identity is always a member, which is why members are raw indices
    rather than an ElemSet (group universes drop the identity from their
    ground set).  Construction checks closure and the Lagrange condition.
    """

    parent: GroupSpec
    members: frozenset[int]

    def __post_init__(self):
        g = self.parent
        if 0 not in self.members:
            raise ValueError("subgroup must contain the identity")
        if g.order % len(self.members) != 0:
            raise ValueError("subgroup size does not divide the group order")
        mem = self.members
        for i in mem:
            if g.neg_index(i) not in mem:
                raise ValueError("subgroup not closed under negation")
            for j in mem:
                if g.add_index(i, j) not in mem:
                    raise ValueError("subgroup not closed under addition")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index_in_parent(self) -> int:
        return self.parent.order // len(self.members)


def generated_subgroup(g: GroupSpec, gens: Sequence[Element]) -> Subgroup:
    """Closure of the generators under addition (hence negation, the group
    being finite), including the identity."""
    members = {0}
    queue = [0]
    gen_idx = [e.index for e in gens]
    while queue:
        x = queue.pop()
        for gi in gen_idx:
            y = g.add_index(x, gi)
            if y not in members:
                members.add(y)
                queue.append(y)
    return Subgroup(g, frozenset(members))


def index2_subgroups(g: GroupSpec) -> list[Subgroup]:
    """All subgroups of index exactly 2.

    Each one is the kernel of a nonzero homomorphism onto the 2-element
    group; such a homomorphism is a parity vector supported on the even
    moduli, so there are 2^V - 1 of them, V being the even component
    count.  Odd-order groups get an empty list.
    """
    even_pos = [i for i, m in enumerate(g.moduli) if m % 2 == 0]
    subs = []
    for bits in range(1, 1 << len(even_pos)):
        chosen = [even_pos[j] for j in range(len(even_pos)) if (bits >> j) & 1]
        members = []
        for idx in range(g.order):
            coords = g.index_to_coords(idx)
            if sum(coords[i] for i in chosen) % 2 == 0:
                members.append(idx)
        subs.append(Subgroup(g, frozenset(members)))
    return subs


def abelian_groups_of_order(n: int) -> list[GroupSpec]:
    """One GroupSpec per isomorphism class of abelian groups of order n.

    Classes are the products, over primes p | n, of the partitions of the
    exponent of p; moduli come out as prime powers, primes ascending and
    parts descending, so the listing is deterministic (e.g. order 8 yields
    C8, C4xC2, C2xC2xC2 in that order).
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return [GroupSpec(())]
    factored = sorted(prime_factors(n).items())
    per_prime = [
        [tuple(p ** part for part in lam) for lam in partitions(e)]
        for p, e in factored
    ]
    out = []
    for combo in product(*per_prime):
        moduli = tuple(q for block in combo for q in block)
        out.append(GroupSpec(moduli))
    return out
