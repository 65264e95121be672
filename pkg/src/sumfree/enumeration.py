"""Exhaustive enumeration and counting of sum-free subsets.

Two engines back everything here:

* a naive binary-counter reference that tests every subset with the
  generic predicate (kept deliberately dumb, it is the oracle);
* a backtracking walk of the family of sum-free sets.  The family is
  closed under taking subsets, so the walk extends the current set only
  by elements that keep it sum-free and therefore touches exactly one
  node per sum-free set.  Counting costs O(answer) bit operations.

The walk maintains a "forbidden" bit mask per node.  For intervals,
elements are taken in ascending order, so the only way a later candidate
can break sum-freeness is by being a sum of two chosen elements; the mask
is just the running sumset.  For groups, wraparound means a candidate can
also hit a chosen element by addition or halving, so the mask tracks the
sumset, the difference set and the half-set together, which also makes
the maximality test a single mask comparison.

Sharded counting fixes the first log2(shard_count) include/exclude
decisions from the bits of the shard index (bit j governs ground element
j, least significant bit first); shard totals add up to the plain count
for any power-of-two shard count.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .groups import GroupSpec
from .universe import (
    ElemSet,
    GroupUniverse,
    IntervalUniverse,
    Universe,
    is_sum_free,
)
from .errors import CapacityError

NAIVE_CAP = 25
DEFAULT_GROUND_CAP = 40
TWO_WISE_CAP = 18


class _IntervalEngine:
    """Mask arithmetic over slots v - lo for the interval [lo, hi]."""

    __slots__ = ("lo", "hi", "window", "ground_mask", "ground_count")

    def __init__(self, lo: int, hi: int):
        self.lo = lo
        self.hi = hi
        n = hi - lo + 1
        self.window = (1 << n) - 1
        self.ground_mask = self.window
        self.ground_count = n

    def slot_for_position(self, j: int) -> int:
        return j

    def forbid(self, s_mask: int, f_mask: int, slot: int) -> int:
        # adding v puts every x + v (x in the new set, v included) off limits;
        # shifting a slot mask by the value v is exactly that
        v = slot + self.lo
        return f_mask | (((s_mask | (1 << slot)) << v) & self.window)

    def extension_blocked(self, s_mask: int, slot: int) -> bool:
        # reasons beyond the sum mask why slot cannot join s_mask:
        # v completes a difference (x and x + v chosen) or 2v is chosen
        v = slot + self.lo
        if (s_mask >> v) & s_mask:
            return True
        two = 2 * v
        return two <= self.hi and bool((s_mask >> (two - self.lo)) & 1)


class _GroupEngine:
    """Table-driven mask arithmetic over canonical indices of a group."""

    __slots__ = ("order", "ground_mask", "ground_count", "add", "sub", "halves")

    def __init__(self, group: GroupSpec):
        order = group.order
        coords = [group.index_to_coords(i) for i in range(order)]
        moduli = group.moduli
        add = []
        for a in coords:
            row = [
                group.coords_to_index(
                    tuple((x + y) % m for x, y, m in zip(a, b, moduli))
                )
                for b in coords
            ]
            add.append(row)
        halves = [0] * order
        for u in range(order):
            halves[add[u][u]] |= 1 << u
        self.order = order
        self.ground_mask = ((1 << order) - 1) & ~1 if order > 1 else 0
        self.ground_count = order - 1
        self.add = add
        neg = [group.neg_index(i) for i in range(order)]
        self.sub = [[add[a][neg[b]] for b in range(order)] for a in range(order)]
        self.halves = halves

    def slot_for_position(self, j: int) -> int:
        return j + 1

    def forbid(self, s_mask: int, f_mask: int, slot: int) -> int:
        add_row = self.add[slot]
        sub_tbl = self.sub
        nf = f_mask | self.halves[slot]
        m = s_mask | (1 << slot)
        while m:
            b = m & -m
            m ^= b
            x = b.bit_length() - 1
            nf |= 1 << add_row[x]
            nf |= 1 << sub_tbl[x][slot]
            nf |= 1 << sub_tbl[slot][x]
        return nf

    def extension_blocked(self, s_mask: int, slot: int) -> bool:
        # forbid() already records sums, differences and halves
        return False


def _engine_for(u: Universe):
    if isinstance(u, IntervalUniverse):
        return _IntervalEngine(u.lo, u.hi)
    if isinstance(u, GroupUniverse):
        return _GroupEngine(u.group)
    raise TypeError(f"unsupported universe {u!r}")


def _require_ground(u: Universe, cap: int) -> None:
    if u.ground_size > cap:
        raise CapacityError(
            f"{u.describe()} has ground size {u.ground_size}, cap is {cap}"
        )


def _walk(engine, visit: Optional[Callable[[int], None]], s: int, f: int,
          min_slot: int) -> int:
    if visit is not None:
        visit(s)
    total = 1
    avail = engine.ground_mask & ~f & (-1 << min_slot)
    while avail:
        b = avail & -avail
        avail ^= b
        slot = b.bit_length() - 1
        total += _walk(engine, visit, s | b, engine.forbid(s, f, slot), slot + 1)
    return total


@lru_cache(maxsize=None)
def _interval_count(lo: int, hi: int) -> int:
    return _walk(_IntervalEngine(lo, hi), None, 0, 0, 0)


@lru_cache(maxsize=None)
def _group_count(moduli: tuple[int, ...]) -> int:
    return _walk(_GroupEngine(GroupSpec(moduli)), None, 0, 0, 0)


def enumerate_naive(u: Universe, visit: Optional[Callable[[ElemSet], None]] = None) -> int:
    """Reference count: test all 2^ground subsets with the generic predicate."""
    if u.ground_size > NAIVE_CAP:
        raise CapacityError(
            f"naive enumeration over {u.ground_size} elements refused (cap {NAIVE_CAP})"
        )
    ground = list(u.ground_values())
    count = 0
    for pattern in range(1 << len(ground)):
        values = [ground[j] for j in range(len(ground)) if (pattern >> j) & 1]
        s = ElemSet.from_values(u, values)
        if is_sum_free(u, s):
            count += 1
            if visit is not None:
                visit(s)
    return count


def count_sum_free(u: Universe, cap: int = DEFAULT_GROUND_CAP) -> int:
    """Number of sum-free subsets of the universe, empty set included."""
    _require_ground(u, cap)
    if isinstance(u, IntervalUniverse):
        return _interval_count(u.lo, u.hi)
    return _group_count(u.group.moduli)


def enumerate_sum_free(u: Universe, visit: Callable[[ElemSet], None],
                       cap: int = DEFAULT_GROUND_CAP) -> int:
    """Invoke visit on every sum-free subset (ascending lexicographic order)."""
    _require_ground(u, cap)
    engine = _engine_for(u)
    return _walk(engine, lambda mask: visit(ElemSet(u, mask)), 0, 0, 0)


def count_sum_free_sharded(u: Universe, shard_index: int, shard_count: int,
                           cap: int = DEFAULT_GROUND_CAP) -> int:
    """Count the shard of sum-free sets selected by the shard index.

    The bits of shard_index fix the membership of the first
    log2(shard_count) ground elements, so the shards partition the family
    and their totals sum to count_sum_free.
    """
    if shard_count < 1 or shard_count & (shard_count - 1):
        raise ValueError(f"shard_count must be a power of two, got {shard_count}")
    if not 0 <= shard_index < shard_count:
        raise ValueError(f"shard_index {shard_index} out of range for {shard_count}")
    _require_ground(u, cap)
    engine = _engine_for(u)
    k = shard_count.bit_length() - 1
    s = f = 0
    for j in range(k):
        include = (shard_index >> j) & 1
        if j >= engine.ground_count:
            if include:
                return 0
            continue
        slot = engine.slot_for_position(j)
        if include:
            if (f >> slot) & 1:
                return 0
            f = engine.forbid(s, f, slot)
            s |= 1 << slot
    min_slot = engine.slot_for_position(min(k, engine.ground_count))
    return _walk(engine, None, s, f, min_slot)


def _greedy_cardinality(engine) -> int:
    s = f = 0
    card = 0
    avail = engine.ground_mask
    while avail:
        b = avail & -avail
        slot = b.bit_length() - 1
        f = engine.forbid(s, f, slot)
        s |= b
        card += 1
        avail = engine.ground_mask & ~f & (-1 << (slot + 1))
    return card


def enumerate_maximum(u: Universe, cap: int = DEFAULT_GROUND_CAP) -> list[ElemSet]:
    """All sum-free sets of maximum cardinality, ascending lexicographic.

    Branch and bound: a greedy pass seeds the target cardinality (for
    intervals the greedy set is exactly the odds), then the walk prunes
    any branch whose set plus remaining candidates cannot reach the best.
    """
    _require_ground(u, cap)
    engine = _engine_for(u)
    best = _greedy_cardinality(engine)
    found: list[int] = []

    def rec(s: int, f: int, min_slot: int, card: int) -> None:
        nonlocal best, found
        if card > best:
            best = card
            found = [s]
        elif card == best:
            found.append(s)
        avail = engine.ground_mask & ~f & (-1 << min_slot)
        if card + avail.bit_count() < best:
            return
        while avail:
            b = avail & -avail
            avail ^= b
            slot = b.bit_length() - 1
            rec(s | b, engine.forbid(s, f, slot), slot + 1, card + 1)

    rec(0, 0, 0, 0)
    return [ElemSet(u, mask) for mask in found]


def _maximal_walk(u: Universe, collect: bool, cap: int) -> tuple[int, list[ElemSet]]:
    _require_ground(u, cap)
    engine = _engine_for(u)
    out: list[ElemSet] = []
    count = 0

    def rec(s: int, f: int, min_slot: int) -> None:
        nonlocal count
        cand = engine.ground_mask & ~f & ~s
        maximal = True
        m = cand
        while m:
            b = m & -m
            m ^= b
            if not engine.extension_blocked(s, b.bit_length() - 1):
                maximal = False
                break
        if maximal:
            count += 1
            if collect:
                out.append(ElemSet(u, s))
        avail = engine.ground_mask & ~f & (-1 << min_slot)
        while avail:
            b = avail & -avail
            avail ^= b
            slot = b.bit_length() - 1
            rec(s | b, engine.forbid(s, f, slot), slot + 1)

    rec(0, 0, 0)
    return count, out


def enumerate_maximal(u: Universe, cap: int = DEFAULT_GROUND_CAP) -> list[ElemSet]:
    """All maximal sum-free sets: those rejecting every one-element extension."""
    return _maximal_walk(u, True, cap)[1]


def count_maximal(u: Universe, cap: int = DEFAULT_GROUND_CAP) -> int:
    return _maximal_walk(u, False, cap)[0]


def count_by_cardinality(u: Universe, cap: int = DEFAULT_GROUND_CAP) -> dict[int, int]:
    """Histogram {m: number of sum-free sets of cardinality m}; sums to the count."""
    _require_ground(u, cap)
    engine = _engine_for(u)
    hist: dict[int, int] = {}

    def visit(mask: int) -> None:
        c = mask.bit_count()
        hist[c] = hist.get(c, 0) + 1

    _walk(engine, visit, 0, 0, 0)
    return dict(sorted(hist.items()))


def _two_wise_splits(mask: int, n: int) -> bool:
    """Can the value-indexed subset mask of [1, n] be 2-colored sum-free?"""
    elems = []
    m = mask
    while m:
        b = m & -m
        m ^= b
        elems.append(b.bit_length() - 1)

    def addable(part: int, v: int) -> bool:
        if (part >> v) & part:
            return False
        if 2 * v <= n and (part >> (2 * v)) & 1:
            return False
        low = part & ((1 << v) - 1)
        while low:
            b = low & -low
            low ^= b
            x = b.bit_length() - 1
            if (part >> (v - x)) & 1:
                return False
        return True

    def rec(i: int, p0: int, p1: int) -> bool:
        if i == len(elems):
            return True
        v = elems[i]
        if addable(p0, v) and rec(i + 1, p0 | (1 << v), p1):
            return True
        if addable(p1, v) and rec(i + 1, p0, p1 | (1 << v)):
            return True
        return False

    if not elems:
        return True
    # first element goes to part 0 without loss of generality
    return rec(1, 1 << elems[0], 0)


def count_two_wise(n: int, cap: int = TWO_WISE_CAP) -> int:
    """Subsets of [1, n] that split into two sum-free parts.

    Equals 2^n for n <= 4 (a two-part split of [1, 4] exists, so every
    subset inherits one); the first shortfall appears at n = 5.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > cap:
        raise CapacityError(f"two-wise counting capped at n <= {cap}, got {n}")
    total = 0
    for r in range(1 << n):
        if _two_wise_splits(r << 1, n):
            total += 1
    return total


@dataclass
class CountRecord:
    """One row of a counting experiment."""

    universe: str
    size: int
    f: int
    f_max: Optional[int] = None
    f_odd: Optional[int] = None
    f_interval: Optional[int] = None
    f_two_wise: Optional[int] = None
    by_cardinality: Optional[dict[int, int]] = None
    ratio_half: Optional[float] = None
    shard_count: int = 1


def build_count_record(u: Universe, with_maximal: bool = False,
                       with_cardinality: bool = False,
                       with_two_wise: bool = False,
                       shard_count: int = 1,
                       cap: int = DEFAULT_GROUND_CAP) -> CountRecord:
    """Assemble a CountRecord for one universe, sharding the base count."""
    if shard_count == 1:
        f = count_sum_free(u, cap)
    else:
        f = sum(
            count_sum_free_sharded(u, i, shard_count, cap)
            for i in range(shard_count)
        )
    rec = CountRecord(universe=u.describe(), size=u.ground_size, f=f,
                      shard_count=shard_count)
    if isinstance(u, IntervalUniverse) and u.lo == 1:
        n = u.hi
        rec.f_odd = 1 << ((n + 1) // 2)
        rec.f_interval = count_sum_free(IntervalUniverse((n + 2) // 3, n), cap)
        rec.ratio_half = f / 2 ** (n / 2)
    if with_maximal:
        rec.f_max = count_maximal(u, cap)
    if with_cardinality:
        rec.by_cardinality = count_by_cardinality(u, cap)
    if with_two_wise:
        if not (isinstance(u, IntervalUniverse) and u.lo == 1):
            raise ValueError("two-wise counting is defined for [1, n] universes")
        rec.f_two_wise = count_two_wise(u.hi)
    return rec
