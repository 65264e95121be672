"""Generators of sum-free sets: randomized nesting and deterministic extraction.

The randomized generator grows a nested chain of sum-free sets by
accept/reject sampling (a fair coin gates every accepted candidate).  The
deterministic pipeline extracts from any finite set of positive integers
a sum-free subset of more than a third of its size, by reducing modulo a
suitable prime and dilating into the middle block of residues; every
intermediate is retained on a trace for audit.

Randomness comes from random.Random (Mersenne Twister), seeded per call,
so runs are reproducible across platforms for a fixed seed.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .arith import is_prime
from .construct import middle_block
from .errors import GenerationTimeout
from .groups import make_group
from .universe import ElemSet, GroupUniverse, IntervalUniverse, is_sum_free

import random


@dataclass(frozen=True)
class RandomGenConfig:
    """Parameters of the randomized nested generator.

    seed_element starts the chain (the output always contains it),
    target_cardinality stops it, candidates are drawn uniformly from
    [1, sample_hi], and max_iterations bounds the number of loop passes
    before giving up with GenerationTimeout.
    """

    seed_element: int
    target_cardinality: int
    sample_hi: int
    max_iterations: int = 100_000
    rng_seed: int = 0

    def __post_init__(self):
        if self.target_cardinality < 1:
            raise ValueError("target cardinality must be >= 1")
        if not 1 <= self.seed_element <= self.sample_hi:
            raise ValueError(
                f"seed element {self.seed_element} outside [1, {self.sample_hi}]"
            )
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


def random_sum_free(cfg: RandomGenConfig) -> ElemSet:
    """Grow a random sum-free subset of [1, sample_hi] around the seed element.

    Each pass draws a uniform candidate, tentatively inserts it, draws a
    fair coin, and commits only if the augmented set is sum-free and the
    coin came up 1.  Deterministic for a fixed rng_seed.  Raises
    GenerationTimeout when the budget runs out first; the exception
    carries the partial set.
    """
    u = IntervalUniverse(1, cfg.sample_hi)
    s = ElemSet.from_values(u, [cfg.seed_element])
    rng = random.Random(cfg.rng_seed)
    for _ in range(cfg.max_iterations):
        if s.cardinality >= cfg.target_cardinality:
            return s
        candidate = rng.randint(1, cfg.sample_hi)
        coin = rng.randint(1, 2)
        augmented = s.with_value(candidate)
        if coin == 1 and is_sum_free(u, augmented):
            s = augmented
    if s.cardinality >= cfg.target_cardinality:
        return s
    raise GenerationTimeout(
        f"no sum-free set of cardinality {cfg.target_cardinality} found in "
        f"{cfg.max_iterations} passes (reached {s.cardinality})",
        partial=s,
    )


@dataclass(frozen=True)
class PrimePick:
    """A usable prime for the extraction pipeline, plus the soft size bound."""

    p: int
    log_weight: float        # sum of log2 over the input elements
    bound: Optional[float]   # 3 * l * ln(l), when defined
    within_bound: bool


def find_prime(elements: Sequence[int]) -> PrimePick:
    """Smallest prime p = 2 (mod 3) dividing no input element.

    Also reports whether p <= 3 * l * ln(l) with l = sum(log2(a)); the
    bound is informational only and never rejects a prime.
    """
    if not elements:
        raise ValueError("need at least one element")
    log_weight = sum(math.log2(a) for a in elements)
    p = 2
    while True:
        if p % 3 == 2 and is_prime(p) and all(a % p != 0 for a in elements):
            break
        p += 1
    bound = 3 * log_weight * math.log(log_weight) if log_weight > 1 else None
    return PrimePick(p, log_weight, bound, bound is not None and p <= bound)


def residue_weights(elements: Sequence[int], p: int) -> dict[int, int]:
    """How many inputs fall in each nonzero residue class mod p.

    Every residue 1..p-1 is present in the result, zero counts included;
    an input divisible by p is an error (the prime was unusable).
    """
    weights = {x: 0 for x in range(1, p)}
    for a in elements:
        r = a % p
        if r == 0:
            raise ValueError(f"invalid prime {p}: it divides {a}")
        weights[r] += 1
    return weights


def find_dilator(weights: dict[int, int], p: int) -> int:
    """Smallest t with more than a third of the weight landing in the
    middle block of Z_p after dilation by t.

    Existence is guaranteed by averaging: dilation is a bijection on
    nonzero residues and the block holds k+1 of the 3k+1 of them.
    """
    block = set(middle_block(p).members())
    total = sum(weights.values())
    for t in range(1, p):
        hit = sum(w for x, w in weights.items() if (t * x) % p in block)
        if 3 * hit > total:
            return t
    raise AssertionError(f"no dilator found for p={p}; this cannot happen")


@dataclass(frozen=True)
class ExtractionTrace:
    """Everything the extraction pipeline computed, for audit and replay."""

    elements: tuple[int, ...]
    n: int
    log_weight: float
    p: int
    k: int
    weights: dict[int, int]
    total_weight: int
    dilator: int
    dilator_inverse: int
    residue_set: ElemSet      # dilated block in Z_p
    subset: ElemSet           # the extracted sum-free subset of the input
    within_prime_bound: bool

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "n": self.n,
            "log_weight": self.log_weight,
            "p": self.p,
            "k": self.k,
            "weights": {str(k): v for k, v in self.weights.items()},
            "total_weight": self.total_weight,
            "dilator": self.dilator,
            "dilator_inverse": self.dilator_inverse,
            "residue_set": self.residue_set.to_json_list(),
            "subset": self.subset.to_json_list(),
            "within_prime_bound": self.within_prime_bound,
        }


def extract_sum_free(elements: Iterable[int]) -> ExtractionTrace:
    """Extract a sum-free subset holding more than a third of the input.

    Pipeline: pick a prime p = 2 (mod 3) coprime to the input, weigh the
    nonzero residues, dilate so the middle block of Z_p catches more than
    a third of the weight, pull the block back through the dilation, and
    keep the inputs whose residues land in it.  The result is sum-free
    because the dilated block is sum-free in Z_p and integer sums respect
    residues.
    """
    elems = tuple(sorted(elements))
    if not elems:
        raise ValueError("need at least one element")
    if any(a < 1 for a in elems):
        raise ValueError("elements must be positive integers")
    if len(set(elems)) != len(elems):
        raise ValueError("elements must be distinct")
    n = len(elems)
    pick = find_prime(elems)
    p = pick.p
    k = (p - 2) // 3
    weights = residue_weights(elems, p)
    total = sum(weights.values())
    if total != n:
        raise AssertionError("weights lost mass; residue reduction is broken")
    t = find_dilator(weights, p)
    t_inv = pow(t, -1, p)
    block = middle_block(p)
    zp = GroupUniverse(make_group([p]))
    residue_set = ElemSet.from_values(zp, ((t_inv * b) % p for b in block.members()))
    chosen = set(residue_set.members())
    picked = [a for a in elems if a % p in chosen]
    subset = ElemSet.from_values(IntervalUniverse(1, max(elems)), picked)
    if 3 * subset.cardinality <= n:
        raise AssertionError("extracted subset too small; dilator search is broken")
    return ExtractionTrace(
        elements=elems,
        n=n,
        log_weight=pick.log_weight,
        p=p,
        k=k,
        weights=weights,
        total_weight=total,
        dilator=t,
        dilator_inverse=t_inv,
        residue_set=residue_set,
        subset=subset,
        within_prime_bound=pick.within_bound,
    )
