"""Structure-preserving maps between the ranking families.

Three pairs of inverse maps:

* Fubini rankings <-> ordered set partitions of 1..n (block j collects the
  competitors tied at the j-th distinct rank).
* Fubini rankings <-> unit parking functions, by rewriting each tie block
  so every displaced car moves exactly one spot.  Lucky cars, and weak
  monotonicity, are preserved both ways.
* Weakly increasing unit Fubini rankings <-> compositions of n with parts
  in {1, 2} (part = size of each rank's tie block).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .families import is_fubini_ranking, is_weakly_increasing
from .parking import ParkingRule, park, validate_prefs


@dataclass(frozen=True)
class OrderedSetPartition:
    """Sequence of disjoint nonempty blocks whose union is 1..n."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if list(block) != sorted(block):
                raise ValueError(f"block {block} not sorted")
            seen.update(block)
        total = sum(len(b) for b in self.blocks)
        if total != self.n or seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}")


def ranks_from_blocks(n: int, blocks) -> tuple[int, ...]:
    """Preference tuple whose j-th tie block is the j-th listed block.

    Block j gets rank 1 + (number of elements in earlier blocks).
    """
    prefs = [0] * n
    rank = 1
    for block in blocks:
        for car in block:
            prefs[car - 1] = rank
        rank += len(block)
    return tuple(prefs)


def fr_to_osp(prefs) -> OrderedSetPartition:
    """Group competitors by rank, blocks ordered from best rank to worst."""
    prefs = validate_prefs(prefs)
    if not is_fubini_ranking(prefs):
        raise ValueError(f"{prefs} is not a Fubini ranking")
    by_rank: dict[int, list[int]] = {}
    for car, rank in enumerate(prefs, 1):
        by_rank.setdefault(rank, []).append(car)
    blocks = tuple(tuple(by_rank[r]) for r in sorted(by_rank))
    return OrderedSetPartition(len(prefs), blocks)


def osp_to_fr(partition: OrderedSetPartition) -> tuple[int, ...]:
    return ranks_from_blocks(partition.n, partition.blocks)


def fr_to_upf(prefs) -> tuple[int, ...]:
    """Rewrite each tie block so the sequence parks under the unit rule.

    A block of j competitors tied at rank x becomes, in position order,
    x, x, x+1, ..., x+j-2: the first keeps its spot, each later one parks
    one past its stated preference.  Lucky cars are unchanged.
    """
    prefs = validate_prefs(prefs)
    if not is_fubini_ranking(prefs):
        raise ValueError(f"{prefs} is not a Fubini ranking")
    out = list(prefs)
    counts = Counter(prefs)
    positions: dict[int, int] = {}
    for i, x in enumerate(prefs):
        offset = positions.get(x, 0)
        if offset:
            out[i] = x + offset - 1
        positions[x] = offset + 1
    assert all(positions[x] == counts[x] for x in counts)
    return tuple(out)


def upf_to_fr(prefs) -> tuple[int, ...]:
    """Invert the tie-block rewrite by reading the parking outcome.

    Park under the unit rule; every displaced car sits one past its
    preference, directly behind the car that displaced it, so walking
    left from a car's spot to the nearest lucky car finds the seed of
    its displacement chain.  The seed's spot is the shared rank.
    """
    prefs = validate_prefs(prefs)
    outcome = park(prefs, ParkingRule.UNIT)
    if not outcome.success:
        raise ValueError(f"{prefs} is not a unit parking function")
    n = len(prefs)
    lucky_spot = [False] * (n + 1)
    for car in outcome.lucky:
        lucky_spot[outcome.spots[car - 1]] = True
    out = []
    for car in range(1, n + 1):
        s = outcome.spots[car - 1]
        while not lucky_spot[s]:
            s -= 1
        out.append(s)
    return tuple(out)


def ufr_inc_to_composition(prefs) -> tuple[int, ...]:
    """Tie-block sizes of a weakly increasing unit Fubini ranking.

    Every block has one or two members, so the result is a composition
    of n with parts in {1, 2}, listed from rank 1 upward.
    """
    prefs = validate_prefs(prefs)
    if not (is_weakly_increasing(prefs) and is_fubini_ranking(prefs)):
        raise ValueError(f"{prefs} is not a weakly increasing Fubini ranking")
    counts = Counter(prefs)
    parts = tuple(counts[r] for r in sorted(counts))
    if any(p > 2 for p in parts):
        raise ValueError(f"{prefs} has a rank shared three or more ways")
    return parts


def composition_to_ufr_inc(parts) -> tuple[int, ...]:
    """Weakly increasing tuple whose tie-block sizes are the given parts."""
    parts = tuple(parts)
    if any(p not in (1, 2) for p in parts):
        raise ValueError(f"parts {parts} not all in {{1, 2}}")
    out = []
    rank = 1
    for p in parts:
        out.extend([rank] * p)
        rank += p
    return tuple(out)
