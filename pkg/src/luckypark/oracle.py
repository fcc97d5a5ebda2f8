"""Brute-force enumeration and censuses, independent of the formulas.

Two enumeration strategies must agree: filtering the full preference
space [n]^n through the recognizers, and constructing members directly
(block sequences for the Fubini families, compositions for the weakly
increasing unit family, sorted-prefix times multiset permutations for
plain parking functions).  Censuses aggregate by streaming; nothing
above the size caps is materialized.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product

from .bijections import composition_to_ufr_inc, fr_to_upf, ranks_from_blocks
from .counting import binary_compositions, construct_unique
from .families import (Family, is_fubini_ranking, is_parking_function,
                       is_unit_parking_function, is_weakly_increasing,
                       is_member)
from .parking import park

FILTER_CAP_DEFAULT = 7
CONSTRUCT_CAP_DEFAULT = 9
_ENV_CAP = "LUCKYPARK_MAX_N"


def filter_cap() -> int:
    return int(os.environ.get(_ENV_CAP, FILTER_CAP_DEFAULT))


def construct_cap() -> int:
    return max(CONSTRUCT_CAP_DEFAULT, filter_cap())


def _block_sequences(elements: tuple[int, ...], max_block: int):
    """Ordered sequences of disjoint blocks (size <= max_block) covering
    the elements."""
    if not elements:
        yield ()
        return
    limit = min(len(elements), max_block)
    for size in range(1, limit + 1):
        for block in combinations(elements, size):
            taken = set(block)
            rest = tuple(e for e in elements if e not in taken)
            for tail in _block_sequences(rest, max_block):
                yield (block,) + tail


def _distinct_permutations(items: tuple[int, ...]):
    """All distinct orderings of a multiset, one copy each."""
    counts = Counter(items)
    values = sorted(counts)
    slot = [0] * len(items)

    def rec(depth: int):
        if depth == len(items):
            yield tuple(slot)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                slot[depth] = v
                yield from rec(depth + 1)
                counts[v] += 1

    yield from rec(0)


def _weakly_increasing_pf(n: int):
    """Sorted parking functions: weakly increasing with a_i <= i."""
    prefs = [0] * n

    def rec(i: int, low: int):
        if i == n:
            yield tuple(prefs)
            return
        for v in range(low, i + 2):
            prefs[i] = v
            yield from rec(i + 1, v)

    if n == 0:
        yield ()
    else:
        yield from rec(0, 1)


def _construct(family: Family, n: int):
    elements = tuple(range(1, n + 1))
    if family is Family.FR:
        for blocks in _block_sequences(elements, n):
            yield ranks_from_blocks(n, blocks)
    elif family is Family.UFR:
        for blocks in _block_sequences(elements, 2):
            yield ranks_from_blocks(n, blocks)
    elif family is Family.UPF:
        for blocks in _block_sequences(elements, n):
            yield fr_to_upf(ranks_from_blocks(n, blocks))
    elif family is Family.FR_INC:
        if n == 0:
            yield ()
            return
        for rest in _subsets(range(2, n + 1)):
            yield construct_unique(Family.FR_INC, n, (1,) + rest)
    elif family is Family.UPF_INC:
        if n == 0:
            yield ()
            return
        for rest in _subsets(range(2, n + 1)):
            yield fr_to_upf(construct_unique(Family.FR_INC, n, (1,) + rest))
    elif family is Family.UFR_INC:
        for parts in binary_compositions(n):
            yield composition_to_ufr_inc(parts)
    elif family is Family.PF:
        for sorted_pf in _weakly_increasing_pf(n):
            yield from _distinct_permutations(sorted_pf)
    else:
        raise ValueError(f"unknown family {family!r}")


def _subsets(values):
    values = tuple(values)
    for size in range(len(values) + 1):
        yield from combinations(values, size)


def enumerate_family(family: Family, n: int, strategy: str = "filter"):
    """Yield the family's members on n cars in lexicographic order."""
    if n < 0:
        raise ValueError("negative n")
    if strategy == "filter":
        if n > filter_cap():
            raise ValueError(
                f"full scan capped at n={filter_cap()} (set {_ENV_CAP})")
        if n == 0:
            yield ()
            return
        for t in product(range(1, n + 1), repeat=n):
            if is_member(t, family):
                yield t
    elif strategy == "construct":
        if n > construct_cap():
            raise ValueError(f"construction capped at n={construct_cap()}")
        yield from sorted(_construct(family, n))
    else:
        raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class EnumerationReport:
    family: Family
    n: int
    strategy: str = field(compare=False)
    total: int = 0
    lucky_histogram: dict[int, int] = field(default_factory=dict)
    lucky_set_census: dict[tuple[int, ...], int] = field(default_factory=dict)


def _aggregate(family: Family, n: int, strategy: str,
               members) -> EnumerationReport:
    total = 0
    histogram: Counter = Counter()
    sets: Counter = Counter()
    for t in members:
        lucky = park(t).lucky
        total += 1
        histogram[len(lucky)] += 1
        sets[lucky] += 1
    return EnumerationReport(family, n, strategy, total,
                             dict(histogram), dict(sets))


def census(family: Family, n: int, strategy: str = "filter") -> EnumerationReport:
    """Stream the family and aggregate lucky statistics."""
    if strategy == "construct":
        # order is irrelevant to the aggregates, skip the sort
        if n > construct_cap():
            raise ValueError(f"construction capped at n={construct_cap()}")
        members = _construct(family, n)
    else:
        members = enumerate_family(family, n, strategy)
    return _aggregate(family, n, strategy, members)


def census_all(n: int) -> dict[Family, EnumerationReport]:
    """Censuses for all seven families from a single scan of [n]^n.

    Memberships are computed per tuple from the four base predicates,
    combined exactly as is_member combines them.
    """
    if n > filter_cap():
        raise ValueError(
            f"full scan capped at n={filter_cap()} (set {_ENV_CAP})")
    totals = {f: 0 for f in Family}
    hists = {f: Counter() for f in Family}
    sets = {f: Counter() for f in Family}
    space = product(range(1, n + 1), repeat=n) if n else [()]
    for t in space:
        pf = is_parking_function(t)
        fr = is_fubini_ranking(t)
        upf = is_unit_parking_function(t)
        if not (pf or fr or upf):
            continue
        inc = is_weakly_increasing(t)
        membership = {
            Family.PF: pf,
            Family.FR: fr,
            Family.UPF: upf,
            Family.UFR: fr and upf,
            Family.FR_INC: fr and inc,
            Family.UPF_INC: upf and inc,
            Family.UFR_INC: fr and upf and inc,
        }
        outcome = park(t)
        if not outcome.success:
            raise RuntimeError(f"{t} recognized but does not park")
        lucky = outcome.lucky
        k = len(lucky)
        for family, member in membership.items():
            if member:
                totals[family] += 1
                hists[family][k] += 1
                sets[family][lucky] += 1
    return {
        f: EnumerationReport(f, n, "filter", totals[f],
                             dict(hists[f]), dict(sets[f]))
        for f in Family
    }
