"""Exact counts: by lucky cars, by fixed lucky set, and family totals.

Each family's count of n-sequences with exactly k lucky cars has a closed
form and a recurrence; the Fubini-ranking and unit-parking families also
have a composition-sum form.  All arithmetic is arbitrary-precision integer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .families import Family


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Set partitions of 1..n into k nonempty blocks."""
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling2_restricted(n: int, k: int) -> int:
    """Set partitions of 1..n into k blocks of size at most two.

    Element n sits alone or pairs with one of the other n-1 elements.
    """
    if n < 0 or k < 0:
        return 0
    if n == 0 or k == 0:
        return 1 if n == k else 0
    return (stirling2_restricted(n - 1, k - 1)
            + (n - 1) * stirling2_restricted(n - 2, k - 1))


def fubini(n: int) -> int:
    """Rankings of n competitors with ties allowed."""
    return sum(math.factorial(k) * stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("negative index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def compositions(n: int, k: int):
    """All k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k > n:
        return
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(k))


def binary_compositions(n: int):
    """All tuples of parts in {1, 2} summing to n, lexicographic."""
    if n == 0:
        yield ()
        return
    stack = [((), n)]
    while stack:
        head, rest = stack.pop()
        if rest == 0:
            yield head
            continue
        if rest >= 2:
            stack.append((head + (2,), rest - 2))
        stack.append((head + (1,), rest - 1))


def _multinomial(parts) -> int:
    out = 1
    total = 0
    for p in parts:
        total += p
        out *= math.comb(total, p)
    return out


_PER_K_FAMILIES = (Family.FR, Family.UPF, Family.FR_INC, Family.UPF_INC,
                   Family.UFR, Family.UFR_INC)

METHODS = ("closed", "recurrence", "composition-sum")


def _closed(family: Family, n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    if family in (Family.FR, Family.UPF):
        return math.factorial(k) * stirling2(n, k)
    if family in (Family.FR_INC, Family.UPF_INC):
        if n == 0:
            return 1 if k == 0 else 0
        return math.comb(n - 1, k - 1) if k >= 1 else 0
    if family is Family.UFR:
        ways = math.comb(k, n - k)
        if ways == 0:
            return 0
        total = math.factorial(n) * ways
        assert total % (1 << (n - k)) == 0
        return total >> (n - k)
    if family is Family.UFR_INC:
        return math.comb(k, n - k)
    raise ValueError(f"no per-k count for {family.value}")


@lru_cache(maxsize=None)
def _recurrence(family: Family, n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    if family in (Family.FR, Family.UPF):
        return k * (_recurrence(family, n - 1, k)
                    + _recurrence(family, n - 1, k - 1))
    if family in (Family.FR_INC, Family.UPF_INC):
        return (_recurrence(family, n - 1, k)
                + _recurrence(family, n - 1, k - 1))
    if family is Family.UFR:
        # the k-census coefficient 2k - n + 1 is never negative on the
        # support ceil(n/2) <= k <= n
        return (k * _recurrence(family, n - 1, k - 1)
                + (2 * k - n + 1) * _recurrence(family, n - 1, k))
    if family is Family.UFR_INC:
        return (_recurrence(family, n - 1, k - 1)
                + _recurrence(family, n - 2, k - 1))
    raise ValueError(f"no per-k count for {family.value}")


def _composition_sum(family: Family, n: int, k: int) -> int:
    if family not in (Family.FR, Family.UPF):
        raise ValueError(f"composition-sum undefined for {family.value}")
    if k < 0 or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return sum(_multinomial(c) for c in compositions(n, k))


def count(family: Family, n: int, k: int, method: str = "closed") -> int:
    """Members of the family on n cars with exactly k lucky cars."""
    if n < 0:
        raise ValueError("negative n")
    if family not in _PER_K_FAMILIES:
        raise ValueError(f"no per-k count for {family.value}")
    if method == "closed":
        return _closed(family, n, k)
    if method == "recurrence":
        return _recurrence(family, n, k)
    if method == "composition-sum":
        return _composition_sum(family, n, k)
    raise ValueError(f"unknown method {method!r}")


def total(family: Family, n: int) -> int:
    """Family size on n cars."""
    if n < 0:
        raise ValueError("negative n")
    if family is Family.PF:
        return (n + 1) ** (n - 1) if n else 1
    if family in (Family.FR, Family.UPF):
        return fubini(n)
    if family in (Family.FR_INC, Family.UPF_INC):
        return 2 ** (n - 1) if n else 1
    if family is Family.UFR:
        return sum(_closed(family, n, k) for k in range(n + 1))
    if family is Family.UFR_INC:
        return fibonacci(n + 1)
    raise ValueError(f"unknown family {family!r}")


def _check_lucky_indices(n: int, lucky) -> tuple[int, ...]:
    out = tuple(lucky)
    if list(out) != sorted(set(out)):
        raise ValueError(f"indices {out} not strictly increasing")
    if out and (out[0] < 1 or out[-1] > n):
        raise ValueError(f"indices {out} outside 1..{n}")
    return out


def count_fixed_lucky(family: Family, n: int, lucky) -> int:
    """Members of the family whose lucky set is exactly the given one.

    Supported for the four Fubini-type families.  Sets not containing
    car 1 are never lucky sets, so they count zero.
    """
    idx = _check_lucky_indices(n, lucky)
    if family not in (Family.FR, Family.FR_INC, Family.UFR, Family.UFR_INC):
        raise ValueError(f"no fixed-lucky-set count for {family.value}")
    if n == 0:
        return 1 if not idx else 0
    if not idx or idx[0] != 1:
        return 0
    k = len(idx)
    sentinel = idx + (n + 1,)
    if family is Family.FR:
        out = 1
        for j in range(k):
            out *= (j + 1) ** (sentinel[j + 1] - sentinel[j])
        return out
    if family is Family.FR_INC:
        return 1
    if family is Family.UFR:
        unlucky = sorted(set(range(1, n + 1)) - set(idx))
        out = math.factorial(k)
        for pos, u in enumerate(unlucky, 1):
            factor = u - 2 * pos + 1
            if factor <= 0:
                return 0
            out *= factor
        return out
    # weakly increasing unit family: unique member when every tie block
    # has size one or two, impossible otherwise
    if all(sentinel[j + 1] - sentinel[j] <= 2 for j in range(k)):
        return 1
    return 0


def construct_unique(family: Family, n: int, lucky) -> tuple[int, ...]:
    """The one weakly increasing member with the given lucky set.

    Positions i_j, ..., i_{j+1}-1 all hold rank i_j.  Defined for the two
    weakly increasing Fubini-type families; raises when no member exists.
    """
    if family not in (Family.FR_INC, Family.UFR_INC):
        raise ValueError(f"no unique construction for {family.value}")
    idx = _check_lucky_indices(n, lucky)
    if count_fixed_lucky(family, n, idx) != 1:
        raise ValueError(f"{idx} is not a lucky set of {family.value} at n={n}")
    if n == 0:
        return ()
    sentinel = idx + (n + 1,)
    out = []
    for j in range(len(idx)):
        out.extend([idx[j]] * (sentinel[j + 1] - sentinel[j]))
    return tuple(out)


@dataclass(frozen=True)
class CountTriangle:
    family: Family
    rows: tuple[tuple[int, ...], ...]


def triangle(family: Family, n_max: int) -> CountTriangle:
    """Rows n = 0..n_max of per-k counts, cross-checked both ways."""
    rows = []
    for n in range(n_max + 1):
        row = tuple(_recurrence(family, n, k) for k in range(n + 1))
        assert row == tuple(_closed(family, n, k) for k in range(n + 1))
        rows.append(row)
    return CountTriangle(family, tuple(rows))
