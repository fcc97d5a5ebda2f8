"""Recognizers for the parking and ranking families.

A Fubini ranking of n competitors assigns rank r to m tied competitors
only if ranks r+1, ..., r+m-1 go unused, so the used ranks tile 1..n.
The unit families are the sequences that also succeed under the one-spot
parking rule; inc marks the weakly increasing subfamilies.
"""
from __future__ import annotations

from collections import Counter
from enum import Enum

from .parking import ParkingRule, park, validate_prefs


class Family(Enum):
    PF = "pf"
    FR = "fr"
    UPF = "upf"
    UFR = "ufr"
    FR_INC = "frinc"
    UPF_INC = "upfinc"
    UFR_INC = "ufrinc"


def is_parking_function(prefs) -> bool:
    """True when the sorted sequence satisfies a'_i <= i."""
    try:
        prefs = validate_prefs(prefs)
    except ValueError:
        return False
    return all(a <= i for i, a in enumerate(sorted(prefs), 1))


def is_fubini_ranking(prefs) -> bool:
    """True when the used ranks with their multiplicities tile 1..n."""
    try:
        prefs = validate_prefs(prefs)
    except ValueError:
        return False
    multiplicity = Counter(prefs)
    expected = 1
    for rank in sorted(multiplicity):
        if rank != expected:
            return False
        expected += multiplicity[rank]
    return expected == len(prefs) + 1


def is_weakly_increasing(prefs) -> bool:
    prefs = tuple(prefs)
    return all(prefs[i] <= prefs[i + 1] for i in range(len(prefs) - 1))


def is_unit_parking_function(prefs) -> bool:
    """True when every car parks at its preference or one spot beyond."""
    try:
        prefs = validate_prefs(prefs)
    except ValueError:
        return False
    return park(prefs, ParkingRule.UNIT).success


def is_member(prefs, family: Family) -> bool:
    if family is Family.PF:
        return is_parking_function(prefs)
    if family is Family.FR:
        return is_fubini_ranking(prefs)
    if family is Family.UPF:
        return is_unit_parking_function(prefs)
    if family is Family.UFR:
        return is_fubini_ranking(prefs) and is_unit_parking_function(prefs)
    if family is Family.FR_INC:
        return is_weakly_increasing(prefs) and is_fubini_ranking(prefs)
    if family is Family.UPF_INC:
        return is_weakly_increasing(prefs) and is_unit_parking_function(prefs)
    if family is Family.UFR_INC:
        return (is_weakly_increasing(prefs) and is_fubini_ranking(prefs)
                and is_unit_parking_function(prefs))
    raise ValueError(f"unknown family {family!r}")


def fr_lucky_set(prefs) -> tuple[int, ...]:
    """Lucky cars of a Fubini ranking: the first holder of each rank.

    Agrees with park(prefs).lucky but needs no simulation, since in a
    Fubini ranking exactly the earliest competitor at each rank parks at
    its preference.
    """
    prefs = validate_prefs(prefs)
    if not is_fubini_ranking(prefs):
        raise ValueError(f"{prefs} is not a Fubini ranking")
    seen = set()
    out = []
    for car, rank in enumerate(prefs, 1):
        if rank not in seen:
            seen.add(rank)
            out.append(car)
    return tuple(out)
