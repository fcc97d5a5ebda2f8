"""One-way street parking simulation and the lucky-car statistic.

n cars drive down a one-way street with spots 1..n.  Car i heads to its
preferred spot.  Under the classic rule a car finding its spot taken rolls
forward to the first free spot; under the unit rule it may advance at most
one spot before giving up.  A car that parks exactly at its preference is
lucky.  The first car is always lucky.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class ParkingRule(Enum):
    CLASSIC = "classic"
    UNIT = "unit"


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the cars down the street.

    On success ``spots[i-1]`` is where car i parked and ``failed_car`` is
    None.  On failure ``failed_car`` is the first car that could not park,
    ``spots`` is None, and ``lucky`` covers only the cars that parked
    before the failure.
    """

    spots: tuple[int, ...] | None
    failed_car: int | None
    lucky: tuple[int, ...]

    @property
    def success(self) -> bool:
        return self.failed_car is None


def validate_prefs(prefs) -> tuple[int, ...]:
    """Normalize to a tuple and check every entry lies in 1..n."""
    out = tuple(prefs)
    n = len(out)
    for a in out:
        if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= n:
            raise ValueError(f"preference {a!r} outside 1..{n}")
    return out


def park(prefs, rule: ParkingRule | str = ParkingRule.CLASSIC) -> ParkingOutcome:
    """Simulate the street and report spot assignments and lucky cars.

    ``rule`` may be a ParkingRule member or its string value; anything
    else raises ValueError rather than silently parking classically.
    """
    prefs = validate_prefs(prefs)
    rule = ParkingRule(rule)
    n = len(prefs)
    taken = [False] * (n + 1)
    spots: list[int] = []
    lucky: list[int] = []
    for car, pref in enumerate(prefs, 1):
        if not taken[pref]:
            spot = pref
            lucky.append(car)
        elif rule is ParkingRule.UNIT:
            spot = pref + 1
            if spot > n or taken[spot]:
                return ParkingOutcome(None, car, tuple(lucky))
        else:
            spot = pref + 1
            while spot <= n and taken[spot]:
                spot += 1
            if spot > n:
                return ParkingOutcome(None, car, tuple(lucky))
        taken[spot] = True
        spots.append(spot)
    return ParkingOutcome(tuple(spots), None, tuple(lucky))


def lucky_cars(prefs, rule: ParkingRule | str = ParkingRule.CLASSIC) -> tuple[int, ...]:
    """Lucky cars of a sequence that parks everyone; raises otherwise."""
    outcome = park(prefs, rule)
    if not outcome.success:
        raise ValueError(f"car {outcome.failed_car} cannot park")
    return outcome.lucky


def lucky_count(prefs, rule: ParkingRule | str = ParkingRule.CLASSIC) -> int:
    return len(lucky_cars(prefs, rule))
