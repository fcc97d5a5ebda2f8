"""Named cross-checks wiring the formulas against the brute-force oracle.

Each check returns a CheckResult; run_checks collects the whole suite.
The CLI's verify subcommand prints one line per result and exits nonzero
when anything failed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bijections import (composition_to_ufr_inc, fr_to_osp, fr_to_upf,
                         osp_to_fr, ufr_inc_to_composition, upf_to_fr)
from .counting import (binary_compositions, count, count_fixed_lucky,
                       fibonacci, total, triangle)
from .families import Family, fr_lucky_set, is_weakly_increasing
from .oracle import census_all, construct_cap, enumerate_family, filter_cap
from .parking import ParkingRule, park
from .polynomials import (Q, asymptotic_expectation, expectation,
                          gessel_seo_poly, lucky_poly)
from .series import DEFAULT_ORDER, EGFIdentity, egf_expand, egf_verify

UFR_TOTALS_10 = (1, 1, 3, 12, 66, 450, 3690, 35280, 385560, 4740120)

PER_K_FAMILIES = (Family.FR, Family.UPF, Family.FR_INC, Family.UPF_INC,
                  Family.UFR, Family.UFR_INC)
FIXED_LUCKY_FAMILIES = (Family.FR, Family.FR_INC, Family.UFR, Family.UFR_INC)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name: str, failures: list[str]) -> CheckResult:
    if failures:
        return CheckResult(name, False, "; ".join(failures[:4]))
    return CheckResult(name, True)


def candidate_lucky_sets(n: int):
    """All subsets of 1..n containing 1 (the only possible lucky sets)."""
    if n == 0:
        yield ()
        return
    for rest in range(n):
        for tail in combinations(range(2, n + 1), rest):
            yield (1,) + tail


def check_triangles(n_max: int) -> CheckResult:
    failures = []
    for family in PER_K_FAMILIES:
        rows = triangle(family, n_max).rows
        for n, row in enumerate(rows):
            if sum(row) != total(family, n):
                failures.append(f"{family.value} row {n} sum")
    return _result("triangle-row-sums", failures)


def check_method_agreement(n_max: int) -> CheckResult:
    failures = []
    for family in PER_K_FAMILIES:
        for n in range(n_max + 1):
            for k in range(n + 1):
                closed = count(family, n, k)
                if count(family, n, k, "recurrence") != closed:
                    failures.append(f"{family.value} recurrence ({n},{k})")
                if family in (Family.FR, Family.UPF):
                    if count(family, n, k, "composition-sum") != closed:
                        failures.append(
                            f"{family.value} composition-sum ({n},{k})")
    return _result("count-method-agreement", failures)


def check_censuses(n_max: int) -> CheckResult:
    """Histograms and lucky-set censuses versus the formulas."""
    failures = []
    for n in range(min(n_max, filter_cap()) + 1):
        reports = census_all(n)
        for family, report in reports.items():
            if family is Family.PF:
                expected_hist = {k: c for k, c
                                 in enumerate(gessel_seo_poly(n).coeffs) if c}
            else:
                expected_hist = {k: count(family, n, k)
                                 for k in range(n + 1) if count(family, n, k)}
            if report.lucky_histogram != expected_hist:
                failures.append(f"{family.value} histogram n={n}")
            if report.total != total(family, n):
                failures.append(f"{family.value} total n={n}")
        for family in FIXED_LUCKY_FAMILIES:
            seen = reports[family].lucky_set_census
            for lucky in candidate_lucky_sets(n):
                if count_fixed_lucky(family, n, lucky) != seen.get(lucky, 0):
                    failures.append(f"{family.value} lucky set {lucky} n={n}")
        if reports[Family.UPF].lucky_set_census != \
                reports[Family.FR].lucky_set_census:
            failures.append(f"upf/fr lucky-set censuses differ n={n}")
    return _result("census-vs-formulas", failures)


def check_strategy_agreement(n_max: int) -> CheckResult:
    failures = []
    for family in Family:
        for n in range(min(n_max, filter_cap()) + 1):
            filtered = list(enumerate_family(family, n, "filter"))
            constructed = list(enumerate_family(family, n, "construct"))
            if filtered != constructed:
                failures.append(f"{family.value} n={n}")
    return _result("enumeration-strategy-agreement", failures)


def check_bijections(n_max: int) -> CheckResult:
    failures = []
    for n in range(min(n_max, construct_cap()) + 1):
        upf_members = set()
        for prefs in enumerate_family(Family.FR, n, "construct"):
            if osp_to_fr(fr_to_osp(prefs)) != prefs:
                failures.append(f"osp round trip {prefs}")
                break
            image = fr_to_upf(prefs)
            if park(image, ParkingRule.UNIT).lucky != fr_lucky_set(prefs):
                failures.append(f"lucky set not preserved {prefs}")
                break
            if upf_to_fr(image) != prefs:
                failures.append(f"unit round trip {prefs}")
                break
            if is_weakly_increasing(prefs) and not is_weakly_increasing(image):
                failures.append(f"monotone not preserved {prefs}")
                break
            upf_members.add(image)
        if len(upf_members) != total(Family.UPF, n):
            failures.append(f"unit image not bijective n={n}")
        for prefs in enumerate_family(Family.UFR_INC, n, "construct"):
            parts = ufr_inc_to_composition(prefs)
            if sum(parts) != n or composition_to_ufr_inc(parts) != prefs:
                failures.append(f"composition round trip {prefs}")
        for parts in binary_compositions(n):
            if ufr_inc_to_composition(composition_to_ufr_inc(parts)) != parts:
                failures.append(f"composition round trip {parts}")
    return _result("bijection-round-trips", failures)


def check_egf_identities(order: int = DEFAULT_ORDER) -> CheckResult:
    failures = []
    for identity in EGFIdentity:
        report = egf_verify(identity, order)
        if not report.ok:
            n, expected, actual = report.mismatches[0]
            failures.append(
                f"{identity.value} at n={n}: {actual} != {expected}")
    # two-step coefficient recurrence <=> second-order differential law
    a = egf_expand(EGFIdentity.UFR_INC, order)
    residual = a.derivative().derivative() - Q * a.derivative() - Q * a
    if not residual.is_zero():
        failures.append("ufrinc differential law")
    for bivariate, totals in ((EGFIdentity.FR, EGFIdentity.FR_TOTAL),
                              (EGFIdentity.FR_INC, EGFIdentity.FR_INC_TOTAL),
                              (EGFIdentity.UFR, EGFIdentity.UFR_TOTAL)):
        at_one = [c(1) for c in egf_expand(bivariate, order).coeffs]
        told = [c(1) for c in egf_expand(totals, order).coeffs]
        if at_one != told:
            failures.append(f"{bivariate.value} at q=1")
    return _result("egf-identities", failures)


def check_expectations(n_max: int = 20) -> CheckResult:
    failures = []
    for family in PER_K_FAMILIES:
        for n in range(1, n_max + 1):
            poly = lucky_poly(family, n)
            via_poly = Fraction(poly.derivative()(1), poly(1))
            if expectation(family, n) != via_poly:
                failures.append(f"{family.value} n={n}")
    for n in range(1, n_max + 1):
        fib_identity = Fraction(
            (n + 1) * fibonacci(n + 3) + (n - 2) * fibonacci(n + 1), 5)
        weighted = expectation(Family.UFR_INC, n) * fibonacci(n + 1)
        if weighted != fib_identity:
            failures.append(f"ufrinc weighted-sum identity n={n}")
        if expectation(Family.FR_INC, n) != Fraction(n + 1, 2):
            failures.append(f"frinc closed form n={n}")
    return _result("expectation-identities", failures)


def check_asymptotics(last: int = 30) -> CheckResult:
    failures = []
    for family in (Family.FR, Family.UFR, Family.UFR_INC):
        errors = []
        for n in range(10, last + 1):
            exact = float(expectation(family, n))
            approx = asymptotic_expectation(family, n)
            errors.append(abs(exact - approx) / exact)
        if any(b >= a for a, b in zip(errors, errors[1:])):
            failures.append(f"{family.value} error not decreasing")
        if errors[-1] >= 0.05:
            failures.append(f"{family.value} error {errors[-1]:.3f} at n={last}")
    return _result("asymptotic-convergence", failures)


def check_ufr_sequence(enumerate_to: int = 0) -> CheckResult:
    failures = []
    row_sums = tuple(total(Family.UFR, n) for n in range(10))
    if row_sums != UFR_TOTALS_10:
        failures.append(f"row sums {row_sums}")
    series = egf_expand(EGFIdentity.UFR_TOTAL, 9)
    via_egf = tuple(series.counts(n).coefficient(0) for n in range(10))
    if via_egf != UFR_TOTALS_10:
        failures.append(f"egf {via_egf}")
    for n in range(min(enumerate_to, construct_cap(), 9) + 1):
        found = sum(1 for _ in enumerate_family(Family.UFR, n, "construct"))
        if found != UFR_TOTALS_10[n]:
            failures.append(f"enumeration n={n} gave {found}")
    return _result("ufr-totals-sequence", failures)


def check_fixed_lucky_sums(n_max: int = 10) -> CheckResult:
    """Summing the fixed-set counts over |I| = k recovers the k-counts."""
    failures = []
    for family in FIXED_LUCKY_FAMILIES:
        for n in range(n_max + 1):
            by_size: dict[int, int] = {}
            for lucky in candidate_lucky_sets(n):
                c = count_fixed_lucky(family, n, lucky)
                by_size[len(lucky)] = by_size.get(len(lucky), 0) + c
            for k in range(n + 1):
                if by_size.get(k, 0) != count(family, n, k):
                    failures.append(f"{family.value} ({n},{k})")
    return _result("fixed-lucky-set-sums", failures)


def run_checks(n_max: int = 5, order: int = DEFAULT_ORDER) -> list[CheckResult]:
    scan_max = min(n_max, filter_cap())
    return [
        check_triangles(max(n_max, 7)),
        check_method_agreement(min(n_max + 7, 16)),
        check_censuses(scan_max),
        check_strategy_agreement(scan_max),
        check_bijections(min(n_max + 1, construct_cap())),
        check_egf_identities(order),
        check_expectations(),
        check_asymptotics(),
        check_ufr_sequence(enumerate_to=min(n_max + 1, 8)),
        check_fixed_lucky_sums(),
    ]
