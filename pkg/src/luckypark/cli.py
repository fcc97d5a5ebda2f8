"""Command-line front end.

Every subcommand renders to one of three formats: pretty (human text,
the default), tsv (tab-separated, tuples as space-separated entries, the
golden-file format), and json (stable key order, counts as decimal
strings so arbitrary precision survives any JSON parser).

Exit status: 0 for success including negative recognize answers, 1 when
a verification subcommand found a mismatch, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bijections import (OrderedSetPartition, composition_to_ufr_inc,
                         fr_to_osp, fr_to_upf, osp_to_fr,
                         ufr_inc_to_composition, upf_to_fr)
from .checks import run_checks
from .counting import count, count_fixed_lucky, construct_unique, triangle
from .families import Family, fr_lucky_set, is_member
from .oracle import census, enumerate_family
from .parking import ParkingRule, lucky_cars, park
from .polynomials import (QPolynomial, asymptotic_expectation, expectation,
                          gessel_seo_poly, lucky_poly)
from .series import DEFAULT_ORDER, EGFIdentity, egf_expand, egf_verify

FORMATS = ("pretty", "tsv", "json")


def parse_tuple(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def parse_osp(text: str) -> OrderedSetPartition:
    blocks = tuple(tuple(sorted(parse_tuple(part)))
                   for part in text.strip().split("|") if part.strip())
    n = sum(len(b) for b in blocks)
    return OrderedSetPartition(n, blocks)


def _family(token: str) -> Family:
    try:
        return Family(token)
    except ValueError:
        raise ValueError(f"unknown family {token!r}")


def _join(values) -> str:
    return " ".join(str(v) for v in values)


def _osp_text(partition: OrderedSetPartition) -> str:
    return "|".join(",".join(str(e) for e in b) for b in partition.blocks)


def _int_str(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ValueError(f"non-integer count {value}")
        value = value.numerator
    return str(value)


def _emit(args, payload: dict, pretty: list[str], tsv: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif args.format == "tsv":
        for line in tsv:
            print(line)
    else:
        for line in pretty:
            print(line)


def _poly_payload(poly: QPolynomial) -> dict:
    return {
        "coefficients": [_int_str(c) for c in poly.coeffs] or ["0"],
        "display": str(poly),
    }


def _cmd_park(args) -> int:
    prefs = parse_tuple(args.prefs)
    rule = ParkingRule(args.rule)
    outcome = park(prefs, rule)
    payload = {"command": "park", "rule": rule.value, "prefs": list(prefs),
               "success": outcome.success, "lucky": list(outcome.lucky)}
    if outcome.success:
        payload["spots"] = list(outcome.spots)
        pretty = [f"spots: {_join(outcome.spots)}",
                  f"lucky: {_join(outcome.lucky) or '-'}"]
        tsv = [f"spots\t{_join(outcome.spots)}",
               f"lucky\t{_join(outcome.lucky)}"]
    else:
        payload["failed_car"] = outcome.failed_car
        pretty = [f"car {outcome.failed_car} cannot park"]
        tsv = [f"failed_car\t{outcome.failed_car}"]
    _emit(args, payload, pretty, tsv)
    return 0


def _cmd_recognize(args) -> int:
    prefs = parse_tuple(args.prefs)
    family = _family(args.family)
    member = is_member(prefs, family)
    _emit(args,
          {"command": "recognize", "family": family.value,
           "prefs": list(prefs), "member": member},
          [f"{prefs} is {'' if member else 'not '}a member of {family.value}"],
          [str(member).lower()])
    return 0


def _cmd_lucky(args) -> int:
    prefs = parse_tuple(args.prefs)
    rule = ParkingRule(args.rule)
    lucky = lucky_cars(prefs, rule)
    _emit(args,
          {"command": "lucky", "rule": rule.value, "prefs": list(prefs),
           "lucky": list(lucky), "count": len(lucky)},
          [f"lucky: {_join(lucky) or '-'}", f"count: {len(lucky)}"],
          [f"lucky\t{_join(lucky)}", f"count\t{len(lucky)}"])
    return 0


def _cmd_bijection(args) -> int:
    name = args.map
    if name == "fr-osp":
        result = fr_to_osp(parse_tuple(args.input))
        out_text = _osp_text(result)
        out_json = [list(b) for b in result.blocks]
    elif name == "osp-fr":
        result = osp_to_fr(parse_osp(args.input))
        out_text = ",".join(map(str, result))
        out_json = list(result)
    else:
        mapper = {"psi": fr_to_upf, "psi-inv": upf_to_fr,
                  "ufrinc-comp": ufr_inc_to_composition,
                  "comp-ufrinc": composition_to_ufr_inc}[name]
        result = mapper(parse_tuple(args.input))
        out_text = ",".join(map(str, result))
        out_json = list(result)
    _emit(args,
          {"command": "bijection", "map": name, "input": args.input,
           "output": out_json},
          [out_text], [out_text.replace(",", " ") if name != "fr-osp"
                       else out_text])
    return 0


def _cmd_count(args) -> int:
    family = _family(args.family)
    value = count(family, args.n, args.k, args.method)
    _emit(args,
          {"command": "count", "family": family.value, "n": args.n,
           "k": args.k, "method": args.method, "count": _int_str(value)},
          [str(value)], [str(value)])
    return 0


def _cmd_count_lucky_set(args) -> int:
    family = _family(args.family)
    lucky = parse_tuple(args.set)
    value = count_fixed_lucky(family, args.n, lucky)
    _emit(args,
          {"command": "count-lucky-set", "family": family.value,
           "n": args.n, "set": list(lucky), "count": _int_str(value)},
          [str(value)], [str(value)])
    return 0


def _cmd_construct(args) -> int:
    family = _family(args.family)
    lucky = parse_tuple(args.set)
    prefs = construct_unique(family, args.n, lucky)
    text = ",".join(map(str, prefs))
    _emit(args,
          {"command": "construct", "family": family.value, "n": args.n,
           "set": list(lucky), "prefs": list(prefs)},
          [text], [_join(prefs)])
    return 0


def _cmd_triangle(args) -> int:
    family = _family(args.family)
    tri = triangle(family, args.n_max)
    width = max(len(str(v)) for row in tri.rows for v in row)
    pretty = [" ".join(f"{v:>{width}}" for v in row) for row in tri.rows]
    tsv = ["\t".join(str(v) for v in row) for row in tri.rows]
    _emit(args,
          {"command": "triangle", "family": family.value,
           "n_max": args.n_max,
           "rows": [[_int_str(v) for v in row] for row in tri.rows]},
          pretty, tsv)
    return 0


def _cmd_poly(args) -> int:
    if args.gessel_seo:
        poly = gessel_seo_poly(args.n)
        payload = {"command": "poly", "family": "pf", "n": args.n}
    else:
        if not args.family:
            raise ValueError("poly needs --family or --gessel-seo")
        family = _family(args.family)
        poly = lucky_poly(family, args.n)
        payload = {"command": "poly", "family": family.value, "n": args.n}
    payload.update(_poly_payload(poly))
    tsv = [f"{k}\t{c}" for k, c in enumerate(poly.coeffs)] or ["0\t0"]
    _emit(args, payload, [str(poly)], tsv)
    return 0


def _cmd_expect(args) -> int:
    family = _family(args.family)
    exact = expectation(family, args.n)
    payload = {"command": "expect", "family": family.value, "n": args.n,
               "numerator": _int_str(exact.numerator),
               "denominator": _int_str(exact.denominator),
               "value": float(exact)}
    pretty = [f"exact: {exact} = {float(exact):.6f}"]
    tsv = [f"exact\t{exact}", f"float\t{float(exact):.12g}"]
    if args.asymptotic:
        approx = asymptotic_expectation(family, args.n)
        payload["asymptotic"] = approx
        pretty.append(f"asymptotic: {approx:.6f}")
        tsv.append(f"asymptotic\t{approx:.12g}")
    _emit(args, payload, pretty, tsv)
    return 0


def _cmd_egf(args) -> int:
    identity = EGFIdentity(args.identity)
    status = 0
    payload = {"command": "egf", "identity": identity.value,
               "order": args.order}
    pretty = []
    tsv = []
    if args.verify:
        report = egf_verify(identity, args.order)
        payload["ok"] = report.ok
        payload["mismatches"] = [
            {"n": n, "expected": exp, "actual": act}
            for n, exp, act in report.mismatches]
        if report.ok:
            pretty.append(f"{identity.value}: verified to order {args.order}")
            tsv.append(f"ok\t{identity.value}\t{args.order}")
        else:
            status = 1
            for n, exp, act in report.mismatches:
                pretty.append(f"{identity.value} n={n}: {act} != {exp}")
                tsv.append(f"mismatch\t{n}\t{act}\t{exp}")
    else:
        series = egf_expand(identity, args.order)
        terms = []
        for n in range(args.order + 1):
            poly = series.counts(n)
            terms.append({"n": n,
                          "coefficients": [_int_str(c) for c in poly.coeffs]
                          or ["0"]})
            pretty.append(f"n={n}: {poly}")
            tsv.append(f"{n}\t{_join(poly.coeffs) or 0}")
        payload["terms"] = terms
    _emit(args, payload, pretty, tsv)
    return status


def _cmd_enumerate(args) -> int:
    family = _family(args.family)
    if args.census:
        report = census(family, args.n, args.strategy)
        hist = dict(sorted(report.lucky_histogram.items()))
        sets = dict(sorted(report.lucky_set_census.items()))
        payload = {"command": "enumerate", "family": family.value,
                   "n": args.n, "strategy": args.strategy, "census": True,
                   "total": _int_str(report.total),
                   "lucky_histogram": {str(k): _int_str(v)
                                       for k, v in hist.items()},
                   "lucky_set_census": {_join(k): _int_str(v)
                                        for k, v in sets.items()}}
        pretty = [f"total: {report.total}"]
        pretty += [f"lucky {k}: {v}" for k, v in hist.items()]
        pretty += [f"set {{{_join(k)}}}: {v}" for k, v in sets.items()]
        tsv = [f"total\t{report.total}"]
        tsv += [f"histogram\t{k}\t{v}" for k, v in hist.items()]
        tsv += [f"lucky-set\t{_join(k)}\t{v}" for k, v in sets.items()]
        _emit(args, payload, pretty, tsv)
        return 0
    members = list(enumerate_family(family, args.n, args.strategy))
    lines = [_join(t) for t in members]
    _emit(args,
          {"command": "enumerate", "family": family.value, "n": args.n,
           "strategy": args.strategy, "census": False,
           "count": _int_str(len(members)),
           "tuples": [list(t) for t in members]},
          lines or ["(empty)"], lines)
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(n_max=args.n_max, order=args.order)
    ok = all(r.ok for r in results)
    payload = {"command": "verify", "n_max": args.n_max,
               "order": args.order, "ok": ok,
               "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                          for r in results]}
    pretty = [f"{'PASS' if r.ok else 'FAIL'} {r.name}"
              + (f" ({r.detail})" if r.detail else "")
              for r in results]
    pretty.append(f"{sum(r.ok for r in results)}/{len(results)} checks passed")
    tsv = [f"{'PASS' if r.ok else 'FAIL'}\t{r.name}\t{r.detail}"
           for r in results]
    _emit(args, payload, pretty, tsv)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="luckypark",
        description="Lucky cars over Fubini rankings and unit parking families")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("park", parents=[common],
                       help="simulate the one-way street")
    p.add_argument("prefs", help="comma-separated preferences, e.g. 3,2,4,4,1")
    p.add_argument("--rule", choices=[r.value for r in ParkingRule],
                   default="classic")
    p.set_defaults(func=_cmd_park)

    p = sub.add_parser("recognize", parents=[common],
                       help="test family membership")
    p.add_argument("prefs")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family])
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("lucky", parents=[common],
                       help="lucky cars of a sequence")
    p.add_argument("prefs")
    p.add_argument("--rule", choices=[r.value for r in ParkingRule],
                   default="classic")
    p.set_defaults(func=_cmd_lucky)

    p = sub.add_parser("bijection", parents=[common],
                       help="apply one of the structure-preserving maps")
    p.add_argument("map", choices=["fr-osp", "osp-fr", "psi", "psi-inv",
                                   "ufrinc-comp", "comp-ufrinc"])
    p.add_argument("input",
                   help="tuple 1,2,2 or blocks 2|3,6,7|4|5,8|1 for osp-fr")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("count", parents=[common],
                       help="count members with k lucky cars")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family if f is not Family.PF])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", default="closed",
                   choices=["closed", "recurrence", "composition-sum"])
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("count-lucky-set", parents=[common],
                       help="count members with a given lucky set")
    p.add_argument("--family", required=True,
                   choices=["fr", "frinc", "ufr", "ufrinc"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--set", required=True, help="e.g. 1,2,5")
    p.set_defaults(func=_cmd_count_lucky_set)

    p = sub.add_parser("construct", parents=[common],
                       help="the unique weakly increasing member for a lucky set")
    p.add_argument("--family", required=True, choices=["frinc", "ufrinc"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--set", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("triangle", parents=[common],
                       help="table of counts for n = 0..n_max")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family if f is not Family.PF])
    p.add_argument("--n-max", type=int, default=7)
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("poly", parents=[common],
                       help="lucky-count generating polynomial")
    p.add_argument("--family",
                   choices=[f.value for f in Family if f is not Family.PF])
    p.add_argument("--gessel-seo", action="store_true",
                   help="distribution over all parking functions")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("expect", parents=[common],
                       help="exact expected number of lucky cars")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family if f is not Family.PF])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--asymptotic", action="store_true")
    p.set_defaults(func=_cmd_expect)

    p = sub.add_parser("egf", parents=[common],
                       help="expand or verify a generating function")
    p.add_argument("--identity", required=True,
                   choices=[i.value for i in EGFIdentity])
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_egf)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list a family or aggregate its census")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--strategy", choices=["filter", "construct"],
                   default="filter")
    p.add_argument("--census", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="run the formula-vs-oracle cross-check suite")
    p.add_argument("--all", action="store_true",
                   help="run every check (the default; kept for scripts)")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
