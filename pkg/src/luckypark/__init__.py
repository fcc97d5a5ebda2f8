"""Exact combinatorics of lucky cars over Fubini rankings and the unit
parking families: simulation, recognizers, bijections, counting formulas,
generating polynomials and functions, and a brute-force oracle."""

from .bijections import (OrderedSetPartition, composition_to_ufr_inc,
                         fr_to_osp, fr_to_upf, osp_to_fr,
                         ufr_inc_to_composition, upf_to_fr)
from .counting import (CountTriangle, binary_compositions, compositions,
                       count, count_fixed_lucky, construct_unique, fibonacci,
                       fubini, stirling2, stirling2_restricted, total,
                       triangle)
from .families import (Family, fr_lucky_set, is_fubini_ranking, is_member,
                       is_parking_function, is_unit_parking_function,
                       is_weakly_increasing)
from .oracle import EnumerationReport, census, census_all, enumerate_family
from .parking import (ParkingOutcome, ParkingRule, lucky_cars, lucky_count,
                      park, validate_prefs)
from .polynomials import (QPolynomial, asymptotic_expectation, expectation,
                          fibonacci_poly, gessel_seo_poly, lucky_poly,
                          ufr_lucky_weight, ufr_weight)
from .series import (DEFAULT_ORDER, EGFIdentity, EGFReport, TruncatedEGF,
                     egf_expand, egf_verify)

__version__ = "0.1.0"

__all__ = [
    "CountTriangle", "DEFAULT_ORDER", "EGFIdentity", "EGFReport",
    "EnumerationReport", "Family", "OrderedSetPartition", "ParkingOutcome",
    "ParkingRule", "QPolynomial", "TruncatedEGF", "asymptotic_expectation",
    "binary_compositions", "census", "census_all", "composition_to_ufr_inc",
    "compositions", "construct_unique", "count", "count_fixed_lucky",
    "egf_expand", "egf_verify", "enumerate_family", "expectation",
    "fibonacci", "fibonacci_poly", "fr_lucky_set", "fr_to_osp", "fr_to_upf",
    "fubini", "gessel_seo_poly", "is_fubini_ranking", "is_member",
    "is_parking_function", "is_unit_parking_function", "is_weakly_increasing",
    "lucky_cars", "lucky_count", "lucky_poly", "osp_to_fr", "park",
    "stirling2", "stirling2_restricted", "total", "triangle",
    "ufr_inc_to_composition", "ufr_lucky_weight", "ufr_weight", "upf_to_fr",
    "validate_prefs",
]
