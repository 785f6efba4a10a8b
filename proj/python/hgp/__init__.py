"""Symplectic hypergeometric monodromy groups over the integers.

Exact construction of the companion-matrix generators, verification of
arithmeticity certificates, and breadth-first orbit search for certificate
words. All arithmetic is exact (GMP); matrices come back as nested lists of
Python ints, rationals as "p/q" strings.
"""

from ._core import (
    Group,
    HgpError,
    catalog_entry,
    catalog_json,
    catalog_labels,
    char_poly,
    cyclotomic,
    parameter_condition,
    parse_tuple,
    search,
    search_label,
    verify,
    verify_label,
    witness_label,
)

__all__ = [
    "Group",
    "HgpError",
    "catalog_entry",
    "catalog_json",
    "catalog_labels",
    "char_poly",
    "cyclotomic",
    "parameter_condition",
    "parse_tuple",
    "search",
    "search_label",
    "verify",
    "verify_label",
    "witness_label",
]
