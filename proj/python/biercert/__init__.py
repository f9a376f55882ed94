"""Nonembeddability certificates for simplicial complexes.

The heavy lifting lives in the `_core` extension module; this package
re-exports it and adds a dict-returning convenience wrapper around the
canonical JSON report.
"""

import json as _json

from ._core import (  # noqa: F401
    InputError,
    JoinedComplex,
    ResourceLimitError,
    SimplicialComplex,
    UnsupportedError,
    alexander_dual,
    betti_numbers,
    bier_sphere,
    boundary_of_simplex,
    complementarity_check,
    cross_polytope_boundary,
    cycle_complex,
    deleted_join,
    deleted_join_f_vector,
    euler_characteristic,
    f_vector,
    full_simplex,
    index_lower_bound,
    input_digest,
    is_k_neighborly,
    is_self_dual,
    join_complexes,
    minimal_nonfaces,
    parse_facet_file,
    parse_facet_string,
    prop32_equivalence,
    report_json,
    sarkaria_bound,
    search_complementarity_surfaces,
    to_facet_string,
)
from ._core import __version__  # noqa: F401


def report(complex, exact_chi_limit=32, threads=0):
    """The full certificate as a plain dict."""
    return _json.loads(report_json(complex, exact_chi_limit, threads))
