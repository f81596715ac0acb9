"""Exact gap statistics of Farey fractions in arithmetic progressions.

The limiting proportion nu(r; D, c0) of gaps that contain exactly r
fractions whose denominators avoid the class c0 mod D is computed three
independent ways and cross-checked:

* ``proportions.nu_closed_form`` — rational/symbolic closed formulas;
* ``proportions.nu_from_enumeration`` — exact polygon areas summed over
  the degenerate index tuples found by ``enumeration``;
* ``scan.scan`` — empirical tallies over one period of the sequence.

``geometry`` supplies the exact convex-polygon machinery (index regions,
clipping, areas), ``continuants`` the modified-continuant arithmetic,
``tuples`` the index-tuple notation, ``reference`` the frozen printed
tables, and ``verify`` the suites that recompute those tables from
scratch.
"""

from .continuants import (CLOSED_FORMS, closed_form, closed_form_tuple,
                          continuant, continuant_pair, continuant_prefixes)
from .enumeration import (DEGENERATE, LIVE, REJECTED, CongruenceSpec,
                          DegenerateSet, TupleFamily, TupleTree,
                          admissibility_check, build_tree, degenerate_set,
                          degenerate_table, leaf_area, leaf_tuple,
                          pentagon_witness, slot_families)
from .geometry import (FAREY_TRIANGLE, ConvexRegion, HalfPlane, Point2Q,
                       area, bcz_index, bcz_map, is_empty, region,
                       region_halfplanes, single_slice_area)
from .proportions import (NuResult, SymbolicValue, closed_block,
                          multiplicity_factor, normalization_tail_bound,
                          nu_bounded_interval, nu_closed_form,
                          nu_enumeration_table, nu_from_enumeration,
                          numeric_eval, render_fixed, sig_round, symbolic,
                          tail_sum, weighted_tail_bound)
from .scan import (GapHistogram, ScanConfig, coloured_total,
                   denominator_stream, empirical_nu, farey_next, phi_sieve,
                   scan)
from .tuples import TupleSpec, TupleSyntaxError, as_indices
from .verify import CheckResult, run_suite, run_suites

__version__ = "0.1.0"

__all__ = [
    "CLOSED_FORMS", "CheckResult", "CongruenceSpec", "ConvexRegion",
    "DEGENERATE", "DegenerateSet", "FAREY_TRIANGLE", "GapHistogram",
    "HalfPlane", "LIVE", "NuResult", "Point2Q", "REJECTED", "ScanConfig",
    "SymbolicValue", "TupleFamily", "TupleSpec", "TupleSyntaxError",
    "TupleTree", "admissibility_check", "area", "as_indices", "bcz_index",
    "bcz_map", "build_tree", "closed_block", "closed_form",
    "closed_form_tuple", "coloured_total", "continuant", "continuant_pair",
    "continuant_prefixes", "degenerate_set", "degenerate_table",
    "denominator_stream", "empirical_nu", "farey_next", "is_empty",
    "leaf_area", "leaf_tuple", "multiplicity_factor",
    "normalization_tail_bound", "nu_bounded_interval", "nu_closed_form",
    "nu_enumeration_table", "nu_from_enumeration", "numeric_eval",
    "pentagon_witness", "phi_sieve", "region", "region_halfplanes",
    "render_fixed", "run_suite", "run_suites", "scan", "sig_round",
    "single_slice_area", "slot_families", "symbolic", "tail_sum",
    "weighted_tail_bound", "__version__",
]
