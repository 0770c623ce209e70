"""Toric knot mosaics: codecs, constructions, enumeration, identification.

The package covers the full pipeline for knots drawn on square mosaics
with torus edge identification: the base-11 codec and validity rules,
provably small mosaics of torus knots, exhaustive enumeration, tracing
into planar link diagrams (with the crossings the torus hides), HOMFLY-PT
and Alexander invariants, and identification against a bundled table of
prime knots through ten crossings.
"""

from .mosaic import (
    Mosaic,
    MosaicError,
    boundary_counts,
    canonical_code,
    decode,
    encode,
    hidden_crossing_count,
    is_suitably_connected,
    strand_count,
    translate,
    visible_crossing_count,
)
from .tiles import ConnectionProfile, PROFILES
from .diagram import LinkDiagram, DiagramError, braid_closure, parse_pd
from .tangles import montesinos_link, pretzel_link, rational_link
from .tracer import trace
from .invariants import (
    BudgetExceeded,
    alexander,
    alexander_torus,
    determinant,
    homfly,
    homfly_mirror,
    linking_number,
    torus_knot_diagram,
)
from .laurent import LaurentPoly1, LaurentPoly2
from .generators import (
    BraidPlan,
    ParameterError,
    boundary_permutation,
    full_braid,
    naive_mosaic,
    one_braid,
    remove_crossings,
    solve_hv,
    validate_torus_params,
)
from .enumerator import EnumOptions, count, enumerate_mosaics
from .census import (
    CensusReport,
    Identification,
    InvariantTable,
    KnotRecord,
    build_table,
    identify,
    run_census,
    verify_appendix,
)
from .render import RenderOptions, render

__version__ = "0.1.0"
