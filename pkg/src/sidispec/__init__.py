"""sidispec: exact and numeric spectral analysis of signed digraphs.

Signed digraphs (each arc weighted +1 or -1) are analyzed through their
adjacency spectra: exact integer characteristic polynomials by three
independent methods, complex eigenvalues and the energy sum |Re z_j|,
Coulson-type integral formulas, cycle-sign classification of bipartite
signings, and the explicit cospectral / equienergetic constructions.
"""

from .charpoly import (
    DeltaFormReport,
    IntPolynomial,
    LinearSub,
    NegInvarianceReport,
    TypeCensus,
    all_linear_subs,
    charpoly_exact,
    charpoly_minors,
    charpoly_via_theorem,
    coefficient_via_theorem,
    enumerate_linear_subs,
    neg_invariance_equivalences,
    poly_matches_form1,
    poly_matches_form2,
    type_census,
    verify_delta_form,
)
from .constructions import (
    FamilySpec,
    assign_signs_for_class,
    builtin_fixtures,
    cartesian_product,
    family_theorem41,
    power_family,
    search_by_charpoly,
    signed_cycle,
    theorem41_polynomials,
)
from .coulson import (
    ArcDeletionReport,
    QuadratureSpec,
    QuasiOrderRelation,
    QuasiOrderResult,
    arc_deletion_energy_delta,
    energy_coulson_general,
    energy_coulson_logderiv,
    energy_delta1,
    energy_delta2,
    quasi_order_compare,
)
from .errors import (
    ConvergenceFailure,
    CycleBudgetExceeded,
    FixtureValidationFailure,
    InvalidEdge,
    InvalidFamilySpec,
    InvalidSidigraph,
    MissingArc,
    NotInDelta1,
    OracleBoundExceeded,
    OrderMismatch,
    ParseError,
    QuadratureFailure,
    SearchBudgetExceeded,
    SidispecError,
    SizeOverflow,
)
from .fileformat import parse_sidigraph, render_sidigraph
from .graphs import (
    CycleRecord,
    DeltaClass,
    Sidigraph,
    adjacency_matrix,
    classify,
    delete_arc,
    enumerate_cycles,
    from_sigraph,
    is_bipartite,
    is_strongly_connected,
    is_symmetric,
    negate,
    two_coloring,
    underlying_digraph,
)
from .spectra import (
    QuasiCospectralMatch,
    Spectrum,
    SpectrumClass,
    classify_spectrum,
    cospectral,
    energy_from_spectrum,
    equienergetic,
    graph_energy,
    graph_spectrum,
    quasi_cospectral_search,
    roots,
)

__version__ = "0.1.0"
