"""knotx: exact Kauffman bracket / Jones polynomial engine for link
diagrams in PD notation, with state-graph coefficient formulas and an
empirical harness for the effect of crossing changes on crossing number.
"""

from .bracket import (
    DEFAULT_STATE_LIMIT,
    StateResolution,
    enumerate_states,
    jones,
    kauffman_bracket,
    predicted_min_deg,
    span_x,
    x_polynomial,
)
from .diagram import (
    Diagram,
    SkeinTriple,
    crossing_change,
    crossing_sign,
    is_alternating_diagram,
    is_reduced,
    is_split_diagram,
    mirror_of,
    oriented_smoothing,
    parse_pd,
    render_pd,
    skein_triple,
    smooth,
    splice_partition,
    underlying_components,
    writhe,
)
from .errors import (
    PDSyntaxError,
    PDValidationError,
    PreconditionError,
    StateLimitError,
    TableConsistencyError,
    TableFormatError,
    UnknownCrossingError,
    UnknownKnotError,
)
from .harness import (
    CrossingOutcome,
    LemmaSuiteResult,
    ProofRelationsResult,
    SweepReport,
    check_skein,
    check_t_skein,
    lemma_suite,
    proof_relations,
    theorem_sweep,
)
from .knotdb import (
    IdentificationResult,
    KnotRecord,
    KnotTable,
    bundled_table_path,
    crossing_number_of,
    identify,
    is_alternating_knot,
    load_table,
)
from .laurent import (
    LaurentA,
    QuarterLaurentT,
    ZeroLaurentError,
    parse_jones,
    substitute_A_to_quarter_t,
)
from .stategraph import (
    SimpleReduction,
    StateMultigraph,
    graphs_isomorphic,
    jones_via_tutte,
    reduce_graph,
    second_coeff_magnitude,
    state_graph,
    thistlethwaite_sum,
    tutte_eval,
)

__version__ = "0.1.0"
