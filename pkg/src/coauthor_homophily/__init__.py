"""Gender homophily and assortativity coefficients for co-authorship networks."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateMixing,
    EmptyNetwork,
    HomophilyError,
    InconsistentTable,
    OneSidedPopulation,
    ParseError,
    UndefinedMetric,
    ValidationError,
)
from .graph import (  # noqa: E402
    NEGATIVE,
    POSITIVE,
    AuthorNode,
    CliqueNetwork,
    EdgeWeighting,
    GenderLabel,
    PaperRecord,
    ReciprocatedGraph,
    ValidationPolicy,
    build_network,
    build_reciprocated_graph,
    node_out_weight,
)
from .metrics import (  # noqa: E402
    CliqueCountTable,
    MetricReport,
    MixingMatrix,
    Undefined,
    alpha_from_clique_counts,
    alpha_from_individuals,
    build_mixing_matrix,
    clique_count_table,
    compute_metrics,
    equivalence_report,
    newman_r,
)
