"""Principal eigenpairs of k-uniform hypergraphs versus their clique-shadows."""

from .errors import *  # noqa: F401,F403
from .generators import (
    bowtie_partition,
    hyperstar,
    modified_octahedron,
    pleated_bowtie,
    random_connected_kgraph,
    random_kcylinder,
    windmill,
)
from .hypergraph import (
    Hypergraph,
    Multigraph,
    Partition,
    clique_shadow,
    is_connected,
    is_strongly_independent,
    multigraph_equals,
    new_hypergraph,
    new_multigraph,
    verify_partition,
)
from .ranking import (
    ComparisonReport,
    RankingPartition,
    bowtie_scan,
    chebyshev_distance,
    compare,
    delta_scan,
    independent_set_mass,
    spectral_ranking,
    umbral_index,
)
from .spectral import (
    GraphEigenpair,
    HyperEigenpair,
    SolverConfig,
    apply_multigraph,
    apply_tensor,
    bowtie_certificate_vector,
    bowtie_thresholds,
    polynomial_form,
    principal_eigenpair_graph,
    principal_eigenpair_hyper,
    windmill_center_value,
    windmill_spectral_radius,
)

__version__ = "0.1.0"
