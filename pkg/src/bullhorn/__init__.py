"""bullhorn: structure, colouring and divisibility of (bull, house)-free and (bull, P5)-free graphs.

The package works on small simple graphs stored as bitmask adjacency lists
and offers certificate-producing classifiers, modular decomposition, exact
colouring, k-critical graph enumeration and perfect-divisibility checks.
"""

__version__ = "0.1.0"

from .errors import (
    BudgetExceededError,
    BullhornError,
    DecompositionError,
    GraphFormatError,
    InvalidVertexSetError,
    NotInClassError,
)
from .graph import (
    Graph,
    complement,
    complete,
    cycle,
    delete_vertex,
    empty,
    induced_subgraph,
    induced_subgraph_labeled,
    is_anticomplete_to,
    is_coconnected,
    is_complete_to,
    is_connected,
    path,
    petersen,
    star,
    wheel,
)
from .graph_io import (
    decode_dimacs,
    decode_edge_list,
    decode_graph6,
    encode_dimacs,
    encode_edge_list,
    encode_graph6,
)
from .patterns import Embedding, PatternKind, find_hole, find_induced, is_free, reference_graph
from .canon import canonical_form, canonical_labeling, is_isomorphic
from .generate import all_graphs, generate
from .coloring import (
    CliqueResult,
    Coloring,
    chi_via_structure,
    chromatic_number,
    clique_number,
    k_colorable,
)
from .modular import (
    BlowupSpec,
    ModulePartition,
    blowup,
    clique_skeleton,
    find_homogeneous_set,
    is_prime,
    maximal_modules,
    skeleton,
)
from .structure import (
    Branch,
    Certificate,
    TrichotomyFailure,
    classify_bull_house_free,
    classify_bull_p5_free,
    find_split_vertex,
    simplicial_vertices,
)
from .critical import (
    CriticalityReport,
    EnumerationRun,
    check_clique_skeleton_criticality,
    critical_blowups,
    enumerate_critical,
    is_k_critical,
)
from .divisibility import (
    DivisibilityDomainError,
    DivisibilityWitness,
    MnpdReport,
    Variant,
    divisible_partition,
    is_mnpd,
    is_perfect,
    is_perfectly_divisible,
)
