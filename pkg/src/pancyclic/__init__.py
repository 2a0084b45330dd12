"""Certificate-producing cycle-spectrum toolkit for Hamiltonian graphs with
bounded independence number, with exact brute-force oracles grounding every
constructive claim."""

from .core import (
    AnalysisParams,
    CycleWitness,
    Digraph,
    Graph,
    OrderedPath,
    format_edge_list,
    load_graph,
    parse_edge_list,
    save_graph,
    validate_cycle,
    validate_directed_path,
    validate_path,
)
from .covers import (
    Cluster,
    ClusterPartition,
    PathCover,
    bfs_cluster_partition,
    gallai_milgram_cover,
    growth_bound,
    longest_cover_path,
    validate_cluster_partition,
    validate_path_cover,
)
from .dense import (
    DensePairCertificate,
    find_dense_pair,
    is_p_dense,
    validate_dense_certificate,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    Infeasible,
    InternalContradiction,
    InvalidBank,
    InvalidGamma,
    InvalidK,
    MissingWitness,
    NoChordFound,
    PancyclicError,
    PreconditionFailed,
)
from .generators import (
    BoundedAlphaInstance,
    ExtremalSpec,
    GeneratorConfig,
    gen_extremal,
    gen_random_bounded_alpha,
)
from .oracles import (
    ORACLE_CAP_ENV,
    OracleCaps,
    caps_from_env,
    cycle_of_length,
    cycle_spectrum,
    hamilton_cycle,
    independence_number,
    max_clique,
    xy_path_lengths,
)
from .report import (
    ABSENT,
    PRESENT,
    UNKNOWN,
    WITNESSED,
    LengthEntry,
    SpectrumReport,
    StepRecord,
)
from .shortening import (
    ShorteningContext,
    SpecialSequence,
    build_shortening_context,
    easy_jump,
    find_special_sequence,
    jump_with_zigzag,
    shorten_to_target,
    special_edge_decomposition,
    validate_special_sequence,
    zigzag_precondition,
)
from .spectrum import (
    MatchingCycleDecomposition,
    PathBank,
    RangeFragment,
    SegmentTriple,
    TriColoredGraph,
    build_tricolored,
    chord_dense_endpoints,
    combine_banks,
    cycle_n_minus_1,
    cycle_to_path,
    find_induced_increasing_path,
    find_red_clique,
    full_certificate,
    lower_range_certificates,
    middle_range_certificates,
    partition_into_matching_cycle,
    segment_triple,
    upper_range_certificates,
    validate_matching_cycle,
    validate_path_bank,
    validate_segment_triple,
    zigzag_dense_q,
)

__version__ = "0.1.0"
