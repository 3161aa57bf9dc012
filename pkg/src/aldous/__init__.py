"""Spectra of the marble-swap operator on S_n irreducibles, and the partial
order on representations those spectra induce."""

from .graphs import (
    WeightedGraph,
    complete_graph,
    cycle_graph,
    graph_family,
    matching_graph,
    path_graph,
    quasi_complete_graph,
    random_graph,
    star_graph,
    weighted_star_graph,
)
from .partitions import (
    Box,
    Partition,
    StandardTableau,
    conjugate,
    content_sum,
    corners,
    dominates,
    in_row_class,
    lex_compare,
    num_standard_tableaux,
    parse_partition,
    partitions_of,
    standard_tableaux,
)
from .spectral import (
    ExactSpectrum,
    Spectrum,
    complete_graph_eigenvalue,
    hook_spectrum,
    laplacian_gap,
    quasi_complete_spectrum,
    remark_weights,
    spectrum,
    star_spectrum,
)
from .symrep import (
    ColoringSpace,
    Permutation,
    cycle_type,
    delta_matrix,
    l2q_delta,
    regular_delta,
    rep_adjacent,
    rep_permutation,
    rep_transposition,
    tensor_sign,
)
from .characters import (
    ClassFunction,
    character_from_rep,
    mn_hook_character,
    verify_hook_wedge_iso,
    wedge_character,
)
from .order import (
    RelationEntry,
    RelationLedger,
    check_invariant_vector_bound,
    check_matching_bound,
    check_onestar_bound,
    check_pair,
    check_reducing,
    check_weightedstar_bound,
    export_dot,
    is_h_irreducible,
    max_matching_size,
    scan,
    seed_known,
    star_decompose,
)
from .game import game_vs_spectra, game_winner

__version__ = "0.1.0"
