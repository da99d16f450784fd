"""Cactus group action on standard Young tableaux."""

__version__ = "0.1.0"

from .cactus import (
    BK,
    S,
    GeneratorWord,
    apply_word,
    bender_knuth,
    cactus_generator,
    evacuate,
    parse_word,
    partial_schutzenberger,
    verify_bk_identity,
    verify_cactus_relations,
)
from .errors import CapExceeded
from .orbits import (
    OrbitDecomposition,
    is_viable_pair,
    is_viable_triple,
    orbit_decompose,
    orbit_decompose_pairs,
    orbit_decompose_triples,
    shared_first_row,
    single_orbit_check,
)
from .partition import (
    Partition,
    corners,
    extended_corners,
    is_almost_hook,
    is_generic,
    is_hook,
    is_self_transpose,
    partitions,
    syt_count,
    transpose,
)
from .perm import (
    TableauPermutation,
    compose,
    cycle_type,
    exact_group_order,
    fixed_points,
    parity,
    permutation_of_word,
)
from .survey import ClassificationReport, Verdict, classify, run_survey
from .tableau import StandardTableau, enumerate_syt, superstandard
