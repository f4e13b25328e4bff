"""Coloring invariants and Boltzmann-weight state sums for bonded open chains."""

from .algebra import (
    AxiomReport,
    BondleError,
    FiniteBondle,
    affine_bondle,
    check_bondle,
    check_quandle,
    check_singquandle,
    new_table_bondle,
    search_affine_bondles,
    trivial_bondle,
)
from .cluster import ClusterReport, cluster
from .diagram import (
    ANTIPARALLEL,
    PARALLEL,
    BondedDiagram,
    DiagramError,
    Event,
    insert_r1,
    insert_r2,
    parse_bgc,
    validate,
)
from .solver import (
    Coloring,
    Constraint,
    ConstraintSystem,
    compile_system,
    count_colorings,
    count_colorings_affine,
    enumerate_colorings,
)
from .statesum import StateSum, render, state_sum, weight_of_coloring
from .weights import BoltzmannWeights, check_weights, constant_weights, new_weights, search_weights

__version__ = "0.1.0"
