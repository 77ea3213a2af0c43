"""Milnor fiber monodromy of hyperplane arrangements in degree one.

Decides, per eigenvalue of the monodromy, whether the corresponding part of
H^1 of the Milnor fiber vanishes, using combinatorial data of the
intersection lattice (the arrangement graph, multiplicities of rank-2 flats)
and modular Aomoto complex computations.
"""

from .aomoto import (
    AomotoReport,
    OS2Basis,
    WeightVector,
    aomoto_h1,
    aomoto_h1_projective,
    os2_basis,
    os_oracle_h1,
    wedge_matrix,
)
from .arrangement import (
    Arrangement,
    ProductPartition,
    SimpleGraph,
    detect_product,
    gen_braid,
    gen_graphic,
    gen_named,
    generic_slice,
    normalize_hyperplane,
    parse_arrangement,
    to_document,
)
from .errors import PreconditionError
from .fields import GF, CycloElement, cyclo_reduce, rref
from .graph import ArrGraph, build_graph, is_connected
from .lattice import FlatList, Rank2Flat, euler_char_projective, flats_on_hyperplane, rank2_flats

__version__ = "0.1.0"
