"""conlat: a workbench for congruence lattices of finite lattices."""

from .congruence import (
    Congruence,
    CongruenceLattice,
    Extension,
    congruence_from_blocks,
    congruence_from_pairs,
    congruence_lattice,
    geometry_report,
    is_congruence,
    principal_congruence,
    quotient,
    subdirect_report,
)
from .lattice import (
    Lattice,
    LatticeError,
    birkhoff_iso,
    classify,
    enumerate_lattices,
    find_forbidden_sublattice,
    irreducibles,
    lattice_from_poset,
    sublattice_closure,
)
from .order import (
    OrderError,
    Poset,
    all_posets,
    are_isomorphic,
    down_set_lattice,
    down_set_masks,
    find_isomorphism,
    poset_from_covers,
)

__all__ = [
    "Congruence",
    "CongruenceLattice",
    "Extension",
    "Lattice",
    "LatticeError",
    "OrderError",
    "Poset",
    "all_posets",
    "are_isomorphic",
    "birkhoff_iso",
    "classify",
    "congruence_from_blocks",
    "congruence_from_pairs",
    "congruence_lattice",
    "down_set_lattice",
    "down_set_masks",
    "enumerate_lattices",
    "find_forbidden_sublattice",
    "find_isomorphism",
    "geometry_report",
    "irreducibles",
    "is_congruence",
    "lattice_from_poset",
    "poset_from_covers",
    "principal_congruence",
    "quotient",
    "subdirect_report",
    "sublattice_closure",
]

__version__ = "0.1.0"
