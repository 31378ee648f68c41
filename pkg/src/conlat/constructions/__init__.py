"""Ways of building new lattices from old ones."""

from .chopped import (
    ChoppedLattice,
    IdealLattice,
    chopped_congruence_vectors,
    chopped_from_pieces,
    ideal_lattice,
    merge,
)
from .extensions import (
    CubicExtension,
    cubic_extension,
    simple_extension,
    single_insertion,
)
from .gluing import Gluing, glued_congruence, gluing, split_congruence
from .products import (
    Product,
    direct_product,
    factor_congruences,
    multi_product,
    product_congruence,
)
from .rt import RtResult, basic_rt
from .sums import glued_sum, ordinal_sum
from .triples import (
    IntervalTriples,
    Triples,
    boolean_triples,
    boolean_triples_interval,
)

__all__ = [
    "ChoppedLattice",
    "CubicExtension",
    "Gluing",
    "IdealLattice",
    "IntervalTriples",
    "Product",
    "RtResult",
    "Triples",
    "basic_rt",
    "boolean_triples",
    "boolean_triples_interval",
    "chopped_congruence_vectors",
    "chopped_from_pieces",
    "cubic_extension",
    "direct_product",
    "factor_congruences",
    "glued_congruence",
    "glued_sum",
    "gluing",
    "ideal_lattice",
    "merge",
    "multi_product",
    "product_congruence",
    "simple_extension",
    "single_insertion",
    "split_congruence",
]
