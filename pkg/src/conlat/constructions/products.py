"""Direct products and the product structure of their congruences."""

from __future__ import annotations

from dataclasses import dataclass

from ..congruence import Congruence
from ..lattice import Lattice, LatticeError
from ..order import Poset


@dataclass(frozen=True)
class Product:
    """A product lattice with its coordinate bookkeeping.

    Element ``i`` of ``lattice`` is the tuple ``coords[i]``; ``index``
    maps a coordinate tuple back to its element.
    """

    lattice: Lattice
    factors: tuple[Lattice, ...]
    coords: tuple[tuple[int, ...], ...]
    index: dict

    def project(self, axis: int) -> tuple[int, ...]:
        return tuple(c[axis] for c in self.coords)


def multi_product(factors) -> Product:
    """The direct product of any number of lattices, ordered and
    operated on componentwise."""
    factors = tuple(factors)
    if not factors:
        raise LatticeError("a product needs at least one factor")
    sizes = [f.n for f in factors]
    coords: list[tuple[int, ...]] = [()]
    for size in sizes:
        coords = [c + (x,) for c in coords for x in range(size)]
    index = {c: i for i, c in enumerate(coords)}
    n = len(coords)

    down = [0] * n
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            if all(f.leq(a, b) for f, a, b in zip(factors, cj, ci)):
                down[i] |= 1 << j
    meet = [
        [
            index[tuple(f.meet(a, b) for f, a, b in zip(factors, ci, cj))]
            for cj in coords
        ]
        for ci in coords
    ]
    join = [
        [
            index[tuple(f.join(a, b) for f, a, b in zip(factors, ci, cj))]
            for cj in coords
        ]
        for ci in coords
    ]
    lattice = Lattice(Poset(down), meet, join)
    return Product(
        lattice=lattice,
        factors=factors,
        coords=tuple(coords),
        index=index,
    )


def direct_product(a: Lattice, b: Lattice) -> Product:
    return multi_product((a, b))


def product_congruence(prod: Product, parts) -> Congruence:
    """The congruence of the product acting componentwise through the
    given factor congruences."""
    parts = tuple(parts)
    if len(parts) != len(prod.factors):
        raise LatticeError("one congruence per factor is required")
    rep = tuple(
        prod.index[tuple(c.rep[x] for c, x in zip(parts, coord))]
        for coord in prod.coords
    )
    return Congruence(prod.lattice, rep)


def factor_congruences(prod: Product, cong: Congruence) -> tuple[Congruence, ...]:
    """Split a congruence of the product into its factor congruences by
    tracing it along one coordinate axis at a time."""
    out = []
    for axis, factor in enumerate(prod.factors):
        zeros = tuple(f.zero for f in prod.factors)

        def at(x: int) -> int:
            coord = list(zeros)
            coord[axis] = x
            return prod.index[tuple(coord)]

        leaders: dict[int, int] = {}
        rep = [0] * factor.n
        for x in range(factor.n):
            rep[x] = leaders.setdefault(cong.rep[at(x)], x)
        out.append(Congruence(factor, rep))
    return tuple(out)


def congruences_decompose(prod: Product, cong: Congruence) -> bool:
    """True iff the congruence is rebuilt exactly from its factor
    congruences (always the case for lattice products; exposed so the
    round trip can be checked rather than assumed)."""
    return product_congruence(prod, factor_congruences(prod, cong)) == cong
