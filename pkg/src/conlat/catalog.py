"""Stock lattices: bundled data files and parametric generators."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .lattice import Lattice, lattice_from_poset
from .order import Poset, poset_from_covers
from .textio import LatticeFile, parse

_NAMES = (
    "b2",
    "b3",
    "c5",
    "grid33",
    "m3",
    "n5",
    "n55",
    "n6",
    "s7",
    "s8",
)


def load_file(name: str) -> LatticeFile:
    """Parse a bundled data file by stem, e.g. ``load_file("n5")``."""
    pkg = resources.files("conlat.data")
    for suffix in (".lat", ".poset"):
        path = pkg.joinpath(name + suffix)
        if path.is_file():
            return parse(path.read_text())
    raise KeyError(f"no bundled file named {name!r}")


@lru_cache(maxsize=None)
def stock(name: str) -> Lattice:
    """A bundled lattice by name.  See ``stock_names()``."""
    return load_file(name).to_lattice()


def stock_names() -> tuple[str, ...]:
    return _NAMES


def chain(n: int) -> Lattice:
    """The n-element chain."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    return lattice_from_poset(
        poset_from_covers(n, [(i, i + 1) for i in range(n - 1)])
    )


def antichain(n: int) -> Poset:
    return poset_from_covers(n, [])


def boolean(k: int) -> Lattice:
    """The lattice of subsets of a k-element set, indexed by bitmask."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 1 << k
    down = [0] * n
    for s in range(n):
        for t in range(s + 1):
            if t & ~s == 0:
                down[s] |= 1 << t
    return lattice_from_poset(Poset(down))


def grid(rows: int, cols: int) -> Lattice:
    """The direct product of a rows-chain and a cols-chain."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive side lengths")
    covers = []
    for i in range(rows):
        for j in range(cols):
            e = i * cols + j
            if i + 1 < rows:
                covers.append((e, e + cols))
            if j + 1 < cols:
                covers.append((e, e + 1))
    return lattice_from_poset(poset_from_covers(rows * cols, covers))


def _partitions(k: int) -> list[tuple[int, ...]]:
    # Each partition is the tuple mapping an element to the least element
    # of its block.
    out: list[tuple[int, ...]] = []

    def extend(rep: list[int]) -> None:
        if len(rep) == k:
            out.append(tuple(rep))
            return
        e = len(rep)
        for leader in sorted(set(rep)):
            extend(rep + [leader])
        extend(rep + [e])

    extend([0])
    return out

def partition_lattice(k: int) -> Lattice:
    """The lattice of set partitions of {0..k-1} under refinement."""
    if not 1 <= k <= 6:
        raise ValueError("supported for 1 <= k <= 6")
    parts = _partitions(k)
    index = {p: i for i, p in enumerate(parts)}
    n = len(parts)

    def finer(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        # p <= q iff elements sharing a p-block share a q-block.
        return all(q[e] == q[p[e]] for e in range(k))

    down = [0] * n
    for p in parts:
        for q in parts:
            if finer(p, q):
                down[index[q]] |= 1 << index[p]
    return lattice_from_poset(Poset(down))
