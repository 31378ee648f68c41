"""Finite partial orders on dense integer carriers.

Elements of a poset are always the integers ``0..n-1``.  The order is
held as one bitmask per element (``down[i]`` = set of elements below or
equal to ``i``), which keeps comparability O(1) and makes the subset
algebra cheap at the scales this package targets.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterator, Sequence


class OrderError(ValueError):
    """A relation failed to define the requested order structure."""


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


class Poset:
    """An immutable finite ordered set.

    ``down[i]`` is the bitmask of elements ``<= i``.  Constructing a
    ``Poset`` validates reflexivity, antisymmetry and transitivity;
    use :func:`poset_from_covers` to build one from a cover relation.
    """

    def __init__(self, down: Sequence[int]):
        down = tuple(int(m) for m in down)
        n = len(down)
        universe = (1 << n) - 1
        for i, m in enumerate(down):
            if m & ~universe:
                raise OrderError(f"element {i}: order mask out of range")
            if not (m >> i) & 1:
                raise OrderError(f"element {i}: order not reflexive")
        for i in range(n):
            for j in bits(down[i]):
                if j != i and (down[j] >> i) & 1:
                    raise OrderError(f"elements {j}, {i}: order not antisymmetric")
                if down[j] & ~down[i]:
                    raise OrderError(f"elements {j} <= {i}: order not transitive")
        self.n = n
        self.down = down

    # -- comparisons ----------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return (self.down[b] >> a) & 1 == 1

    def lt(self, a: int, b: int) -> bool:
        return a != b and (self.down[b] >> a) & 1 == 1

    def comparable(self, a: int, b: int) -> bool:
        return (self.down[b] >> a) & 1 == 1 or (self.down[a] >> b) & 1 == 1

    def down_mask(self, a: int) -> int:
        return self.down[a]

    def up_mask(self, a: int) -> int:
        return self.up[a]

    def interval_mask(self, a: int, b: int) -> int:
        return self.up[a] & self.down[b]

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [1 << i for i in range(self.n)]
        for j in range(self.n):
            for i in bits(self.down[j]):
                up[i] |= 1 << j
        return tuple(up)

    # -- covers and gradings ---------------------------------------------

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """The transitive reduction, as sorted ``(lower, upper)`` pairs."""
        out = []
        for b in range(self.n):
            strict = self.down[b] ^ (1 << b)
            for a in bits(strict):
                if self.up[a] & strict == 1 << a:
                    out.append((a, b))
        out.sort()
        return tuple(out)

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
        ups: list[list[int]] = [[] for _ in range(self.n)]
        downs: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.covers:
            ups[a].append(b)
            downs[b].append(a)
        return tuple(map(tuple, ups)), tuple(map(tuple, downs))

    def upper_covers(self, a: int) -> tuple[int, ...]:
        return self._adjacency[0][a]

    def lower_covers(self, a: int) -> tuple[int, ...]:
        return self._adjacency[1][a]

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        # |down(a)| strictly increases along <, so this sort is a linear
        # extension whatever the element numbering.
        return tuple(sorted(range(self.n), key=lambda i: (self.down[i].bit_count(), i)))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        h = [0] * self.n
        for v in self.linear_extension:
            h[v] = 1 + max((h[u] for u in self.lower_covers(v)), default=-1)
        return tuple(h)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        d = [0] * self.n
        for v in reversed(self.linear_extension):
            d[v] = 1 + max((d[u] for u in self.upper_covers(v)), default=-1)
        return tuple(d)

    @property
    def length(self) -> int:
        """Length of a longest chain (number of covers along it)."""
        return max(self.heights) if self.n else 0

    @cached_property
    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.down[i] == 1 << i)

    @cached_property
    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.up[i] == 1 << i)

    # -- derived posets ---------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.up)

    def restrict(self, elements: Sequence[int]) -> "Poset":
        """Induced subposet, relabelled by position in ``elements``."""
        pos = {e: k for k, e in enumerate(elements)}
        down = []
        for e in elements:
            m = 0
            for f in elements:
                if self.leq(f, e):
                    m |= 1 << pos[f]
            down.append(m)
        return Poset(down)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.down == other.down

    def __hash__(self) -> int:
        return hash(self.down)

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={list(self.covers)})"

    # -- canonical form and isomorphism ------------------------------------

    @cached_property
    def _colors(self) -> tuple[int, ...]:
        """Stable invariant colouring, refined to a fixpoint."""
        keys: list = [
            (self.heights[i], self.depths[i],
             len(self.lower_covers(i)), len(self.upper_covers(i)))
            for i in range(self.n)
        ]
        ids = _compress(keys)
        while True:
            keys = [
                (ids[i],
                 tuple(sorted(ids[j] for j in self.lower_covers(i))),
                 tuple(sorted(ids[j] for j in self.upper_covers(i))))
                for i in range(self.n)
            ]
            new = _compress(keys)
            if new == ids:
                return tuple(ids)
            ids = new

    @cached_property
    def canonical_key(self) -> tuple[tuple[int, ...], int]:
        """A relabelling-invariant key: equal iff posets are isomorphic.

        Minimises the relabelled down-mask sequence over all
        colour-respecting permutations.  Colour classes are small for
        the structured posets this is used on, so the search is cheap.
        """
        colors = self._colors
        by_color: dict[int, list[int]] = {}
        for i in range(self.n):
            by_color.setdefault(colors[i], []).append(i)
        class_lists = [by_color[c] for c in sorted(by_color)]
        best: tuple[int, ...] | None = None
        for perms in itertools.product(*(itertools.permutations(cl) for cl in class_lists)):
            arrangement = [e for group in perms for e in group]  # new index -> old element
            newpos = [0] * self.n
            for new, old in enumerate(arrangement):
                newpos[old] = new
            encoded = []
            for old in arrangement:
                m = 0
                for f in bits(self.down[old]):
                    m |= 1 << newpos[f]
                encoded.append(m)
            key = tuple(encoded)
            if best is None or key < best:
                best = key
        assert best is not None
        return best, self.n


def _compress(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def find_isomorphism(p: Poset, q: Poset) -> tuple[int, ...] | None:
    """An order-isomorphism ``p -> q`` as a mapping tuple, or None.

    Backtracking over invariant-colour classes; candidates are tried in
    ascending index order, so the returned bijection is deterministic.
    """
    if p.n != q.n:
        return None
    cp, cq = p._colors, q._colors
    if sorted(cp) != sorted(cq):
        return None
    order = sorted(range(p.n), key=lambda i: (cp[i], i))
    by_color: dict[int, list[int]] = {}
    for j in range(q.n):
        by_color.setdefault(cq[j], []).append(j)
    mapping = [-1] * p.n
    used = [False] * q.n

    def place(k: int) -> bool:
        if k == p.n:
            return True
        i = order[k]
        for j in by_color.get(cp[i], ()):
            if used[j]:
                continue
            ok = True
            for i2 in order[:k]:
                j2 = mapping[i2]
                if p.leq(i, i2) != q.leq(j, j2) or p.leq(i2, i) != q.leq(j2, j):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if place(k + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return tuple(mapping) if place(0) else None


def are_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None


def poset_from_covers(n: int, cover_pairs) -> Poset:
    """Build a poset from ``(lower, upper)`` pairs.

    The order is the reflexive-transitive closure of the pairs; the
    stored cover relation is re-reduced, so redundant input pairs are
    fine.  Cycles and out-of-range indices are rejected.
    """
    if n < 0:
        raise OrderError("negative element count")
    succ: list[set[int]] = [set() for _ in range(n)]
    for a, b in cover_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise OrderError(f"cover ({a}, {b}): element out of range 0..{n - 1}")
        if a == b:
            raise OrderError(f"cover ({a}, {a}): cycle")
        succ[a].add(b)
    indeg = [0] * n
    for a in range(n):
        for b in succ[a]:
            indeg[b] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    down = [1 << i for i in range(n)]
    seen = 0
    while ready:
        a = ready.pop()
        seen += 1
        for b in succ[a]:
            down[b] |= down[a]
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    if seen != n:
        stuck = sorted(i for i in range(n) if indeg[i] > 0)
        raise OrderError(f"cycle through elements {stuck}")
    return Poset(down)


def down_set_masks(p: Poset) -> list[int]:
    """All down-sets of ``p`` as element bitmasks, sorted by (size, mask)."""
    seen = {0}
    frontier = [0]
    while frontier:
        s = frontier.pop()
        for e in range(p.n):
            if (s >> e) & 1:
                continue
            if (p.down[e] ^ (1 << e)) & ~s:
                continue
            t = s | (1 << e)
            if t not in seen:
                seen.add(t)
                frontier.append(t)
    return sorted(seen, key=lambda m: (m.bit_count(), m))


def down_set_lattice(p: Poset):
    """The lattice of down-sets of ``p`` (join = union, meet = intersection).

    Returns ``(lattice, masks)`` where ``masks[i]`` is the member bitmask
    of down-set ``i``; the lattice order is containment of masks.
    """
    from .lattice import lattice_from_poset

    masks = down_set_masks(p)
    down = []
    for mi in masks:
        row = 0
        for j, mj in enumerate(masks):
            if mj & ~mi == 0:
                row |= 1 << j
        down.append(row)
    return lattice_from_poset(Poset(down)), tuple(masks)


def all_posets(n: int) -> list[Poset]:
    """All posets on ``n`` elements, one per isomorphism class.

    Every poset arises from one on ``n-1`` elements by adding a maximal
    element above a down-set, so iterate that step and deduplicate by
    canonical key.  Counts for n=1..5: 1, 2, 5, 16, 63.
    """
    if n < 1:
        raise OrderError("need at least one element")
    layer = [Poset((1,))]
    for k in range(2, n + 1):
        seen: dict = {}
        for p in layer:
            for d in down_set_masks(p):
                q = Poset(p.down + (d | (1 << (k - 1)),))
                seen.setdefault(q.canonical_key, q)
        layer = [seen[key] for key in sorted(seen)]
    return layer
