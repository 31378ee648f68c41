"""Stacking one lattice on top of another."""

from __future__ import annotations

from ..lattice import Lattice
from ..order import Poset


def ordinal_sum(a: Lattice, b: Lattice) -> Lattice:
    """Every element of ``a`` below every element of ``b``; the two-
    chain summed with itself gives the four-chain."""
    n = a.n + b.n
    full_a = (1 << a.n) - 1
    down = [a.poset.down[x] for x in range(a.n)]
    down += [(b.poset.down[y] << a.n) | full_a for y in range(b.n)]
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x < a.n and y < a.n:
                meet[x][y] = a.meet(x, y)
                join[x][y] = a.join(x, y)
            elif x >= a.n and y >= a.n:
                meet[x][y] = a.n + b.meet(x - a.n, y - a.n)
                join[x][y] = a.n + b.join(x - a.n, y - a.n)
            else:
                lo, hi = min(x, y), max(x, y)
                meet[x][y] = lo
                join[x][y] = hi
    return Lattice(Poset(down), meet, join)


def glued_sum(a: Lattice, b: Lattice) -> Lattice:
    """Ordinal sum with the top of ``a`` identified with the bottom of
    ``b``; the two-chain summed with itself gives the three-chain.

    Elements of ``a`` keep their indices; element y of ``b`` becomes
    a.n + y - 1 except b's bottom, which lands on a's top.
    """
    shift = a.n - 1

    def of_b(y: int) -> int:
        return a.one if y == b.zero else shift + y if y > b.zero else shift + y + 1

    # Dense renaming needs b's zero known; keep it simple by requiring
    # the usual dense layout and mapping through a table instead.
    bmap = []
    nxt = a.n
    for y in range(b.n):
        if y == b.zero:
            bmap.append(a.one)
        else:
            bmap.append(nxt)
            nxt += 1
    del of_b
    n = a.n + b.n - 1
    down = [0] * n
    for x in range(a.n):
        down[x] = a.poset.down[x]
    full_a = (1 << a.n) - 1
    for y in range(b.n):
        if y == b.zero:
            continue
        m = full_a
        for z in range(b.n):
            if b.leq(z, y):
                m |= 1 << bmap[z]
        down[bmap[y]] = m
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    inv_b = {bmap[y]: y for y in range(b.n)}
    for x in range(n):
        for y in range(n):
            in_a_x, in_a_y = x < a.n, y < a.n
            if in_a_x and in_a_y:
                meet[x][y] = a.meet(x, y)
                join[x][y] = a.join(x, y)
            elif not in_a_x and not in_a_y:
                meet[x][y] = bmap[b.meet(inv_b[x], inv_b[y])]
                join[x][y] = bmap[b.join(inv_b[x], inv_b[y])]
            else:
                lo, hi = (x, y) if in_a_x else (y, x)
                if lo == a.one:
                    meet[x][y] = bmap[b.meet(b.zero, inv_b[hi])]
                    join[x][y] = hi
                else:
                    meet[x][y] = a.meet(lo, a.one) if False else lo
                    join[x][y] = hi
                meet[x][y] = lo
                join[x][y] = hi
    return Lattice(Poset(down), meet, join)
