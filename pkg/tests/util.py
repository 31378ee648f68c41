"""Shared helpers for the test suite: tiny independent oracles."""

from __future__ import annotations

import itertools

from conlat.order import Poset, poset_from_covers


def chain_poset(n: int) -> Poset:
    return poset_from_covers(n, [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n: int) -> Poset:
    return poset_from_covers(n, [])


def brute_closure(n: int, pairs) -> set[tuple[int, int]]:
    """Reflexive-transitive closure by plain saturation."""
    leq = {(i, i) for i in range(n)} | {tuple(p) for p in pairs}
    while True:
        extra = {(a, d) for (a, b) in leq for (c, d) in leq if b == c} - leq
        if not extra:
            return leq
        leq |= extra


def brute_reduction(n: int, leq: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Transitive reduction of a (reflexive) order given as a pair set."""
    out = set()
    for a, b in leq:
        if a == b:
            continue
        if any(c not in (a, b) and (a, c) in leq and (c, b) in leq for c in range(n)):
            continue
        out.add((a, b))
    return out


def leq_pairs(p: Poset) -> set[tuple[int, int]]:
    return {(a, b) for a in range(p.n) for b in range(p.n) if p.leq(a, b)}


def brute_isomorphic(p: Poset, q: Poset) -> bool:
    """Isomorphism by exhaustive bijection enumeration (n <= ~7)."""
    if p.n != q.n:
        return False
    for perm in itertools.permutations(range(p.n)):
        if all(
            p.leq(a, b) == q.leq(perm[a], perm[b])
            for a in range(p.n)
            for b in range(p.n)
        ):
            return True
    return False


def brute_down_sets(p: Poset) -> set[int]:
    """Down-sets by filtering all subsets (n small)."""
    out = set()
    for mask in range(1 << p.n):
        if all(
            (p.down[e] ^ (1 << e)) & ~mask == 0
            for e in range(p.n)
            if (mask >> e) & 1
        ):
            out.add(mask)
    return out


def relabel(p: Poset, perm) -> Poset:
    """The same poset with element i renamed perm[i]."""
    down = [0] * p.n
    for i in range(p.n):
        m = 0
        for j in range(p.n):
            if p.leq(j, i):
                m |= 1 << perm[j]
        down[perm[i]] = m
    return Poset(down)


def product_poset(p: Poset, q: Poset) -> Poset:
    """Componentwise order on pairs; (a, b) is index a * q.n + b."""
    down = [0] * (p.n * q.n)
    for a in range(p.n):
        for b in range(q.n):
            m = 0
            for c in range(p.n):
                for d in range(q.n):
                    if p.leq(c, a) and q.leq(d, b):
                        m |= 1 << (c * q.n + d)
            down[a * q.n + b] = m
    return Poset(down)


def brute_bounded_pairs(p: Poset) -> bool:
    """True iff every pair has a least upper and greatest lower bound."""
    for a in range(p.n):
        for b in range(p.n):
            ubs = [u for u in range(p.n) if p.leq(a, u) and p.leq(b, u)]
            if not ubs or not any(all(p.leq(u, v) for v in ubs) for u in ubs):
                return False
            lbs = [l for l in range(p.n) if p.leq(l, a) and p.leq(l, b)]
            if not lbs or not any(all(p.leq(v, l) for v in lbs) for l in lbs):
                return False
    return True


def all_partition_reps(n: int) -> list[tuple[int, ...]]:
    """Every partition of {0..n-1} in least-member rep form."""
    reps: list[tuple[int, ...]] = []

    def rec(assign: list[int], k: int) -> None:
        if len(assign) == n:
            first: dict[int, int] = {}
            rep = []
            for i, c in enumerate(assign):
                first.setdefault(c, i)
                rep.append(first[c])
            reps.append(tuple(rep))
            return
        for c in range(k):
            rec(assign + [c], k)
        rec(assign + [k], k + 1)

    rec([], 0)
    return reps


def brute_is_congruence(lat, rep) -> bool:
    """Substitution property checked from scratch, one pair at a time."""
    n = lat.n
    for x in range(n):
        for y in range(n):
            if rep[x] != rep[y]:
                continue
            for z in range(n):
                if rep[lat.meet(x, z)] != rep[lat.meet(y, z)]:
                    return False
                if rep[lat.join(x, z)] != rep[lat.join(y, z)]:
                    return False
    return True


def brute_congruence_reps(lat) -> set:
    return {
        rep for rep in all_partition_reps(lat.n) if brute_is_congruence(lat, rep)
    }


def intersect_reps(n: int, reps) -> tuple[int, ...]:
    """Common refinement of several partitions in rep form."""
    leaders: dict[tuple, int] = {}
    out = []
    for i in range(n):
        key = tuple(r[i] for r in reps)
        out.append(leaders.setdefault(key, i))
    return tuple(out)
