"""Congruences of a finite lattice.

A congruence is a partition whose blocks survive meet and join
substitution.  This module computes single congruences (generated,
principal, collapse-of-a-set), the whole congruence lattice with its
join-irreducible skeleton and principality flags, quotients, kernels,
restriction and extension across a sublattice, block geometry, subdirect
decompositions, and the perspectivity relations between intervals.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import (
    Lattice,
    LatticeError,
    irreducibles,
    is_sublattice,
    lattice_from_poset,
    sublattice,
)
from .order import Poset, are_isomorphic, bits, down_set_masks

__all__ = [
    "Congruence",
    "CongruenceLattice",
    "Extension",
    "ExtensionReport",
    "GeometryReport",
    "Quotient",
    "SubdirectReport",
    "collapse_congruence",
    "cong_join",
    "cong_meet",
    "cong_one",
    "cong_perspective",
    "cong_perspective_dn",
    "cong_perspective_up",
    "cong_projective",
    "cong_zero",
    "congruence_from_blocks",
    "congruence_from_pairs",
    "congruence_lattice",
    "geometry_report",
    "interval_defect",
    "is_congruence",
    "is_perspective",
    "is_projective",
    "is_zero_separating",
    "kernel",
    "partition_rep",
    "perspective_dn",
    "perspective_up",
    "principal_congruence",
    "quotient",
    "subdirect_report",
    "substitution_defect",
]


# -- partitions ----------------------------------------------------------------


def partition_rep(n: int, blocks: Iterable[Iterable[int]]) -> tuple[int, ...]:
    """Canonical form of a partition of 0..n-1: element -> least member
    of its block.  Rejects anything that is not a partition."""
    rep = [-1] * n
    for block in blocks:
        members = sorted(block)
        if not members:
            raise LatticeError("empty block")
        leader = members[0]
        for x in members:
            if not 0 <= x < n:
                raise LatticeError(f"element {x} out of range")
            if rep[x] != -1:
                raise LatticeError(f"element {x} appears twice")
            rep[x] = leader
    if -1 in rep:
        raise LatticeError(f"element {rep.index(-1)} not covered")
    return tuple(rep)


def _canonical_rep(n: int, find) -> tuple[int, ...]:
    leaders: dict[int, int] = {}
    rep = [0] * n
    for i in range(n):
        r = find(i)
        if r not in leaders:
            leaders[r] = i
        rep[i] = leaders[r]
    return tuple(rep)


def substitution_defect(lat: Lattice, rep: Sequence[int]):
    """First violation of meet/join substitution, scanning every related
    pair directly; None when the partition is a congruence.

    Witness shape: (x, y, z, "meet" | "join").
    """
    n = lat.n
    meet = lat.meet_table
    join = lat.join_table
    for x in range(n):
        for y in range(x + 1, n):
            if rep[x] != rep[y]:
                continue
            mx, my = meet[x], meet[y]
            jx, jy = join[x], join[y]
            for z in range(n):
                if rep[mx[z]] != rep[my[z]]:
                    return (x, y, z, "meet")
                if rep[jx[z]] != rep[jy[z]]:
                    return (x, y, z, "join")
    return None


def interval_defect(lat: Lattice, rep: Sequence[int]):
    """Second, independent route: every block must be an interval and
    substitution need only be checked across cover pairs.

    Witness shapes: ("block", leader, stray) when a block is not the
    full interval between its bounds, or (x, y, z, "meet" | "join") for
    a failed cover substitution.
    """
    n = lat.n
    blocks: dict[int, list[int]] = {}
    for x in range(n):
        blocks.setdefault(rep[x], []).append(x)
    for leader, members in blocks.items():
        bot = lat.meet_all(members)
        top = lat.join_all(members)
        inside = set(members)
        if bot not in inside or top not in inside:
            return ("block", leader, bot if bot not in inside else top)
        for t in lat.interval(bot, top):
            if t not in inside:
                return ("block", leader, t)
    meet = lat.meet_table
    join = lat.join_table
    for x, y in lat.covers_set:
        if rep[x] != rep[y]:
            continue
        mx, my = meet[x], meet[y]
        jx, jy = join[x], join[y]
        for z in range(n):
            if rep[mx[z]] != rep[my[z]]:
                return (x, y, z, "meet")
            if rep[jx[z]] != rep[jy[z]]:
                return (x, y, z, "join")
    return None


def is_congruence(lat: Lattice, blocks: Iterable[Iterable[int]]) -> bool:
    return substitution_defect(lat, partition_rep(lat.n, blocks)) is None


# -- congruence objects --------------------------------------------------------


class Congruence:
    """A verified partition with the substitution property.

    ``rep[i]`` is the least element of the block of ``i``; two
    congruences on the same lattice are equal iff their reps are.
    """

    __slots__ = ("lat", "rep", "_blocks")

    def __init__(self, lat: Lattice, rep: Sequence[int]):
        self.lat = lat
        self.rep = tuple(rep)
        self._blocks = None

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        if self._blocks is None:
            by_leader: dict[int, list[int]] = {}
            for x in range(self.lat.n):
                by_leader.setdefault(self.rep[x], []).append(x)
            self._blocks = tuple(
                tuple(by_leader[k]) for k in sorted(by_leader)
            )
        return self._blocks

    @property
    def n_blocks(self) -> int:
        return len(set(self.rep))

    def same(self, a: int, b: int) -> bool:
        return self.rep[a] == self.rep[b]

    def block_of(self, x: int) -> tuple[int, ...]:
        leader = self.rep[x]
        return tuple(t for t in range(self.lat.n) if self.rep[t] == leader)

    def refines(self, other: "Congruence") -> bool:
        """True iff every block of self lies inside a block of other."""
        o = other.rep
        return all(o[x] == o[self.rep[x]] for x in range(self.lat.n))

    def is_zero(self) -> bool:
        return self.n_blocks == self.lat.n

    def is_one(self) -> bool:
        return self.n_blocks == 1

    def __le__(self, other: "Congruence") -> bool:
        return self.refines(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Congruence)
            and self.rep == other.rep
            and (self.lat is other.lat or self.lat == other.lat)
        )

    def __hash__(self) -> int:
        return hash(self.rep)

    def __repr__(self) -> str:
        body = " | ".join(
            ",".join(str(x) for x in block) for block in self.blocks
        )
        return f"Congruence({body})"


def congruence_from_blocks(lat: Lattice, blocks, check: bool = True) -> Congruence:
    """Build a congruence from explicit blocks; with ``check`` the
    substitution property is verified and a defect raises."""
    rep = partition_rep(lat.n, blocks)
    if check:
        defect = substitution_defect(lat, rep)
        if defect is not None:
            raise LatticeError(f"not a congruence: witness {defect}")
    return Congruence(lat, rep)


def cong_zero(lat: Lattice) -> Congruence:
    return Congruence(lat, range(lat.n))


def cong_one(lat: Lattice) -> Congruence:
    return Congruence(lat, [0] * lat.n)


def congruence_from_pairs(lat: Lattice, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Smallest congruence relating every given pair.

    Union-find plus a worklist: whenever two classes merge through a
    pair (x, y), the pairs (x op z, y op z) are queued for every z.
    Skipping pairs whose classes already coincide is sound because
    substitution consequences propagate linkwise along merge chains.
    """
    n = lat.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    meet = lat.meet_table
    join = lat.join_table
    queue = deque(pairs)
    while queue:
        x, y = queue.popleft()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[rx] = ry
        mx, my = meet[x], meet[y]
        jx, jy = join[x], join[y]
        for z in range(n):
            a, b = mx[z], my[z]
            if find(a) != find(b):
                queue.append((a, b))
            a, b = jx[z], jy[z]
            if find(a) != find(b):
                queue.append((a, b))
    return Congruence(lat, _canonical_rep(n, find))


def principal_congruence(lat: Lattice, a: int, b: int) -> Congruence:
    """The smallest congruence relating ``a`` and ``b``."""
    return congruence_from_pairs(lat, [(a, b)])


def collapse_congruence(lat: Lattice, elements: Iterable[int]) -> Congruence:
    """The smallest congruence putting all of ``elements`` in one block."""
    items = sorted(set(elements))
    if not items:
        return cong_zero(lat)
    first = items[0]
    return congruence_from_pairs(lat, [(first, x) for x in items[1:]])


def cong_meet(x: Congruence, y: Congruence) -> Congruence:
    """Blockwise intersection (the meet in the congruence lattice)."""
    _same_lattice(x, y)
    n = x.lat.n
    leaders: dict[tuple[int, int], int] = {}
    rep = [0] * n
    for i in range(n):
        key = (x.rep[i], y.rep[i])
        rep[i] = leaders.setdefault(key, i)
    return Congruence(x.lat, rep)


def cong_join(x: Congruence, y: Congruence) -> Congruence:
    """Transitive closure of the union; no substitution pass is needed
    because both inputs already have the substitution property."""
    _same_lattice(x, y)
    n = x.lat.n
    parent = list(range(n))

    def find(t: int) -> int:
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for i in range(n):
        for r in (x.rep[i], y.rep[i]):
            ri, rr = find(i), find(r)
            if ri != rr:
                parent[ri] = rr
    return Congruence(x.lat, _canonical_rep(n, find))


def _same_lattice(x: Congruence, y: Congruence) -> None:
    if x.lat is not y.lat and x.lat != y.lat:
        raise LatticeError("congruences live on different lattices")


# -- the congruence lattice ----------------------------------------------------


@dataclass(frozen=True)
class CongruenceLattice:
    """Every congruence of a lattice, organised.

    ``congruences`` is sorted lexicographically by rep; ``lattice`` is
    the refinement order on them, with element i standing for
    ``congruences[i]``.  ``j_indices`` point at the join-irreducible
    members (the distinct principal congruences of cover pairs), and
    ``prime_to_j`` maps each cover pair to its position in that list.
    ``principal`` flags which congruences are principal, with a witness
    pair for each.
    """

    lat: Lattice
    congruences: tuple[Congruence, ...]
    lattice: Lattice
    j_indices: tuple[int, ...]
    prime_to_j: dict
    principal: tuple[bool, ...]
    principal_witness: dict
    zero_index: int
    one_index: int
    _index: dict
    _jmask_index: dict

    def __len__(self) -> int:
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def index_of(self, c: Congruence) -> int:
        try:
            return self._index[c.rep]
        except KeyError:
            raise LatticeError("not a congruence of this lattice") from None

    @property
    def j_congruences(self) -> tuple[Congruence, ...]:
        return tuple(self.congruences[i] for i in self.j_indices)

    @property
    def j_poset(self) -> Poset:
        return self.lattice.poset.restrict(self.j_indices)

    @property
    def meet_irreducible_indices(self) -> tuple[int, ...]:
        return irreducibles(self.lattice).meet_irreducibles

    def is_simple(self) -> bool:
        return len(self.congruences) == 2

    def _jmask_of_pair(self, a: int, b: int) -> int:
        """Join-irreducible support of con(a, b), read off one maximal
        chain of the interval [a meet b, a join b]."""
        lat = self.lat
        cur = lat.meet(a, b)
        top = lat.join(a, b)
        mask = 0
        while cur != top:
            for nxt in lat.poset.upper_covers(cur):
                if lat.leq(nxt, top):
                    break
            else:  # pragma: no cover - interval is never empty here
                raise LatticeError("broken chain walk")
            mask |= self._jmask_index[("prime", cur, nxt)]
            cur = nxt
        return mask

    def con(self, a: int, b: int) -> Congruence:
        """The principal congruence con(a, b), via the join-irreducible
        support along a maximal chain (no fresh closure run)."""
        return self.congruences[self._jmask_index[self._jmask_of_pair(a, b)]]

    def con_of_set(self, elements: Iterable[int]) -> Congruence:
        items = sorted(set(elements))
        mask = 0
        for x in items[1:]:
            mask |= self._jmask_of_pair(items[0], x)
        return self.congruences[self._jmask_index[mask]]


def congruence_lattice(lat: Lattice) -> CongruenceLattice:
    """Compute every congruence of ``lat``.

    Cover pairs are first grouped by perspectivity (both transposes);
    one closure per group yields the distinct principal congruences of
    cover pairs, which are exactly the join-irreducible congruences.
    Every congruence is then the join of a down-set of those, and joins
    of congruences need only transitive closure.
    """
    n = lat.n
    primes = sorted(lat.covers_set)
    k = len(primes)

    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    meet = lat.meet_table
    join = lat.join_table
    for i in range(k):
        a, b = primes[i]
        for j in range(i + 1, k):
            c, d = primes[j]
            up = meet[b][c] == a and join[b][c] == d
            dn = meet[d][a] == c and join[d][a] == b
            if up or dn:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj

    group_cong: dict[int, Congruence] = {}
    for i in range(k):
        r = find(i)
        if r not in group_cong:
            group_cong[r] = congruence_from_pairs(lat, [primes[r]])

    # Distinct principal congruences of cover pairs = join-irreducibles.
    j_list: list[Congruence] = []
    j_of_rep: dict[tuple[int, ...], int] = {}
    prime_to_j: dict[tuple[int, int], int] = {}
    for i in range(k):
        c = group_cong[find(i)]
        pos = j_of_rep.setdefault(c.rep, len(j_list))
        if pos == len(j_list):
            j_list.append(c)
        prime_to_j[primes[i]] = pos

    m = len(j_list)
    j_down = [0] * m
    for s in range(m):
        for t in range(m):
            if j_list[t].refines(j_list[s]):
                j_down[s] |= 1 << t
    jposet = Poset(j_down)

    # Every congruence is the join of a down-set of join-irreducibles.
    all_congs: dict[tuple[int, ...], int] = {}
    congs: list[Congruence] = []
    masks: list[int] = []
    for mask in down_set_masks(jposet):
        parent2 = list(range(n))

        def find2(t: int) -> int:
            while parent2[t] != t:
                parent2[t] = parent2[parent2[t]]
                t = parent2[t]
            return t

        for pos in bits(mask):
            rep = j_list[pos].rep
            for x in range(n):
                rx, rr = find2(x), find2(rep[x])
                if rx != rr:
                    parent2[rx] = rr
        c = Congruence(lat, _canonical_rep(n, find2))
        if c.rep in all_congs:
            raise LatticeError("down-set to congruence map is not injective")
        all_congs[c.rep] = len(congs)
        congs.append(c)
        masks.append(mask)

    order = sorted(range(len(congs)), key=lambda i: congs[i].rep)
    congs = [congs[i] for i in order]
    masks = [masks[i] for i in order]
    index = {c.rep: i for i, c in enumerate(congs)}

    total = len(congs)
    down = [0] * total
    for s in range(total):
        for t in range(total):
            if congs[t].refines(congs[s]):
                down[s] |= 1 << t
    con_lat = lattice_from_poset(Poset(down))

    j_indices = tuple(index[c.rep] for c in j_list)
    jmask_index: dict = {mask: i for i, mask in enumerate(masks)}
    for pos, prime in ((prime_to_j[p], p) for p in primes):
        jmask_of_j = 0
        for t in range(m):
            if j_list[t].refines(j_list[pos]):
                jmask_of_j |= 1 << t
        jmask_index[("prime", prime[0], prime[1])] = jmask_of_j

    # Sanity: the computed join-irreducibles must be exactly the
    # join-irreducible elements of the assembled lattice.
    built_ji = set(irreducibles(con_lat).join_irreducibles)
    if built_ji != set(j_indices):
        raise LatticeError("join-irreducible bookkeeping is inconsistent")

    zero_index = index[cong_zero(lat).rep]
    one_index = index[cong_one(lat).rep]

    # Principality: con(a, b) is supported by the chain primes of
    # [a meet b, a join b]; a congruence is principal iff its support
    # mask arises from some pair.
    out = CongruenceLattice(
        lat=lat,
        congruences=tuple(congs),
        lattice=con_lat,
        j_indices=j_indices,
        prime_to_j=prime_to_j,
        principal=(),
        principal_witness={},
        zero_index=zero_index,
        one_index=one_index,
        _index=index,
        _jmask_index=jmask_index,
    )
    witness: dict[int, tuple[int, int]] = {}
    for a in range(n):
        for b in range(a, n):
            mask = out._jmask_of_pair(a, b)
            idx = jmask_index[mask]
            if idx not in witness:
                witness[idx] = (a, b)
    principal = tuple(i in witness for i in range(total))
    object.__setattr__(out, "principal", principal)
    object.__setattr__(out, "principal_witness", witness)
    return out


# -- quotients and kernels -----------------------------------------------------


@dataclass(frozen=True)
class Quotient:
    """A lattice of congruence blocks with the canonical block map."""

    lattice: Lattice
    to_class: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def apply(self, x: int) -> int:
        return self.to_class[x]


def quotient(lat: Lattice, cong: Congruence) -> Quotient:
    """The lattice of blocks of ``cong``; the canonical map is checked
    to be a surjective homomorphism on every call."""
    blocks = cong.blocks
    leaders = [b[0] for b in blocks]
    pos = {leader: i for i, leader in enumerate(leaders)}
    to_class = tuple(pos[cong.rep[x]] for x in range(lat.n))
    q = len(blocks)
    down = [0] * q
    for s in range(q):
        for t in range(q):
            if cong.rep[lat.join(leaders[t], leaders[s])] == cong.rep[leaders[s]]:
                down[s] |= 1 << t
    meet = [[0] * q for _ in range(q)]
    join = [[0] * q for _ in range(q)]
    for s in range(q):
        for t in range(q):
            meet[s][t] = to_class[lat.meet(leaders[s], leaders[t])]
            join[s][t] = to_class[lat.join(leaders[s], leaders[t])]
    qlat = Lattice(Poset(down), meet, join)
    for a in range(lat.n):
        for b in range(lat.n):
            if to_class[lat.meet(a, b)] != qlat.meet(to_class[a], to_class[b]):
                raise LatticeError(f"block map breaks meet at ({a}, {b})")
            if to_class[lat.join(a, b)] != qlat.join(to_class[a], to_class[b]):
                raise LatticeError(f"block map breaks join at ({a}, {b})")
    return Quotient(lattice=qlat, to_class=to_class, blocks=blocks)


def is_zero_separating(d: Lattice, e: Lattice, phi: Sequence[int]) -> bool:
    """True iff only the bottom of ``d`` maps to the bottom of ``e``."""
    return all(phi[x] != e.zero for x in range(d.n) if x != d.zero)


def kernel(d: Lattice, e: Lattice, phi: Sequence[int]) -> Congruence:
    """The congruence on ``d`` identifying elements with equal image
    under the homomorphism ``phi``; raises if the fibres fail
    substitution (i.e. phi was not a homomorphism)."""
    if len(phi) != d.n or any(not 0 <= v < e.n for v in phi):
        raise LatticeError("map shape does not match the lattices")
    fibres: dict[int, list[int]] = {}
    for x in range(d.n):
        fibres.setdefault(phi[x], []).append(x)
    return congruence_from_blocks(d, fibres.values())


# -- restriction and extension across a sublattice ------------------------------


@dataclass(frozen=True)
class ExtensionReport:
    reflecting: bool
    determining: bool
    preserving: bool


class Extension:
    """A sublattice sitting inside a lattice, with the restriction and
    minimal-extension maps between the two congruence lattices.

    The three classification flags each have two independent routes
    (image-counting vs round-trip composition); ``report()`` computes
    both and insists they agree.
    """

    def __init__(self, lat: Lattice, elements: Iterable[int]):
        elements = tuple(sorted(set(elements)))
        if not elements:
            raise LatticeError("empty sublattice")
        if not is_sublattice(lat, elements):
            raise LatticeError("elements are not closed under meet and join")
        self.lat = lat
        self.elements = elements
        self.sub = sublattice(lat, elements)
        self._con_lat: CongruenceLattice | None = None
        self._con_sub: CongruenceLattice | None = None

    def con_ambient(self) -> CongruenceLattice:
        if self._con_lat is None:
            self._con_lat = congruence_lattice(self.lat)
        return self._con_lat

    def con_sub(self) -> CongruenceLattice:
        if self._con_sub is None:
            self._con_sub = congruence_lattice(self.sub)
        return self._con_sub

    def restrict(self, cong: Congruence) -> Congruence:
        """The trace on the sublattice: relate two members iff the
        ambient congruence relates them."""
        leaders: dict[int, int] = {}
        rep = [0] * len(self.elements)
        for i, e in enumerate(self.elements):
            rep[i] = leaders.setdefault(cong.rep[e], i)
        return Congruence(self.sub, rep)

    def extend_minimal(self, scong: Congruence) -> Congruence:
        """The smallest ambient congruence whose trace contains the
        given one."""
        pairs = [
            (self.elements[i], self.elements[scong.rep[i]])
            for i in range(len(self.elements))
        ]
        return congruence_from_pairs(self.lat, pairs)

    # -- route one: counting images --------------------------------------

    def reflecting_by_image(self) -> bool:
        """Every congruence of the sublattice is some trace."""
        traces = {self.restrict(c).rep for c in self.con_ambient()}
        wanted = {c.rep for c in self.con_sub()}
        return wanted <= traces

    def determining_by_image(self) -> bool:
        """Distinct ambient congruences have distinct traces."""
        ambient = self.con_ambient()
        traces = {self.restrict(c).rep for c in ambient}
        return len(traces) == len(ambient)

    def preserving_by_bijection(self) -> bool:
        """The trace map is a bijection onto the sublattice's
        congruences."""
        ambient = self.con_ambient()
        traces = [self.restrict(c).rep for c in ambient]
        wanted = {c.rep for c in self.con_sub()}
        return len(set(traces)) == len(traces) and set(traces) == wanted

    # -- route two: round trips -------------------------------------------

    def reflecting_by_extension(self) -> bool:
        """The minimal extension of each sub-congruence traces back to
        exactly itself."""
        return all(
            self.restrict(self.extend_minimal(c)) == c for c in self.con_sub()
        )

    def determining_by_generation(self) -> bool:
        """Each ambient congruence is generated by its trace."""
        return all(
            self.extend_minimal(self.restrict(c)) == c for c in self.con_ambient()
        )

    def preserving_by_composition(self) -> bool:
        return self.reflecting_by_extension() and self.determining_by_generation()

    def report(self) -> ExtensionReport:
        reflecting = self.reflecting_by_image()
        if reflecting != self.reflecting_by_extension():
            raise LatticeError("reflecting routes disagree")
        determining = self.determining_by_image()
        if determining != self.determining_by_generation():
            raise LatticeError("determining routes disagree")
        preserving = self.preserving_by_bijection()
        if preserving != self.preserving_by_composition():
            raise LatticeError("preserving routes disagree")
        if preserving != (reflecting and determining):
            raise LatticeError("flag algebra is inconsistent")
        return ExtensionReport(
            reflecting=reflecting,
            determining=determining,
            preserving=preserving,
        )


# -- block geometry ------------------------------------------------------------


@dataclass(frozen=True)
class GeometryReport:
    uniform: bool
    isoform: bool
    regular: bool


def geometry_report(lat: Lattice, conl: CongruenceLattice | None = None) -> GeometryReport:
    """Uniform: blocks of any one congruence share a size.  Isoform:
    they are pairwise isomorphic lattices.  Regular: a congruence is
    pinned down by any single one of its blocks."""
    conl = conl or congruence_lattice(lat)
    uniform = True
    isoform = True
    for c in conl:
        blocks = c.blocks
        sizes = {len(b) for b in blocks}
        if len(sizes) > 1:
            uniform = False
        first = sublattice(lat, blocks[0]).poset
        for b in blocks[1:]:
            if len(b) != len(blocks[0]) or not are_isomorphic(
                first, sublattice(lat, b).poset
            ):
                isoform = False
                break
        if not uniform and not isoform:
            break
    regular = True
    cs = conl.congruences
    for i in range(len(cs)):
        bi = {frozenset(b) for b in cs[i].blocks}
        for j in range(i + 1, len(cs)):
            if any(frozenset(b) in bi for b in cs[j].blocks):
                regular = False
                break
        if not regular:
            break
    return GeometryReport(uniform=uniform, isoform=isoform, regular=regular)


# -- subdirect decompositions ---------------------------------------------------


@dataclass(frozen=True)
class SubdirectReport:
    simple: bool
    subdirectly_irreducible: bool
    monolith: Congruence | None
    decomposition: tuple[Congruence, ...]
    quotients: tuple[Quotient, ...]
    embedding: tuple[tuple[int, ...], ...]
    embedding_valid: bool


def subdirect_report(lat: Lattice, conl: CongruenceLattice | None = None) -> SubdirectReport:
    """Simplicity, the monolith when there is one, and an irredundant
    family of meet-irreducible congruences meeting to zero, together
    with the induced embedding into the product of the quotients."""
    conl = conl or congruence_lattice(lat)
    simple = conl.is_simple()
    atoms = [conl.congruences[i] for i in conl.lattice.atoms]
    si = len(atoms) == 1
    monolith = atoms[0] if si else None

    mi = [conl.congruences[i] for i in conl.meet_irreducible_indices]
    zero = cong_zero(lat)

    def meet_of(family: Sequence[Congruence]) -> Congruence:
        out = cong_one(lat)
        for c in family:
            out = cong_meet(out, c)
        return out

    kept = list(mi)
    for c in list(kept):
        rest = [d for d in kept if d is not c]
        if meet_of(rest) == zero:
            kept = rest
    decomposition = tuple(kept)

    quotients = tuple(quotient(lat, c) for c in decomposition)
    embedding = tuple(
        tuple(q.to_class[x] for q in quotients) for x in range(lat.n)
    )
    if decomposition:
        valid = meet_of(decomposition) == zero and len(set(embedding)) == lat.n
    else:
        valid = lat.n == 1
    return SubdirectReport(
        simple=simple,
        subdirectly_irreducible=si,
        monolith=monolith,
        decomposition=decomposition,
        quotients=quotients,
        embedding=embedding,
        embedding_valid=valid,
    )


# -- interval relations ---------------------------------------------------------


def _as_interval(lat: Lattice, pair) -> tuple[int, int]:
    a, b = pair
    if not lat.leq(a, b):
        raise LatticeError(f"({a}, {b}) is not an interval")
    return a, b


def perspective_up(lat: Lattice, src, dst) -> bool:
    """[a, b] transposes up to [c, d]: a = b meet c and d = b join c."""
    a, b = _as_interval(lat, src)
    c, d = _as_interval(lat, dst)
    return lat.meet(b, c) == a and lat.join(b, c) == d


def perspective_dn(lat: Lattice, src, dst) -> bool:
    return perspective_up(lat, dst, src)


def is_perspective(lat: Lattice, src, dst) -> bool:
    return perspective_up(lat, src, dst) or perspective_dn(lat, src, dst)


def is_projective(lat: Lattice, src, dst) -> bool:
    """Reachability under perspectivity, through arbitrary intervals."""
    src = _as_interval(lat, src)
    dst = _as_interval(lat, dst)
    intervals = [
        (a, b) for a in range(lat.n) for b in range(lat.n) if lat.leq(a, b)
    ]
    seen = {src}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            return True
        for nxt in intervals:
            if nxt not in seen and is_perspective(lat, cur, nxt):
                seen.add(nxt)
                queue.append(nxt)
    return dst in seen


def cong_perspective_up(lat: Lattice, src, dst) -> bool:
    """Collapsing [a, b] forces [c, d] upward: d = b join c and
    a lies below b meet c."""
    a, b = _as_interval(lat, src)
    c, d = _as_interval(lat, dst)
    return lat.join(b, c) == d and lat.leq(a, lat.meet(b, c))


def cong_perspective_dn(lat: Lattice, src, dst) -> bool:
    a, b = _as_interval(lat, src)
    c, d = _as_interval(lat, dst)
    return lat.meet(a, d) == c and lat.leq(lat.join(a, d), b)


def cong_perspective(lat: Lattice, src, dst) -> bool:
    return cong_perspective_up(lat, src, dst) or cong_perspective_dn(lat, src, dst)


def cong_projective(lat: Lattice, src, dst) -> bool:
    """Directed reachability: a chain of one-way congruence
    perspectivities carrying the collapse of src to dst."""
    src = _as_interval(lat, src)
    dst = _as_interval(lat, dst)
    intervals = [
        (a, b) for a in range(lat.n) for b in range(lat.n) if lat.leq(a, b)
    ]
    seen = {src}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            return True
        for nxt in intervals:
            if nxt not in seen and cong_perspective(lat, cur, nxt):
                seen.add(nxt)
                queue.append(nxt)
    return dst in seen
