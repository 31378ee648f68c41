"""Finite lattices as algebras: meet/join tables, irreducibles,
identity-based classification, sublattice machinery, down-set duality,
and an exhaustive small-lattice enumerator used as a global test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .order import Poset, bits, down_set_lattice, down_set_masks, find_isomorphism


class LatticeError(ValueError):
    """The input fails the structural requirements of an operation."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class Lattice:
    """A finite lattice: a poset plus total meet and join tables.

    The constructor checks bounds exist and the tables have the right
    shape; :meth:`validate` runs the full axiom battery (used by tests
    and the verification suite, not on every construction).
    """

    def __init__(self, poset: Poset, meet, join):
        n = poset.n
        if n == 0:
            raise LatticeError("a lattice needs at least one element")
        if len(meet) != n or len(join) != n:
            raise LatticeError("table size does not match the poset")
        if len(poset.minimal_elements) != 1 or len(poset.maximal_elements) != 1:
            raise LatticeError("bounds are not unique")
        self.poset = poset
        self.n = n
        self.meet_table = tuple(tuple(row) for row in meet)
        self.join_table = tuple(tuple(row) for row in join)
        self.zero = poset.minimal_elements[0]
        self.one = poset.maximal_elements[0]

    # -- operations -------------------------------------------------------

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_all(self, items: Iterable[int]) -> int:
        out = self.one
        for x in items:
            out = self.meet_table[out][x]
        return out

    def join_all(self, items: Iterable[int]) -> int:
        out = self.zero
        for x in items:
            out = self.join_table[out][x]
        return out

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def lt(self, a: int, b: int) -> bool:
        return self.poset.lt(a, b)

    @cached_property
    def covers_set(self) -> frozenset:
        return frozenset(self.poset.covers)

    def interval(self, a: int, b: int) -> tuple[int, ...]:
        return tuple(bits(self.poset.interval_mask(a, b)))

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        return self.poset.upper_covers(self.zero)

    @cached_property
    def dual_atoms(self) -> tuple[int, ...]:
        return self.poset.lower_covers(self.one)

    def dual(self) -> "Lattice":
        return Lattice(self.poset.dual(), self.join_table, self.meet_table)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.poset == other.poset
            and self.meet_table == other.meet_table
            and self.join_table == other.join_table
        )

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        return f"Lattice(n={self.n})"

    # -- full axiom check ---------------------------------------------------

    def validate(self) -> None:
        """Check lattice axioms and order/table consistency; raise on failure."""
        n, meet, join = self.n, self.meet_table, self.join_table
        p = self.poset
        for a in range(n):
            if meet[a][a] != a or join[a][a] != a:
                raise LatticeError(f"idempotence fails at {a}")
            for b in range(n):
                if meet[a][b] != meet[b][a] or join[a][b] != join[b][a]:
                    raise LatticeError(f"commutativity fails at ({a}, {b})")
                if join[a][meet[a][b]] != a or meet[a][join[a][b]] != a:
                    raise LatticeError(f"absorption fails at ({a}, {b})")
                if p.leq(a, b) != (join[a][b] == b) or p.leq(a, b) != (meet[a][b] == a):
                    raise LatticeError(f"order/table mismatch at ({a}, {b})")
                j, m = join[a][b], meet[a][b]
                if not (p.leq(a, j) and p.leq(b, j) and p.leq(m, a) and p.leq(m, b)):
                    raise LatticeError(f"bound not a bound at ({a}, {b})")
                for c in range(n):
                    if p.leq(a, c) and p.leq(b, c) and not p.leq(j, c):
                        raise LatticeError(f"join({a},{b}) is not least")
                    if p.leq(c, a) and p.leq(c, b) and not p.leq(c, m):
                        raise LatticeError(f"meet({a},{b}) is not greatest")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if join[join[a][b]][c] != join[a][join[b][c]]:
                        raise LatticeError(f"join associativity fails at ({a},{b},{c})")
                    if meet[meet[a][b]][c] != meet[a][meet[b][c]]:
                        raise LatticeError(f"meet associativity fails at ({a},{b},{c})")


def _least_of_mask(p: Poset, mask: int) -> int:
    for c in bits(mask):
        if mask & ~p.up[c] == 0:
            return c
    return -1


def _greatest_of_mask(p: Poset, mask: int) -> int:
    for c in bits(mask):
        if mask & ~p.down[c] == 0:
            return c
    return -1


def lattice_from_poset(p: Poset) -> Lattice:
    """Compute all pairwise bounds; reject (with the offending pair) if
    some pair lacks a least upper or greatest lower bound."""
    n = p.n
    if n == 0:
        raise LatticeError("a lattice needs at least one element")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        meet[a][a] = join[a][a] = a
        for b in range(a):
            if p.leq(a, b):
                m, j = a, b
            elif p.leq(b, a):
                m, j = b, a
            else:
                j = _least_of_mask(p, p.up[a] & p.up[b])
                if j < 0:
                    raise LatticeError(f"elements {b}, {a} have no join", pair=(b, a))
                m = _greatest_of_mask(p, p.down[a] & p.down[b])
                if m < 0:
                    raise LatticeError(f"elements {b}, {a} have no meet", pair=(b, a))
            meet[a][b] = meet[b][a] = m
            join[a][b] = join[b][a] = j
    return Lattice(p, meet, join)


# -- irreducibles ------------------------------------------------------------


@dataclass(frozen=True)
class ElementReport:
    join_irreducibles: tuple[int, ...]
    meet_irreducibles: tuple[int, ...]
    atoms: tuple[int, ...]
    dual_atoms: tuple[int, ...]
    lower_cover_of_ji: dict
    upper_cover_of_mi: dict


def irreducibles(lat: Lattice) -> ElementReport:
    """Join/meet-irreducible elements with their unique neighbours."""
    p = lat.poset
    ji, mi = [], []
    lower, upper = {}, {}
    for x in range(lat.n):
        lows = p.lower_covers(x)
        ups = p.upper_covers(x)
        if len(lows) == 1:
            ji.append(x)
            lower[x] = lows[0]
        if len(ups) == 1:
            mi.append(x)
            upper[x] = ups[0]
    return ElementReport(
        join_irreducibles=tuple(ji),
        meet_irreducibles=tuple(mi),
        atoms=lat.atoms,
        dual_atoms=lat.dual_atoms,
        lower_cover_of_ji=lower,
        upper_cover_of_mi=upper,
    )


def j_below(lat: Lattice, a: int) -> tuple[int, ...]:
    """The join-irreducible elements below-or-equal ``a``."""
    return tuple(x for x in irreducibles(lat).join_irreducibles if lat.leq(x, a))


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    distributive: bool
    modular: bool
    upper_semimodular: bool
    lower_semimodular: bool
    join_semidistributive: bool
    meet_semidistributive: bool
    complemented: bool
    sectionally_complemented: bool
    relatively_complemented: bool
    atomistic: bool


def relative_complement(lat: Lattice, a: int, u: int, v: int) -> int | None:
    """The least-index c in [u, v] with a∧c = u and a∨c = v, or None."""
    for c in lat.interval(u, v):
        if lat.meet(a, c) == u and lat.join(a, c) == v:
            return c
    return None


def sectional_complement(lat: Lattice, a: int, b: int) -> int | None:
    return relative_complement(lat, a, lat.zero, b)


def is_sectionally_complemented(lat: Lattice) -> bool:
    for b in range(lat.n):
        for a in bits(lat.poset.down[b]):
            if sectional_complement(lat, a, b) is None:
                return False
    return True


def classify(lat: Lattice) -> ClassReport:
    """Decide the identity-based classes by direct evaluation.

    The forbidden-sublattice search is a separate, independent route
    (see :func:`find_forbidden_sublattice`); the two must agree.
    """
    n = lat.n
    meet = lat.meet_table
    join = lat.join_table
    p = lat.poset

    distributive = True
    modular = True
    sd_join = True
    sd_meet = True
    for x in range(n):
        mx, jx = meet[x], join[x]
        for y in range(n):
            for z in range(n):
                if mx[join[y][z]] != join[mx[y]][mx[z]]:
                    distributive = False
                if p.leq(x, z) and join[x][meet[y][z]] != meet[jx[y]][z]:
                    modular = False
                if jx[y] == jx[z] and jx[y] != jx[meet[y][z]]:
                    sd_join = False
                if mx[y] == mx[z] and mx[y] != mx[join[y][z]]:
                    sd_meet = False
        if not (distributive or modular or sd_join or sd_meet):
            break

    cov = lat.covers_set
    upper_sm = all(
        join[a][c] == join[b][c] or (join[a][c], join[b][c]) in cov
        for a, b in cov
        for c in range(n)
    )
    lower_sm = all(
        meet[a][c] == meet[b][c] or (meet[a][c], meet[b][c]) in cov
        for a, b in cov
        for c in range(n)
    )

    complemented = all(
        relative_complement(lat, a, lat.zero, lat.one) is not None for a in range(n)
    )
    sectionally = is_sectionally_complemented(lat)
    relatively = all(
        relative_complement(lat, a, u, v) is not None
        for u in range(n)
        for v in bits(p.up[u])
        for a in lat.interval(u, v)
    )
    atomistic = all(
        lat.join_all(a for a in lat.atoms if p.leq(a, x)) == x for x in range(n)
    )
    return ClassReport(
        distributive=distributive,
        modular=modular,
        upper_semimodular=upper_sm,
        lower_semimodular=lower_sm,
        join_semidistributive=sd_join,
        meet_semidistributive=sd_meet,
        complemented=complemented,
        sectionally_complemented=sectionally,
        relatively_complemented=relatively,
        atomistic=atomistic,
    )


def find_forbidden_sublattice(lat: Lattice, pattern: str):
    """Search for a pentagon ("n5") or diamond ("m3") sublattice.

    Returns the closed 5-element witness tuple, or None.  This is the
    independent cross-check for :func:`classify`: no pentagon iff
    modular, neither pattern iff distributive.
    """
    n = lat.n
    meet = lat.meet_table
    join = lat.join_table
    kind = pattern.lower()
    if kind in ("n5", "pentagon"):
        for a in range(n):
            for b in range(n):
                if a == b or not lat.lt(a, b):
                    continue
                for c in range(n):
                    if lat.poset.comparable(a, c) or lat.poset.comparable(b, c):
                        continue
                    if meet[a][c] == meet[b][c] and join[a][c] == join[b][c]:
                        return (meet[a][c], a, b, c, join[a][c])
        return None
    if kind in ("m3", "diamond"):
        for x in range(n):
            for y in range(x + 1, n):
                if lat.poset.comparable(x, y):
                    continue
                o, i = meet[x][y], join[x][y]
                for z in range(y + 1, n):
                    if lat.poset.comparable(x, z) or lat.poset.comparable(y, z):
                        continue
                    if (
                        meet[x][z] == o
                        and meet[y][z] == o
                        and join[x][z] == i
                        and join[y][z] == i
                    ):
                        return (o, x, y, z, i)
        return None
    raise LatticeError(f"unknown pattern {pattern!r}; use 'n5' or 'm3'")


# -- sublattices ---------------------------------------------------------------


def sublattice_closure(lat: Lattice, h: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset containing ``h`` closed under meet and join."""
    cur = set(h)
    if not cur:
        raise LatticeError("closure of an empty set")
    while True:
        new = set()
        members = sorted(cur)
        for i, a in enumerate(members):
            for b in members[i:]:
                m, j = lat.meet(a, b), lat.join(a, b)
                if m not in cur:
                    new.add(m)
                if j not in cur:
                    new.add(j)
        if not new:
            return tuple(members)
        cur |= new


def is_sublattice(lat: Lattice, elements: Sequence[int]) -> bool:
    ok, _ = _closure_defect(lat, elements)
    return ok


def _closure_defect(lat: Lattice, elements: Sequence[int]):
    members = set(elements)
    for a in elements:
        for b in elements:
            if lat.meet(a, b) not in members:
                return False, (a, b, "meet")
            if lat.join(a, b) not in members:
                return False, (a, b, "join")
    return True, None


def sublattice(lat: Lattice, elements: Sequence[int]) -> Lattice:
    """The sublattice on ``elements`` (must be closed), relabelled densely
    in ascending element order."""
    elements = tuple(sorted(set(elements)))
    ok, defect = _closure_defect(lat, elements)
    if not ok:
        a, b, op = defect
        raise LatticeError(f"not closed under {op} at ({a}, {b})", pair=(a, b))
    pos = {e: k for k, e in enumerate(elements)}
    meet = [[pos[lat.meet(a, b)] for b in elements] for a in elements]
    join = [[pos[lat.join(a, b)] for b in elements] for a in elements]
    return Lattice(lat.poset.restrict(elements), meet, join)


def interval_lattice(lat: Lattice, a: int, b: int) -> Lattice:
    """The interval [a, b] as a lattice (intervals are always closed)."""
    if not lat.leq(a, b):
        raise LatticeError(f"[{a}, {b}] is not an interval")
    return sublattice(lat, lat.interval(a, b))


# -- down-set duality -----------------------------------------------------------


@dataclass(frozen=True)
class DownSetIso:
    """An isomorphism from a distributive lattice onto the down-set
    lattice of its join-irreducible elements."""

    lattice: Lattice
    dn: Lattice
    j_elements: tuple[int, ...]
    to_dn: tuple[int, ...]
    masks: tuple[int, ...]

    def j_set(self, a: int) -> tuple[int, ...]:
        """The join-irreducibles below ``a`` (the image down-set)."""
        m = self.masks[self.to_dn[a]]
        return tuple(self.j_elements[k] for k in bits(m))


def birkhoff_iso(lat: Lattice) -> DownSetIso:
    """The map a ↦ {x join-irreducible : x ≤ a} onto the down-set lattice
    of the join-irreducible poset; rejects non-distributive input."""
    if not classify(lat).distributive:
        raise LatticeError("lattice is not distributive")
    js = irreducibles(lat).join_irreducibles
    jposet = lat.poset.restrict(js)
    dn, masks = down_set_lattice(jposet)
    index = {m: i for i, m in enumerate(masks)}
    to_dn = []
    for a in range(lat.n):
        m = 0
        for k, x in enumerate(js):
            if lat.leq(x, a):
                m |= 1 << k
        to_dn.append(index[m])
    if len(masks) != lat.n or len(set(to_dn)) != lat.n:
        raise LatticeError("down-set map is not bijective")
    for a in range(lat.n):
        for b in range(lat.n):
            if lat.leq(a, b) != dn.leq(to_dn[a], to_dn[b]):
                raise LatticeError("down-set map is not an order-isomorphism")
    return DownSetIso(lat, dn, js, tuple(to_dn), masks)


def bounded_hom_defect(d: Lattice, e: Lattice, phi: Sequence[int]):
    """None if phi: d -> e preserves meet, join and both bounds;
    otherwise a witness ('bounds' or (a, b, op))."""
    if phi[d.zero] != e.zero or phi[d.one] != e.one:
        return "bounds"
    for a in range(d.n):
        for b in range(d.n):
            if phi[d.meet(a, b)] != e.meet(phi[a], phi[b]):
                return (a, b, "meet")
            if phi[d.join(a, b)] != e.join(phi[a], phi[b]):
                return (a, b, "join")
    return None


def j_transform(d: Lattice, e: Lattice, phi: Sequence[int]) -> dict:
    """For a bounded homomorphism phi: d -> e (both distributive), the
    isotone map sending each join-irreducible x of e to the least
    element of d whose image is above x."""
    defect = bounded_hom_defect(d, e, phi)
    if defect is not None:
        raise LatticeError(f"not a bounded homomorphism: {defect}")
    out = {}
    for x in irreducibles(e).join_irreducibles:
        out[x] = d.meet_all(a for a in range(d.n) if e.leq(x, phi[a]))
    return out


def dn_transform(d: Lattice, e: Lattice, psi: dict) -> tuple[int, ...]:
    """Inverse construction: from an isotone map psi on e's
    join-irreducibles into d, the bounded homomorphism d -> e given by
    a ↦ join of {x : psi(x) ≤ a}."""
    out = []
    for a in range(d.n):
        out.append(e.join_all(x for x, target in psi.items() if d.leq(target, a)))
    return tuple(out)


# -- exhaustive enumeration ------------------------------------------------------


def _valid_extensions(s: Poset):
    """Down-set masks over which a new maximal element keeps all pairwise
    meets defined: nonempty, and every ↓x meets the set in a unique
    maximal element."""
    for d in down_set_masks(s):
        if d == 0:
            continue
        ok = True
        for x in range(s.n):
            inter = d & s.down[x]
            if inter == 0:
                ok = False
                break
            top = -1
            for c in bits(inter):
                if inter & ~s.down[c] == 0:
                    top = c
                    break
            if top < 0:
                ok = False
                break
        if ok:
            yield d


def enumerate_lattices(n: int) -> list[Lattice]:
    """All lattices on ``n`` elements, one per isomorphism class.

    A lattice minus its top is a meet-semilattice and every finite
    meet-semilattice plus a new top is a lattice, so grow
    meet-semilattices one maximal element at a time and cap each with a
    top.  Counts for n=1..8: 1, 1, 1, 2, 5, 15, 53, 222.
    """
    if not 1 <= n <= 8:
        raise LatticeError("enumeration is supported for 1..8 elements")
    if n == 1:
        return [lattice_from_poset(Poset((1,)))]
    semis = [Poset((1,))]
    for k in range(2, n):
        grown: dict = {}
        for s in semis:
            for d in _valid_extensions(s):
                q = Poset(s.down + (d | (1 << (k - 1)),))
                grown.setdefault(q.canonical_key, q)
        semis = [grown[key] for key in sorted(grown)]
    out = []
    for s in semis:
        full = (1 << (s.n + 1)) - 1
        lat = lattice_from_poset(Poset(s.down + (full,)))
        out.append(lat)
    level_key = {}
    for lat in out:
        counts: dict[int, int] = {}
        for h in lat.poset.heights:
            counts[h] = counts.get(h, 0) + 1
        level_key[id(lat)] = (
            tuple(counts.get(h, 0) for h in range(max(counts) + 1)),
            lat.poset.canonical_key,
        )
    out.sort(key=lambda lat: level_key[id(lat)])
    return out
