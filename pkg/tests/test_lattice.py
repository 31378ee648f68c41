"""Lattice layer: tables, classification, sublattices, enumeration."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conlat.catalog import boolean, chain, grid, partition_lattice, stock, stock_names
from conlat.lattice import (
    LatticeError,
    birkhoff_iso,
    bounded_hom_defect,
    classify,
    dn_transform,
    enumerate_lattices,
    find_forbidden_sublattice,
    interval_lattice,
    irreducibles,
    is_sublattice,
    j_transform,
    lattice_from_poset,
    relative_complement,
    sublattice,
    sublattice_closure,
)
from conlat.order import (
    Poset,
    all_posets,
    are_isomorphic,
    down_set_lattice,
    poset_from_covers,
)
from util import brute_bounded_pairs, product_poset


@st.composite
def small_posets(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    down = [1 << i for i in range(n)]
    for j in range(1, n):
        for i in range(j):
            if draw(st.booleans()):
                down[j] |= down[i]
    return Poset(tuple(down))


class TestFromPoset:
    def test_square(self):
        lat = lattice_from_poset(poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)]))
        assert lat.meet(1, 2) == 0
        assert lat.join(1, 2) == 3
        lat.validate()

    def test_antichain_rejected(self):
        with pytest.raises(LatticeError) as exc:
            lattice_from_poset(Poset((1, 2)))
        assert exc.value.pair == (0, 1)

    def test_vee_rejected(self):
        with pytest.raises(LatticeError) as exc:
            lattice_from_poset(poset_from_covers(3, [(0, 1), (0, 2)]))
        assert exc.value.pair == (1, 2)

    def test_all_posets_agree_with_pair_bounds(self):
        for p in all_posets(5):
            try:
                lat = lattice_from_poset(p)
            except LatticeError:
                assert not brute_bounded_pairs(p)
            else:
                assert brute_bounded_pairs(p)
                lat.validate()

    def test_stock_files_are_valid(self):
        sizes = {"b2": 4, "b3": 8, "c5": 5, "grid33": 9, "m3": 5,
                 "n5": 5, "n55": 7, "n6": 6, "s7": 7, "s8": 8}
        for name in stock_names():
            lat = stock(name)
            lat.validate()
            assert lat.n == sizes[name]


class TestIrreducibles:
    def test_boolean_cube(self):
        rep = irreducibles(boolean(3))
        assert rep.join_irreducibles == (1, 2, 4)
        assert rep.meet_irreducibles == (3, 5, 6)
        assert rep.atoms == (1, 2, 4)
        assert rep.dual_atoms == (3, 5, 6)
        assert all(rep.lower_cover_of_ji[x] == 0 for x in (1, 2, 4))

    def test_chain(self):
        rep = irreducibles(chain(5))
        assert rep.join_irreducibles == (1, 2, 3, 4)
        assert rep.meet_irreducibles == (0, 1, 2, 3)
        assert rep.lower_cover_of_ji == {1: 0, 2: 1, 3: 2, 4: 3}
        assert rep.upper_cover_of_mi == {0: 1, 1: 2, 2: 3, 3: 4}

    def test_pentagon(self):
        rep = irreducibles(stock("n5"))
        assert rep.join_irreducibles == (1, 2, 3)
        assert rep.meet_irreducibles == (1, 2, 3)
        assert rep.lower_cover_of_ji == {1: 0, 2: 1, 3: 0}
        assert rep.atoms == (1, 3)
        assert rep.dual_atoms == (2, 3)

    def test_diamond(self):
        rep = irreducibles(stock("m3"))
        assert rep.join_irreducibles == (1, 2, 3)
        assert rep.meet_irreducibles == (1, 2, 3)


class TestClassify:
    def test_diamond(self):
        rep = classify(stock("m3"))
        assert rep.modular and not rep.distributive
        assert rep.complemented and rep.atomistic
        assert rep.relatively_complemented
        assert not rep.join_semidistributive
        assert not rep.meet_semidistributive

    def test_pentagon(self):
        rep = classify(stock("n5"))
        assert not rep.modular
        assert not rep.upper_semimodular
        assert rep.join_semidistributive and rep.meet_semidistributive
        assert rep.complemented and not rep.sectionally_complemented

    def test_fork_with_eye(self):
        rep = classify(stock("s8"))
        assert rep.upper_semimodular
        assert not rep.lower_semimodular
        assert not rep.modular

    def test_hexagon(self):
        rep = classify(stock("n6"))
        assert rep.sectionally_complemented
        assert not rep.relatively_complemented
        assert not rep.upper_semimodular

    def test_chain_and_cube(self):
        assert classify(chain(4)).distributive
        assert not classify(chain(4)).complemented
        cube = classify(boolean(3))
        assert cube.distributive and cube.relatively_complemented
        assert cube.atomistic

    def test_partition_lattices(self):
        three = partition_lattice(3)
        assert three.n == 5
        assert are_isomorphic(three.poset, stock("m3").poset)
        assert classify(three).modular
        four = partition_lattice(4)
        assert four.n == 15
        rep = classify(four)
        assert rep.upper_semimodular
        assert not rep.modular

    def test_complement_witness_least_index(self):
        assert relative_complement(stock("m3"), 1, 0, 4) == 2

    def test_distributive_iff_single_inequality(self):
        for lat in enumerate_lattices(6):
            holds = all(
                lat.leq(
                    lat.meet(x, lat.join(y, z)),
                    lat.join(lat.meet(x, y), lat.meet(x, z)),
                )
                for x in range(lat.n)
                for y in range(lat.n)
                for z in range(lat.n)
            )
            assert holds == classify(lat).distributive


class TestForbidden:
    def test_pentagon_finds_itself(self):
        assert find_forbidden_sublattice(stock("n5"), "n5") == (0, 1, 2, 3, 4)
        assert find_forbidden_sublattice(stock("n5"), "m3") is None

    def test_diamond_finds_itself(self):
        assert find_forbidden_sublattice(stock("m3"), "m3") == (0, 1, 2, 3, 4)
        assert find_forbidden_sublattice(stock("m3"), "n5") is None

    def test_cube_has_neither(self):
        assert find_forbidden_sublattice(boolean(3), "n5") is None
        assert find_forbidden_sublattice(boolean(3), "m3") is None

    def test_product_with_pentagon(self):
        lat = lattice_from_poset(
            product_poset(chain(2).poset, stock("n5").poset)
        )
        w = find_forbidden_sublattice(lat, "n5")
        assert w is not None
        o, a, b, c, i = w
        assert lat.lt(a, b)
        assert lat.meet(a, c) == o and lat.meet(b, c) == o
        assert lat.join(a, c) == i and lat.join(b, c) == i
        assert is_sublattice(lat, w)

    def test_agrees_with_identity_classification(self):
        for n in range(1, 8):
            for lat in enumerate_lattices(n):
                rep = classify(lat)
                pent = find_forbidden_sublattice(lat, "n5")
                diam = find_forbidden_sublattice(lat, "m3")
                assert rep.modular == (pent is None)
                assert rep.distributive == (pent is None and diam is None)


class TestSublattices:
    def test_bounds_are_closed(self):
        lat = stock("s7")
        assert sublattice_closure(lat, [lat.zero, lat.one]) == (0, 6)

    def test_pentagon_long_side(self):
        assert sublattice_closure(stock("n5"), [1, 3]) == (0, 1, 3, 4)

    def test_atoms_generate_cube(self):
        assert len(sublattice_closure(boolean(3), [1, 2, 4])) == 8

    def test_three_generators_bound(self):
        # Down-sets under reverse inclusion of the 8 subsets of a
        # 3-element set; the three coordinate up-sets generate the free
        # bounded-inequality case: exactly 18 elements, missing only the
        # global bounds.
        covers = [
            (s, s ^ (1 << i))
            for s in range(8)
            for i in range(3)
            if (s >> i) & 1
        ]
        p = poset_from_covers(8, covers)
        lat, masks = down_set_lattice(p)
        gens = []
        for i in range(3):
            g = sum(1 << s for s in range(8) if (s >> i) & 1)
            gens.append(masks.index(g))
        closed = sublattice_closure(lat, gens)
        assert len(closed) == 18
        assert masks.index(0) not in closed
        assert masks.index(255) not in closed
        for h in itertools.combinations(range(lat.n), 3):
            assert len(sublattice_closure(lat, h)) <= 18

    def test_extracted_sublattice(self):
        lat = stock("n5")
        sub = sublattice(lat, (0, 1, 2, 4))
        sub.validate()
        assert sub.n == 4
        assert classify(sub).distributive

    def test_interval(self):
        sub = interval_lattice(stock("n5"), 1, 4)
        assert sub.n == 3
        assert classify(sub).distributive


class TestBirkhoff:
    def test_cube(self):
        iso = birkhoff_iso(boolean(3))
        assert iso.dn.n == 8
        assert iso.j_elements == (1, 2, 4)
        assert set(iso.j_set(7)) == {1, 2, 4}
        assert iso.j_set(0) == ()

    def test_chain(self):
        iso = birkhoff_iso(chain(4))
        assert iso.dn.n == 4
        assert are_isomorphic(iso.dn.poset, chain(4).poset)

    def test_rejects_pentagon(self):
        with pytest.raises(LatticeError):
            birkhoff_iso(stock("n5"))

    def test_round_trip_for_all_small_distributive(self):
        for n in range(1, 8):
            for lat in enumerate_lattices(n):
                if not classify(lat).distributive:
                    continue
                iso = birkhoff_iso(lat)
                assert are_isomorphic(lat.poset, iso.dn.poset)

    @settings(deadline=None, max_examples=40)
    @given(small_posets())
    def test_down_sets_recover_poset(self, p):
        lat, _ = down_set_lattice(p)
        iso = birkhoff_iso(lat)
        jposet = lat.poset.restrict(iso.j_elements)
        assert are_isomorphic(jposet, p)


class TestTransforms:
    def test_identity_two_chain(self):
        two = chain(2)
        psi = j_transform(two, two, (0, 1))
        assert psi == {1: 1}
        assert dn_transform(two, two, psi) == (0, 1)

    def test_all_square_to_chain_maps(self):
        b2, c3 = boolean(2), chain(3)
        homs = [
            phi
            for phi in itertools.product(range(3), repeat=4)
            if bounded_hom_defect(b2, c3, phi) is None
        ]
        assert len(homs) == 2
        for phi in homs:
            assert dn_transform(b2, c3, j_transform(b2, c3, phi)) == phi

    def test_coordinate_collapse(self):
        b3, b2 = boolean(3), boolean(2)
        phi = tuple(s & 3 for s in range(8))
        assert bounded_hom_defect(b3, b2, phi) is None
        psi = j_transform(b3, b2, phi)
        assert psi == {1: 1, 2: 2}
        assert dn_transform(b3, b2, psi) == phi
        # phi is not one-to-one, so psi misses a join-irreducible.
        assert set(psi.values()) != set(irreducibles(b3).join_irreducibles)


class TestEnumerate:
    def test_counts(self):
        assert [len(enumerate_lattices(n)) for n in range(1, 8)] == [
            1, 1, 1, 2, 5, 15, 53,
        ]

    def test_count_eight(self):
        assert len(enumerate_lattices(8)) == 222

    def test_pairwise_distinct_and_valid(self):
        for n in (5, 6):
            lats = enumerate_lattices(n)
            keys = {lat.poset.canonical_key for lat in lats}
            assert len(keys) == len(lats)
            for lat in lats:
                lat.validate()

    def test_matches_poset_filter_at_five(self):
        lats = []
        for p in all_posets(5):
            try:
                lats.append(lattice_from_poset(p))
            except LatticeError:
                continue
        keys = {lat.poset.canonical_key for lat in lats}
        expected = {lat.poset.canonical_key for lat in enumerate_lattices(5)}
        assert keys == expected

    def test_deterministic(self):
        a = [lat.poset.canonical_key for lat in enumerate_lattices(6)]
        b = [lat.poset.canonical_key for lat in enumerate_lattices(6)]
        assert a == b


class TestDual:
    def test_pentagon_self_dual(self):
        lat = stock("n5")
        assert are_isomorphic(lat.poset, lat.dual().poset)

    def test_fork_swaps_irreducibles(self):
        lat = stock("s7")
        rep = irreducibles(lat)
        drep = irreducibles(lat.dual())
        assert len(rep.join_irreducibles) == 4
        assert len(rep.meet_irreducibles) == 3
        assert len(drep.join_irreducibles) == 3
        assert len(drep.meet_irreducibles) == 4

    def test_dual_tables(self):
        lat = stock("n6")
        d = lat.dual()
        for a in range(lat.n):
            for b in range(lat.n):
                assert d.meet(a, b) == lat.join(a, b)
                assert d.join(a, b) == lat.meet(a, b)
