import random

import pytest

from wallman import (
    FilterBase,
    GroundSpace,
    atoms,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    generate_lattice,
    principal_ultrafilter,
    verify_omega_axioms,
)
from wallman.errors import EmptyIntersection, NotMaximal
from wallman.selftest import powerset_lattice, random_lattice

from oracles import ultrafilters_oracle


def element_as_frozenset(e, n):
    return frozenset(t for t in range(n) if e.contains_point(t))


def evens_odds_lattice():
    space = GroundSpace.nat(period=2, prefix=0)
    return generate_lattice(space, [space.from_residues([0]), space.from_residues([1])])


class TestPrincipal:
    def test_powerset_trace(self):
        lat = powerset_lattice(3)
        uf = principal_ultrafilter(lat, 1)
        members = [lat.elements[i] for i in uf.members]
        assert all(e.contains_point(1) for e in members)
        assert len(members) == 4  # the four subsets of {0,1,2} containing 1
        assert uf.core.point_count() == 1
        assert uf.is_principal and uf.witness_point == 1

    def test_coarse_nat_trace(self):
        lat = evens_odds_lattice()
        uf = principal_ultrafilter(lat, 4)
        member_sets = {lat.elements[i].sort_key() for i in uf.members}
        evens = lat.space.from_residues([0])
        assert member_sets == {evens.sort_key(), lat.space.full().sort_key()}
        assert uf.core == evens

    def test_indiscrete_lattice(self):
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [])
        uf = principal_ultrafilter(lat, 2)
        assert [lat.elements[i] for i in uf.members] == [space.full()]
        assert uf.core == space.full()

    def test_non_maximal_trace_refines(self):
        # smallest element containing 1 is {0,1}, which is not an atom
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [space.from_points([0]), space.from_points([0, 1])])
        uf = principal_ultrafilter(lat, 1)
        assert uf.core == space.from_points([0])
        with pytest.raises(NotMaximal):
            principal_ultrafilter(lat, 1, strict=True)


class TestEnumeration:
    def test_powerset_counts(self):
        for n in (2, 3, 4):
            lat = powerset_lattice(n)
            ufs = enumerate_ultrafilters(lat)
            assert len(ufs) == n
            assert all(u.is_principal for u in ufs)
            assert sorted(u.witness_point for u in ufs) == list(range(n))

    def test_evens_odds_two_ultrafilters(self):
        lat = evens_odds_lattice()
        ufs = enumerate_ultrafilters(lat)
        assert len(ufs) == 2
        cores = [u.core for u in ufs]
        assert cores[0].contains_point(0) and cores[1].contains_point(1)

    def test_indiscrete_single(self):
        space = GroundSpace.finite(4)
        lat = generate_lattice(space, [])
        assert len(enumerate_ultrafilters(lat)) == 1

    def test_count_equals_atoms(self):
        rng = random.Random(7)
        for _ in range(30):
            lat = random_lattice(rng)
            assert len(enumerate_ultrafilters(lat)) == len(atoms(lat))

    def test_matches_literal_definition(self):
        # compare the enumerated member families against the exhaustive
        # oracle that applies the two axioms verbatim
        rng = random.Random(8)
        for _ in range(15):
            n = rng.randint(2, 4)
            space = GroundSpace.finite(n)
            gens = [
                space.from_points({t for t in range(n) if rng.random() < 0.5})
                for _ in range(2)
            ]
            lat = generate_lattice(space, gens)
            if len(lat) > 12:
                continue
            got = set()
            for uf in enumerate_ultrafilters(lat):
                got.add(
                    frozenset(
                        element_as_frozenset(lat.elements[i], n) for i in uf.members
                    )
                )
            expected = ultrafilters_oracle(
                {element_as_frozenset(e, n) for e in lat.elements}
            )
            # the oracle keeps the empty-set-free families; drop any family
            # whose intersection is empty (none should exist)
            assert got == expected


class TestExtension:
    def test_tie_break_to_canonically_smallest_atom(self):
        lat = powerset_lattice(2)
        base = FilterBase(lat, (lat.index_of(lat.space.full()),))
        uf = extend_to_ultrafilter(base)
        assert uf.core == lat.space.from_points([0])

    def test_already_atomic(self):
        lat = evens_odds_lattice()
        evens = lat.space.from_residues([0])
        base = FilterBase(lat, (lat.index_of(evens),))
        assert extend_to_ultrafilter(base).core == evens

    def test_empty_intersection(self):
        lat = evens_odds_lattice()
        evens = lat.space.from_residues([0])
        odds = lat.space.from_residues([1])
        base = FilterBase(lat, (lat.index_of(evens), lat.index_of(odds)))
        with pytest.raises(EmptyIntersection):
            extend_to_ultrafilter(base)

    def test_idempotent_on_ultrafilters(self):
        rng = random.Random(9)
        for _ in range(20):
            lat = random_lattice(rng)
            for uf in enumerate_ultrafilters(lat):
                again = extend_to_ultrafilter(FilterBase(lat, uf.members))
                assert again.core == uf.core
                assert again.members == uf.members


class TestOmegaAxioms:
    def test_trace_is_ultrafilter_on_powerset(self):
        lat = powerset_lattice(3)
        members = [i for i, e in enumerate(lat.elements) if e.contains_point(0)]
        rep = verify_omega_axioms(lat, members)
        assert rep.omega1 and rep.omega2

    def test_disjoint_pair_fails_omega1(self):
        lat = evens_odds_lattice()
        evens = lat.index_of(lat.space.from_residues([0]))
        odds = lat.index_of(lat.space.from_residues([1]))
        rep = verify_omega_axioms(lat, [evens, odds])
        assert not rep.omega1
        assert set(rep.omega1_witness) == {evens, odds}
        assert rep.omega2 is None

    def test_non_maximal_reports_addable(self):
        lat = evens_odds_lattice()
        full = lat.index_of(lat.space.full())
        rep = verify_omega_axioms(lat, [full])
        assert rep.omega1
        assert rep.omega2 is False
        addable = lat.elements[rep.omega2_witness]
        assert not addable.is_empty()

    def test_every_enumerated_ultrafilter_passes(self):
        rng = random.Random(10)
        for _ in range(20):
            lat = random_lattice(rng)
            for uf in enumerate_ultrafilters(lat):
                assert verify_omega_axioms(lat, uf.members).is_ultrafilter
