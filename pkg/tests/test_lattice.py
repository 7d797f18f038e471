import random

import pytest

from wallman import (
    GroundSpace,
    SeparationFailure,
    SeparationWitness,
    atoms,
    generate_lattice,
    lattice_from_description,
    separation_check,
)
from wallman.errors import GeneratorNotInSpace, LatticeTooLarge, NotDisjoint

from oracles import atoms_oracle, closure_oracle


def as_frozensets(lattice, upto=None):
    n = upto or lattice.space.size
    return {frozenset(t for t in range(n) if e.contains_point(t)) for e in lattice.elements}


def evens_odds_lattice():
    space = GroundSpace.nat(period=2, prefix=0)
    evens = space.from_residues([0])
    odds = space.from_residues([1])
    return generate_lattice(space, [evens, odds]), evens, odds


class TestGeneration:
    def test_empty_generation(self):
        space = GroundSpace.finite(4)
        lat = generate_lattice(space, [])
        assert len(lat) == 2
        assert as_frozensets(lat) == {frozenset(), frozenset(range(4))}

    def test_two_disjoint_complementary_generators(self):
        space = GroundSpace.finite(4)
        lat = generate_lattice(space, [space.from_points([0, 1]), space.from_points([2, 3])])
        assert len(lat) == 4
        assert as_frozensets(lat) == {
            frozenset(),
            frozenset({0, 1}),
            frozenset({2, 3}),
            frozenset(range(4)),
        }

    def test_evens_odds(self):
        lat, evens, odds = evens_odds_lattice()
        assert len(lat) == 4
        assert evens in lat and odds in lat

    def test_matches_bruteforce_closure(self):
        rng = random.Random(3)
        for _ in range(60):
            n = rng.randint(2, 6)
            space = GroundSpace.finite(n)
            gens = []
            for _ in range(rng.randint(1, 4)):
                gens.append({t for t in range(n) if rng.random() < 0.5})
            lat = generate_lattice(space, [space.from_points(g) for g in gens])
            expected = closure_oracle(frozenset(range(n)), gens)
            assert as_frozensets(lat) == expected

    def test_closure_is_closed(self):
        rng = random.Random(4)
        for _ in range(20):
            space = GroundSpace.nat(period=3, prefix=2)
            gens = [
                space.element(rng.getrandbits(2), rng.getrandbits(3))
                for _ in range(3)
            ]
            lat = generate_lattice(space, gens)
            for a in lat.elements:
                for b in lat.elements:
                    assert a.intersect(b) in lat
                    assert a.union(b) in lat

    def test_deterministic_order(self):
        space = GroundSpace.finite(5)
        gens = [space.from_points([1, 3]), space.from_points([0, 3, 4])]
        lat1 = generate_lattice(space, gens)
        lat2 = generate_lattice(space, list(reversed(gens)))
        assert [e.sort_key() for e in lat1.elements] == sorted(
            e.sort_key() for e in lat1.elements
        )
        assert as_frozensets(lat1) == as_frozensets(lat2)

    def test_generator_not_in_space(self):
        space = GroundSpace.finite(4)
        other = GroundSpace.finite(5)
        with pytest.raises(GeneratorNotInSpace):
            generate_lattice(space, [other.from_points([0])])

    def test_too_many_generators(self):
        space = GroundSpace.finite(4)
        gens = [space.from_points([0])] * 17
        with pytest.raises(GeneratorNotInSpace):
            generate_lattice(space, gens)

    def test_cap(self):
        space = GroundSpace.finite(8)
        gens = [space.from_points([t]) for t in range(8)]
        with pytest.raises(LatticeTooLarge):
            generate_lattice(space, gens, cap=100)

    def test_from_description(self):
        lat = lattice_from_description(
            {
                "space": {"kind": "finite", "size": 3},
                "generators": [{"prefix": "110"}],
            }
        )
        assert len(lat) == 3  # empty, {0,1}, full


class TestAtoms:
    def test_trivial_lattice(self):
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [])
        assert atoms(lat) == [space.full()]

    def test_powerset_atoms_are_singletons(self):
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [space.from_points([t]) for t in range(3)])
        assert len(lat) == 8
        got = atoms(lat)
        assert [a.point_count() for a in got] == [1, 1, 1]

    def test_evens_odds_atoms(self):
        lat, evens, odds = evens_odds_lattice()
        assert set(a.sort_key() for a in atoms(lat)) == {evens.sort_key(), odds.sort_key()}

    def test_matches_oracle(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(2, 6)
            space = GroundSpace.finite(n)
            gens = [
                {t for t in range(n) if rng.random() < 0.5}
                for _ in range(rng.randint(1, 4))
            ]
            lat = generate_lattice(space, [space.from_points(g) for g in gens])
            got = {
                frozenset(t for t in range(n) if a.contains_point(t))
                for a in atoms(lat)
            }
            assert got == atoms_oracle(as_frozensets(lat))

    def test_atoms_pairwise_disjoint_and_cover_elements(self):
        rng = random.Random(6)
        for _ in range(20):
            space = GroundSpace.nat(period=4, prefix=2)
            gens = [
                space.element(rng.getrandbits(2), rng.getrandbits(4))
                for _ in range(3)
            ]
            lat = generate_lattice(space, gens)
            ats = atoms(lat)
            for i in range(len(ats)):
                for j in range(i + 1, len(ats)):
                    assert ats[i].intersect(ats[j]).is_empty()
                    assert not ats[i].is_subset(ats[j])
            for e in lat.elements:
                if not e.is_empty():
                    assert any(a.is_subset(e) for a in ats)


class TestSeparation:
    def test_discrete_default(self):
        space = GroundSpace.finite(2)
        lat = generate_lattice(space, [space.from_points([0]), space.from_points([1])])
        w = separation_check(lat, space.from_points([0]), space.from_points([1]))
        assert isinstance(w, SeparationWitness)
        assert w.left == space.from_points([0])
        assert w.right == space.from_points([1])

    def test_explicit_opens(self):
        lat, evens, odds = evens_odds_lattice()
        w = separation_check(lat, evens, odds, list(lat.elements))
        assert isinstance(w, SeparationWitness)
        assert w.left.intersect(w.right).is_empty()
        assert evens.is_subset(w.left) and odds.is_subset(w.right)

    def test_empty_separates_from_anything(self):
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [])
        w = separation_check(lat, space.empty(), space.full(), list(lat.elements))
        assert isinstance(w, SeparationWitness)

    def test_not_disjoint(self):
        space = GroundSpace.finite(3)
        lat = generate_lattice(space, [])
        with pytest.raises(NotDisjoint):
            separation_check(lat, space.from_points([0, 1]), space.from_points([1, 2]))

    def test_failure_lists_overlaps(self):
        space = GroundSpace.finite(2)
        lat = generate_lattice(space, [])
        a, b = space.from_points([0]), space.from_points([1])
        res = separation_check(lat, a, b, [space.full()])
        assert isinstance(res, SeparationFailure)
        assert res.left_candidates == 1 and res.right_candidates == 1
        assert len(res.blocking_overlaps) == 1
