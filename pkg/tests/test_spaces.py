import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wallman import GroundSpace, LatticeElement, element_from_bitstrings, format_value, parse_value
from wallman.errors import InputError


def simulate_membership(elem: LatticeElement, upto: int) -> list[bool]:
    return [elem.contains_point(t) for t in range(upto)]


class TestFiniteElements:
    def test_membership_and_algebra_match_sets(self):
        rng = random.Random(0)
        space = GroundSpace.finite(10)
        for _ in range(200):
            a_pts = {t for t in range(10) if rng.random() < 0.5}
            b_pts = {t for t in range(10) if rng.random() < 0.5}
            a = space.from_points(a_pts)
            b = space.from_points(b_pts)
            assert {t for t in range(10) if a.contains_point(t)} == a_pts
            assert {t for t in range(10) if a.intersect(b).contains_point(t)} == a_pts & b_pts
            assert {t for t in range(10) if a.union(b).contains_point(t)} == a_pts | b_pts
            assert {t for t in range(10) if a.complement().contains_point(t)} == set(range(10)) - a_pts
            assert a.is_subset(b) == (a_pts <= b_pts)
            assert a.is_empty() == (not a_pts)

    def test_size_cap(self):
        with pytest.raises(InputError):
            GroundSpace.finite(65)
        with pytest.raises(InputError):
            GroundSpace.finite(0)

    def test_point_count_and_min(self):
        space = GroundSpace.finite(6)
        e = space.from_points([2, 4, 5])
        assert e.point_count() == 3
        assert e.min_point() == 2
        assert e.eventual_min_point() == 2


class TestNatElements:
    def test_membership_semantics(self):
        space = GroundSpace.nat(period=3, prefix=2)
        # prefix covers t=0,1; beyond that residues of (t-2) mod 3
        e = space.element(0b01, 0b101)  # t=0, plus residues {0, 2}
        expected = {0}
        for t in range(2, 30):
            if (t - 2) % 3 in (0, 2):
                expected.add(t)
        assert {t for t in range(30) if e.contains_point(t)} == expected
        assert e.is_infinite()
        assert e.point_count() is None
        assert e.eventual_min_point() == 2

    def test_algebra_matches_simulation(self):
        rng = random.Random(1)
        space = GroundSpace.nat(period=4, prefix=3)
        horizon = 3 + 4 * 3
        for _ in range(200):
            a = space.element(rng.getrandbits(3), rng.getrandbits(4))
            b = space.element(rng.getrandbits(3), rng.getrandbits(4))
            sa = simulate_membership(a, horizon)
            sb = simulate_membership(b, horizon)
            assert simulate_membership(a.intersect(b), horizon) == [x and y for x, y in zip(sa, sb)]
            assert simulate_membership(a.union(b), horizon) == [x or y for x, y in zip(sa, sb)]
            assert simulate_membership(a.complement(), horizon) == [not x for x in sa]


class TestCanonicalForm:
    def test_reduction_minimizes_period_and_prefix(self):
        # the even numbers written in a redundant frame reduce to period 2
        wide = GroundSpace.nat(period=4, prefix=2)
        evens_wide = wide.element(0b01, 0b0101)
        tight = GroundSpace.nat(period=2, prefix=0)
        evens_tight = tight.element(0, 0b01)
        assert evens_wide.canonical() == evens_tight.canonical()
        assert evens_wide.same_subset(evens_tight)

    def test_canonical_idempotent(self):
        rng = random.Random(2)
        space = GroundSpace.nat(period=6, prefix=4)
        for _ in range(300):
            e = space.element(rng.getrandbits(4), rng.getrandbits(6))
            c = e.canonical()
            # re-embed the canonical form and canonicalize again
            if c.period:
                re_space = GroundSpace.nat(period=c.period, prefix=c.prefix_length)
                re_elem = re_space.element(c.prefix_mask, c.periodic_mask)
                assert re_elem.canonical() == c

    @settings(max_examples=150, deadline=None)
    @given(prefix=st.integers(0, 15), periodic=st.integers(0, 63))
    def test_canonical_preserves_membership(self, prefix, periodic):
        space = GroundSpace.nat(period=6, prefix=4)
        e = space.element(prefix, periodic)
        c = e.canonical()
        period = max(c.period, 1)
        for t in range(40):
            if t < c.prefix_length:
                expect = bool((c.prefix_mask >> t) & 1)
            else:
                expect = bool((c.periodic_mask >> ((t - c.prefix_length) % period)) & 1)
            assert e.contains_point(t) == expect

    def test_distinct_subsets_have_distinct_canonicals(self):
        space = GroundSpace.nat(period=4, prefix=2)
        seen = {}
        for prefix in range(4):
            for periodic in range(16):
                e = space.element(prefix, periodic)
                key = tuple(simulate_membership(e, 2 + 4 * 2))
                c = e.canonical()
                if key in seen:
                    assert seen[key] == c
                else:
                    assert c not in seen.values()
                    seen[key] = c


class TestBitstrings:
    def test_round_trip(self):
        space = GroundSpace.nat(period=2, prefix=3)
        e = space.element(0b101, 0b10)
        desc = e.bitstrings()
        assert desc == {"prefix": "101", "periodic": "01"}
        assert element_from_bitstrings(space, desc) == e

    def test_finite_padding(self):
        space = GroundSpace.finite(5)
        e = element_from_bitstrings(space, {"prefix": "101"})
        assert {t for t in range(5) if e.contains_point(t)} == {0, 2}

    def test_nat_requires_exact_lengths(self):
        space = GroundSpace.nat(period=2, prefix=2)
        with pytest.raises(InputError):
            element_from_bitstrings(space, {"prefix": "1", "periodic": "01"})
        with pytest.raises(InputError):
            element_from_bitstrings(space, {"prefix": "10", "periodic": "0"})

    def test_bad_characters(self):
        space = GroundSpace.finite(3)
        with pytest.raises(InputError):
            element_from_bitstrings(space, {"prefix": "1x0"})


class TestValues:
    def test_parse_and_format(self):
        assert parse_value("3/4") == Fraction(3, 4)
        assert parse_value("0.25") == Fraction(1, 4)
        assert parse_value(7) == Fraction(7)
        assert format_value(Fraction(3, 4)) == "3/4"
        assert format_value(Fraction(8, 4)) == "2"
        with pytest.raises(InputError):
            parse_value("abc")
        with pytest.raises(InputError):
            parse_value(True)
