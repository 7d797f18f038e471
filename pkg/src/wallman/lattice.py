"""Finitely generated set lattices closed under finite meets and joins.

The lattice is the computational stand-in for the zero-set family of a
discrete space: any representable subset qualifies, so the structure is
carried entirely by the choice of generators.  Elements are kept in a
deterministic canonical order (ascending frame-mask key) so every derived
object — atoms, ultrafilters, reports — is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GeneratorNotInSpace, LatticeTooLarge, NotDisjoint
from .spaces import GroundSpace, LatticeElement, element_from_bitstrings

MAX_GENERATORS = 16
DEFAULT_ELEMENT_CAP = 4096


@dataclass(frozen=True)
class ZeroSetLattice:
    """A finite family of sets containing the empty set and the full space,
    closed under pairwise intersection and union."""

    space: GroundSpace
    elements: tuple[LatticeElement, ...]
    generators: tuple[LatticeElement, ...]

    def index_of(self, elem: LatticeElement) -> int:
        key = (elem.prefix_mask, elem.periodic_mask)
        idx = self._index().get(key)
        if idx is None:
            raise KeyError(f"{elem!r} is not a lattice element")
        return idx

    def __contains__(self, elem: LatticeElement) -> bool:
        return (elem.prefix_mask, elem.periodic_mask) in self._index()

    def _index(self) -> dict:
        cached = getattr(self, "_idx_cache", None)
        if cached is None:
            cached = {
                (e.prefix_mask, e.periodic_mask): i for i, e in enumerate(self.elements)
            }
            object.__setattr__(self, "_idx_cache", cached)
        return cached

    def __len__(self) -> int:
        return len(self.elements)

    def describe(self) -> dict:
        return {
            "space": self.space.describe(),
            "elements": [e.bitstrings() for e in self.elements],
            "generators": [g.bitstrings() for g in self.generators],
        }


def generate_lattice(
    space: GroundSpace,
    generators: list[LatticeElement],
    cap: int = DEFAULT_ELEMENT_CAP,
) -> ZeroSetLattice:
    """Smallest family containing the generators, the empty set and the full
    space, closed under pairwise intersection and union.

    Raises GeneratorNotInSpace for foreign generators and LatticeTooLarge as
    soon as the closure exceeds ``cap`` elements (free distributive lattices
    explode, so the cap aborts early rather than after the fact).
    """
    if len(generators) > MAX_GENERATORS:
        raise GeneratorNotInSpace(
            f"at most {MAX_GENERATORS} generators are supported, got {len(generators)}"
        )
    for g in generators:
        if g.space != space:
            raise GeneratorNotInSpace(f"generator {g!r} lives in a different space")

    seen: dict[tuple[int, int], LatticeElement] = {}

    def add(e: LatticeElement) -> bool:
        key = (e.prefix_mask, e.periodic_mask)
        if key in seen:
            return False
        if len(seen) >= cap:
            raise LatticeTooLarge(cap)
        seen[key] = e
        return True

    add(space.empty())
    add(space.full())
    worklist = []
    for g in generators:
        if add(g):
            worklist.append(g)

    # pair every new element against everything accepted so far
    while worklist:
        e = worklist.pop()
        for other in list(seen.values()):
            for combined in (e.intersect(other), e.union(other)):
                if add(combined):
                    worklist.append(combined)

    elements = tuple(sorted(seen.values(), key=LatticeElement.sort_key))
    return ZeroSetLattice(space, elements, tuple(generators))


def lattice_from_description(desc: dict, cap: int = DEFAULT_ELEMENT_CAP) -> ZeroSetLattice:
    """Build a lattice from its JSON description (space + generators)."""
    space = GroundSpace.from_description(desc.get("space", {}))
    gens = [element_from_bitstrings(space, g) for g in desc.get("generators", [])]
    return generate_lattice(space, gens, cap=cap)


def atoms(lattice: ZeroSetLattice) -> list[LatticeElement]:
    """Minimal nonempty elements, in canonical order.

    In a finite meet-closed set lattice distinct atoms are disjoint and the
    maximal finite-intersection families are exactly their upward closures.
    """
    cached = getattr(lattice, "_atoms_cache", None)
    if cached is not None:
        return list(cached)
    nonempty = [e for e in lattice.elements if not e.is_empty()]
    out = []
    for e in nonempty:
        if not any(o != e and o.is_subset(e) for o in nonempty):
            out.append(e)
    object.__setattr__(lattice, "_atoms_cache", tuple(out))
    return out


def smallest_element_containing(lattice: ZeroSetLattice, t: int) -> LatticeElement:
    """Intersection of every lattice element containing the point ``t``."""
    acc = lattice.space.full()
    for e in lattice.elements:
        if e.contains_point(t):
            acc = acc.intersect(e)
    return acc


@dataclass(frozen=True)
class SeparationWitness:
    left: LatticeElement
    right: LatticeElement


@dataclass(frozen=True)
class SeparationFailure:
    """No disjoint pair of opens covers the two sets; lists why."""

    left_candidates: int
    right_candidates: int
    blocking_overlaps: tuple = field(default_factory=tuple)  # (U, V, U∩V)


def separation_check(
    lattice: ZeroSetLattice,
    a: LatticeElement,
    b: LatticeElement,
    opens: list[LatticeElement] | None = None,
):
    """Find opens U ⊇ a, V ⊇ b with U ∩ V empty.

    ``opens=None`` means the discrete default: every representable set is
    open, so (a, b) separates itself.  With an explicit open family, all
    pairs are searched in canonical order; on failure the report lists the
    overlaps that blocked each candidate pair.
    """
    if not a.intersect(b).is_empty():
        raise NotDisjoint(f"{a!r} and {b!r} intersect")
    if opens is None:
        return SeparationWitness(a, b)
    lefts = [u for u in opens if a.is_subset(u)]
    rights = [v for v in opens if b.is_subset(v)]
    overlaps = []
    for u in lefts:
        for v in rights:
            inter = u.intersect(v)
            if inter.is_empty():
                return SeparationWitness(u, v)
            overlaps.append((u, v, inter))
    return SeparationFailure(len(lefts), len(rights), tuple(overlaps))
