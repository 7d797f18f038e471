"""Filters and ultrafilters on a finite set lattice.

A family satisfies the finite-intersection property iff the intersection of
*all* its members is nonempty (the lattice is finite and meet-closed, so the
total intersection is itself a finite intersection).  Maximal such families
are exactly the upward closures of the lattice atoms, which makes
enumeration exhaustive and cheap.

Principality is relativized to the lattice: an ultrafilter is flagged
principal iff some point of its core has a lattice trace equal to the member
family.  For an atom core this holds for every core point, so at finite
resolution every enumerated ultrafilter is principal-in-lattice; the genuine
free ultrafilters of an infinite zero-set family are out of reach by
construction.  Reports therefore also record whether the core is a single
point, i.e. whether the lattice actually separates the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyIntersection, InputError, NotMaximal
from .lattice import ZeroSetLattice, atoms, smallest_element_containing
from .spaces import LatticeElement


@dataclass(frozen=True)
class FilterBase:
    """A family of lattice elements (by index) with nonempty intersection."""

    lattice: ZeroSetLattice
    members: tuple[int, ...]

    def member_elements(self) -> list[LatticeElement]:
        return [self.lattice.elements[i] for i in self.members]

    def total_intersection(self) -> LatticeElement:
        acc = self.lattice.space.full()
        for e in self.member_elements():
            acc = acc.intersect(e)
        return acc


@dataclass(frozen=True)
class Ultrafilter:
    """Upward closure of an atom: a maximal finite-intersection family."""

    lattice: ZeroSetLattice
    members: tuple[int, ...]
    core: LatticeElement
    is_principal: bool
    witness_point: int | None

    def contains(self, elem: LatticeElement) -> bool:
        """Membership of a lattice element in this ultrafilter."""
        if elem not in self.lattice:
            raise InputError(f"{elem!r} is not an element of the lattice")
        return self.core.is_subset(elem)

    def describe(self) -> dict:
        count = self.core.point_count()
        return {
            "core": self.core.bitstrings(),
            "members": list(self.members),
            "principal": self.is_principal,
            "witness": self.witness_point,
            "core_points": "infinite" if count is None else count,
            "separates_witness": count == 1,
        }


def _upward_closure(lattice: ZeroSetLattice, core: LatticeElement) -> tuple[int, ...]:
    return tuple(
        i for i, e in enumerate(lattice.elements) if core.is_subset(e)
    )


def _make_ultrafilter(lattice: ZeroSetLattice, atom: LatticeElement) -> Ultrafilter:
    members = _upward_closure(lattice, atom)
    witness = atom.eventual_min_point()
    # every core point has trace equal to the upward closure of the atom,
    # so the witness-trace principality test always succeeds here
    return Ultrafilter(lattice, members, atom, True, witness)


def enumerate_ultrafilters(lattice: ZeroSetLattice) -> list[Ultrafilter]:
    """One ultrafilter per atom, ordered by the core's canonical mask key."""
    return [_make_ultrafilter(lattice, a) for a in atoms(lattice)]


def point_trace(lattice: ZeroSetLattice, t: int) -> tuple[int, ...]:
    """Indices of every lattice element containing the point."""
    return tuple(i for i, e in enumerate(lattice.elements) if e.contains_point(t))


def principal_ultrafilter(
    lattice: ZeroSetLattice, t: int, strict: bool = False
) -> Ultrafilter:
    """Ultrafilter generated by the trace of a ground point.

    The trace { C : t in C } is maximal exactly when the smallest lattice
    element containing t is an atom.  When it is not, the trace is refined to
    the deterministic extension (canonically smallest atom inside it); pass
    ``strict=True`` to get NotMaximal instead.  The recorded witness point is
    the canonical core witness, which coincides with ``t`` whenever the
    lattice separates points.
    """
    k_t = smallest_element_containing(lattice, t)
    candidate_atoms = [a for a in atoms(lattice) if a.is_subset(k_t)]
    if not candidate_atoms:  # k_t contains t, so it is nonempty: cannot happen
        raise InputError(f"no atom below the trace core of point {t}")
    chosen = candidate_atoms[0]
    if chosen != k_t:
        # the trace itself fails maximality: its core properly contains an atom
        if strict:
            raise NotMaximal(t, chosen)
    return _make_ultrafilter(lattice, chosen)


def extend_to_ultrafilter(base: FilterBase) -> Ultrafilter:
    """Deterministic maximal extension of a filter base.

    Among the atoms inside the total intersection of the base, the
    canonically smallest is chosen.
    """
    core = base.total_intersection()
    if core.is_empty():
        raise EmptyIntersection("filter base has empty total intersection")
    for a in atoms(base.lattice):  # canonical order
        if a.is_subset(core):
            return _make_ultrafilter(base.lattice, a)
    raise InputError("no atom below a nonempty intersection: lattice is inconsistent")


@dataclass(frozen=True)
class OmegaAxiomReport:
    omega1: bool
    omega1_witness: tuple[int, ...] | None  # indices of a violating subfamily
    omega2: bool | None  # None when omega1 already fails
    omega2_witness: int | None  # index of an addable element

    @property
    def is_ultrafilter(self) -> bool:
        return self.omega1 and bool(self.omega2)

    def describe(self) -> dict:
        return {
            "omega1": self.omega1,
            "omega1_violating_subfamily": (
                list(self.omega1_witness) if self.omega1_witness else None
            ),
            "omega2": self.omega2,
            "omega2_addable_element": self.omega2_witness,
        }


def verify_omega_axioms(
    lattice: ZeroSetLattice, candidate: list[int] | tuple[int, ...]
) -> OmegaAxiomReport:
    """Check the two ultrafilter axioms for a family of element indices.

    On a finite-intersection failure the report carries an irredundant
    violating subfamily; on a maximality failure it carries an element that
    could be added.
    """
    indices = sorted(set(candidate))
    for i in indices:
        if not 0 <= i < len(lattice.elements):
            raise InputError(f"element index {i} out of range")

    acc = lattice.space.full()
    empty_at = None
    for pos, i in enumerate(indices):
        acc = acc.intersect(lattice.elements[i])
        if acc.is_empty():
            empty_at = pos
            break

    if empty_at is not None:
        # minimize the violating prefix: drop members not needed for emptiness
        chosen = list(indices[: empty_at + 1])
        k = 0
        while k < len(chosen):
            trial = chosen[:k] + chosen[k + 1 :]
            acc = lattice.space.full()
            for i in trial:
                acc = acc.intersect(lattice.elements[i])
            if acc.is_empty():
                chosen = trial
            else:
                k += 1
        return OmegaAxiomReport(False, tuple(chosen), None, None)

    core = acc
    member_set = set(indices)
    for i, e in enumerate(lattice.elements):
        if i in member_set:
            continue
        if not e.intersect(core).is_empty():
            return OmegaAxiomReport(True, None, False, i)
    return OmegaAxiomReport(True, None, True, None)
