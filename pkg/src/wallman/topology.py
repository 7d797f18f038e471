"""The space of ultrafilters with its star-operator base.

For an open set U the star set collects the ultrafilters that do not contain
the complement of U.  Membership of the complement is decided through the
core: when T\\U is itself a lattice element this is literal membership
(upward closure), and in general the equivalent core test ``core ∩ U != ∅``
is used — the *lenient* mode.  Strict mode refuses non-lattice complements
with ComplementNotInLattice.  For lattice opens and atom-cored ultrafilters,
``core ∩ U != ∅  ⟺  core ⊆ U``, which is what makes the star identities
exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ComplementNotInLattice, InputError
from .filters import Ultrafilter, enumerate_ultrafilters
from .lattice import ZeroSetLattice, separation_check, SeparationWitness
from .spaces import LatticeElement


@dataclass(frozen=True)
class StarSet:
    """Image of one open set under the star operator."""

    open_descriptor: LatticeElement
    members: int  # bitmask over ultrafilter indices
    mode: str  # "strict" | "lenient"

    def indices(self) -> list[int]:
        return [i for i in range(self.members.bit_length()) if (self.members >> i) & 1]

    def describe(self) -> dict:
        return {
            "open": self.open_descriptor.bitstrings(),
            "ultrafilters": self.indices(),
            "mode": self.mode,
        }


@dataclass(frozen=True)
class WallmanSpace:
    """All ultrafilters of a lattice together with the star base."""

    lattice: ZeroSetLattice
    points: tuple[Ultrafilter, ...]
    opens: tuple[LatticeElement, ...]
    stars: tuple[StarSet, ...]

    @property
    def all_points_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def star_of_index(self, open_index: int) -> StarSet:
        return self.stars[open_index]

    def describe(self) -> dict:
        return {
            "lattice": self.lattice.describe(),
            "ultrafilters": [u.describe() for u in self.points],
            "base": [s.describe() for s in self.stars],
        }


def star_operator(
    lattice_or_space, u: LatticeElement, strict: bool = False
) -> StarSet:
    """Star set of an arbitrary representable open set.

    ``lattice_or_space`` may be a WallmanSpace or a ZeroSetLattice (the
    ultrafilters are enumerated on the fly in the latter case).
    """
    if isinstance(lattice_or_space, WallmanSpace):
        points = lattice_or_space.points
        lattice = lattice_or_space.lattice
    else:
        lattice = lattice_or_space
        points = tuple(enumerate_ultrafilters(lattice))
    if u.space != lattice.space:
        raise InputError("open set lives in a different ground space")
    complement_in_lattice = u.complement() in lattice
    if strict and not complement_in_lattice:
        raise ComplementNotInLattice(
            f"complement of {u!r} is not a lattice element; no strict membership test"
        )
    mask = 0
    for i, uf in enumerate(points):
        if not uf.core.intersect(u).is_empty():
            mask |= 1 << i
    mode = "strict" if complement_in_lattice else "lenient"
    return StarSet(u, mask, mode)


def build_space(
    lattice: ZeroSetLattice, opens: list[LatticeElement] | None = None
) -> WallmanSpace:
    """Construct the ultrafilter space with a star base.

    By default every lattice element is taken as an open set (the ground
    spaces are discrete, so lattice elements are clopen).
    """
    points = tuple(enumerate_ultrafilters(lattice))
    if opens is None:
        opens = list(lattice.elements)
    stars = []
    cores = [uf.core for uf in points]
    for u in opens:
        mask = 0
        for i, core in enumerate(cores):
            if not core.intersect(u).is_empty():
                mask |= 1 << i
        complement_in_lattice = u.complement() in lattice
        stars.append(StarSet(u, mask, "strict" if complement_in_lattice else "lenient"))
    return WallmanSpace(lattice, points, tuple(opens), tuple(stars))


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    checked: int
    failures: tuple = field(default_factory=tuple)
    notes: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {
            "check": self.name,
            "pass": self.passed,
            "checked": self.checked,
            "failures": [self._fmt(f) for f in self.failures],
            "notes": self.notes,
        }

    @staticmethod
    def _fmt(f):
        if isinstance(f, dict):
            return {k: CheckReport._fmt(v) for k, v in f.items()}
        if isinstance(f, LatticeElement):
            return f.bitstrings()
        if isinstance(f, (tuple, list)):
            return [CheckReport._fmt(x) for x in f]
        return f


def verify_star_identities(
    space: WallmanSpace, opens: list[LatticeElement] | None = None
) -> CheckReport:
    """Exhaustive check of the star identities over all pairs of opens:
    meet and join are preserved and the operator is inclusion-increasing."""
    if opens is None:
        opens = list(space.opens)
    star = {id(u): star_operator(space, u).members for u in opens}
    failures = []
    checked = 0
    for u in opens:
        su = star[id(u)]
        for v in opens:
            sv = star[id(v)]
            meet = star_operator(space, u.intersect(v)).members
            join = star_operator(space, u.union(v)).members
            checked += 3
            if meet != su & sv:
                failures.append({"identity": "meet", "u": u, "v": v})
            if join != su | sv:
                failures.append({"identity": "join", "u": u, "v": v})
            if u.is_subset(v) and su & ~sv:
                failures.append({"identity": "monotone", "u": u, "v": v})
    return CheckReport("star_identities", not failures, checked, tuple(failures))


def verify_principal_embedding(space: WallmanSpace) -> CheckReport:
    """Point-versus-star membership and density of the point image.

    For every representative ground point t and every open U the equivalence
    ``t ∈ U ⟺ trace-ultrafilter(t) ∈ U*`` is checked; for every nonempty
    base set a ground point mapping into it is exhibited.  On lattices that
    do not separate points the trace of a point may fail maximality, in which
    case the equivalence is reported against the refined ultrafilter and
    failures localize exactly the points the lattice cannot see.
    """
    from .filters import principal_ultrafilter

    lattice = space.lattice
    reps = lattice.space.representative_points()
    uf_index = {
        (u.core.prefix_mask, u.core.periodic_mask): i for i, u in enumerate(space.points)
    }
    point_to_uf = {}
    trace_maximal = 0
    for t in reps:
        uf = principal_ultrafilter(lattice, t)
        point_to_uf[t] = uf_index[(uf.core.prefix_mask, uf.core.periodic_mask)]
        if uf.core.contains_point(t):
            trace_maximal += 1
    membership_failures = []
    checked = 0
    for t in reps:
        i = point_to_uf[t]
        for star in space.stars:
            checked += 1
            in_u = star.open_descriptor.contains_point(t)
            in_star = bool((star.members >> i) & 1)
            if in_u != in_star:
                membership_failures.append(
                    {"point": t, "open": star.open_descriptor, "in_open": in_u}
                )
    density_failures = []
    for star in space.stars:
        if star.members == 0:
            continue
        checked += 1
        if not any((star.members >> point_to_uf[t]) & 1 for t in reps):
            density_failures.append(
                {"open": star.open_descriptor, "density": "no point maps in"}
            )
    failures = membership_failures + density_failures
    return CheckReport(
        "principal_embedding",
        not failures,
        checked,
        tuple(failures),
        notes={
            "representative_points": len(reps),
            "points_with_maximal_trace": trace_maximal,
            "membership_pass": not membership_failures,
            "density_pass": not density_failures,
        },
    )


def check_compactness(
    space: WallmanSpace, cover: list[int] | None = None
) -> CheckReport:
    """Assert the base covers the ultrafilter space and extract a small
    subcover (greedy, then pruned; deterministic by canonical order).

    ``cover`` is a list of base indices; default is the whole base.  Any
    cover of a finite point set trivially has a finite subcover, so the
    meaningful output is the coverage assertion plus the extracted subcover.
    """
    idxs = list(range(len(space.stars))) if cover is None else list(cover)
    total = 0
    for i in idxs:
        total |= space.stars[i].members
    all_mask = space.all_points_mask
    if total != all_mask:
        missing = [i for i in range(len(space.points)) if not (total >> i) & 1]
        return CheckReport("compactness", False, len(idxs), ({"uncovered": missing},))
    chosen: list[int] = []
    covered = 0
    while covered != all_mask:
        best = max(
            idxs,
            key=lambda i: (bin(space.stars[i].members & ~covered).count("1"), -i),
        )
        gain = space.stars[best].members & ~covered
        if not gain:
            break
        chosen.append(best)
        covered |= gain
    # prune: drop picks that later picks made redundant
    k = 0
    while k < len(chosen):
        trial = chosen[:k] + chosen[k + 1 :]
        mask = 0
        for i in trial:
            mask |= space.stars[i].members
        if mask == all_mask:
            chosen = trial
        else:
            k += 1
    return CheckReport(
        "compactness",
        True,
        len(idxs),
        notes={"minimal_subcover": sorted(chosen), "subcover_size": len(chosen)},
    )


def check_hausdorff(space: WallmanSpace) -> CheckReport:
    """Separate every pair of distinct ultrafilters with disjoint base sets.

    Cross-checks the zero-set separation property: whenever the two cores
    separate inside the lattice opens, the star pair must separate too.
    """
    failures = []
    pairs = []
    n = len(space.points)
    checked = 0
    for i in range(n):
        for j in range(i + 1, n):
            checked += 1
            found = None
            for si, su in enumerate(space.stars):
                if not (su.members >> i) & 1:
                    continue
                for sj, sv in enumerate(space.stars):
                    if (sv.members >> j) & 1 and su.members & sv.members == 0:
                        found = (si, sj)
                        break
                if found:
                    break
            sep = separation_check(
                space.lattice,
                space.points[i].core,
                space.points[j].core,
                list(space.lattice.elements),
            )
            core_separable = isinstance(sep, SeparationWitness)
            if found is None:
                failures.append({"pair": (i, j), "core_separable": core_separable})
            else:
                pairs.append({"pair": (i, j), "base_pair": found})
                if core_separable is False:
                    # disjoint atoms always separate by themselves; record the
                    # inconsistency loudly if it ever shows up
                    failures.append({"pair": (i, j), "lemma_cross_check": "mismatch"})
    return CheckReport(
        "hausdorff",
        not failures,
        checked,
        tuple(failures),
        notes={"separating_pairs": pairs},
    )
