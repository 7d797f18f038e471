"""Seeded random models and the cross-module property suites.

The generators produce three graded flavours of model:

* arbitrary lattices — closure, atoms, stars, covers work on anything;
* *Boolean* lattices (generators closed under complement) — their atoms
  partition the ground space, every point's trace is maximal, and the
  embedding and extension laws hold in full;
* *adapted* functions — constant on every atom, so limits exist everywhere
  and the extension transform is an isometry; a *perturbed* family adds
  bounded deviations at prefix points inside infinite atoms, which keeps
  all limits exact while giving the equicontinuity checks something to
  fail on.

Everything is driven by one ``random.Random`` so a seed fixes the entire
suite byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .certify import (
    check_discrete_equicontinuity,
    check_ultra_equicontinuity,
    equicontinuity_margins,
    exact_cross_checks,
)
from .families import ExactFamily
from .filters import FilterBase, enumerate_ultrafilters, extend_to_ultrafilter, verify_omega_axioms
from .lattice import ZeroSetLattice, atoms, generate_lattice
from .limits import (
    BoundedFunction,
    extend_family,
    restrict_table,
    sup_distance,
    ultrafilter_limit,
    verify_extension_continuity,
    verify_limit_localization,
)
from .nets import covering_number_interval, net_oracle
from .spaces import GroundSpace, LatticeElement
from .topology import (
    WallmanSpace,
    build_space,
    check_compactness,
    check_hausdorff,
    verify_principal_embedding,
    verify_star_identities,
)

Q = Fraction


# ---------------------------------------------------------------------------
# random models


def random_finite_space(rng: random.Random, min_size=2, max_size=8) -> GroundSpace:
    return GroundSpace.finite(rng.randint(min_size, max_size))


def random_nat_space(rng: random.Random) -> GroundSpace:
    return GroundSpace.nat(period=rng.choice([2, 3, 4, 6]), prefix=rng.randint(0, 4))


def random_element(space: GroundSpace, rng: random.Random) -> LatticeElement:
    prefix = rng.getrandbits(space.prefix_length) if space.prefix_length else 0
    periodic = 0
    if not space.is_finite:
        periodic = rng.getrandbits(space.period)
    return LatticeElement(space, prefix, periodic)


def random_lattice(
    rng: random.Random,
    space: GroundSpace | None = None,
    max_generators: int = 5,
    boolean: bool = False,
) -> ZeroSetLattice:
    """Closure of random generators; ``boolean=True`` also closes the
    generator set under complement, which makes the atoms partition the
    space."""
    if space is None:
        space = random_finite_space(rng) if rng.random() < 0.5 else random_nat_space(rng)
    gens = [random_element(space, rng) for _ in range(rng.randint(1, max_generators))]
    if boolean:
        gens = gens[: max_generators // 2 + 1]
        gens += [g.complement() for g in gens]
    return generate_lattice(space, gens)


def random_value(rng: random.Random, lo=-64, hi=64, denom=8) -> Q:
    return Q(rng.randint(lo, hi), denom)


def random_function(space: GroundSpace, rng: random.Random) -> BoundedFunction:
    values = tuple(random_value(rng) for _ in range(space.prefix_length))
    asym = ()
    if not space.is_finite:
        asym = tuple(random_value(rng) for _ in range(space.period))
    return BoundedFunction(space, values, asym)


def random_adapted_function(
    lattice: ZeroSetLattice, rng: random.Random
) -> BoundedFunction:
    """Constant on every atom (zero off the atoms), so every ultralimit
    exists and equals the atom value."""
    space = lattice.space
    values = [Q(0)] * space.prefix_length
    asym = [Q(0)] * (0 if space.is_finite else space.period)
    for atom in atoms(lattice):
        v = random_value(rng)
        for t in atom.prefix_points():
            values[t] = v
        for r in atom.residues():
            asym[r] = v
    return BoundedFunction(space, tuple(values), tuple(asym))


def random_perturbed_family(
    lattice: ZeroSetLattice,
    rng: random.Random,
    size: int,
    max_deviation: Q = Q(1, 2),
) -> ExactFamily:
    """Adapted functions plus bounded perturbations at prefix points inside
    infinite atoms.  Limits stay exact (the eventual regime is untouched);
    the perturbations are exactly what ultrafilter equicontinuity sees."""
    space = lattice.space
    functions = []
    infinite_atoms = [a for a in atoms(lattice) if a.is_infinite()]
    for _ in range(size):
        f = random_adapted_function(lattice, rng)
        values = list(f.values)
        for atom in infinite_atoms:
            for t in atom.prefix_points():
                num = rng.randint(-16, 16)
                values[t] = values[t] + max_deviation * Q(num, 16)
        functions.append(BoundedFunction(space, tuple(values), f.asymptotics))
    return ExactFamily(tuple(functions), lattice)


def powerset_lattice(size: int) -> ZeroSetLattice:
    space = GroundSpace.finite(size)
    singletons = [space.from_points([t]) for t in range(size)]
    return generate_lattice(space, singletons)


# ---------------------------------------------------------------------------
# property suites


class SuiteRun:
    """Accumulates check counts and failure descriptions for one suite."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.checks = 0
        self.failures: list[str] = []

    def record(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def summary(self) -> dict:
        return {
            "cases": self.cases,
            "checks": self.checks,
            "failures": self.failures,
        }

    @property
    def passed(self) -> bool:
        return not self.failures


def suite_lattice(rng: random.Random, cases: int) -> SuiteRun:
    run = SuiteRun("lattice")
    for _ in range(cases):
        run.cases += 1
        lat = random_lattice(rng)
        elems = lat.elements
        closed = all(
            (a.intersect(b) in lat) and (a.union(b) in lat)
            for a in elems
            for b in elems
        )
        run.record(closed, f"closure violated for {lat.describe()['space']}")
        run.record(
            all(e.canonical() == e.canonical() for e in elems),
            "canonical form not stable",
        )
        ats = atoms(lat)
        disjoint = all(
            ats[i].intersect(ats[j]).is_empty()
            for i in range(len(ats))
            for j in range(i + 1, len(ats))
        )
        run.record(disjoint, "atoms are not pairwise disjoint")
        covered = all(
            any(a.is_subset(e) for a in ats) for e in elems if not e.is_empty()
        )
        run.record(covered, "a nonempty element contains no atom")
    # fixed degenerate case: the full power set has singleton atoms
    for n in (2, 3):
        run.cases += 1
        lat = powerset_lattice(n)
        ats = atoms(lat)
        run.record(
            len(ats) == n and all(a.point_count() == 1 for a in ats),
            f"power-set lattice of size {n} must have singleton atoms",
        )
    return run


def suite_filters(rng: random.Random, cases: int) -> SuiteRun:
    run = SuiteRun("filters")
    for _ in range(cases):
        run.cases += 1
        lat = random_lattice(rng)
        ufs = enumerate_ultrafilters(lat)
        run.record(
            len(ufs) == len(atoms(lat)),
            "ultrafilter count differs from atom count",
        )
        for uf in ufs:
            rep = verify_omega_axioms(lat, uf.members)
            run.record(rep.is_ultrafilter, "enumerated ultrafilter fails the axioms")
            ext = extend_to_ultrafilter(FilterBase(lat, uf.members))
            run.record(ext.core == uf.core, "extension is not idempotent")
    return run


def suite_topology(rng: random.Random, cases: int) -> SuiteRun:
    run = SuiteRun("topology")
    for i in range(cases):
        run.cases += 1
        boolean = i % 2 == 0
        lat = random_lattice(rng, boolean=boolean)
        space = build_space(lat)
        run.record(verify_star_identities(space).passed, "star identities fail")
        emb = verify_principal_embedding(space)
        run.record(emb.notes["density_pass"], "density fails")
        if boolean:
            run.record(
                emb.notes["membership_pass"],
                "point/star membership fails on a Boolean lattice",
            )
        run.record(check_compactness(space).passed, "base does not cover")
        run.record(check_hausdorff(space).passed, "ultrafilters not separated")
    return run


def suite_limits(rng: random.Random, cases: int) -> SuiteRun:
    run = SuiteRun("limits")
    for _ in range(cases):
        run.cases += 1
        lat = random_lattice(rng, boolean=True)
        space = build_space(lat)
        f = random_adapted_function(lat, rng)
        g = random_adapted_function(lat, rng)
        for uf in space.points:
            lim = ultrafilter_limit(f, uf)
            run.record(
                lim == f.value_at(uf.witness_point),
                "limit differs from the witness value",
            )
            run.record(
                verify_limit_localization(f, uf)["all_pass"],
                "limit localization fails",
            )
            a, b = random_value(rng), random_value(rng)
            combo = f.scale(a) + g.scale(b)
            run.record(
                ultrafilter_limit(combo, uf)
                == a * lim + b * ultrafilter_limit(g, uf),
                "limits are not linear",
            )
            run.record(
                ultrafilter_limit(f * g, uf) == lim * ultrafilter_limit(g, uf),
                "limits are not multiplicative",
            )
        cont = verify_extension_continuity(f, g, space)
        run.record(
            cont["inverse_bound"] and cont["forward_bound"],
            "distance sandwich fails",
        )
        run.record(cont["distances_equal"], "exact model distances differ")
        tables, inj = extend_family([f, g], space)
        back = restrict_table(tables[0], space)
        run.record(sup_distance(back, f) == 0, "extension round-trip fails")
        if sup_distance(f, g) != 0:
            run.record(inj["injective"], "distinct functions collide in the table")
    return run


def suite_certifier(rng: random.Random, cases: int, max_functions: int = 32) -> SuiteRun:
    run = SuiteRun("certifier")
    eps_grid = [Q(1, 2), Q(1, 4), Q(1, 8)]
    for _ in range(cases):
        run.cases += 1
        lat = random_lattice(rng, space=random_nat_space(rng), boolean=True)
        space = build_space(lat)
        size = rng.randint(2, max(2, min(max_functions, 12)))
        fam = random_perturbed_family(lat, rng, size)
        margins = equicontinuity_margins(fam, space)
        dist = fam.distance_matrix()
        prev_pass = None
        prev_net = None
        for eps in sorted(eps_grid):
            aa2 = check_ultra_equicontinuity(fam, space, eps, margins)
            kp2 = check_discrete_equicontinuity(fam, space, eps)
            run.record(
                aa2.status == kp2.status,
                "principal reduction: ultrafilter and pointwise verdicts differ",
            )
            if prev_pass is not None and prev_pass:
                run.record(aa2.passed, "equicontinuity not monotone in eps")
            prev_pass = aa2.passed
            net = net_oracle(dist, eps)
            if prev_net is not None:
                run.record(net.size <= prev_net, "net size increased with eps")
            prev_net = net.size
            cross = exact_cross_checks(fam, space, eps, margins, net)
            run.record(
                cross["holds"],
                f"cross-check implications fail at eps={eps}",
            )
    # oracle sanity on a scalar family; the parameter grid is kept well
    # below the probed scales so the discrete cover matches the interval one
    run.cases += 1
    space = GroundSpace.finite(4)
    lat = powerset_lattice(4)
    g = BoundedFunction.from_values(space, [1, Q(1, 2), Q(-1, 3), 0])
    scalars = [Q(k, 32) for k in range(33)]
    fam = ExactFamily(tuple(g.scale(c) for c in scalars), lat, "scalar")
    dist = fam.distance_matrix()
    for eps in (Q(1, 4), Q(1, 8), Q(1, 16)):
        net = net_oracle(dist, eps)
        expected = covering_number_interval(0, 1, eps)
        run.record(
            abs(net.size - expected) <= 1,
            f"scalar-family net size {net.size} is not within 1 of {expected}",
        )
    return run


DEFAULT_CASES = {
    "lattice": 40,
    "filters": 40,
    "topology": 30,
    "limits": 30,
    "certifier": 20,
}


def run_selftest(seed: int, cases: dict | None = None, max_functions: int = 32) -> dict:
    """Run every property suite from one seed; the report is fully
    deterministic in (seed, cases, max_functions)."""
    cases = dict(DEFAULT_CASES, **(cases or {}))
    rng = random.Random(seed)
    runs = [
        suite_lattice(rng, cases["lattice"]),
        suite_filters(rng, cases["filters"]),
        suite_topology(rng, cases["topology"]),
        suite_limits(rng, cases["limits"]),
        suite_certifier(rng, cases["certifier"], max_functions),
    ]
    return {
        "seed": seed,
        "config": {"cases": cases, "max_functions": max_functions},
        "suites": {r.name: r.summary() for r in runs},
        "pass": all(r.passed for r in runs),
    }
