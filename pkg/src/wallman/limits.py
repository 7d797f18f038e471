"""Limits along ultrafilters and the extension transform.

Functions are exact: a bounded function on a finite space is one rational
per point; on the naturals it is one rational per prefix point plus one
*asymptotic* rational per residue class — the function literally equals the
asymptotic value beyond the prefix, so suprema and limits are attained and
computable without tolerance.

The limit along an ultrafilter exists iff the function is constant in the
core's eventual regime: on a finite core the common value, on an infinite
core the common asymptotic value of the core's residue classes (prefix
points inside the core are a finite exceptional set and do not matter).
When several candidate values survive, the lattice is too coarse to decide
and AmbiguousLimit reports them rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import AmbiguousLimit, InputError
from .filters import Ultrafilter
from .spaces import GroundSpace, LatticeElement, format_value, parse_value
from .topology import WallmanSpace

Q = Fraction


@dataclass(frozen=True)
class BoundedFunction:
    """Exact bounded function on a ground space."""

    space: GroundSpace
    values: tuple[Q, ...]  # one per point (finite) / per prefix point (nat)
    asymptotics: tuple[Q, ...] = ()  # nat: one per residue class

    def __post_init__(self):
        expected = self.space.prefix_length
        if len(self.values) != expected:
            raise InputError(
                f"expected {expected} point values, got {len(self.values)}"
            )
        if self.space.is_finite:
            if self.asymptotics:
                raise InputError("finite-space functions have no asymptotic values")
        elif len(self.asymptotics) != self.space.period:
            raise InputError(
                f"expected {self.space.period} asymptotic values, got {len(self.asymptotics)}"
            )

    @staticmethod
    def constant(space: GroundSpace, c) -> "BoundedFunction":
        c = parse_value(c)
        if space.is_finite:
            return BoundedFunction(space, (c,) * space.size)
        return BoundedFunction(space, (c,) * space.prefix, (c,) * space.period)

    @staticmethod
    def from_values(space: GroundSpace, values, asymptotics=()) -> "BoundedFunction":
        return BoundedFunction(
            space,
            tuple(parse_value(v) for v in values),
            tuple(parse_value(v) for v in asymptotics),
        )

    def value_at(self, t: int) -> Q:
        if self.space.is_finite or t < self.space.prefix:
            return self.values[t]
        return self.asymptotics[(t - self.space.prefix) % self.space.period]

    def all_values(self) -> tuple[Q, ...]:
        """Every value the function attains (finitely many by construction)."""
        return self.values + self.asymptotics

    def sup_norm(self) -> Q:
        return max(abs(v) for v in self.all_values())

    def values_on(self, region: LatticeElement) -> list[Q]:
        """Values attained on a representable subset (attained suprema)."""
        if region.space != self.space:
            raise InputError("function and region live on different spaces")
        vals = [self.values[t] for t in region.prefix_points()]
        vals.extend(self.asymptotics[r] for r in region.residues())
        return vals

    def combine(self, other: "BoundedFunction", op: Callable[[Q, Q], Q]) -> "BoundedFunction":
        if other.space != self.space:
            raise InputError("functions live on different spaces")
        return BoundedFunction(
            self.space,
            tuple(op(a, b) for a, b in zip(self.values, other.values)),
            tuple(op(a, b) for a, b in zip(self.asymptotics, other.asymptotics)),
        )

    def scale(self, alpha) -> "BoundedFunction":
        alpha = parse_value(alpha)
        return BoundedFunction(
            self.space,
            tuple(alpha * v for v in self.values),
            tuple(alpha * v for v in self.asymptotics),
        )

    def __add__(self, other):
        return self.combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self.combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self.combine(other, lambda a, b: a * b)

    def describe(self) -> dict:
        out = {
            "kind": self.space.kind,
            "values": [format_value(v) for v in self.values],
        }
        if not self.space.is_finite:
            out["asymptotics"] = {
                str(r): format_value(v) for r, v in enumerate(self.asymptotics)
            }
        return out


def function_from_description(space: GroundSpace, desc: dict) -> BoundedFunction:
    """Parse the function JSON: values plus (nat) per-residue asymptotics."""
    if not isinstance(desc, dict):
        raise InputError(f"function description must be an object, got {desc!r}")
    kind = desc.get("kind", space.kind)
    if kind != space.kind:
        raise InputError(f"function kind {kind!r} does not match space {space.kind!r}")
    values = desc.get("values", [])
    if space.is_finite:
        return BoundedFunction.from_values(space, values)
    asym_desc = desc.get("asymptotics", {})
    if isinstance(asym_desc, dict):
        asym = [0] * space.period
        for k, v in asym_desc.items():
            r = int(k)
            if not 0 <= r < space.period:
                raise InputError(f"residue {r} outside period {space.period}")
            asym[r] = v
    else:
        asym = list(asym_desc)
    return BoundedFunction.from_values(space, values, asym)


def sup_distance(f: BoundedFunction, g: BoundedFunction) -> Q:
    """Exact supremum distance; attained because both functions are
    eventually periodic with the same frame."""
    diff = f - g
    return max(abs(v) for v in diff.all_values())


def pair_sup_distance(
    fs: tuple[BoundedFunction, BoundedFunction],
    gs: tuple[BoundedFunction, BoundedFunction],
    metric: str = "max",
):
    """Distance between component pairs (the real/imaginary encoding).

    metric="max" is exact; metric="euclidean" returns the exact supremum of
    the squared modulus (taking the root would leave the rationals).
    """
    d_re = sup_distance(fs[0], gs[0])
    d_im = sup_distance(fs[1], gs[1])
    if metric == "max":
        return max(d_re, d_im)
    if metric == "euclidean":
        re = fs[0] - gs[0]
        im = fs[1] - gs[1]
        return max(a * a + b * b for a, b in zip(re.all_values(), im.all_values()))
    raise InputError(f"unknown metric {metric!r}")


def ultrafilter_limit(f: BoundedFunction, u: Ultrafilter) -> Q:
    """The unique value the function approaches along the ultrafilter.

    Raises AmbiguousLimit when the core's eventual regime carries more than
    one value; the candidates are reported.
    """
    core = u.core
    if core.space != f.space:
        raise InputError("function and ultrafilter live on different spaces")
    if core.is_infinite():
        candidates = sorted({f.asymptotics[r] for r in core.residues()})
    else:
        candidates = sorted({f.values[t] for t in core.prefix_points()})
    if len(candidates) != 1:
        raise AmbiguousLimit(candidates, function=f, ultrafilter=u)
    return candidates[0]


@dataclass(frozen=True)
class UltraLimitTable:
    """All limits of one function over the ultrafilter space."""

    function: BoundedFunction
    space: WallmanSpace
    limits: tuple[Q, ...]

    def describe(self) -> dict:
        return {
            "function": self.function.describe(),
            "limits": [format_value(v) for v in self.limits],
        }


def limit_table(f: BoundedFunction, space: WallmanSpace) -> UltraLimitTable:
    return UltraLimitTable(
        f, space, tuple(ultrafilter_limit(f, u) for u in space.points)
    )


def verify_limit_localization(
    f: BoundedFunction, u: Ultrafilter, epsilons: Sequence[Q] | None = None
) -> dict:
    """For each eps, the points where the function stays within eps of its
    limit form a set whose complement the ultrafilter avoids.

    The membership test is the core rule: the complement lies in the
    ultrafilter iff it contains the core, i.e. iff the eps-band misses the
    core entirely.  Default eps grid: dyadic fractions of the sup norm.
    """
    lim = ultrafilter_limit(f, u)
    if epsilons is None:
        scale = f.sup_norm() or Q(1)
        epsilons = [scale * Q(1, 2**k) for k in range(1, 11)]
    space = f.space
    results = []
    for eps in epsilons:
        eps = parse_value(eps)
        prefix_mask = 0
        for t in range(space.prefix_length):
            if abs(f.values[t] - lim) < eps:
                prefix_mask |= 1 << t
        periodic_mask = 0
        if not space.is_finite:
            for r in range(space.period):
                if abs(f.asymptotics[r] - lim) < eps:
                    periodic_mask |= 1 << r
        band = LatticeElement(space, prefix_mask, periodic_mask)
        complement_avoided = not u.core.intersect(band).is_empty()
        results.append(
            {"eps": format_value(eps), "pass": complement_avoided}
        )
    return {
        "limit": format_value(lim),
        "all_pass": all(r["pass"] for r in results),
        "per_eps": results,
    }


def extend_family(
    family: Sequence[BoundedFunction], space: WallmanSpace
) -> tuple[list[UltraLimitTable], dict]:
    """Limit tables for a family, plus an injectivity report.

    Distinct functions may collide when the lattice does not separate the
    points where they differ; collisions are reported, not silently merged.
    """
    tables = [limit_table(f, space) for f in family]
    collisions = []
    seen: dict[tuple, int] = {}
    for i, tab in enumerate(tables):
        key = tab.limits
        if key in seen:
            collisions.append((seen[key], i))
        else:
            seen[key] = i
    return tables, {
        "injective": not collisions,
        "collisions": collisions,
    }


def restrict_table(table: UltraLimitTable, space: WallmanSpace) -> BoundedFunction:
    """Pull a limit table back to a ground function through the point map.

    Each ground point is routed to its trace ultrafilter (refined to the
    canonically smallest atom when the trace is not maximal), so the result
    is constant on atoms.  For tables arising from atom-adapted functions
    this inverts the extension exactly.
    """
    from .filters import principal_ultrafilter

    lattice = space.lattice
    uf_index = {
        (u.core.prefix_mask, u.core.periodic_mask): i for i, u in enumerate(space.points)
    }
    ground = lattice.space

    def value_for_point(t: int) -> Q:
        uf = principal_ultrafilter(lattice, t)
        return table.limits[uf_index[(uf.core.prefix_mask, uf.core.periodic_mask)]]

    values = tuple(value_for_point(t) for t in range(ground.prefix_length))
    if ground.is_finite:
        return BoundedFunction(ground, values)
    asym = tuple(value_for_point(ground.prefix + r) for r in range(ground.period))
    return BoundedFunction(ground, values, asym)


def verify_extension_continuity(
    f: BoundedFunction, g: BoundedFunction, space: WallmanSpace
) -> dict:
    """Compare the ground supremum distance d1 with the extension-table
    distance d2 and report the two-sided continuity bounds.

    The forward bound d2 <= 3*d1 always holds in the exact model (each limit
    is the value at a shared witness point).  The inverse bound d1 <= d2
    holds when every ground point is carried by some ultrafilter, i.e. for
    atom-adapted functions on lattices whose atoms cover the space; it is
    reported, not assumed.
    """
    d1 = sup_distance(f, g)
    tf = limit_table(f, space)
    tg = limit_table(g, space)
    d2 = max(
        (abs(a - b) for a, b in zip(tf.limits, tg.limits)), default=Q(0)
    )
    return {
        "d_ground": d1,
        "d_extension": d2,
        "forward_bound": d2 <= 3 * d1,
        "inverse_bound": d1 <= d2,
        "distances_equal": d1 == d2,
    }
