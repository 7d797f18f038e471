"""Epsilon-net oracle: total boundedness ground truth.

Given the pairwise supremum distances of a finite family, find a smallest
subset whose closed eps-balls cover the family.  A greedy pass (largest gain,
lowest index on ties) gives the upper bound; an exact branch-and-bound set
cover then certifies minimality, falling back to the greedy answer with
``exact=False`` if the node budget runs out.

The oracle is deliberately independent of the equicontinuity machinery it is
used to cross-check: it only ever sees a distance matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidConfig

DEFAULT_NODE_BUDGET = 250_000


@dataclass(frozen=True)
class NetResult:
    eps: object  # Fraction or float, echoed back
    indices: tuple[int, ...]
    exact: bool
    searched_nodes: int

    @property
    def size(self) -> int:
        return len(self.indices)

    def describe(self) -> dict:
        return {
            "eps": str(self.eps),
            "net": list(self.indices),
            "size": self.size,
            "exact_minimum": self.exact,
        }


def _balls(dist: Sequence[Sequence], eps) -> list[int]:
    m = len(dist)
    balls = []
    for i in range(m):
        mask = 0
        row = dist[i]
        for j in range(m):
            if row[j] <= eps:
                mask |= 1 << j
        balls.append(mask)
    return balls


def greedy_net(dist: Sequence[Sequence], eps) -> tuple[int, ...]:
    """Greedy closed-ball cover; ties broken toward the lowest index."""
    m = len(dist)
    if m == 0:
        return ()
    balls = _balls(dist, eps)
    all_mask = (1 << m) - 1
    covered = 0
    chosen: list[int] = []
    while covered != all_mask:
        best_i = -1
        best_gain = -1
        for i in range(m):
            gain = bin(balls[i] & ~covered).count("1")
            if gain > best_gain:
                best_gain = gain
                best_i = i
        chosen.append(best_i)
        covered |= balls[best_i]
    return tuple(chosen)


def minimum_net(
    dist: Sequence[Sequence], eps, node_budget: int = DEFAULT_NODE_BUDGET
) -> NetResult:
    """Certified minimum-size eps-net via branch and bound.

    Branches on the uncovered element with the fewest covering balls; prunes
    with the greedy upper bound.  Deterministic: candidate balls are tried in
    ascending index order, so among minimum nets the lexicographically first
    (by sorted index list) discovered one is returned.
    """
    m = len(dist)
    if m == 0:
        return NetResult(eps, (), True, 0)
    balls = _balls(dist, eps)
    all_mask = (1 << m) - 1
    best = list(greedy_net(dist, eps))
    max_ball = max(bin(b).count("1") for b in balls)
    nodes = 0
    budget_hit = False

    def covers(j: int) -> list[int]:
        return [i for i in range(m) if (balls[i] >> j) & 1]

    cover_lists = [covers(j) for j in range(m)]

    def dfs(covered: int, chosen: list[int]):
        nonlocal best, nodes, budget_hit
        if budget_hit:
            return
        nodes += 1
        if nodes > node_budget:
            budget_hit = True
            return
        if covered == all_mask:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        # any completion needs at least ceil(uncovered / largest ball) more
        uncovered = bin(~covered & all_mask).count("1")
        needed = -(-uncovered // max_ball)
        if len(chosen) + needed >= len(best):
            return
        # pick the hardest uncovered element
        pivot = -1
        pivot_options = m + 1
        rem = ~covered & all_mask
        j = 0
        while rem:
            if rem & 1:
                options = len(cover_lists[j])
                if options < pivot_options:
                    pivot_options = options
                    pivot = j
            rem >>= 1
            j += 1
        for i in cover_lists[pivot]:
            chosen.append(i)
            dfs(covered | balls[i], chosen)
            chosen.pop()

    dfs(0, [])
    return NetResult(eps, tuple(sorted(best)), not budget_hit, nodes)


def net_oracle(
    dist: Sequence[Sequence], eps, node_budget: int = DEFAULT_NODE_BUDGET
) -> NetResult:
    """Greedy upper bound plus exact fallback, per the stated convention."""
    return minimum_net(dist, eps, node_budget=node_budget)


def covering_number_interval(lo, hi, eps) -> int:
    """Closed-ball covering number of a real interval at radius eps."""
    length = hi - lo
    if length <= 0:
        return 1
    return max(1, math.ceil(length / (2 * eps)))


@dataclass(frozen=True)
class GrowthProbe:
    """Net sizes of nested parameter-density subfamilies.

    ``strides`` thin the family by taking every k-th function (the family
    order is the parameter order), which models coarsening a parametric
    generator; refining back to the full grid should not move the net size
    of a relatively compact family by more than one.
    """

    eps: object
    sizes: tuple[int, ...]  # subfamily sizes, increasing
    net_sizes: tuple[int, ...]
    stable: bool  # densifying to the full family added at most one
    slope: float  # least-squares net growth per added function

    def describe(self) -> dict:
        return {
            "eps": str(self.eps),
            "family_sizes": list(self.sizes),
            "net_sizes": list(self.net_sizes),
            "stable": self.stable,
            "slope_per_function": self.slope,
        }


def growth_probe(
    dist: Sequence[Sequence], eps, strides: Sequence[int] = (4, 2, 1)
) -> GrowthProbe:
    if not strides or strides[-1] != 1:
        raise InvalidConfig("growth probe strides must end with 1 (the full family)")
    m = len(dist)
    sizes = []
    nets = []
    for stride in strides:
        idx = list(range(0, m, stride))
        if len(idx) < 1:
            continue
        sub = [[dist[i][j] for j in idx] for i in idx]
        sizes.append(len(idx))
        nets.append(net_oracle(sub, eps).size)
    stable = len(nets) < 2 or nets[-1] <= nets[-2] + 1
    slope = _least_squares_slope(sizes, nets)
    return GrowthProbe(eps, tuple(sizes), tuple(nets), stable, slope)


def _least_squares_slope(xs: Sequence[int], ys: Sequence[int]) -> float:
    n = len(xs)
    if n < 2:
        return 0.0
    mx = sum(xs) / n
    my = sum(ys) / n
    denom = sum((x - mx) ** 2 for x in xs)
    if denom == 0:
        return 0.0
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / denom
