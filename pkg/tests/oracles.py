"""Independent brute-force oracles used to cross-check the library.

Everything here works on plain frozensets and (for nets) raw distance
matrices, deliberately sharing no code with the implementation under test.
"""

from itertools import combinations


def closure_oracle(universe: frozenset, generators) -> set:
    """Fixed-point closure under pairwise union/intersection."""
    family = {frozenset(), frozenset(universe)} | {frozenset(g) for g in generators}
    while True:
        new = set()
        for a in family:
            for b in family:
                for c in (a & b, a | b):
                    if c not in family:
                        new.add(c)
        if not new:
            return family
        family |= new


def atoms_oracle(family) -> set:
    nonempty = [s for s in family if s]
    return {
        s
        for s in nonempty
        if not any(o < s for o in nonempty)
    }


def ultrafilters_oracle(family) -> set:
    """All maximal finite-intersection subfamilies, by literal definition.

    Exponential in the family size; keep the lattice small.
    """
    elems = sorted(family, key=lambda s: (len(s), sorted(s)))
    m = len(elems)
    fip_families = []
    for mask in range(1, 1 << m):
        subset = [elems[i] for i in range(m) if (mask >> i) & 1]
        ok = True
        for r in range(1, len(subset) + 1):
            if not ok:
                break
            for combo in combinations(subset, r):
                inter = frozenset.intersection(*combo)
                if not inter:
                    ok = False
                    break
        if ok:
            fip_families.append(frozenset(subset))
    maximal = {
        fam
        for fam in fip_families
        if not any(other > fam for other in fip_families)
    }
    return maximal


def star_oracle(family, ultrafilter_families, universe, u) -> set:
    """Literal star membership: the complement of u is not a member.

    Faithful on complement-closed lattices, where the complement is always
    itself a lattice element.
    """
    comp = frozenset(universe) - frozenset(u)
    return {
        i
        for i, fam in enumerate(ultrafilter_families)
        if comp not in fam
    }


def min_net_oracle(dist, eps) -> int:
    """Smallest closed-ball cover size by exhaustive subset search."""
    m = len(dist)
    balls = []
    for i in range(m):
        balls.append(frozenset(j for j in range(m) if dist[i][j] <= eps))
    everyone = frozenset(range(m))
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            covered = frozenset()
            for i in combo:
                covered |= balls[i]
            if covered == everyone:
                return size
    return m


def modulus_oracle(grid, samples, delta) -> float:
    """Empirical modulus by the naive double loop."""
    best = 0.0
    n = len(grid)
    for i in range(n):
        for j in range(i + 1, n):
            if grid[j] - grid[i] <= delta + 1e-12:
                for row in samples:
                    best = max(best, abs(row[i] - row[j]))
            else:
                break
    return best
