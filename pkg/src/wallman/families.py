"""Function families for the relative-compactness certifier.

Exact families pair bounded functions with the lattice they are certified
against.  Sampled families model bounded functions on the real line by a
finite sample grid plus optionally declared tail limits; the declared tails
stand in exactly for everything beyond the grid, so the sampled supremum
metric is ``max(window sup, tail differences)``.  The approximation lives in
that modeling step, never inside a check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .lattice import ZeroSetLattice, lattice_from_description
from .limits import BoundedFunction, function_from_description, sup_distance


@dataclass(frozen=True)
class ExactFamily:
    functions: tuple[BoundedFunction, ...]
    lattice: ZeroSetLattice
    label: str = ""

    def __post_init__(self):
        if not self.functions:
            raise InputError("a family must contain at least one function")
        for f in self.functions:
            if f.space != self.lattice.space:
                raise InputError("family functions must share the lattice's space")

    def __len__(self) -> int:
        return len(self.functions)

    def distance_matrix(self) -> list[list[Fraction]]:
        m = len(self.functions)
        dist = [[Fraction(0)] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                d = sup_distance(self.functions[i], self.functions[j])
                dist[i][j] = d
                dist[j][i] = d
        return dist


def exact_family_from_description(doc: dict) -> ExactFamily:
    """Parse {"space":..., "generators":..., "functions":[...], "label":...}."""
    if not isinstance(doc, dict):
        raise InputError("exact family description must be an object")
    lattice = lattice_from_description(
        {"space": doc.get("space", {}), "generators": doc.get("generators", [])}
    )
    funcs = tuple(
        function_from_description(lattice.space, fd) for fd in doc.get("functions", [])
    )
    return ExactFamily(funcs, lattice, str(doc.get("label", "")))


DEFAULT_TAIL_TOL = 0.1


@dataclass(frozen=True)
class SampledFamily:
    """Functions on the line, sampled on a common strictly increasing grid."""

    grid: np.ndarray  # shape (n,)
    samples: np.ndarray  # shape (m, n)
    tails_pos: tuple  # per function: float or None
    tails_neg: tuple
    label: str = ""
    tail_tol: float = DEFAULT_TAIL_TOL
    metric: str = "abs"

    def __post_init__(self):
        if self.samples.ndim != 2 or self.samples.shape[1] != self.grid.shape[0]:
            raise InputError("sample matrix must be (functions x grid points)")
        if self.grid.shape[0] < 2:
            raise InputError("the grid needs at least two sample points")
        if not np.all(np.diff(self.grid) > 0):
            raise InputError("grid must be strictly increasing")
        if not np.all(np.isfinite(self.samples)):
            raise InputError("samples must be finite")

    def __len__(self) -> int:
        return self.samples.shape[0]

    @property
    def has_tails(self) -> bool:
        return all(t is not None for t in self.tails_pos) and all(
            t is not None for t in self.tails_neg
        )

    @property
    def span_half(self) -> float:
        return float(max(abs(self.grid[0]), abs(self.grid[-1])))

    def min_spacing(self) -> float:
        return float(np.min(np.diff(self.grid)))

    def tail_deviation(self) -> float:
        """Largest gap between a boundary sample and its declared tail."""
        if not self.has_tails:
            return float("inf")
        dev = 0.0
        for i in range(len(self)):
            dev = max(dev, abs(self.samples[i, -1] - self.tails_pos[i]))
            dev = max(dev, abs(self.samples[i, 0] - self.tails_neg[i]))
        return dev

    def distance_matrix(self) -> np.ndarray:
        """Full sampled sup metric: window sup plus tail differences when
        every function declares tails."""
        m = len(self)
        dist = np.zeros((m, m))
        for i in range(m):
            diffs = np.max(np.abs(self.samples[i + 1 :] - self.samples[i]), axis=1)
            dist[i, i + 1 :] = diffs
            dist[i + 1 :, i] = diffs
        if self.has_tails:
            tp = np.array(self.tails_pos, dtype=float)
            tn = np.array(self.tails_neg, dtype=float)
            dist = np.maximum(dist, np.abs(tp[:, None] - tp[None, :]))
            dist = np.maximum(dist, np.abs(tn[:, None] - tn[None, :]))
        return dist

    def window_distance_matrix(self, radius: float) -> np.ndarray:
        """Sup distances over the window [-radius, radius] only."""
        sel = np.abs(self.grid) <= radius + 1e-12
        if not np.any(sel):
            raise InputError(f"window radius {radius} contains no grid points")
        sub = self.samples[:, sel]
        m = len(self)
        dist = np.zeros((m, m))
        for i in range(m):
            diffs = np.max(np.abs(sub[i + 1 :] - sub[i]), axis=1)
            dist[i, i + 1 :] = diffs
            dist[i + 1 :, i] = diffs
        return dist

    def describe(self) -> dict:
        return {
            "label": self.label,
            "functions": len(self),
            "grid_points": int(self.grid.shape[0]),
            "grid_range": [float(self.grid[0]), float(self.grid[-1])],
            "tails_declared": self.has_tails,
        }


def sampled_family_from_description(
    doc: dict, tail_tol: float = DEFAULT_TAIL_TOL
) -> SampledFamily:
    """Parse and validate the numeric family JSON.

    Declared tails must sit within ``tail_tol`` of the boundary samples;
    violations are load errors because they mean the grid does not reach the
    asymptotic regime the tails claim.
    """
    if not isinstance(doc, dict):
        raise InputError("sampled family description must be an object")
    try:
        grid = np.array([float(x) for x in doc["grid"]], dtype=float)
        entries = doc["functions"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("sampled family needs 'grid' and 'functions'") from exc
    samples = []
    tails_pos = []
    tails_neg = []
    for k, entry in enumerate(entries):
        try:
            row = np.array([float(x) for x in entry["samples"]], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"function {k}: bad 'samples'") from exc
        if row.shape[0] != grid.shape[0]:
            raise InputError(
                f"function {k}: {row.shape[0]} samples for {grid.shape[0]} grid points"
            )
        samples.append(row)
        tp = entry.get("tail_pos")
        tn = entry.get("tail_neg")
        tails_pos.append(None if tp is None else float(tp))
        tails_neg.append(None if tn is None else float(tn))
    fam = SampledFamily(
        grid,
        np.array(samples),
        tuple(tails_pos),
        tuple(tails_neg),
        str(doc.get("label", "")),
        tail_tol,
    )
    if fam.has_tails:
        dev = fam.tail_deviation()
        if dev > tail_tol:
            raise InputError(
                f"declared tails deviate from boundary samples by {dev:.6g} "
                f"(> tolerance {tail_tol:g}); extend the grid or fix the tails"
            )
    return fam
