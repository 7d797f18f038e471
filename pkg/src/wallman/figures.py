"""Render report JSON into figures and CSV data series.

Every report kind maps to a small set of matplotlib PNG files with the
underlying series written as CSV next to them, so the numbers in a plot can
always be re-read without parsing the figure.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import InputError


def _as_float(s) -> float:
    if isinstance(s, (int, float)):
        return float(s)
    return float(Fraction(str(s)))


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _save(fig, path: Path) -> None:
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_certificate(doc: dict, outdir: Path) -> list[Path]:
    written = []
    nets = doc.get("oracle", {}).get("nets", [])
    if nets:
        rows = [[n["eps"], n["size"], n["exact_minimum"]] for n in nets]
        csv_path = outdir / "net_sizes.csv"
        _write_csv(csv_path, ["eps", "net_size", "exact_minimum"], rows)
        written.append(csv_path)
        fig, ax = plt.subplots(figsize=(5, 3.5))
        xs = [_as_float(n["eps"]) for n in nets]
        ys = [n["size"] for n in nets]
        ax.plot(xs, ys, "o-")
        ax.set_xlabel(r"$\varepsilon$")
        ax.set_ylabel("net size")
        ax.set_title(f"Covering net size — {doc.get('label', '')}".rstrip(" —"))
        png = outdir / "net_sizes.png"
        _save(fig, png)
        written.append(png)

    growth = doc.get("oracle", {}).get("growth", [])
    if growth:
        rows = []
        fig, ax = plt.subplots(figsize=(5, 3.5))
        for g in growth:
            for m, n in zip(g["family_sizes"], g["net_sizes"]):
                rows.append([g["eps"], m, n, g["stable"], g["slope_per_function"]])
            ax.plot(
                g["family_sizes"],
                g["net_sizes"],
                "o-",
                label=rf"$\varepsilon$={g['eps']}",
            )
        csv_path = outdir / "net_growth.csv"
        _write_csv(
            csv_path, ["eps", "family_size", "net_size", "stable", "slope"], rows
        )
        written.append(csv_path)
        ax.set_xlabel("family size")
        ax.set_ylabel("net size")
        ax.set_title("Net growth under densification")
        ax.legend()
        png = outdir / "net_growth.png"
        _save(fig, png)
        written.append(png)

    modulus = None
    for check in doc.get("checks", []):
        if check.get("check") == "equicontinuous" and "modulus" in check.get("data", {}):
            modulus = check["data"]["modulus"]
            break
    if modulus:
        rows = [[m["delta"], m["omega"]] for m in modulus]
        csv_path = outdir / "modulus.csv"
        _write_csv(csv_path, ["delta", "omega"], rows)
        written.append(csv_path)
        fig, ax = plt.subplots(figsize=(5, 3.5))
        ax.loglog([m["delta"] for m in modulus], [max(m["omega"], 1e-12) for m in modulus], "o-")
        ax.set_xlabel(r"$\delta$")
        ax.set_ylabel(r"$\omega(\delta)$")
        ax.set_title("Empirical modulus of continuity")
        png = outdir / "modulus.png"
        _save(fig, png)
        written.append(png)
    return written


def render_limits(doc: dict, outdir: Path) -> list[Path]:
    written = []
    pairs = doc.get("pairs", [])
    if pairs:
        rows = [
            [p["i"], p["j"], p["d_ground"], p["d_extension"], p["distances_equal"]]
            for p in pairs
        ]
        csv_path = outdir / "distances.csv"
        _write_csv(
            csv_path, ["i", "j", "d_ground", "d_extension", "distances_equal"], rows
        )
        written.append(csv_path)
        d1 = [_as_float(p["d_ground"]) for p in pairs]
        d2 = [_as_float(p["d_extension"]) for p in pairs]
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        ax.scatter(d1, d2, s=12, alpha=0.7)
        top = max(d1 + d2 + [1e-9])
        ax.plot([0, top], [0, top], "k--", lw=0.8, label="equal")
        ax.plot([0, top], [0, 3 * top], "r:", lw=0.8, label="3x")
        ax.set_xlabel("ground sup distance")
        ax.set_ylabel("extension sup distance")
        ax.set_title("Two-sided continuity bounds")
        ax.legend()
        png = outdir / "distance_sandwich.png"
        _save(fig, png)
        written.append(png)
    return written


def render_selftest(doc: dict, outdir: Path) -> list[Path]:
    suites = doc.get("suites", {})
    rows = [
        [name, s["cases"], s["checks"], len(s["failures"])]
        for name, s in suites.items()
    ]
    csv_path = outdir / "suites.csv"
    _write_csv(csv_path, ["suite", "cases", "checks", "failures"], rows)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    names = list(suites)
    ax.bar(names, [suites[n]["checks"] for n in names], label="checks")
    fails = [len(suites[n]["failures"]) for n in names]
    if any(fails):
        ax.bar(names, fails, color="red", label="failures")
    ax.set_ylabel("count")
    ax.set_title(f"Selftest (seed {doc.get('seed')})")
    ax.legend()
    png = outdir / "suites.png"
    _save(fig, png)
    return [csv_path, png]


def render_verify(doc: dict, outdir: Path) -> list[Path]:
    checks = doc.get("checks", {})
    rows = [[name, r["pass"], r["checked"]] for name, r in checks.items()]
    csv_path = outdir / "checks.csv"
    _write_csv(csv_path, ["check", "pass", "checked"], rows)
    return [csv_path]


def render_report(doc: dict, outdir) -> list[Path]:
    """Dispatch on the report kind and render everything it supports."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    kind = doc.get("kind")
    if kind == "certificate" or "verdict" in doc:
        return render_certificate(doc, outdir)
    if kind == "limits" or "pairs" in doc:
        return render_limits(doc, outdir)
    if kind == "selftest" or "suites" in doc:
        return render_selftest(doc, outdir)
    if kind == "verify":
        return render_verify(doc, outdir)
    raise InputError("unrecognized report document; expected a wallman report JSON")
