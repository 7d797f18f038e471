"""Canonical JSON input/output.

All reports are emitted with sorted keys, two-space indentation and ASCII
escapes, so identical runs produce byte-identical files.  Numeric payloads
are strings: exact rationals as ``p/q`` or integers, sampled-mode floats via
the shortest round-trip representation.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError


def canonical_dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def write_report(doc, path) -> None:
    Path(path).write_text(canonical_dumps(doc), encoding="ascii")


def load_json(path) -> dict:
    p = Path(path)
    if not p.exists():
        raise InputError(f"input file not found: {path}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc


def load_space_document(doc: dict):
    """Rebuild a Wallman space from a ``build`` output document.

    The stored element list is revalidated: it must contain the empty set
    and the full space and be closed under pairwise meets and joins.
    """
    from .lattice import ZeroSetLattice
    from .spaces import GroundSpace, element_from_bitstrings
    from .topology import build_space

    lat_desc = doc.get("lattice")
    if not isinstance(lat_desc, dict):
        raise InputError("space document needs a 'lattice' object")
    space = GroundSpace.from_description(lat_desc.get("space", {}))
    elements = [
        element_from_bitstrings(space, e) for e in lat_desc.get("elements", [])
    ]
    if not elements:
        raise InputError("space document lists no lattice elements")
    generators = [
        element_from_bitstrings(space, e) for e in lat_desc.get("generators", [])
    ]
    elements = sorted(set(elements), key=lambda e: e.sort_key())
    lattice = ZeroSetLattice(space, tuple(elements), tuple(generators))
    if space.empty() not in lattice or space.full() not in lattice:
        raise InputError("stored lattice must contain the empty set and the full space")
    for a in elements:
        for b in elements:
            if a.intersect(b) not in lattice or a.union(b) not in lattice:
                raise InputError(
                    "stored lattice is not closed under meets and joins"
                )
    return build_space(lattice)
