"""Ground spaces and exact set algebra.

Two discrete ground spaces are supported:

* ``finite(n)`` — the points ``0..n-1``; a subset is a single bitmask.
* ``nat(period, prefix)`` — the natural numbers; a representable subset is
  determined by a prefix bitmask of length ``prefix`` and a periodic bitmask
  of length ``period`` that repeats beyond the prefix.  Membership of ``t``
  for ``t >= prefix`` is bit ``(t - prefix) % period`` of the periodic mask.

All set operations (meet, join, complement, subset, emptiness, membership)
are exact bit operations on Python ints.  Within one space, two elements are
equal iff their frame masks are equal; ``canonical()`` additionally reduces
the representation to minimal period and minimal prefix so that the same
subset of the naturals described in different frames compares equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import InputError

MAX_FINITE_SIZE = 64
MAX_PERIOD = 64
MAX_PREFIX = 64


def _bit(mask: int, i: int) -> int:
    return (mask >> i) & 1


def _lsb_index(mask: int) -> int:
    # mask must be nonzero
    return (mask & -mask).bit_length() - 1


def _mask_to_bits(mask: int, length: int) -> str:
    """Little-endian bitstring: character i is '1' iff point i is a member."""
    return "".join("1" if _bit(mask, i) else "0" for i in range(length))


def _bits_to_mask(bits: str) -> int:
    mask = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise InputError(f"bitstring may contain only 0/1, got {bits!r}")
    return mask


@dataclass(frozen=True)
class GroundSpace:
    """A discrete ground space: ``finite`` or eventually-periodic ``nat``."""

    kind: str  # "finite" | "nat"
    size: int = 0  # finite: number of points
    period: int = 0  # nat: periodic mask length
    prefix: int = 0  # nat: prefix mask length

    @staticmethod
    def finite(size: int) -> "GroundSpace":
        if not 1 <= size <= MAX_FINITE_SIZE:
            raise InputError(f"finite space size must be in 1..{MAX_FINITE_SIZE}")
        return GroundSpace("finite", size=size)

    @staticmethod
    def nat(period: int, prefix: int = 0) -> "GroundSpace":
        if not 1 <= period <= MAX_PERIOD:
            raise InputError(f"period must be in 1..{MAX_PERIOD}")
        if not 0 <= prefix <= MAX_PREFIX:
            raise InputError(f"prefix length must be in 0..{MAX_PREFIX}")
        return GroundSpace("nat", period=period, prefix=prefix)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def prefix_length(self) -> int:
        return self.size if self.is_finite else self.prefix

    def full_prefix_mask(self) -> int:
        return (1 << self.prefix_length) - 1

    def full_periodic_mask(self) -> int:
        return 0 if self.is_finite else (1 << self.period) - 1

    def element(self, prefix_mask: int, periodic_mask: int = 0) -> "LatticeElement":
        if prefix_mask < 0 or prefix_mask > self.full_prefix_mask():
            raise InputError("prefix mask outside the space frame")
        if periodic_mask < 0 or periodic_mask > self.full_periodic_mask():
            raise InputError("periodic mask outside the space frame")
        return LatticeElement(self, prefix_mask, periodic_mask)

    def from_points(self, points) -> "LatticeElement":
        """Element from explicit points (finite spaces, or nat prefix points)."""
        mask = 0
        for p in points:
            if p < 0 or p >= self.prefix_length:
                raise InputError(f"point {p} outside the space frame")
            mask |= 1 << p
        return self.element(mask)

    def from_residues(self, residues, prefix_points=()) -> "LatticeElement":
        """Nat element from periodic residue classes plus extra prefix points."""
        if self.is_finite:
            raise InputError("residue classes only exist in nat spaces")
        pmask = 0
        for r in residues:
            if r < 0 or r >= self.period:
                raise InputError(f"residue {r} outside period {self.period}")
            pmask |= 1 << r
        elem = self.from_points(prefix_points)
        return LatticeElement(self, elem.prefix_mask, pmask)

    def empty(self) -> "LatticeElement":
        return LatticeElement(self, 0, 0)

    def full(self) -> "LatticeElement":
        return LatticeElement(self, self.full_prefix_mask(), self.full_periodic_mask())

    def representative_points(self) -> list[int]:
        """Finite point set covering every membership behaviour.

        Finite spaces: all points.  Nat spaces: the prefix points plus one
        point per residue class of the first full period beyond the prefix.
        """
        if self.is_finite:
            return list(range(self.size))
        return list(range(self.prefix + self.period))

    def describe(self) -> dict:
        if self.is_finite:
            return {"kind": "finite", "size": self.size}
        return {"kind": "nat", "period": self.period, "prefix": self.prefix}

    @staticmethod
    def from_description(desc: dict) -> "GroundSpace":
        try:
            kind = desc["kind"]
            if kind == "finite":
                return GroundSpace.finite(int(desc["size"]))
            if kind == "nat":
                return GroundSpace.nat(int(desc["period"]), int(desc.get("prefix", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad space description: {desc!r}") from exc
        raise InputError(f"unknown space kind {kind!r}")


def _minimal_period(mask: int, period: int) -> tuple[int, int]:
    """Reduce a periodic mask to its minimal period.

    An infinite periodic sequence with periods p and d also has period
    gcd(p, d), so the minimal period always divides the frame period.
    """
    for d in range(1, period + 1):
        if period % d:
            continue
        if all(_bit(mask, i) == _bit(mask, i % d) for i in range(period)):
            return mask & ((1 << d) - 1), d
    return mask, period  # unreachable


@dataclass(frozen=True)
class CanonicalMask:
    """Frame-independent canonical form of a representable subset."""

    prefix_length: int
    prefix_mask: int
    period: int  # 0 for finite-space subsets
    periodic_mask: int

    def key(self) -> tuple:
        return (self.period, self.periodic_mask, self.prefix_length, self.prefix_mask)


@dataclass(frozen=True)
class LatticeElement:
    """A representable subset of a ground space, in the space's fixed frame."""

    space: GroundSpace
    prefix_mask: int
    periodic_mask: int = 0

    def _check_same_space(self, other: "LatticeElement") -> None:
        if self.space != other.space:
            raise InputError("elements belong to different ground spaces")

    # -- set algebra ---------------------------------------------------

    def intersect(self, other: "LatticeElement") -> "LatticeElement":
        self._check_same_space(other)
        return LatticeElement(
            self.space,
            self.prefix_mask & other.prefix_mask,
            self.periodic_mask & other.periodic_mask,
        )

    def union(self, other: "LatticeElement") -> "LatticeElement":
        self._check_same_space(other)
        return LatticeElement(
            self.space,
            self.prefix_mask | other.prefix_mask,
            self.periodic_mask | other.periodic_mask,
        )

    def complement(self) -> "LatticeElement":
        return LatticeElement(
            self.space,
            self.prefix_mask ^ self.space.full_prefix_mask(),
            self.periodic_mask ^ self.space.full_periodic_mask(),
        )

    def difference(self, other: "LatticeElement") -> "LatticeElement":
        return self.intersect(other.complement())

    __and__ = intersect
    __or__ = union

    def is_empty(self) -> bool:
        return self.prefix_mask == 0 and self.periodic_mask == 0

    def is_full(self) -> bool:
        return (
            self.prefix_mask == self.space.full_prefix_mask()
            and self.periodic_mask == self.space.full_periodic_mask()
        )

    def is_subset(self, other: "LatticeElement") -> bool:
        self._check_same_space(other)
        return (
            self.prefix_mask & ~other.prefix_mask == 0
            and self.periodic_mask & ~other.periodic_mask == 0
        )

    def contains_point(self, t: int) -> bool:
        if t < 0:
            raise InputError("points are nonnegative")
        space = self.space
        if space.is_finite:
            if t >= space.size:
                raise InputError(f"point {t} outside finite space of size {space.size}")
            return bool(_bit(self.prefix_mask, t))
        if t < space.prefix:
            return bool(_bit(self.prefix_mask, t))
        return bool(_bit(self.periodic_mask, (t - space.prefix) % space.period))

    def is_infinite(self) -> bool:
        return self.periodic_mask != 0

    def point_count(self) -> int | None:
        """Number of points, or None when infinite."""
        if self.periodic_mask:
            return None
        return bin(self.prefix_mask).count("1")

    def min_point(self) -> int:
        """Smallest member point."""
        if self.prefix_mask:
            return _lsb_index(self.prefix_mask)
        if self.periodic_mask:
            return self.space.prefix + _lsb_index(self.periodic_mask)
        raise InputError("empty set has no points")

    def eventual_min_point(self) -> int:
        """Smallest member point in the eventual regime.

        For an infinite set this is the first point governed by the periodic
        mask; for a finite set it is simply the smallest point.  This is the
        canonical witness used for limits along ultrafilters.
        """
        if self.periodic_mask:
            return self.space.prefix + _lsb_index(self.periodic_mask)
        return self.min_point()

    def prefix_points(self) -> Iterator[int]:
        for t in range(self.space.prefix_length):
            if _bit(self.prefix_mask, t):
                yield t

    def residues(self) -> Iterator[int]:
        for r in range(self.space.period if not self.space.is_finite else 0):
            if _bit(self.periodic_mask, r):
                yield r

    # -- canonical form ------------------------------------------------

    def sort_key(self) -> tuple[int, int]:
        """Deterministic total order inside one space frame."""
        return (self.prefix_mask, self.periodic_mask)

    def canonical(self) -> CanonicalMask:
        """Frame-independent canonical form: minimal period, then the prefix
        shortened while its last bit agrees with the rotated periodic mask."""
        space = self.space
        if space.is_finite:
            return CanonicalMask(space.size, self.prefix_mask, 0, 0)
        c, d = _minimal_period(self.periodic_mask, space.period)
        k = space.prefix
        b = self.prefix_mask
        while k > 0 and _bit(b, k - 1) == _bit(c, d - 1):
            # dropping prefix position k-1 rotates the periodic mask right
            c = ((c << 1) | _bit(c, d - 1)) & ((1 << d) - 1)
            b &= (1 << (k - 1)) - 1
            k -= 1
        return CanonicalMask(k, b, d, c)

    def same_subset(self, other: "LatticeElement") -> bool:
        """Frame-independent equality of the described subsets."""
        if self.space == other.space:
            return (self.prefix_mask, self.periodic_mask) == (
                other.prefix_mask,
                other.periodic_mask,
            )
        if self.space.is_finite != other.space.is_finite:
            return False
        return self.canonical() == other.canonical()

    # -- presentation ----------------------------------------------------

    def bitstrings(self) -> dict:
        out = {"prefix": _mask_to_bits(self.prefix_mask, self.space.prefix_length)}
        if not self.space.is_finite:
            out["periodic"] = _mask_to_bits(self.periodic_mask, self.space.period)
        return out

    def __repr__(self) -> str:
        if self.space.is_finite:
            pts = ",".join(str(t) for t in self.prefix_points())
            return f"{{{pts}}}" if pts else "{}"
        b = self.bitstrings()
        return f"Elem(prefix={b['prefix']!r}, periodic={b['periodic']!r})"


def element_from_bitstrings(space: GroundSpace, desc: dict) -> LatticeElement:
    """Parse ``{"prefix": "0101", "periodic": "01"}`` in the space frame.

    Finite spaces accept a prefix shorter than the size (zero padded); nat
    spaces require exact frame lengths because alignment is significant.
    """
    if not isinstance(desc, dict):
        raise InputError(f"element description must be an object, got {desc!r}")
    prefix_bits = desc.get("prefix", "")
    periodic_bits = desc.get("periodic", "")
    if space.is_finite:
        if periodic_bits:
            raise InputError("finite-space elements have no periodic mask")
        if len(prefix_bits) > space.size:
            raise InputError(
                f"prefix bitstring longer than the space ({len(prefix_bits)} > {space.size})"
            )
        return space.element(_bits_to_mask(prefix_bits))
    if len(prefix_bits) != space.prefix:
        raise InputError(
            f"nat prefix bitstring must have length {space.prefix}, got {len(prefix_bits)}"
        )
    if len(periodic_bits) != space.period:
        raise InputError(
            f"nat periodic bitstring must have length {space.period}, got {len(periodic_bits)}"
        )
    return space.element(_bits_to_mask(prefix_bits), _bits_to_mask(periodic_bits))


def parse_value(v) -> Fraction:
    """Exact rational from an int, a decimal string, or a 'p/q' string."""
    if isinstance(v, bool):
        raise InputError("boolean is not a numeric value")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        # floats come from hand-written JSON; go through str to keep the
        # author's decimal intent rather than the binary expansion
        return Fraction(str(v))
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse value {v!r}") from exc
    if isinstance(v, Fraction):
        return v
    raise InputError(f"cannot parse value {v!r}")


def format_value(q: Fraction) -> str:
    """Exact rational string; integers print without a denominator."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
