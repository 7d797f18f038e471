"""Exception hierarchy for the wallman package."""


class WallmanError(Exception):
    """Base class for all package errors."""


class InputError(WallmanError):
    """Malformed or inconsistent input (JSON schema, bitstrings, config)."""


class InvalidConfig(InputError):
    """A run configuration that cannot be executed (e.g. empty eps grid)."""


class GeneratorNotInSpace(InputError):
    """A lattice generator uses points outside the declared ground space."""


class LatticeTooLarge(WallmanError):
    """Closure generation exceeded the configured element cap."""

    def __init__(self, cap):
        super().__init__(f"lattice closure exceeded {cap} elements")
        self.cap = cap


class NotDisjoint(WallmanError):
    """Separation was requested for two sets that intersect."""


class EmptyIntersection(WallmanError):
    """A filter base violates the finite-intersection property."""


class NotMaximal(WallmanError):
    """A point's trace family is not maximal in the lattice.

    Carries the element that could be added while keeping the
    finite-intersection property.
    """

    def __init__(self, point, addable):
        super().__init__(
            f"trace of point {point} is not maximal; {addable!r} can be added"
        )
        self.point = point
        self.addable = addable


class ComplementNotInLattice(WallmanError):
    """Strict star-operator mode: the complement of the open set is not a
    lattice element, so ultrafilter membership is undefined."""


class AmbiguousLimit(WallmanError):
    """The lattice is too coarse to pin the limit along this ultrafilter
    to a single value.  Carries the candidate values."""

    def __init__(self, candidates, function=None, ultrafilter=None):
        cand = ", ".join(str(c) for c in candidates)
        super().__init__(f"limit not unique at this lattice resolution: {{{cand}}}")
        self.candidates = tuple(candidates)
        self.function = function
        self.ultrafilter = ultrafilter


class GridTooCoarse(WallmanError):
    """A requested continuity scale is below the sample-grid resolution."""
