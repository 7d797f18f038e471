"""Exact Wallman-compactification engine for finitely generated set lattices.

The package builds the space of ultrafilters of a finite set lattice over a
discrete ground space, verifies its topological package (star identities,
point embedding, compactness, Hausdorff separation), computes limits of
bounded functions along ultrafilters together with the extension transform,
and certifies relative compactness of function families by cross-checking
equicontinuity criteria against a brute-force epsilon-net oracle.
"""

from .spaces import (
    GroundSpace,
    LatticeElement,
    CanonicalMask,
    element_from_bitstrings,
    parse_value,
    format_value,
)
from .lattice import (
    ZeroSetLattice,
    generate_lattice,
    lattice_from_description,
    atoms,
    separation_check,
    SeparationWitness,
    SeparationFailure,
    smallest_element_containing,
)
from .filters import (
    FilterBase,
    Ultrafilter,
    principal_ultrafilter,
    enumerate_ultrafilters,
    extend_to_ultrafilter,
    verify_omega_axioms,
    point_trace,
)
from .topology import (
    WallmanSpace,
    StarSet,
    build_space,
    star_operator,
    verify_star_identities,
    verify_principal_embedding,
    check_compactness,
    check_hausdorff,
)
from .limits import (
    BoundedFunction,
    UltraLimitTable,
    ultrafilter_limit,
    limit_table,
    verify_limit_localization,
    extend_family,
    restrict_table,
    verify_extension_continuity,
    sup_distance,
    function_from_description,
)
from .families import (
    ExactFamily,
    SampledFamily,
    exact_family_from_description,
    sampled_family_from_description,
)
from .nets import net_oracle, greedy_net, minimum_net, covering_number_interval, growth_probe
from .certify import (
    Certificate,
    CheckResult,
    NumericConfig,
    certify_exact,
    certify_numeric,
    check_pointwise_bounded,
    check_ultra_equicontinuity,
    check_pointwise_precompact,
    check_equicontinuity,
    check_window_extension,
    check_tail_propagation,
)
from . import errors

__version__ = "0.1.0"
