"""Exact polynomial invariants of the reflection groups of orders 1152 and
14400 acting on R^4.

Everything is computed in exact arithmetic over Q(i, sqrt2, sqrt3, sqrt5):
group closures, Reynolds averages, Molien series, the plane-product
construction of the degree 6/8/12 invariants, and the lift construction of
the degree 12/20/30 invariants, together with a verification suite for all
the identities involved.
"""

from .kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .numfield import FieldElement
from .mpoly import Matrix4, MPoly
from .groups import (
    MatrixGroup,
    MolienSeries,
    SO4Element,
    builtin_generators,
    builtin_group,
    group_closure,
    invariant_dimension_series,
    molien_series,
    reynolds_sum,
)
from .geometry import (
    Couple,
    EigenLine,
    PlaneForm,
    SU2Element,
    binary_group,
    couple_plane,
    fixed_points,
    icosahedral_invariant,
    identify,
    invariant_by_lift,
    invariant_from_orbit,
    lift,
    line_orbits,
    orbit_plane_product,
    segre,
)
from .klein import KleinForm, klein_form, klein_pair, phi, phi_factor, verify_syzygy
from .driver import CheckReport, Workspace, run_suite

__version__ = "1.0.0"

__all__ = [
    "CheckReport",
    "Couple",
    "EigenLine",
    "FieldElement",
    "KERNEL_IMPLEMENTATION",
    "KleinForm",
    "MPoly",
    "Matrix4",
    "MatrixGroup",
    "MolienSeries",
    "PlaneForm",
    "SO4Element",
    "SU2Element",
    "Workspace",
    "binary_group",
    "builtin_generators",
    "builtin_group",
    "couple_plane",
    "fixed_points",
    "group_closure",
    "icosahedral_invariant",
    "identify",
    "invariant_by_lift",
    "invariant_dimension_series",
    "invariant_from_orbit",
    "klein_form",
    "klein_pair",
    "lift",
    "line_orbits",
    "molien_series",
    "orbit_plane_product",
    "phi",
    "phi_factor",
    "reynolds_sum",
    "run_suite",
    "segre",
    "verify_syzygy",
]
