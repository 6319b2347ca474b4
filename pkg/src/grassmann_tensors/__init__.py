"""Grassmann (Plücker) tensors, wedge products and multiview-geometry helpers."""

from .errors import (
    ArgumentError,
    DegenerateConfigurationError,
    DimensionError,
    GrassmannError,
    ResourceError,
    ValidationError,
)
from .grassmann import (
    AntisymTensor,
    antisymmetrize,
    commutation_tensor,
    generalized_sign,
    grassmann_from_columns,
    grassmann_from_vectors,
    identity_wedge,
    sign_tensor,
    wedge,
    wedge_vec,
)
from .multiview import (
    PlueckerMatrix,
    Polytope,
    WedgeFamily,
    epipolar_residual,
    intersect_planes,
    leave_one_out_wedges,
    orthonormalize_pair,
    plane_residual,
    plane_tensor,
    plucker_equivalent,
    plucker_line,
    polytope_contains,
    polytope_surface_residual,
    tensor_point_residual,
    wedge_family_independent,
)
from .tensor import (
    LIMITS,
    ModeAssignment,
    contract_mode,
    contract_paired,
    contract_paired_left,
    increasing_subsets,
    is_symmetric,
    outer,
    outer_product,
    paired_power,
    poly_eval,
    principal_subtensor,
    rank_one_power,
    subtensor,
)

__version__ = "0.1.0"
