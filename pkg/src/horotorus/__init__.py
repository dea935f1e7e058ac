"""Horocyclic deformations, Weil-Petersson geometry and Finsler norms on the
Teichmüller space of the torus, identified with the upper half-plane."""

from .deformation import (
    FNCoords,
    dehn_twist_point,
    earthquake_apply,
    earthquake_map,
    fn_from_point,
    fn_to_point,
    foliation_from_vector,
    horocyclic_vector,
    orbit_sample,
)
from .foliation import (
    Foliation,
    WeightedCurve,
    canonicalize,
    d_length,
    extremal_length,
    flat_length,
    from_weighted_curve,
    intersection,
    slope,
)
from .halfplane import (
    HalfPlanePoint,
    MoebiusMap,
    RealOneForm,
    TangentVec,
    hyperbolic_distance,
    hyperbolic_element,
    j0_apply,
    mobius_apply,
)
from .norms import NormKind, conorm, legendre_numeric, norm, quad_conorm_teich
from .quad import (
    BeltramiCoeff,
    QuadDiff,
    beltrami_to_period,
    duality_check,
    gardiner_differential,
    horo_deform_via_disc,
    horocyclic_vector_via_disc,
    hubbard_masur,
    infinitesimal_teich,
    pairing,
    teich_disc,
)
from .wp import WpForm, contract_omega, wp_gradient_length, wp_inner, wp_omega

__version__ = "0.1.0"
