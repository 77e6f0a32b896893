"""Exact reconstruction of the integral Chow rings of stacks of hyperelliptic Weierstrass points."""

from .chowcore import (
    ChowPresentation,
    Family,
    TorusActionSpec,
    action_catalog,
    discriminant_presentation,
    hyperplane_class,
    localize,
    psi_class,
    weierstrass_presentation,
)
from .exactpoly import INHOMOGENEOUS, Polynomial, RingSpec
from .zideal import IdealZ, MembershipCertificate, StrongGroebnerBasis, normal_form, strong_groebner, verify_certificate
from .zlattice import PicardGroup, element_order, quotient_structure, smith_normal_form

__version__ = "0.1.0"
