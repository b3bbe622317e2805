"""Salvetti complex of a central arrangement and its (equivariant) cohomology over GF(2)."""

from .complex import (
    OrderComplex,
    build_order_complex,
    equivariant_cohomology_gf2,
    euler_characteristic,
    homology_gf2,
    involution_on_complex,
)
from .salvetti import (
    FacePoset,
    SalvettiElement,
    SalvettiPoset,
    build_salvetti,
    fixed_points,
    involution,
    read_sign_vector_file,
)
