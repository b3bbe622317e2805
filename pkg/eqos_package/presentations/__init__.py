"""Orlik-Solomon, equivariant and Varchenko-Gel'fand presentations and their checks."""

from .checks import (
    cone_formula_check,
    freeness_check,
    localization_check,
    match_published_ideal,
    psi_check,
    salvetti_cross_validation,
    vg_chamber_model,
    vg_evaluation_isomorphism,
)
from .ideals import (
    IdealPresentation,
    Provenance,
    eq_ideal,
    flip_coorientation,
    os_boundary,
    os_ideal,
    specialize,
)
from .io import read_ideal_file, write_ideal_file
from .oracles import CovectorOracle, GeometricOracle, SignOracle, excess_codim_from_signs
