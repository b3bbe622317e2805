"""Cooriented arrangements, their sign data, faces and chambers."""

from .arrangement import (
    AffineForm,
    Arrangement,
    SignPair,
    SignVector,
    arrangement_to_text,
    cone,
    excess_codim,
    format_sign_vector,
    intersection_empty,
    negate_form,
    parse_arrangement,
    parse_sign_vector,
    read_arrangement,
    recoorient,
    restrict,
    sign_region_empty,
)
from .faces import chambers, enumerate_faces, sample_chambers
