"""Annihilator profiles, fingerprints and the distinguishing ladder."""

from .annihilators import (
    AnnProfile,
    ann_generated_by,
    ann_linear_generators,
    ann_profile,
    linear_annihilator_forms,
)
from .distinguish import Certificate, Distinction, Verdict, distinguish
from .fingerprint import Fingerprint, fingerprint
