"""Exact Heegaard Floer correction terms of lens spaces and the
obstruction pipeline for distance-one surgeries from L(3,1) to L(n,1)."""

from .band import banding_possible, kanenobu_check, witness_catalog
from .classify import THEOREM_SET, classify, scan
from .exactnum import Rational, integral_roots_monic, is_square_mod, square_equivalent
from .lens import LensSpace, conjugate_spin, d_invariant, d_L_n1, normalize, self_conjugate_spins
from .linkform import LinkingForm, filling_linking_form, linking_forms_equivalent, target_linking_form

__version__ = "0.1.0"
