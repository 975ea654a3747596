"""Verification kit for the even subalgebra of Cl(4,0), its norms, the
3-sphere singlet simulation and CHSH operator spectra."""

from .even_algebra import (
    Hyperbolic,
    KElement,
    Quaternion,
    geometric_norm,
    hyperbolic_sqrt,
    k_product,
    quadratic_form,
    scalar_norm,
    verify_composition,
)
from .multivector import Multivector, geometric_product, reverse
from .vectors import UnitVector3

__version__ = "0.1.0"
