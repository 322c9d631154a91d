"""Exact computer algebra for double structures on rational normal curves."""

from .ring import (
    QQ,
    BinaryForm,
    DEGREVLEX,
    LEX,
    MonomialOrder,
    Poly,
    PolyRing,
    PrimeField,
    binary_form,
    gcd_binary,
    ring_tu,
    ring_xn,
)
from .groebner import GroebnerBasis, buchberger, is_groebner_basis, normal_form
from .ideals import (
    HilbertData,
    Ideal,
    eliminate,
    h_vector,
    intersect,
    is_saturated,
    maximal_ideal,
    quotient,
    saturate,
)

__version__ = "0.1.0"
