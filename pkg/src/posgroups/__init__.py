"""Finite groups with perfect order subsets: spectra, constructions, and order-level necessary conditions."""
from .groups import (
    AlternatingGroup,
    BudgetExceeded,
    Cyclic,
    DirectProduct,
    FiniteGroup,
    GeneratedPermutationGroup,
    InvalidParameters,
    SymmetricGroup,
    TwistedProduct,
    close_generators,
    element_order,
    enumerate_elements,
    make_metacyclic,
    make_twisted,
)
from .spectra import (
    OrderSpectrum,
    PosReport,
    cyclic_spectrum,
    order_spectrum,
    pos_verdict,
)

__version__ = "0.1.0"
