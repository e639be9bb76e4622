"""Pseudorandom binary sequences and their classical / arithmetic correlations."""

from ._backend import NAME as BACKEND
from .algebra import Gf2Poly, ResidueBits
from .correlation import (
    CorrelationProfile,
    arithmetic_autocorrelation,
    arithmetic_crosscorrelation,
    classical_crosscorrelation,
    omega,
    profile,
)
from .sequences import (
    BinarySequence,
    SequenceSpec,
    l_sequence,
    legendre_sequence,
    m_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinarySequence",
    "CorrelationProfile",
    "Gf2Poly",
    "ResidueBits",
    "SequenceSpec",
    "arithmetic_autocorrelation",
    "arithmetic_crosscorrelation",
    "classical_crosscorrelation",
    "l_sequence",
    "legendre_sequence",
    "m_sequence",
    "omega",
    "profile",
]
