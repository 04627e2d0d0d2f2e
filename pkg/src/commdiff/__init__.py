"""Exact toolkit for commuting difference operators of rank one.

Builds and verifies order-2 / odd-order commuting pairs on hyperelliptic
spectral curves, runs the dressing-chain identities behind them, and
transports polynomial-coefficient pairs into the first Weyl algebra.
"""

from .commutant import (
    AnsatzSpec,
    CommutantBasis,
    CommuteVerdict,
    find_commuting,
    find_monic_commuting,
    verify_commute,
)
from .errors import (
    AlgebraMismatchError,
    ChainConstructionError,
    CommDiffError,
    CurveExtractionError,
    NoSolutionWithinBounds,
    PointError,
    RingMismatchError,
    SizeLimitError,
    WindowError,
)
from .ore import (
    DifferenceOperator,
    DifferentialOperator,
    commutator,
    dx_operator,
    n_operator,
    op_eval_at,
    poly_eval,
    shift_operator,
    x_operator,
)
from .rings import (
    E,
    ExpPoly,
    GaussianRational,
    Poly,
    Rational,
    RationalFunction,
    SeqCoefficient,
)

__all__ = [
    "AnsatzSpec",
    "AlgebraMismatchError",
    "ChainConstructionError",
    "CommDiffError",
    "CommutantBasis",
    "CommuteVerdict",
    "CurveExtractionError",
    "DifferenceOperator",
    "DifferentialOperator",
    "E",
    "ExpPoly",
    "GaussianRational",
    "NoSolutionWithinBounds",
    "PointError",
    "Poly",
    "Rational",
    "RationalFunction",
    "RingMismatchError",
    "SeqCoefficient",
    "SizeLimitError",
    "WindowError",
    "commutator",
    "dx_operator",
    "find_commuting",
    "find_monic_commuting",
    "n_operator",
    "op_eval_at",
    "poly_eval",
    "shift_operator",
    "verify_commute",
    "x_operator",
]

__version__ = "0.1.0"
