"""Two-dimensional offset linear canonical transforms, complex and quaternion.

Submodules
----------
quaternion      Hamilton algebra and the orthogonal plane split.
fields          Lattices, sampled fields, resampling and CSV I/O.
olct            Complex 2D transform (direct and FFT paths), inverse, laws.
gaussian        Closed-form transform of Gaussians.
functionals     Norms, weighted energies, moments, entropy, tails.
inequalities    Uncertainty inequalities, effect probes, table sweeps.
qolct           Two-sided quaternion transform and its inequality suite.
calibration     Reference table values and reconstructed closed forms.
cli             ``olctkit`` command line.
"""
from .errors import (BadExponent, DegenerateB, GridMismatch, InsufficientSupport, IOFailure,
                     LambdaOutOfRange, NonPowerOfTwo, NotNormalized, NumericalError, OlctError,
                     ParseError, SymplecticViolation, UnsupportedOrder, UnsupportedProbe,
                     ValidationError, ZeroScale, ZeroTails)
from .fields import ComplexField2D, DensityField2D, Grid2D, QuaternionField2D
from .functionals import RectSet
from .gaussian import GaussianSpec, gaussian_field, gaussian_olct_closed
from .inequalities import (EffectReport, InequalityReport, check_entropy, check_heisenberg,
                           check_logup, check_nazarov, check_pitt, check_young, effect_probe,
                           make_table)
from .olct import (OLCTParams, derivative_op, inverse_olct_2d, olct_2d, olct_2d_direct,
                   olct_2d_fft, scale_map, shift_law, validate_params)
from .qolct import (QSpectrum2D, check_q_identities, check_q_inequality, inverse_qolct,
                    qolct_direct, qolct_via_ops, qolct_via_qft)
from .quaternion import OpsPair, Quaternion, ops_split, q_mul

__version__ = "0.1.0"

__all__ = [
    "ComplexField2D",
    "DensityField2D",
    "Grid2D",
    "QuaternionField2D",
    "BadExponent",
    "DegenerateB",
    "GridMismatch",
    "InsufficientSupport",
    "IOFailure",
    "LambdaOutOfRange",
    "NonPowerOfTwo",
    "NotNormalized",
    "NumericalError",
    "OlctError",
    "ParseError",
    "SymplecticViolation",
    "UnsupportedOrder",
    "UnsupportedProbe",
    "ValidationError",
    "ZeroScale",
    "ZeroTails",
    "RectSet",
    "GaussianSpec",
    "gaussian_field",
    "gaussian_olct_closed",
    "EffectReport",
    "InequalityReport",
    "check_entropy",
    "check_heisenberg",
    "check_logup",
    "check_nazarov",
    "check_pitt",
    "check_young",
    "effect_probe",
    "make_table",
    "OLCTParams",
    "derivative_op",
    "inverse_olct_2d",
    "olct_2d",
    "olct_2d_direct",
    "olct_2d_fft",
    "scale_map",
    "shift_law",
    "validate_params",
    "QSpectrum2D",
    "check_q_identities",
    "check_q_inequality",
    "inverse_qolct",
    "qolct_direct",
    "qolct_via_ops",
    "qolct_via_qft",
    "OpsPair",
    "Quaternion",
    "ops_split",
    "q_mul",
]
