"""Discretized fractional Schroedinger operator as a truncated Toeplitz matrix:
weights, assembly, symbol, spectra and Szego strong-limit asymptotics."""

from .errors import ConvergenceError, DomainError
from .glweights import WeightSequence, weight_binomial, weight_partial_sum, weights
from .spectra import SpectralReport, jacobi_eigen, lu_logdet, spectral_report, tridiagonal_exact
from .szego import SzegoCoefficients, asymptote_study, szego_coefficients, szego_constants
from .toeplitz import StableParams, SymbolSample, ToeplitzOperator, assemble, symbol_closed, tridiagonal_laplacian

__all__ = [
    "ConvergenceError",
    "DomainError",
    "SpectralReport",
    "StableParams",
    "SymbolSample",
    "SzegoCoefficients",
    "ToeplitzOperator",
    "WeightSequence",
    "assemble",
    "asymptote_study",
    "jacobi_eigen",
    "lu_logdet",
    "spectral_report",
    "symbol_closed",
    "szego_coefficients",
    "szego_constants",
    "tridiagonal_exact",
    "tridiagonal_laplacian",
    "weight_binomial",
    "weight_partial_sum",
    "weights",
]
