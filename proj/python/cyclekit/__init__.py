"""Simulation and verification toolkit for zero-mean stationary cyclical series.

The heavy lifting happens in the compiled extension; this package re-exports
its functions.  Model specs and innovation families are JSON documents in the
same grammar the ``cyclekit`` command line tool reads.
"""

from ._cyclekit import (
    amplitude_pdf,
    apc_moment,
    arma_acf,
    empirical_acf,
    empirical_icv,
    even_moment_and_kurtosis,
    icv,
    icv_numeric,
    mc_product_moment,
    model_tag,
    normalize_spec,
    periodogram,
    psi_weights,
    sample_amplitudes,
    simulate,
    stationary_moment,
    theoretical_acf,
)

__all__ = [
    "amplitude_pdf",
    "apc_moment",
    "arma_acf",
    "empirical_acf",
    "empirical_icv",
    "even_moment_and_kurtosis",
    "icv",
    "icv_numeric",
    "mc_product_moment",
    "model_tag",
    "normalize_spec",
    "periodogram",
    "psi_weights",
    "sample_amplitudes",
    "simulate",
    "stationary_moment",
    "theoretical_acf",
]

__version__ = "0.1.0"
