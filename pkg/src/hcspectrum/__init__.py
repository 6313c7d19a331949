"""Exact Harish-Chandra module families, Jantzen filtrations and unitary spectra."""

__all__ = [
    "arith",
    "family",
    "duality",
    "processing",
    "config",
    "cli",
]
