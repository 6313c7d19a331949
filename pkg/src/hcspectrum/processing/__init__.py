"""Jantzen filtrations, unitary classification and the Gram-matrix oracle."""
