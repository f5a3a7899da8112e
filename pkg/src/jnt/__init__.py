"""Numerical toolkit: offset-based BLAS, dense and sparse solvers, special functions."""

__version__ = "0.1.0"
