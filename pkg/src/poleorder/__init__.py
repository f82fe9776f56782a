"""Pole order filtrations and D-module lengths for quasi-homogeneous
isolated hypersurface singularities."""

__version__ = "0.1.0"
