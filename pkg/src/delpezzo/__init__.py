"""Exact lattice, group and coordinate computations for finite group actions
on real del Pezzo surfaces."""

__version__ = "0.1.0"
