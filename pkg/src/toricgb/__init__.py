"""Exact toolkit for toric ideals of integer point configurations.

Computes generating sets, Groebner bases under arbitrary term orders,
Graver bases, circuits, universal Groebner bases, Groebner cones and
fans, regular triangulations, and solves integer programs by normal-form
reduction.  All arithmetic is exact.
"""

__version__ = "0.1.0"
