"""
bspline-bbf - Bernstein-Bezier coefficients of B-spline basis functions

Computes the coefficients of all non-trivial B-splines of degree m over one
non-empty knot span in O(m^2) operations, with O(m^3) and exact reference
methods, an identity checker and an accuracy/timing experiment harness.
"""

__version__ = "0.1.0"
