"""Test suite for bspline-bbf."""
