"""Exact computation of graded invariants of homogeneous ideals over F_p."""
