"""A square-zero module over F_3 built from three skew-symmetric matrices.

Its minimal number of generators is 3, but every linear form x leaves a
quotient of length 4, so no hyperplane section recovers the generator count.
"""
from itertools import product

from degreelab.pencil import (
    dil_bruteforce,
    length_mod_hyperplane,
    matlis_dual,
    module_type,
    nu,
    skew_example,
    skew_matrices,
    det_identically_zero,
)

L = skew_example(3)
print("length", L.length, "nu", nu(L), "type", module_type(L))

# every determinant of x*A + y*B + z*C vanishes (odd order skew matrix)
print("det identically zero:", det_identically_zero(skew_matrices(), 3))

quotients = {length_mod_hyperplane(L, c) for c in product(range(3), repeat=3) if any(c)}
print("length(L/xL) over all nonzero x:", quotients)

res = dil_bruteforce(L)
print("dil", res.dil, "from", res.submodule_count, "submodules")
print("dual has the same dil:", dil_bruteforce(matlis_dual(L)).dil)
