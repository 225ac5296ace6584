import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from degreelab.field import PolyRing
from degreelab.groebner import (
    IdealPresentation,
    buchberger,
    check_buchberger_criterion,
    contains_ideal,
    degree_piece_dim,
    hilbert_function_direct,
    is_reduced,
    minimal_generators,
    nilpotency_index,
    normal_form,
    same_ideal,
    saturate_wrt_last,
)
from degreelab.io import parse_ideal
from degreelab.monomial_ideal import MonomialIdeal, hilbert
from degreelab.monomials import monomials_of_degree
from degreelab.polynomial import Polynomial, random_form

from oracles import hilbert_count


def ideal(text, n=2, names="x,y"):
    return parse_ideal("ring n=%d char=32003 vars=%s\ngens: %s\n" % (n, names, text))


def mono(ideal_, *gens):
    return MonomialIdeal(ideal_.ring, gens)


def test_monomial_input_is_its_own_basis():
    i = ideal("x^2, x*y")
    gb = buchberger(i)
    assert set(gb.leading_monomials()) == {(2, 0), (1, 1)}
    assert gb.initial == mono(i, (2, 0), (1, 1))


def test_one_s_pair_example():
    i = ideal("x^2+y^2, x*y")
    gb = buchberger(i)
    assert gb.initial == mono(i, (2, 0), (1, 1), (0, 3))
    assert check_buchberger_criterion(gb) and is_reduced(gb)
    # degreewise linear algebra agrees through degree 4
    assert hilbert_function_direct(i, 4) == list(hilbert(gb.initial, 4).values) == [1, 2, 1, 0, 0]


def test_zero_ideal_basis():
    i = ideal("")
    gb = buchberger(i)
    assert gb.elements == () and gb.initial.is_zero()


def test_normal_forms():
    i = ideal("x^2+y^2, x*y")
    gb = buchberger(i)
    ring = i.ring
    assert normal_form(Polynomial.monomial(ring, (0, 3)), gb).is_zero()
    one = Polynomial.monomial(ring, (0, 0))
    assert normal_form(one, gb) == one
    for g in i.gens:
        assert normal_form(g, gb).is_zero()


def test_minimal_generators():
    kept, nu = minimal_generators(ideal("x^2, x*y, x^2*y"))
    assert nu == 2 and {g.leading_monomial() for g in kept} == {(2, 0), (1, 1)}
    _, nu = minimal_generators(ideal("x^2, x*y, x*z, y^2, y*z, z^2", 3, "x,y,z"))
    assert nu == 6
    kept, nu = minimal_generators(ideal("x^2+y^2, x*y, y^3"))
    assert nu == 2


def test_saturation_examples():
    i = ideal("x^2, x*y")
    assert same_ideal(saturate_wrt_last(i, seed=1), ideal("x"))
    x = ideal("x")
    assert same_ideal(saturate_wrt_last(x, seed=2), x)
    m3 = ideal("x^3, x^2*y, x*y^2, y^3")
    assert same_ideal(saturate_wrt_last(m3, seed=3), ideal("1"))


def test_saturation_in_three_variables():
    # (x) ∩ (x, y, z)^2 saturates to (x)
    i = ideal("x^2, x*y, x*z", 3, "x,y,z")
    assert same_ideal(saturate_wrt_last(i, seed=5), ideal("x", 3, "x,y,z"))


def test_nilpotency_examples():
    assert nilpotency_index(ideal("x^2, x*y, y^2")) == 2
    assert nilpotency_index(ideal("x^2+y^2, x*y")) == 3
    assert nilpotency_index(ideal("x")) == math.inf


def test_contains():
    assert contains_ideal(ideal("x^2+y^2, x*y"), ideal("y^3"))
    assert not contains_ideal(ideal("x^2+y^2, x*y"), ideal("y^2"))


@st.composite
def random_ideals(draw):
    n = draw(st.integers(1, 3))
    ring = PolyRing(n, 101)
    seed = draw(st.integers(0, 2**32))
    rng = np.random.default_rng(seed)
    count = draw(st.integers(1, 3))
    gens = tuple(random_form(ring, int(rng.integers(1, 4)), rng) for _ in range(count))
    return IdealPresentation(ring, gens)


@given(random_ideals())
def test_groebner_properties(i):
    gb = buchberger(i)
    assert check_buchberger_criterion(gb)
    assert is_reduced(gb)
    for g in i.gens:
        assert normal_form(g, gb).is_zero()
    # Hilbert function of S/I equals that of S/init(I), computed two ways
    top = max(g.degree() for g in i.gens) + i.ring.n
    direct = hilbert_function_direct(i, top)
    assert direct == hilbert_count(gb.initial.gens, i.ring.n, top)
    assert direct == list(hilbert(gb.initial, top).values)


@given(random_ideals(), st.integers(0, 4))
def test_degree_piece_dim_matches_basis(i, k):
    gb = buchberger(i)
    inside = sum(1 for m in monomials_of_degree(i.ring.n, k) if m in gb.initial)
    assert degree_piece_dim(i, k) == inside


def test_truncated_basis():
    i = ideal("x^2+y^2, x*y")
    gb = buchberger(i, max_degree=2)
    assert (0, 3) not in {g.leading_monomial() for g in gb.elements}


def test_rejects_inhomogeneous_generators():
    ring = PolyRing(2)
    with pytest.raises(ValueError):
        IdealPresentation(ring, (Polynomial(ring, {(1, 0): 1, (0, 0): 1}),))
