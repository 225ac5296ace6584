from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from degreelab.corpus import random_borel_ideal
from degreelab.degree import (
    BoundViolation,
    bdeg,
    bdeg_monomial,
    bdeg_recursive,
    bdeg_standard,
    bound_evaluators,
    bound_for_report,
    e_shift,
    extremal_ideal,
    gen_a_first_form,
    hilbert_bdeg_bound_check,
    homog_bound,
    macaulay_rep,
    reduction_number_of_m,
    report_for_borel,
)
from degreelab.field import DomainError, PolyRing
from degreelab.groebner import IdealPresentation
from degreelab.io import parse_ideal
from degreelab.monomial_ideal import MonomialIdeal, binom, power_of_maximal
from degreelab.polynomial import random_form

R2 = PolyRing(2, names=("x", "y"))


def ideal(text, n=2, names="x,y"):
    return parse_ideal("ring n=%d char=32003 vars=%s\ngens: %s\n" % (n, names, text))


def J(*gens, ring=R2):
    return MonomialIdeal(ring, gens)


# ---------- bdeg ----------

def test_bdeg_of_borel_examples():
    assert bdeg_monomial(power_of_maximal(PolyRing(3), 2)) == 4
    assert bdeg_monomial(J((2, 0), (1, 1))) == 2
    assert bdeg_monomial(J((3, 0), (2, 1))) == 3


def test_bdeg_report_examples():
    rep = bdeg(ideal("x^2, y^2"))
    assert (rep.bdeg, rep.deg, rep.dim) == (4, 4, 0)
    rep = bdeg(ideal("x^3, x^2*y"))
    assert (rep.bdeg, rep.deg, rep.dim, rep.depth, rep.reg) == (3, 2, 1, 0, 2)
    assert not rep.cohen_macaulay and rep.bdeg > rep.deg
    rep = bdeg(ideal("x^2*y"))
    assert (rep.bdeg, rep.reg) == (3, 2)


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_hypersurface_bdeg_is_degree(q):
    rng = np.random.default_rng(q)
    for n in (2, 3):
        f = random_form(PolyRing(n), q, rng)
        rep = bdeg(IdealPresentation(f.ring, (f,)))
        assert rep.cohen_macaulay and rep.bdeg == rep.deg == q


def test_unit_ideal_rejected():
    with pytest.raises(DomainError):
        report_for_borel(J((0, 0)))


@st.composite
def borel(draw):
    n = draw(st.integers(1, 4))
    return random_borel_ideal(n, np.random.default_rng(draw(st.integers(0, 2**32))), max_deg=4)


@given(borel())
def test_routes_agree_and_calibrate(j):
    assert bdeg_standard(j) == bdeg_recursive(j)
    rep = report_for_borel(j)
    assert rep.deg <= rep.bdeg
    assert rep.reg < rep.bdeg
    assert (rep.bdeg == rep.deg) == rep.cohen_macaulay
    assert rep.embcod + 1 <= rep.bdeg


@st.composite
def random_ideals(draw):
    n = draw(st.integers(2, 3))
    ring = PolyRing(n)
    rng = np.random.default_rng(draw(st.integers(0, 2**32)))
    gens = tuple(random_form(ring, int(rng.integers(1, 4)), rng) for _ in range(draw(st.integers(1, 3))))
    return IdealPresentation(ring, gens)


@given(random_ideals(), st.integers(0, 2**32))
def test_bdeg_independent_of_seed(i, seed):
    a, b = bdeg(i, seed), bdeg(i, seed ^ 0xABCDEF)
    assert a.as_dict() == b.as_dict()


# ---------- Macaulay representations ----------

def _all_macaulay_reps(e, r):
    """Every sequence k_r > k_(r-1) > ... > k_j >= j >= 1 with sum C(k_i, i) = e."""
    limit = e + r  # C(k, r) >= k - r + 1, so larger tops overshoot
    out = []
    for length in range(1, r + 1):
        low = r - length + 1
        for ks in combinations(range(limit, 0, -1), length):
            terms = [(k, r - t) for t, k in enumerate(ks)]
            if terms[-1][0] < low:
                continue
            if sum(binom(k, i) for k, i in terms) == e:
                out.append(tuple(terms))
    return out


def test_macaulay_examples():
    assert macaulay_rep(5, 2).terms == ((3, 2), (2, 1))
    for r in range(1, 5):
        assert macaulay_rep(1, r).terms == ((r, r),)
        assert macaulay_rep(binom(r + 3, r), r).terms == ((r + 3, r),)
    with pytest.raises(DomainError):
        macaulay_rep(0, 2)


@given(st.integers(1, 40), st.integers(1, 3))
def test_macaulay_rep_unique(e, r):
    reps = _all_macaulay_reps(e, r)
    assert reps == [macaulay_rep(e, r).terms]


def test_e_shift_examples():
    assert e_shift(macaulay_rep(5, 2), 1) == 9
    assert e_shift(macaulay_rep(2, 1), 1) == 3
    for e in range(1, 10):
        assert e_shift(macaulay_rep(e, 2), 0) == e


def test_homog_bound_examples():
    assert homog_bound(2, 2, 2, 1, 0) == 3
    assert homog_bound(3, 4, 1, 0, 0) == 4
    for n, e, r, g in [(3, 5, 2, 1), (4, 2, 3, 2), (2, 7, 1, 0)]:
        assert homog_bound(n, e, r, g, g) == binom(n - g + r, r)
    for bad in [(2, 2, 2, 3, 0), (2, 0, 2, 1, 0), (2, 2, 0, 1, 0), (2, 2, 2, 1, 2)]:
        with pytest.raises(DomainError):
            homog_bound(*bad)


def test_extremal_examples():
    j = extremal_ideal(2, 1, 2, 2)
    assert j == J((3, 0), (2, 1))
    rep = report_for_borel(j)
    assert rep.bdeg == 3 == homog_bound(2, 2, 2, 1, 0) == bound_for_report(rep)
    m2 = extremal_ideal(3, 3, 1, 4)
    assert m2 == power_of_maximal(PolyRing(3), 2)
    assert report_for_borel(m2).bdeg == 4 == bound_for_report(report_for_borel(m2))
    with pytest.raises(DomainError):
        extremal_ideal(2, 2, 2, 1)
    with pytest.raises(DomainError):
        extremal_ideal(2, 1, 2, 4)


def test_bound_for_report_regularity_zero():
    rep = report_for_borel(MonomialIdeal(R2, [(1, 0)]))
    assert rep.reg == 0 and bound_for_report(rep) is None and rep.bdeg == rep.deg


# ---------- bound evaluators ----------

def test_bound_evaluator_examples():
    assert bound_evaluators("gen-c", Deg=2, d=1) == 1
    for big in range(1, 6):
        assert bound_evaluators("gen-b", Deg=big, s=1, d=1) == big
    assert bound_evaluators("embcod", n=3, dim=0) == 4
    assert bound_evaluators("nu-deg", Deg=5) == 5
    assert bound_evaluators("gen-b", Deg=2, s=3, d=2) == 2 * 3 + 1


@given(st.integers(0, 9), st.integers(1, 4), st.integers(0, 5), st.integers(0, 5), st.integers(0, 4), st.integers(0, 4))
def test_gen_a_forms_agree(deg_r, g, deg_ri, extra, d, r):
    big = deg_ri + extra
    assert bound_evaluators("gen-a", deg_r=deg_r, g=g, deg_ri=deg_ri, Deg_ri=big, d=d, r=r) == \
        gen_a_first_form(deg_r, g, deg_ri, big, d, r)


def test_bound_evaluator_errors():
    with pytest.raises(DomainError):
        bound_evaluators("gen-c", Deg=2, d=0)
    with pytest.raises(DomainError):
        bound_evaluators("gen-c", Deg=2)
    with pytest.raises(DomainError):
        bound_evaluators("nope", Deg=2)


# ---------- reduction number ----------

def test_reduction_number_examples():
    assert reduction_number_of_m(ideal("x^2")) == 1
    assert reduction_number_of_m(ideal("", 1, "x")) == 0
    assert reduction_number_of_m(ideal("x^3, x^2*y")) <= 2
    with pytest.raises(DomainError):
        reduction_number_of_m(ideal("x^2, y^2"))


def test_reduction_bound_fails_for_regular_rings():
    # k[x,y,z]/(x) is a polynomial ring in two variables: red(m) = 0 but the
    # bound evaluates to 2*1 - 4 + 1 = -1.
    r = ideal("x", 3, "x,y,z")
    assert reduction_number_of_m(r, enforce=False) == 0
    assert bound_evaluators("gen-c", Deg=1, d=2) == -1
    with pytest.raises(BoundViolation):
        reduction_number_of_m(r)


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_reduction_number_of_hypersurface(q):
    # for a Cohen-Macaulay standard graded ring red(m) equals reg
    rng = np.random.default_rng(10 + q)
    for n in (2, 3):
        f = random_form(PolyRing(n), q, rng)
        i = IdealPresentation(f.ring, (f,))
        assert reduction_number_of_m(i, enforce=False) == q - 1 == bdeg(i).reg


def test_hilbert_bdeg_bound_examples():
    assert hilbert_bdeg_bound_check(ideal("x^2*y"))
    assert hilbert_bdeg_bound_check(ideal("x"))
    with pytest.raises(DomainError):
        hilbert_bdeg_bound_check(ideal("x^3, x^2*y"))
