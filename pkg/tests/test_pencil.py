import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from degreelab.field import DomainError, PolyRing
from degreelab.monomial_ideal import MonomialIdeal
from degreelab.pencil import (
    OracleBudgetError,
    PencilModule,
    build_square_zero,
    det_identically_zero,
    dil_bruteforce,
    finlen_bound,
    finlen_check,
    generic_quotient_exceeds_nu,
    length_mod_hyperplane,
    matlis_dual,
    module_from_monomial_quotient,
    module_type,
    nu,
    pencil_pieces,
    pencil_to_module,
    random_pencil,
    skew_example,
    skew_matrices,
    socle_and_type,
    square_zero_presentation,
    submodules,
    submodules_slow,
    trivial_module,
)

from oracles import subspace_count


# ---------- pencils ----------

def test_pencil_examples():
    phi = PencilModule(2, ([[1, 0]], [[0, 1]]), 32003)  # [x, y]
    pieces = pencil_pieces(phi)
    assert pieces.finite and pieces.dims == (1,) and pieces.length == 1
    generic = random_pencil(2, 2, 3, 32003, np.random.default_rng(1))
    pieces = pencil_pieces(generic)
    assert pieces.length == 3 == finlen_bound(2, 2)
    assert finlen_check(generic)


def test_infinite_cokernel_is_reported():
    phi = PencilModule(2, ([[1]], [[0]]), 32003)  # coker of [x] is k[x,y]/(x)
    pieces = pencil_pieces(phi, cap=6)
    assert not pieces.finite and pieces.length is None
    with pytest.raises(DomainError):
        finlen_check(phi, pieces)


def test_skew_pencil_pieces():
    pres = square_zero_presentation(skew_matrices(), 3)
    pieces = pencil_pieces(pres)
    assert pieces.dims == (3, 3) and pieces.length == 6


def test_one_row_pencils_have_length_one():
    rng = np.random.default_rng(4)
    for m in range(3, 6):
        pieces = pencil_pieces(random_pencil(3, 1, m, 32003, rng))
        assert pieces.finite and pieces.length <= finlen_bound(3, 1) == 1


def test_piece_dims_against_cokernel_module():
    rng = np.random.default_rng(5)
    for _ in range(10):
        p = random_pencil(2, 2, 3, 7, rng)
        pieces = pencil_pieces(p, cap=10)
        if pieces.finite:
            mod = pencil_to_module(p, cap=10)
            assert mod.check_axioms()
            assert mod.length == pieces.length
            # generated in degree 0 by the d basis vectors
            assert nu(mod) == p.d


def test_pencil_shape_errors():
    with pytest.raises(DomainError):
        PencilModule(2, ([[1, 0]],), 7)
    with pytest.raises(DomainError):
        PencilModule(2, ([[1, 0]], [[1]]), 7)
    with pytest.raises(DomainError):
        PencilModule(1, ([[1]],), 4)


# ---------- finite modules ----------

def test_skew_module_invariants():
    mod = skew_example(3)
    assert mod.check_axioms()
    assert (mod.length, nu(mod), module_type(mod)) == (6, 3, 3)
    basis, t = socle_and_type(mod)
    # the socle is W, the last three coordinates
    assert t == 3 and not basis[:, :3].any()
    for c in [(1, 0, 0), (0, 1, 2), (2, 2, 1), (1, 1, 1)]:
        assert length_mod_hyperplane(mod, c) == 4
    assert length_mod_hyperplane(mod, (0, 0, 0)) == 6
    dual = matlis_dual(mod)
    assert (nu(dual), module_type(dual)) == (module_type(mod), nu(mod))
    assert det_identically_zero(skew_matrices(), 3)
    # every nonzero x over F_3 gives length(L/xL) = 4 > nu = 3
    from itertools import product

    assert all(length_mod_hyperplane(mod, c) == 4 for c in product(range(3), repeat=3) if any(c))
    assert generic_quotient_exceeds_nu(mod, seed=2)


def test_square_zero_examples():
    k2 = build_square_zero([np.zeros((0, 2), dtype=np.int64)], 3)
    assert (k2.length, nu(k2), dil_bruteforce(k2).dil) == (2, 2, 2)
    dual_numbers = build_square_zero([[[1]]], 3)  # k[x]/(x^2)
    assert (dual_numbers.length, nu(dual_numbers), dil_bruteforce(dual_numbers).dil) == (2, 1, 1)
    assert module_type(dual_numbers) == 1
    assert length_mod_hyperplane(dual_numbers, (1,)) == 1
    with pytest.raises(DomainError):
        build_square_zero([[[1, 0]], [[1]]], 3)


def test_trivial_module():
    for t in range(1, 4):
        mod = trivial_module(t, 2, 3)
        assert nu(mod) == module_type(mod) == dil_bruteforce(mod).dil == t
        dual = matlis_dual(mod)
        assert nu(dual) == t and module_type(dual) == t


def test_monomial_quotient_module():
    j = MonomialIdeal(PolyRing(1), [(3,)])
    mod = module_from_monomial_quotient(j, 2)  # k[x]/(x^3) over F_2
    assert mod.length == 3 and mod.check_axioms()
    res = dil_bruteforce(mod)
    assert res.dil == 1 and res.submodule_count == 4


def test_submodule_count_of_vector_space():
    # every subspace of k^t is a submodule
    for p, t in [(2, 3), (2, 4), (3, 3)]:
        mod = trivial_module(t, 1, p)
        assert len(submodules(mod)) == subspace_count(t, p)


def test_budget():
    with pytest.raises(OracleBudgetError):
        dil_bruteforce(trivial_module(7, 1, 3))
    with pytest.raises(OracleBudgetError):
        dil_bruteforce(trivial_module(3, 1, 32003))


def test_axioms_detect_noncommuting_operators():
    from degreelab.pencil import FiniteModule

    a = np.array([[0, 1], [0, 0]])
    b = np.array([[0, 0], [1, 0]])
    assert not FiniteModule((a, b), 3).check_axioms()


# ---------- Dilworth oracle properties ----------

@st.composite
def small_modules(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(1, 3))
    dv = draw(st.integers(1, 3))
    dw = draw(st.integers(0, 3))
    seed = draw(st.integers(0, 2**32))
    rng = np.random.default_rng(seed)
    mats = [rng.integers(0, p, size=(dw, dv)) for _ in range(n)]
    return build_square_zero(mats, p)


@settings(max_examples=25)
@given(small_modules())
def test_layered_enumeration_matches_subspace_filter(mod):
    assume(mod.length <= 5)  # the subspace filter walks every subspace
    fast = sorted(submodules(mod))
    slow = sorted(submodules_slow(mod))
    assert fast == slow
    a = dil_bruteforce(mod)
    b = dil_bruteforce(mod, method="subspaces")
    assert (a.dil, a.quotient_dil, a.submodule_count) == (b.dil, b.quotient_dil, b.submodule_count)


@settings(max_examples=25)
@given(small_modules(), st.integers(0, 2**32))
def test_dilworth_laws(mod, seed):
    res = dil_bruteforce(mod)
    assert nu(mod) <= res.dil <= mod.length
    assert res.dil == res.quotient_dil
    assert dil_bruteforce(matlis_dual(mod)).dil == res.dil
    rng = np.random.default_rng(seed)
    for _ in range(5):
        assert res.dil <= length_mod_hyperplane(mod, rng.integers(0, mod.p, size=mod.n))


@given(small_modules())
def test_double_dual(mod):
    dd = matlis_dual(matlis_dual(mod))
    assert all((a == b).all() for a, b in zip(dd.ops, mod.ops))
    assert nu(matlis_dual(mod)) == module_type(mod)


def test_nonsquare_determinant_rejected():
    with pytest.raises(DomainError):
        det_identically_zero([[[1, 0]]], 3)
    assert not det_identically_zero([np.eye(2, dtype=np.int64), np.zeros((2, 2), dtype=np.int64)], 3)
