"""Generic initial ideals by randomized agreement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groebner import IdealPresentation, buchberger, saturate_wrt_last
from .monomial_ideal import MonomialIdeal, is_borel_fixed, monomial_saturate
from .polynomial import Polynomial, random_change, substitute


class GenericityError(RuntimeError):
    """Random trials never agreed; try a larger characteristic."""


def derive_seed(seed: int, *tags: int) -> int:
    """Deterministic 64-bit child seed."""
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), *tags])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class GinResult:
    gin: MonomialIdeal
    trials_used: int
    borel_certified: bool
    seed: int
    witness: tuple | None = None


def initial_after_change(ideal: IdealPresentation, seed) -> MonomialIdeal:
    sigma = random_change(ideal.ring, seed)
    return buchberger(ideal.transform(sigma)).initial


def gin(ideal: IdealPresentation, seed: int = 0, agreement_k: int = 3, max_trials: int = 12) -> GinResult:
    """init(sigma·I) for random sigma, reported once k consecutive trials agree."""
    ring = ideal.ring
    if not ideal.gens:
        return GinResult(MonomialIdeal(ring, ()), 0, True, seed)
    last, streak = None, 0
    for trial in range(max_trials):
        j = initial_after_change(ideal, derive_seed(seed, trial))
        streak = streak + 1 if j == last else 1
        last = j
        if streak >= agreement_k:
            ok, witness = is_borel_fixed(j)
            return GinResult(j, trial + 1, ok, seed, witness)
    raise GenericityError(
        "no %d consecutive agreeing trials in %d (p=%d too small?)" % (agreement_k, max_trials, ring.p)
    )


def hyperplane_section(ideal: IdealPresentation, coeffs) -> IdealPresentation:
    """I_h in k[x_1..x_{n-1}] for h = sum c_i x_i with c_n != 0."""
    ring = ideal.ring
    p = ring.p
    cn = coeffs[-1] % p
    if cn == 0:
        raise ValueError("hyperplane must involve the last variable")
    sub = ring.drop_last()
    inv = pow(cn, p - 2, p)
    images = [Polynomial.variable(sub, i) for i in range(sub.n)]
    images.append(Polynomial.linear_form(sub, [(-c * inv) % p for c in coeffs[:-1]]))
    return IdealPresentation(sub, tuple(substitute(g, images, sub) for g in ideal.gens))


def gin_invariant_suite(ideal: IdealPresentation, seed: int = 0) -> dict:
    """Check three gin identities with independent seeds.

    sat: gin(I^sat) == gin(I)^sat
    idempotent: gin(gin(I)) == gin(I)
    hyperplane: gin(I_h) == gin(I) with x_n set to 0
    """
    ring = ideal.ring
    g = gin(ideal, derive_seed(seed, 1)).gin
    sat = saturate_wrt_last(ideal, seed=derive_seed(seed, 2))
    g_sat = gin(sat, derive_seed(seed, 3)).gin
    g_again = gin(IdealPresentation.from_monomial_ideal(g), derive_seed(seed, 4)).gin
    out = {
        "gin": g,
        "sat": g_sat == monomial_saturate(g),
        "idempotent": g_again == g,
    }
    if ring.n >= 1:
        rng = np.random.default_rng(derive_seed(seed, 5))
        coeffs = [int(c) for c in rng.integers(0, ring.p, size=ring.n)]
        coeffs[-1] = coeffs[-1] or 1
        section = hyperplane_section(ideal, coeffs)
        g_h = gin(section, derive_seed(seed, 6)).gin
        out["hyperplane"] = g_h == g.restrict_last()
    return out
