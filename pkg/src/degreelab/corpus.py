"""Seeded random corpora and the per-item invariant suite."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .degree import (
    DegreeReport,
    bdeg,
    bound_for_report,
    hilbert_bdeg_bound_check,
    reduction_number_of_m,
    bound_evaluators,
)
from .field import DEFAULT_PRIME, PolyRing
from .gin import derive_seed, gin_invariant_suite
from .groebner import IdealPresentation, buchberger, hilbert_function_direct
from .monomial_ideal import MonomialIdeal, borel_closure, hilbert, is_borel_fixed, minimize
from .monomials import monomials_of_degree
from .polynomial import Polynomial, random_change

_MASK = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def item_seed(seed: int, index: int) -> int:
    return (seed ^ splitmix64(index)) & _MASK


@dataclass(frozen=True)
class Profile:
    name: str
    n_values: tuple
    max_gens: int
    max_deg: int
    items: int


PROFILES = {
    "small": Profile("small", (2, 3), 3, 3, 50),
    "medium": Profile("medium", (2, 3, 4), 4, 4, 200),
}


def random_sparse_form(ring: PolyRing, d: int, rng, max_terms: int = 3) -> Polynomial:
    mons = monomials_of_degree(ring.n, d)
    k = int(rng.integers(1, min(max_terms, len(mons)) + 1))
    pick = rng.choice(len(mons), size=k, replace=False)
    return Polynomial(ring, {mons[i]: int(rng.integers(1, ring.p)) for i in pick})


def random_ideal(profile: Profile, seed: int, p: int = DEFAULT_PRIME) -> IdealPresentation:
    """1..max_gens sparse forms of degree 1..max_deg in a ring from the profile."""
    rng = np.random.default_rng(seed)
    n = int(rng.choice(profile.n_values))
    ring = PolyRing(n, p)
    count = int(rng.integers(1, profile.max_gens + 1))
    gens = [random_sparse_form(ring, int(rng.integers(1, profile.max_deg + 1)), rng) for _ in range(count)]
    return IdealPresentation(ring, tuple(gens))


def borel_ideals(n: int, max_deg: int) -> list:
    """Every nonzero proper Borel-fixed ideal of k[x_1..x_n] generated in degree <= max_deg."""
    ring = PolyRing(n)
    levels = [monomials_of_degree(n, k) for k in range(max_deg + 1)]

    def closed(sel):
        s = set(sel)
        for m in s:
            for i in range(1, n):
                if m[i]:
                    t = list(m)
                    t[i] -= 1
                    t[i - 1] += 1
                    if tuple(t) not in s:
                        return False
        return True

    # Borel up-sets of each degree, as frozensets
    upsets = []
    for k in range(max_deg + 1):
        mons = levels[k]
        found = []
        for mask in range(1 << len(mons)):
            sel = [mons[b] for b in range(len(mons)) if mask >> b & 1]
            if closed(sel):
                found.append(frozenset(sel))
        upsets.append(found)

    out = set()

    def grow(k, current, prev):
        if k > max_deg:
            if current:
                out.add(MonomialIdeal(ring, minimize(current)))
            return
        # degree-k part must contain every multiple of the previous part
        need = {tuple(a + (1 if j == v else 0) for j, a in enumerate(m)) for m in prev for v in range(n)}
        for s in upsets[k]:
            if need <= s:
                grow(k + 1, current + list(s), s)

    grow(1, [], frozenset())
    return sorted(out, key=lambda j: (len(j.gens), j.gens))


def random_borel_ideal(n: int, rng, max_deg: int = 4, max_seeds: int = 3) -> MonomialIdeal:
    ring = PolyRing(n)
    seeds = []
    for _ in range(int(rng.integers(1, max_seeds + 1))):
        d = int(rng.integers(1, max_deg + 1))
        mons = monomials_of_degree(n, d)
        seeds.append(mons[int(rng.integers(0, len(mons)))])
    return borel_closure(ring, seeds)


# ---------- the per-item suite ----------

SIGMA_CHECKS = 5


def run_item(profile: Profile, seed: int, index: int) -> dict:
    """Every corpus invariant for one ideal; values are JSON-friendly."""
    s = item_seed(seed, index)
    ideal = random_ideal(profile, s)
    ring = ideal.ring
    checks: dict = {}
    rep: DegreeReport = bdeg(ideal, derive_seed(s, 0))
    checks["gin_borel"] = is_borel_fixed(rep.gin)[0]

    gb = buchberger(ideal)
    top = max(g.degree() for g in ideal.gens) + ring.n
    direct = hilbert_function_direct(ideal, top)
    checks["hilbert_init"] = direct == list(hilbert(gb.initial, top).values)
    checks["hilbert_gin"] = direct == list(hilbert(rep.gin, top).values)

    suite = gin_invariant_suite(ideal, derive_seed(s, 1))
    for key in ("sat", "idempotent", "hyperplane"):
        if key in suite:
            checks["gin_" + key] = bool(suite[key])
    checks["gin_seed_stable"] = suite["gin"] == rep.gin

    others = []
    for k in range(SIGMA_CHECKS):
        sigma = random_change(ring, derive_seed(s, 10 + k))
        others.append(bdeg(ideal.transform(sigma), derive_seed(s, 20 + k)).bdeg)
    checks["bdeg_gin_invariant"] = all(b == rep.bdeg for b in others)

    checks["deg_le_bdeg"] = rep.deg <= rep.bdeg
    checks["cm_iff_equal"] = (rep.deg == rep.bdeg) == rep.cohen_macaulay
    checks["reg_lt_bdeg"] = rep.reg < rep.bdeg
    checks["embcod_le_bdeg"] = bound_evaluators("embcod", n=rep.embdim, dim=rep.dim) <= rep.bdeg
    bound = bound_for_report(rep)
    checks["homog_bound"] = rep.bdeg == rep.deg if bound is None else rep.bdeg <= bound
    if rep.depth > 0:
        checks["hilbert_bdeg"] = hilbert_bdeg_bound_check(ideal, rep=rep)
    red = None
    if rep.dim >= 1:
        red = reduction_number_of_m(ideal, derive_seed(s, 2), rep.bdeg, rep.dim, enforce=False)
        checks["gen_c"] = red <= bound_evaluators("gen-c", Deg=rep.bdeg, d=rep.dim)
    return {
        "index": index,
        "seed": s,
        "n": ring.n,
        "gens": [g.to_string() for g in ideal.gens],
        "gin": [list(g) for g in rep.gin.gens],
        "bdeg": rep.bdeg,
        "deg": rep.deg,
        "dim": rep.dim,
        "depth": rep.depth,
        "reg": rep.reg,
        "homog_bound": bound,
        "red": red,
        "checks": checks,
        "ok": all(checks.values()),
    }


def _run_item_safe(args):
    profile, seed, index = args
    try:
        return run_item(profile, seed, index)
    except Exception as exc:  # reported per item, never swallowed silently
        return {"index": index, "seed": item_seed(seed, index), "error": "%s: %s" % (type(exc).__name__, exc),
                "checks": {}, "ok": False}


def run_corpus(seed: int, profile: str | Profile = "small", jobs: int = 1, items: int | None = None,
               only: int | None = None) -> dict:
    """Run the suite on items 0..count-1, or on the single item ``only``."""
    prof = PROFILES[profile] if isinstance(profile, str) else profile
    indices = range(prof.items if items is None else items) if only is None else [only]
    count = len(indices)
    tasks = [(prof, seed, i) for i in indices]
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_item_safe, tasks))
    else:
        results = [_run_item_safe(t) for t in tasks]
    failed = [r for r in results if not r["ok"]]
    return {
        "profile": prof.name,
        "seed": seed,
        "items": count,
        "passed": count - len(failed),
        "failed": [
            {"index": r["index"], "seed": r["seed"], "error": r.get("error"),
             "failed_checks": sorted(k for k, v in r["checks"].items() if not v)}
            for r in failed
        ],
        "results": results,
    }
