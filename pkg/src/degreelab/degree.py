"""bdeg of cyclic modules S/I and the bounds built around it.

bdeg of a Borel-fixed ideal is computed twice: once by counting standard
monomials and once by the saturate-then-slice recursion.  General ideals go
through their generic initial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .field import DomainError, PolyRing
from .gin import GinResult, derive_seed, gin
from .groebner import IdealPresentation, buchberger, normal_form
from .monomial_ideal import (
    MonomialIdeal,
    binom,
    ek_betti,
    hilbert,
    is_borel_fixed,
    lex_segment_compact,
    minimize,
    monomial_intersect,
    monomial_saturate,
    power_of_maximal,
    quotient_length,
    require_borel,
    saturation_gap,
    standard_monomials,
)
from .monomials import monomials_of_degree
from .polynomial import Polynomial


class RouteMismatch(RuntimeError):
    pass


class BoundViolation(RuntimeError):
    pass


# ---------- bdeg of Borel-fixed ideals ----------

def bdeg_standard(j: MonomialIdeal) -> int:
    """Route A: number of standard monomials."""
    return len(standard_monomials(j))


def bdeg_recursive(j: MonomialIdeal) -> int:
    """Route B: length of the finite-length part, then cut by x_n = 0."""
    require_borel(j)
    total = 0
    while True:
        if j.is_unit():
            return total
        if j.n == 0:
            return total + 1
        if j.is_artinian():
            return total + quotient_length(j)
        total += saturation_gap(j)
        j = monomial_saturate(j).restrict_last()


def bdeg_monomial(j: MonomialIdeal) -> int:
    a, b = bdeg_standard(j), bdeg_recursive(j)
    if a != b:
        raise RouteMismatch("bdeg routes disagree on %s: standard %d, recursion %d" % (j, a, b))
    return a


# ---------- general ideals ----------

@dataclass(frozen=True)
class DegreeReport:
    bdeg: int
    route_standard: int
    route_axiom: int
    route_used: str
    reg: int
    depth: int
    dim: int
    deg: int
    embdim: int
    embcod: int
    gin: MonomialIdeal = field(repr=False, default=None)
    trials_used: int = 0

    @property
    def cohen_macaulay(self) -> bool:
        return self.depth == self.dim

    def as_dict(self) -> dict:
        return {
            "bdeg": self.bdeg,
            "route_standard": self.route_standard,
            "route_axiom": self.route_axiom,
            "route_used": self.route_used,
            "reg": self.reg,
            "depth": self.depth,
            "dim": self.dim,
            "deg": self.deg,
            "embdim": self.embdim,
            "embcod": self.embcod,
            "gin": [list(g) for g in self.gin.gens] if self.gin is not None else None,
        }


def report_for_borel(j: MonomialIdeal, trials_used: int = 0) -> DegreeReport:
    """All numerical invariants of S/J for a Borel-fixed J."""
    if j.is_unit():
        raise DomainError("S/I is the zero module")
    a, b = bdeg_standard(j), bdeg_recursive(j)
    if a != b:
        raise RouteMismatch("bdeg routes disagree on %s: standard %d, recursion %d" % (j, a, b))
    betti = ek_betti(j)
    hd = hilbert(j, top=1)
    rep = DegreeReport(
        bdeg=a,
        route_standard=a,
        route_axiom=b,
        route_used="both",
        reg=betti.reg,
        depth=betti.depth,
        dim=hd.dim,
        deg=hd.degree,
        embdim=hd.values[1],
        embcod=hd.values[1] - hd.dim,
        gin=j,
        trials_used=trials_used,
    )
    if rep.cohen_macaulay and rep.bdeg != rep.deg:
        raise RuntimeError("Cohen-Macaulay calibration failed: bdeg %d != deg %d" % (rep.bdeg, rep.deg))
    return rep


def bdeg(ideal: IdealPresentation, seed: int = 0, trials: int = 12) -> DegreeReport:
    """bdeg(S/I) and companions, read off gin(I)."""
    res: GinResult = gin(ideal, seed, max_trials=trials)
    if not res.borel_certified:
        raise RuntimeError("gin %s failed the Borel certificate at %r" % (res.gin, res.witness))
    return report_for_borel(res.gin, res.trials_used)


# ---------- Macaulay representations ----------

@dataclass(frozen=True)
class MacaulayRep:
    e: int
    r: int
    terms: tuple  # ((k(r), r), (k(r-1), r-1), ...)

    def value(self) -> int:
        return sum(binom(k, i) for k, i in self.terms)


def macaulay_rep(e: int, r: int) -> MacaulayRep:
    """Greedy r-th Macaulay representation e = C(k(r), r) + C(k(r-1), r-1) + ..."""
    if e < 1 or r < 1:
        raise DomainError("Macaulay representation needs e >= 1 and r >= 1")
    rest, i, terms = e, r, []
    while rest > 0:
        k = i
        while binom(k + 1, i) <= rest:
            k += 1
        terms.append((k, i))
        rest -= binom(k, i)
        i -= 1
    rep = MacaulayRep(e, r, tuple(terms))
    assert rep.value() == e
    return rep


def e_shift(rep: MacaulayRep, d: int) -> int:
    """e^(r,d): every top entry of the representation raised by d."""
    if d < 0:
        raise DomainError("shift must be non-negative")
    return sum(binom(k + d, i) for k, i in rep.terms)


def homog_bound(n: int, e: int, r: int, d: int, g: int) -> int:
    """e + C(n-g+r, r) - e^(r, d-g)."""
    if not (0 <= g <= d <= n) or e < 1 or r < 1:
        raise DomainError("need 0 <= g <= d <= n and e, r >= 1 (got n=%d e=%d r=%d d=%d g=%d)" % (n, e, r, d, g))
    return e + binom(n - g + r, r) - e_shift(macaulay_rep(e, r), d - g)


def bound_for_report(rep: DegreeReport) -> int | None:
    """homog_bound evaluated on an ideal's own invariants; None when reg = 0."""
    if rep.reg < 1:
        return None
    return homog_bound(rep.embdim, rep.deg, rep.reg, rep.dim, rep.depth)


def extremal_ideal(n: int, c: int, r: int, e: int) -> MonomialIdeal:
    """J ∩ m^(r+1) where J in x_1..x_c has the lex-least e monomials of degree <= r outside it."""
    if not (1 <= c <= n) or r < 1 or e < 1:
        raise DomainError("need 1 <= c <= n, r >= 1, e >= 1")
    if c == n and e != binom(n + r, r):
        # artinian with reg r: length <= C(n+r, r), attained only by m^(r+1)
        raise DomainError("for c = n the only extremal case is e = C(n+r, r) = %d" % binom(n + r, r))
    outside = set(lex_segment_compact(c, r, e))
    pad = (0,) * (n - c)
    gens = []
    for k in range(r + 2):
        for m in monomials_of_degree(c, k):
            if m not in outside:
                gens.append(m + pad)
    ring = PolyRing(n)
    j = MonomialIdeal(ring, minimize(gens))
    out = monomial_intersect(j, power_of_maximal(ring, r + 1))
    ok, witness = is_borel_fixed(out)
    if not ok:
        raise RuntimeError("extremal ideal not Borel-fixed at %r" % (witness,))
    hd = hilbert(out)
    betti = ek_betti(out)
    if hd.degree != e or hd.dim != n - c or betti.reg != r:
        raise RuntimeError(
            "extremal ideal has deg %d dim %d reg %d, wanted %d %d %d" % (hd.degree, hd.dim, betti.reg, e, n - c, r)
        )
    return out


# ---------- formula evaluators ----------

BOUND_KINDS = ("gen-a", "gen-b", "gen-c", "nu-deg", "type-deg", "embcod")


def bound_evaluators(kind: str, **params) -> int:
    """Right-hand sides of the generator, reduction and embedding bounds.

    gen-a: deg_r, g, deg_ri, Deg_ri, d, r  (second displayed form)
    gen-b: Deg, s, d
    gen-c: Deg, d
    nu-deg, type-deg: Deg
    embcod: n, dim  (returns c + 1, a lower bound for Deg)
    """
    def need(*names):
        missing = [k for k in names if k not in params]
        if missing:
            raise DomainError("%s needs %s" % (kind, ", ".join(missing)))
        return [int(params[k]) for k in names]

    if kind == "gen-a":
        deg_r, g, deg_ri, big, d, r = need("deg_r", "g", "deg_ri", "Deg_ri", "d", "r")
        if g <= 0 or r < 0 or d < 0 or big < deg_ri:
            raise DomainError("gen-a needs g > 0, d, r >= 0 and Deg >= deg")
        return deg_r + (g - 1) * deg_ri + (d - r - 1) * (big - deg_ri)
    if kind == "gen-b":
        big, s, d = need("Deg", "s", "d")
        if d < 1 or s < 1:
            raise DomainError("gen-b needs d >= 1 and s >= 1")
        return big * binom(s + d - 2, d - 1) + binom(s + d - 2, d - 2)
    if kind == "gen-c":
        big, d = need("Deg", "d")
        if d < 1:
            raise DomainError("gen-c needs d >= 1")
        return d * big - 2 * d + 1
    if kind in ("nu-deg", "type-deg"):
        (big,) = need("Deg")
        return big
    if kind == "embcod":
        n, dim = need("n", "dim")
        if not 0 <= dim <= n:
            raise DomainError("embcod needs 0 <= dim <= n")
        return n - dim + 1
    raise DomainError("unknown bound kind %r" % kind)


def gen_a_first_form(deg_r, g, deg_ri, big, d, r) -> int:
    return deg_r + (g - 1) * big + (d - g - r) * (big - deg_ri)


# ---------- reduction number of m ----------

def _reduction_attempt(ideal: IdealPresentation, d: int, seed: int):
    ring = ideal.ring
    rng = np.random.default_rng(seed)
    forms = []
    for _ in range(d):
        coeffs = [int(c) for c in rng.integers(0, ring.p, size=ring.n)]
        forms.append(Polynomial.linear_form(ring, coeffs))
    gb = buchberger(IdealPresentation(ring, ideal.gens + tuple(forms)))
    hd = hilbert(gb.initial)
    if hd.dim > 0:
        return None  # the forms were not a system of parameters
    t = 0
    while hd.value(t + 1) != 0:
        t += 1
    # every degree-(t+1) monomial reduces to 0 modulo I + (l_1..l_d)
    for m in monomials_of_degree(ring.n, t + 1):
        if not normal_form(Polynomial.monomial(ring, m), gb).is_zero():
            raise RuntimeError("reduction certificate failed")
    return t


def reduction_number_of_m(ideal: IdealPresentation, seed: int = 0, bdeg_value: int | None = None,
                          dim: int | None = None, enforce: bool = True) -> int:
    """red(m) of S/I from d random linear forms, minimum over two seeds.

    The least t with S_{t+1} = (l_1..l_d)_{t+1} + I_{t+1}.  With ``enforce``
    a value above d*bdeg - 2d + 1 raises BoundViolation.
    """
    if bdeg_value is None or dim is None:
        rep = bdeg(ideal, seed)
        bdeg_value, dim = rep.bdeg, rep.dim
    if dim < 1:
        raise DomainError("reduction number of m needs dim S/I >= 1")
    found = []
    for k in range(2):
        t = _reduction_attempt(ideal, dim, derive_seed(seed, 100 + k))
        if t is not None:
            found.append(t)
    if not found:
        raise RuntimeError("random linear forms failed to give a reduction twice")
    red = min(found)
    cap = bound_evaluators("gen-c", Deg=bdeg_value, d=dim)
    if enforce and red > cap:
        raise BoundViolation("reduction bound violated: red(m) = %d > %d" % (red, cap))
    return red


def hilbert_bdeg_bound_check(ideal: IdealPresentation, seed: int = 0, rep: DegreeReport | None = None) -> bool:
    """bdeg(S/I) <= H(S/I; reg(S/I)) for positive depth."""
    rep = rep or bdeg(ideal, seed)
    if rep.depth < 1:
        raise DomainError("needs depth(S/I) > 0")
    return rep.bdeg <= hilbert(rep.gin, top=rep.reg).value(rep.reg)
