"""Buchberger's algorithm for homogeneous ideals under graded reverse-lex.

Internally polynomials are dicts ``packed monomial -> coefficient``.  All
polynomials handled by the kernel are forms, so the reverse-lex leader of a
form is its smallest packed monomial.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import count

import numpy as np

from . import linalg
from .field import DomainError, PolyRing
from .monomial_ideal import MonomialIdeal, hilbert, series_numerator
from .monomials import (
    degree,
    guard_mask,
    lcm,
    monomials_of_degree,
    pack,
    packed_divides,
    unpack,
)
from .polynomial import CoordinateChange, Polynomial, apply_change, random_change


class NonGenericError(RuntimeError):
    """A randomized step landed on non-generic coordinates."""


@dataclass(frozen=True)
class IdealPresentation:
    """A homogeneous ideal of ``ring`` given by generators."""

    ring: PolyRing
    gens: tuple = ()

    def __post_init__(self):
        gens = []
        for g in self.gens:
            if g.ring != self.ring:
                raise DomainError("generator from a different ring")
            if not g.is_homogeneous():
                raise DomainError("generator %s is not homogeneous" % g)
            if not g.is_zero():
                gens.append(g)
        object.__setattr__(self, "gens", tuple(gens))

    @classmethod
    def from_monomial_ideal(cls, j: MonomialIdeal) -> "IdealPresentation":
        return cls(j.ring, tuple(Polynomial.monomial(j.ring, g) for g in j.gens))

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def transform(self, sigma: CoordinateChange) -> "IdealPresentation":
        return IdealPresentation(self.ring, tuple(apply_change(g, sigma) for g in self.gens))


# ---------- kernel ----------

class _Kernel:
    def __init__(self, ring: PolyRing):
        self.n = ring.n
        self.p = ring.p
        self.guard = guard_mask(ring.n)

    def to_packed(self, f: Polynomial) -> dict:
        return {pack(m): c for m, c in f.terms.items()}

    def to_poly(self, ring, d: dict) -> Polynomial:
        return Polynomial(ring, {unpack(m, self.n): c for m, c in d.items()})

    def reduce(self, f: dict, basis, full: bool = True) -> dict:
        """Remainder of f modulo ``basis`` = [(lead, poly)] with monic leads."""
        p, guard = self.p, self.guard
        work = dict(f)
        heap = list(work)
        heapq.heapify(heap)
        rest = {}
        while heap:
            m = heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            for lead, g in basis:
                if packed_divides(lead, m, guard):
                    q = m - lead
                    for gm, gc in g.items():
                        if gm == lead:
                            continue
                        t = gm + q
                        old = work.get(t)
                        if old is None:
                            work[t] = (-c * gc) % p
                            heapq.heappush(heap, t)
                        else:
                            work[t] = (old - c * gc) % p
                    break
            else:
                rest[m] = c
                if not full:
                    for t, v in work.items():
                        if v:
                            rest[t] = v
                    break
        return rest

    def monic(self, f: dict):
        lead = min(f)
        inv = pow(f[lead], self.p - 2, self.p)
        return lead, {m: (c * inv) % self.p for m, c in f.items()}


def _mon_lcm(a: int, b: int, n: int) -> int:
    return pack(lcm(unpack(a, n), unpack(b, n)))


def _coprime(a: int, b: int, n: int) -> bool:
    ua, ub = unpack(a, n), unpack(b, n)
    return all(x == 0 or y == 0 for x, y in zip(ua, ub))


def _buchberger_packed(ring: PolyRing, gens: list, max_degree=None):
    """Reduced Gröbner basis as a list of (lead, poly) with monic leads."""
    kern = _Kernel(ring)
    n = ring.n
    basis: list = []      # (lead, poly, deg)
    queue: list = []
    seq = count()
    pending: set = set()
    for f in gens:
        if f.is_zero():
            continue
        deg = f.degree()
        if max_degree is None or deg <= max_degree:
            heapq.heappush(queue, (deg, next(seq), "gen", kern.to_packed(f)))

    while queue:
        deg, _, kind, item = heapq.heappop(queue)
        if kind == "pair":
            i, j = item
            pending.discard((i, j))
            li, lj = basis[i][0], basis[j][0]
            lij = _mon_lcm(li, lj, n)
            if _chain_skip(basis, pending, i, j, lij, kern.guard):
                continue
            fi, fj = basis[i][1], basis[j][1]
            qi, qj = lij - li, lij - lj
            s = {}
            p = kern.p
            for m, c in fi.items():
                s[m + qi] = c
            for m, c in fj.items():
                t = m + qj
                s[t] = (s.get(t, 0) - c) % p
            s = {m: c for m, c in s.items() if c}
            f = s
        else:
            f = item
        active = [(b[0], b[1]) for b in basis]
        r = kern.reduce(f, active) if f else {}
        if not r:
            continue
        lead, r = kern.monic(r)
        k = len(basis)
        basis.append((lead, r, deg))
        for i in range(k):
            li = basis[i][0]
            if _coprime(li, lead, n):
                continue
            lij = _mon_lcm(li, lead, n)
            dd = degree(unpack(lij, n))
            if max_degree is not None and dd > max_degree:
                continue
            pending.add((i, k))
            heapq.heappush(queue, (dd, next(seq), "pair", (i, k)))

    return _interreduce(kern, basis)


def _chain_skip(basis, pending, i, j, lij, guard) -> bool:
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if not packed_divides(basis[k][0], lij, guard):
            continue
        a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
        if a not in pending and b not in pending:
            return True
    return False


def _interreduce(kern: _Kernel, basis):
    guard = kern.guard
    leads = [b[0] for b in basis]
    keep = []
    for idx, (lead, poly, deg) in enumerate(basis):
        redundant = False
        for jdx, other in enumerate(leads):
            if jdx == idx:
                continue
            if packed_divides(other, lead, guard) and (other != lead or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append((lead, poly))
    out = []
    for idx, (lead, poly) in enumerate(keep):
        others = [b for k, b in enumerate(keep) if k != idx]
        tail = {m: c for m, c in poly.items() if m != lead}
        red = kern.reduce(tail, others) if tail else {}
        red[lead] = 1
        out.append((lead, red))
    out.sort(key=lambda b: (degree(unpack(b[0], kern.n)), b[0]))
    return out


# ---------- public surface ----------

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis under graded reverse-lex."""

    ring: PolyRing
    elements: tuple
    initial: MonomialIdeal
    order: str = "grevlex"
    max_degree: int | None = None
    _packed: tuple = field(default=(), repr=False, compare=False)

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.elements]


def buchberger(ideal: IdealPresentation, max_degree: int | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of a homogeneous ideal.

    With ``max_degree`` the computation is truncated: the result is a
    Gröbner basis of the ideal in degrees up to that bound.
    """
    ring = ideal.ring
    packed = _buchberger_packed(ring, list(ideal.gens), max_degree)
    kern = _Kernel(ring)
    elems = tuple(kern.to_poly(ring, poly) for _, poly in packed)
    init = MonomialIdeal(ring, [unpack(lead, ring.n) for lead, _ in packed])
    return GroebnerBasis(ring, elems, init, max_degree=max_degree, _packed=tuple(packed))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of f; zero iff f lies in the ideal."""
    if f.ring != gb.ring:
        raise DomainError("polynomial and basis from different rings")
    kern = _Kernel(gb.ring)
    basis = list(gb._packed)
    out: dict = {}
    # reduce each homogeneous component separately
    comps: dict = {}
    for m, c in f.terms.items():
        comps.setdefault(degree(m), {})[pack(m)] = c
    for d, comp in comps.items():
        if gb.max_degree is not None and d > gb.max_degree:
            raise DomainError("degree %d exceeds truncation degree %d" % (d, gb.max_degree))
        out.update(kern.reduce(comp, basis))
    return kern.to_poly(gb.ring, out)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = lcm(lf, lg)
    ring = f.ring
    a = Polynomial.monomial(ring, tuple(x - y for x, y in zip(l, lf)), pow(f.terms[lf], ring.p - 2, ring.p))
    b = Polynomial.monomial(ring, tuple(x - y for x, y in zip(l, lg)), pow(g.terms[lg], ring.p - 2, ring.p))
    return a * f - b * g


def check_buchberger_criterion(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of the basis reduces to zero."""
    el = gb.elements
    for i in range(len(el)):
        for j in range(i + 1, len(el)):
            s = s_polynomial(el[i], el[j])
            if gb.max_degree is not None and s.degree() > gb.max_degree:
                continue
            if not s.is_zero() and not normal_form(s, gb).is_zero():
                return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    leads = gb.leading_monomials()
    for g, lead in zip(gb.elements, leads):
        if g.terms[lead] != 1:
            return False
        for m in g.terms:
            for k, other in enumerate(leads):
                if other == lead:
                    continue
                if all(a <= b for a, b in zip(other, m)):
                    return False
    return True


def minimal_generators(ideal: IdealPresentation):
    """Degree-by-degree minimal subset of the generators, and nu(I)."""
    ring = ideal.ring
    order = sorted(range(len(ideal.gens)), key=lambda k: ideal.gens[k].degree())
    kept: list = []
    for k in order:
        g = ideal.gens[k]
        if kept:
            gb = buchberger(IdealPresentation(ring, tuple(kept)), max_degree=g.degree())
            if normal_form(g, gb).is_zero():
                continue
        kept.append(g)
    return kept, len(kept)


def degree_piece_dim(ideal: IdealPresentation, k: int) -> int:
    """dim_k I_k by direct linear algebra on the products u*g."""
    n, p = ideal.ring.n, ideal.ring.p
    cols = monomials_of_degree(n, k)
    if not cols:
        return 0
    index = {m: i for i, m in enumerate(cols)}
    rows = []
    for g in ideal.gens:
        dg = g.degree()
        if dg > k:
            continue
        for u in monomials_of_degree(n, k - dg):
            row = np.zeros(len(cols), dtype=np.int64)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, u))]] = c
            rows.append(row)
    if not rows:
        return 0
    return linalg.rank(np.array(rows), p)


def hilbert_function_direct(ideal: IdealPresentation, top: int) -> list[int]:
    """H(S/I; k) for k = 0..top without Gröbner bases."""
    n = ideal.ring.n
    return [len(monomials_of_degree(n, k)) - degree_piece_dim(ideal, k) for k in range(top + 1)]


# ---------- colon and saturation ----------

def _divide_out_last(ring, gb: GroebnerBasis, full: bool):
    """Divide each basis element by x_n (once, or its full power)."""
    n = ring.n
    out = []
    for g in gb.elements:
        e = min(m[n - 1] for m in g.terms)
        if not full:
            e = min(e, 1)
        out.append(Polynomial(ring, {m[:-1] + (m[-1] - e,): c for m, c in g.terms.items()}))
    return IdealPresentation(ring, tuple(out))


def colon_last_variable(ideal: IdealPresentation) -> IdealPresentation:
    """(I : x_n) via the reverse-lex basis."""
    gb = buchberger(ideal)
    return _divide_out_last(ideal.ring, gb, full=False)


def same_ideal(a: IdealPresentation, b: IdealPresentation) -> bool:
    ga, gbb = buchberger(a), buchberger(b)
    return ga.elements == gbb.elements


def _hilbert_polynomial_equal(a: IdealPresentation, b: IdealPresentation) -> bool:
    """S/a and S/b have the same Hilbert polynomial."""
    na = series_numerator(buchberger(a).initial)
    nb = series_numerator(buchberger(b).initial)
    diff = [0] * max(len(na), len(nb))
    for i, c in enumerate(na):
        diff[i] += c
    for i, c in enumerate(nb):
        diff[i] -= c
    # Hilbert series differ by a polynomial iff (1-t)^n divides the difference
    for _ in range(a.ring.n):
        if sum(diff) != 0:
            return False
        q, acc = [], 0
        for c in diff[:-1]:
            acc += c
            q.append(acc)
        diff = q
    return True


def saturate_wrt_last(ideal: IdealPresentation, seed=0, generic: bool = True) -> IdealPresentation:
    """Saturation by dividing reverse-lex basis elements by powers of x_n.

    With ``generic`` (the default) a random coordinate change is applied
    first, the result is certified and mapped back: the output is I^sat.
    Without it, the output is [I : x_n^inf] in the given coordinates.
    """
    ring = ideal.ring
    if ring.n == 0 or not ideal.gens:
        return ideal
    if not generic:
        gb = buchberger(ideal)
        sat = _divide_out_last(ring, gb, full=True)
        if not same_ideal(colon_last_variable(sat), sat):
            raise NonGenericError("x_n-saturation failed its colon check")
        return IdealPresentation(ring, buchberger(sat).elements)
    sigma = random_change(ring, seed)
    moved = ideal.transform(sigma)
    gb = buchberger(moved)
    sat = _divide_out_last(ring, gb, full=True)
    if not same_ideal(colon_last_variable(sat), sat):
        raise NonGenericError("non-generic coordinates: (J : x_n) != J")
    # [I:x_n^inf] contains I^sat and is saturated; equality iff the
    # Hilbert polynomials agree.
    if not _hilbert_polynomial_equal(sat, moved):
        raise NonGenericError("non-generic coordinates: saturation too large")
    back = sat.transform(sigma.inverted())
    gb_back = buchberger(back)
    return IdealPresentation(ring, gb_back.elements)


def contains_ideal(big: IdealPresentation, small: IdealPresentation) -> bool:
    gb = buchberger(big)
    return all(normal_form(g, gb).is_zero() for g in small.gens)


def nilpotency_index(ideal: IdealPresentation):
    """Least s with m^s in I, or ``float('inf')`` when dim S/I > 0."""
    ring = ideal.ring
    gb = buchberger(ideal)
    hd = hilbert(gb.initial)
    if hd.dim > 0:
        return float("inf")
    s = 0
    while hd.value(s) != 0:
        s += 1
    # confirm by membership of every degree-s monomial, and failure below
    for m in monomials_of_degree(ring.n, s):
        if not normal_form(Polynomial.monomial(ring, m), gb).is_zero():
            raise RuntimeError("nilpotency certificate failed")
    if s > 0 and all(
        normal_form(Polynomial.monomial(ring, m), gb).is_zero() for m in monomials_of_degree(ring.n, s - 1)
    ):
        raise RuntimeError("nilpotency certificate failed below s")
    return s
