"""Combinatorics of monomial ideals.

Minimal generators, colon and saturation by variables, intersection,
standard monomials, Hilbert series by pivot recursion, and the
Eliahou–Kervaire Betti table of Borel-fixed ideals.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from math import comb

from .field import DomainError, PolyRing
from .monomials import (
    Monomial,
    degree,
    divides,
    lcm,
    lex_key,
    mon_range,
    monomials_of_degree,
    monomials_up_to,
    rlex_key,
)


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, 0) = 1 and C(a, b) = 0 for b < 0 or a < b."""
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def minimize(mons) -> tuple[Monomial, ...]:
    """Minimal elements under divisibility, sorted ascending in rlex."""
    mons = sorted(set(tuple(m) for m in mons), key=rlex_key)
    out: list[Monomial] = []
    for m in mons:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)


class MonomialIdeal:
    """A monomial ideal given by its minimal generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ring.n:
                raise DomainError("generator %r has wrong length" % (g,))
        self.gens = minimize(gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring.n == other.ring.n and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring.n, self.gens))

    def __repr__(self):
        return "MonomialIdeal(%s)" % self.to_string()

    def to_string(self) -> str:
        from .monomials import format_monomial

        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(g, self.ring.names) for g in self.gens) + ")"

    @property
    def n(self) -> int:
        return self.ring.n

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def max_degree(self) -> int:
        return max((degree(g) for g in self.gens), default=0)

    def __contains__(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def colon_var(self, i: int) -> "MonomialIdeal":
        """(J : x_{i+1}) for 0-based i."""
        out = []
        for g in self.gens:
            g = list(g)
            if g[i]:
                g[i] -= 1
            out.append(g)
        return MonomialIdeal(self.ring, out)

    def saturate_var(self, i: int) -> "MonomialIdeal":
        """[J : x_{i+1}^inf] for 0-based i."""
        out = []
        for g in self.gens:
            g = list(g)
            g[i] = 0
            out.append(g)
        return MonomialIdeal(self.ring, out)

    def in_saturation_var(self, m, i: int) -> bool:
        """m in [J : x_{i+1}^inf] without building the colon ideal."""
        return any(all(g[k] <= m[k] for k in range(len(m)) if k != i) for g in self.gens)

    def restrict_last(self) -> "MonomialIdeal":
        """Image in k[x_1..x_{n-1}] after setting x_n = 0."""
        sub = self.ring.drop_last()
        return MonomialIdeal(sub, [g[:-1] for g in self.gens if g[-1] == 0])

    def extend(self, ring: PolyRing) -> "MonomialIdeal":
        """Same generators viewed in a ring with more trailing variables."""
        pad = (0,) * (ring.n - self.ring.n)
        return MonomialIdeal(ring, [g + pad for g in self.gens])

    def is_artinian(self) -> bool:
        for i in range(self.n):
            if not any(g[i] and sum(g) == g[i] for g in self.gens):
                return False
        return True

    def degree_count_outside(self, k: int) -> int:
        """Number of degree-k monomials not in J (brute force)."""
        return sum(1 for m in monomials_of_degree(self.n, k) if m not in self)


def power_of_maximal(ring: PolyRing, t: int) -> MonomialIdeal:
    return MonomialIdeal(ring, monomials_of_degree(ring.n, t))


def monomial_intersect(j: MonomialIdeal, k: MonomialIdeal) -> MonomialIdeal:
    if j.ring.n != k.ring.n:
        raise DomainError("ideals from different rings")
    return MonomialIdeal(j.ring, [lcm(a, b) for a in j.gens for b in k.gens])


def monomial_saturate(j: MonomialIdeal) -> MonomialIdeal:
    """[J : x_n^inf]; equals the saturation when J is Borel-fixed."""
    if j.n == 0:
        return j
    return j.saturate_var(j.n - 1)


def is_borel_fixed(j: MonomialIdeal):
    """Return (True, None) or (False, (generator, i)) with 1-based i."""
    for g in j.gens:
        for i in range(1, j.n):
            if g[i]:
                h = list(g)
                h[i] -= 1
                h[i - 1] += 1
                if tuple(h) not in j:
                    return False, (g, i + 1)
    return True, None


def borel_closure(ring: PolyRing, mons) -> MonomialIdeal:
    """Smallest Borel-fixed ideal containing the given monomials."""
    seen = set()
    stack = [tuple(m) for m in mons]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for i in range(1, ring.n):
            if m[i]:
                h = list(m)
                h[i] -= 1
                h[i - 1] += 1
                stack.append(tuple(h))
    return MonomialIdeal(ring, seen)


def require_borel(j: MonomialIdeal):
    ok, witness = is_borel_fixed(j)
    if not ok:
        raise DomainError("ideal %s is not Borel-fixed (witness %r)" % (j.to_string(), witness))


def quotient_length(j: MonomialIdeal) -> int:
    """length(S/J) for artinian J, by counting monomials outside J."""
    if not j.is_artinian():
        raise DomainError("S/J has positive dimension")
    total = 0
    for k in count():
        c = j.degree_count_outside(k)
        if c == 0:
            return total
        total += c


def saturation_gap(j: MonomialIdeal) -> int:
    """length(J^sat / J) for Borel-fixed J (monomials in [J:x_n^inf] \\ J)."""
    sat = monomial_saturate(j)
    top = j.max_degree()
    total = 0
    for m in monomials_up_to(j.n, top):
        if m in sat and m not in j:
            if degree(m) == top:
                raise RuntimeError("saturation gap reaches generator degree for %s" % j)
            total += 1
    return total


# ---------- standard monomials ----------

def is_standard(j: MonomialIdeal, m) -> bool:
    if m in j:
        return False
    t = mon_range(m)
    if t == 0:
        return True
    return j.in_saturation_var(m, t - 1)


def standard_monomials(j: MonomialIdeal, up_to: int | None = None) -> list[Monomial]:
    """All monomials standard with respect to a Borel-fixed J.

    Every standard monomial has degree below the top generator degree, so
    the search runs through that degree and fails loudly if it finds one
    there.  ``up_to`` may only raise the search bound.
    """
    require_borel(j)
    top = j.max_degree()
    bound = top if up_to is None else max(top, up_to)
    out = []
    for m in monomials_up_to(j.n, bound):
        if is_standard(j, m):
            if j.gens and degree(m) >= top:
                raise RuntimeError("standard monomial %r at degree >= %d" % (m, top))
            out.append(m)
    return out


# ---------- Hilbert series ----------

def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                out[i + k] += x * y
    return _trim(out)


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _shift(a, k):
    return _trim([0] * k + list(a)) if a else []


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple) -> tuple:
    """Numerator of H_{S/J}(t) over (1-t)^n, by pivoting on a variable."""
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return ()
    n = len(gens[0])
    freq = [sum(1 for g in gens if g[i]) for i in range(n)]
    i = max(range(n), key=lambda k: (freq[k], -k))
    if freq[i] <= 1:
        # pairwise coprime generators: product of (1 - t^deg)
        out = [1]
        for g in gens:
            out = _pmul(out, _padd([1], _shift([-1], degree(g))))
        return tuple(out)
    xi = tuple(1 if k == i else 0 for k in range(n))
    plus = minimize([g for g in gens if not g[i]] + [xi])
    colon = minimize([g[:i] + (max(g[i] - 1, 0),) + g[i + 1:] for g in gens])
    return tuple(_padd(_numerator(plus), _shift(list(_numerator(colon)), 1)))


def series_numerator(j: MonomialIdeal) -> list[int]:
    """Uncancelled numerator N with H_{S/J}(t) = N(t)/(1-t)^n."""
    return list(_numerator(j.gens))


def _cancel_one_minus_t(num):
    """Divide by (1 - t) while possible; returns (quotient, times)."""
    num = _trim(num)
    times = 0
    while num and sum(num) == 0:
        # num = (1 - t) q  =>  q_k = sum_{i<=k} num_i
        q, acc = [], 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = _trim(q)
        times += 1
    return num, times


def series_values(num, n: int, top: int) -> list[int]:
    """First top+1 coefficients of num(t)/(1-t)^n."""
    out = []
    for k in range(top + 1):
        if n == 0:
            out.append(num[k] if k < len(num) else 0)
        else:
            out.append(sum(c * binom(k - i + n - 1, n - 1) for i, c in enumerate(num) if i <= k))
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values, reduced numerator Q(t), dimension, degree."""

    values: tuple
    numerator: tuple
    series_numerator: tuple
    dim: int
    degree: int
    n: int

    def value(self, k: int) -> int:
        if k < 0:
            return 0
        if k < len(self.values):
            return self.values[k]
        return series_values(list(self.numerator), self.dim, k)[k] if self.dim >= 0 else 0


def hilbert_from_numerator(num, n: int, top: int) -> HilbertData:
    num = _trim(num)
    if not num:
        return HilbertData(tuple([0] * (top + 1)), (), (), -1, 0, n)
    q, times = _cancel_one_minus_t(num)
    d = n - times
    return HilbertData(
        values=tuple(series_values(num, n, top)),
        numerator=tuple(q),
        series_numerator=tuple(num),
        dim=d,
        degree=sum(q),
        n=n,
    )


def hilbert(j: MonomialIdeal, top: int | None = None) -> HilbertData:
    """Hilbert data of S/J with values through degree ``top``.

    The default table length is max generator degree + n.
    """
    if top is None:
        top = j.max_degree() + j.n
    return hilbert_from_numerator(series_numerator(j), j.n, top)


# ---------- Eliahou–Kervaire ----------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of S/J: beta[(i, j)] with j the internal degree."""

    beta: dict
    pd: int
    reg: int
    n: int = 0

    @property
    def depth(self) -> int:
        return self.n - self.pd

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.beta.items() if a == i)

    def of_ideal(self) -> dict:
        """Betti numbers of J itself: beta_{i,j}(J) = beta_{i+1,j}(S/J)."""
        return {(i - 1, j): v for (i, j), v in self.beta.items() if i >= 1}

    def alternating_sum(self) -> list[int]:
        top = max((j for (_, j) in self.beta), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.beta.items():
            out[j] += (-1) ** i * v
        return _trim(out)


def ek_betti(j: MonomialIdeal) -> BettiTable:
    """Betti table of S/J for Borel-fixed J by the Eliahou–Kervaire formula."""
    require_borel(j)
    beta: dict = defaultdict(int)
    beta[(0, 0)] = 1
    for g in j.gens:
        dg, r = degree(g), mon_range(g)
        for i in range(max(r, 1)):
            b = binom(r - 1, i)
            if b:
                beta[(i + 1, i + dg)] += b
    beta = {k: v for k, v in beta.items() if v}
    pd = max((i for (i, _) in beta), default=0)
    reg = max(jj - i for (i, jj) in beta)
    if j.gens and not j.is_unit() and reg != j.max_degree() - 1:
        raise RuntimeError("regularity mismatch for %s" % j)
    return BettiTable(beta=beta, pd=pd, reg=reg, n=j.n)


def betti_hilbert_consistency(j: MonomialIdeal) -> bool:
    """Alternating Betti sum equals the uncancelled Hilbert numerator."""
    return ek_betti(j).alternating_sum() == series_numerator(j)


# ---------- lex segments ----------

def _compact_violation(mset, c: int):
    """None if mset is closed under division and the shift axiom."""
    for m in mset:
        for i in range(c):
            if m[i]:
                d = m[:i] + (m[i] - 1,) + m[i + 1:]
                if d not in mset:
                    return ("division", m, i + 1)
                for jj in range(i + 1, c):
                    s = list(m)
                    s[i] -= 1
                    s[jj] += 1
                    if tuple(s) not in mset:
                        return ("shift", m, i + 1, jj + 1)
    return None


def is_compact(mset, c: int, r: int, e: int) -> bool:
    mset = set(mset)
    return (
        len(mset) == e
        and all(degree(m) <= r for m in mset)
        and _compact_violation(mset, c) is None
    )


def lex_segment_compact(c: int, r: int, e: int) -> list[Monomial]:
    """The e lex-least monomials of degree <= r in x_1..x_c (ascending lex)."""
    mons = sorted(monomials_up_to(c, r), key=lex_key)
    if e < 0 or e > len(mons):
        raise DomainError("e=%d exceeds the %d monomials of degree <= %d in %d variables" % (e, len(mons), r, c))
    seg = mons[:e]
    if not is_compact(seg, c, r, e):
        raise RuntimeError("lex segment failed the compactness certificate")
    return seg
