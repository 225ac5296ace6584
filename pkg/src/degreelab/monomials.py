"""Exponent-vector monomials and the two monomial orders.

A monomial is a plain tuple of non-negative exponents.  The Gröbner kernel
packs monomials into Python ints (16 bits per variable, the last variable
most significant) so that, inside one degree, the reverse-lex leader is
simply the smallest packed value.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

from .field import DomainError

EXP_BITS = 16
EXP_LIMIT = 1 << (EXP_BITS - 1)  # top bit of every field is a borrow guard
_FIELD_MASK = (1 << EXP_BITS) - 1

Monomial = tuple


def degree(m: Monomial) -> int:
    return sum(m)


def mon_range(m: Monomial) -> int:
    """Largest (1-based) index of a variable dividing m; 0 for m = 1."""
    for i in range(len(m) - 1, -1, -1):
        if m[i]:
            return i + 1
    return 0


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit(n: int) -> Monomial:
    return (0,) * n


def var(n: int, i: int, e: int = 1) -> Monomial:
    """x_{i+1}^e in n variables (0-based index i)."""
    m = [0] * n
    m[i] = e
    return tuple(m)


def rlex_key(m: Monomial):
    """Sort key: larger key means larger in graded reverse-lex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    """Sort key for pure lex (no degree sort)."""
    return tuple(m)


def _cmp(ka, kb) -> int:
    return (ka > kb) - (ka < kb)


def cmp_rlex(m1: Monomial, m2: Monomial) -> int:
    """+1 if m1 > m2 in graded reverse-lex, -1 if smaller, 0 if equal."""
    if len(m1) != len(m2):
        raise DomainError("monomials from different rings")
    return _cmp(rlex_key(m1), rlex_key(m2))


def cmp_lex(m1: Monomial, m2: Monomial) -> int:
    """+1 if m1 > m2 lexicographically (first differing exponent decides)."""
    if len(m1) != len(m2):
        raise DomainError("monomials from different rings")
    return _cmp(lex_key(m1), lex_key(m2))


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-d monomials in n variables, in descending rlex order."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=rlex_key, reverse=True)
    return tuple(out)


def monomials_up_to(n: int, d: int):
    for k in range(d + 1):
        yield from monomials_of_degree(n, k)


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


# ---------- packed representation (kernel only) ----------

def pack(m: Monomial) -> int:
    v = 0
    for i, e in enumerate(m):
        if e >= EXP_LIMIT:
            raise OverflowError("exponent %d exceeds packed budget" % e)
        v |= e << (EXP_BITS * i)
    return v


def unpack(v: int, n: int) -> Monomial:
    return tuple((v >> (EXP_BITS * i)) & _FIELD_MASK for i in range(n))


@lru_cache(maxsize=None)
def guard_mask(n: int) -> int:
    g = 0
    for i in range(n):
        g |= 1 << (EXP_BITS * i + EXP_BITS - 1)
    return g


def packed_divides(a: int, b: int, guard: int) -> bool:
    """a | b for packed monomials; ``guard`` is guard_mask(n)."""
    return ((b | guard) - a) & guard == guard
