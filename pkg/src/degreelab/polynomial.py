"""Sparse polynomials over F_p and linear changes of coordinates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .field import DomainError, PolyRing, signed
from .monomials import Monomial, degree, format_monomial, monomials_of_degree, mul, rlex_key, var

INHOMOGENEOUS = None


class Polynomial:
    """An element of ``ring``: a map monomial -> nonzero coefficient.

    Values are treated as immutable once built.
    """

    __slots__ = ("ring", "terms", "hdeg")

    def __init__(self, ring: PolyRing, terms=None):
        self.ring = ring
        p = ring.p
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ring.n:
                raise DomainError("monomial %r has wrong length for %d variables" % (m, ring.n))
            c %= p
            if c:
                clean[m] = c
        self.terms = clean
        degs = {degree(m) for m in clean}
        if len(degs) <= 1:
            self.hdeg = degs.pop() if degs else -1
        else:
            self.hdeg = INHOMOGENEOUS

    @classmethod
    def monomial(cls, ring, m, c=1):
        return cls(ring, {tuple(m): c})

    @classmethod
    def variable(cls, ring, i):
        return cls(ring, {var(ring.n, i): 1})

    @classmethod
    def linear_form(cls, ring, coeffs):
        return cls(ring, {var(ring.n, i): c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return self.hdeg is not INHOMOGENEOUS

    def degree(self) -> int:
        if self.hdeg is INHOMOGENEOUS:
            return max(degree(m) for m in self.terms)
        return self.hdeg

    def sorted_terms(self):
        """Terms in descending reverse-lex order."""
        return sorted(self.terms.items(), key=lambda t: rlex_key(t[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise DomainError("zero polynomial has no leading monomial")
        return max(self.terms, key=rlex_key)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Polynomial":
        inv = pow(self.leading_coefficient(), self.ring.p - 2, self.ring.p)
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()})

    def _check(self, other):
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise DomainError("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        p = self.ring.p
        for m, c in other.terms.items():
            t[m] = (t.get(m, 0) + c) % p
        return Polynomial(self.ring, t)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.ring.p
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mul(m1, m2)
                t[m] = (t.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial(self.ring, {(0,) * self.ring.n: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return "Polynomial(%s)" % self.to_string()

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            c = signed(c, self.ring.p)
            mon = format_monomial(m, self.ring.names)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mon == "1":
                body = str(a)
            elif a == 1:
                body = mon
            else:
                body = "%d*%s" % (a, mon)
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += sign + body
        return text

    __str__ = to_string


@dataclass(frozen=True)
class CoordinateChange:
    """sigma in GL_n(F_p), acting by x_i -> sum_j matrix[i][j] x_j."""

    ring: PolyRing
    matrix: tuple
    inverse: tuple = field(default=None, compare=False)
    attempts: int = field(default=1, compare=False)

    def __post_init__(self):
        n = self.ring.n
        mat = np.asarray(self.matrix, dtype=np.int64).reshape(n, n) % self.ring.p
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in mat))
        if self.inverse is None:
            inv = linalg.inverse(mat, self.ring.p) if n else np.zeros((0, 0), dtype=np.int64)
            object.__setattr__(self, "inverse", tuple(tuple(int(x) for x in row) for row in inv))

    @classmethod
    def identity(cls, ring):
        return cls(ring, np.eye(ring.n, dtype=np.int64))

    def inverted(self) -> "CoordinateChange":
        return CoordinateChange(self.ring, self.inverse, self.matrix)

    def compose(self, other: "CoordinateChange") -> "CoordinateChange":
        """The change sigma∘tau with (sigma∘tau)·f = sigma·(tau·f)."""
        prod = linalg.matmul(other.matrix, self.matrix, self.ring.p)
        return CoordinateChange(self.ring, prod)

    def image_of_variable(self, i: int) -> Polynomial:
        return Polynomial.linear_form(self.ring, self.matrix[i])


def substitute(f: Polynomial, images, target: PolyRing) -> Polynomial:
    """f(images[0], ..., images[n-1]) with images in ``target``."""
    if f.is_zero():
        return Polynomial(target, {})
    top = [0] * f.ring.n
    for m in f.terms:
        top = [max(a, b) for a, b in zip(top, m)]
    one = Polynomial(target, {(0,) * target.n: 1})
    powers = []
    for i in range(f.ring.n):
        pw = [one]
        for _ in range(top[i]):
            pw.append(pw[-1] * images[i])
        powers.append(pw)
    p = target.p
    acc: dict = {}
    for m, c in f.terms.items():
        term = one.scale(c)
        for i, e in enumerate(m):
            if e:
                term = term * powers[i][e]
        for mm, cc in term.terms.items():
            acc[mm] = (acc.get(mm, 0) + cc) % p
    return Polynomial(target, acc)


def apply_change(f: Polynomial, sigma: CoordinateChange) -> Polynomial:
    """sigma·f = f(sigma·x_1, ..., sigma·x_n)."""
    if not f.is_homogeneous():
        raise DomainError("coordinate changes are applied to forms only")
    images = [sigma.image_of_variable(i) for i in range(f.ring.n)]
    return substitute(f, images, f.ring)


def random_change(ring: PolyRing, seed, max_attempts: int = 64) -> CoordinateChange:
    """Uniform random invertible matrix over F_p, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        mat = rng.integers(0, ring.p, size=(ring.n, ring.n), dtype=np.int64)
        if ring.n == 0 or linalg.det(mat, ring.p) != 0:
            return CoordinateChange(ring, mat, attempts=attempt)
    raise RuntimeError("no invertible matrix after %d attempts" % max_attempts)


def random_form(ring: PolyRing, d: int, rng) -> Polynomial:
    """Dense random form of degree d."""
    mons = monomials_of_degree(ring.n, d)
    coeffs = rng.integers(0, ring.p, size=len(mons))
    return Polynomial(ring, dict(zip(mons, (int(c) for c in coeffs))))
