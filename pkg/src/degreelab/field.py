"""Prime-field scalars and the polynomial ring descriptor."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 32003


class DomainError(ValueError):
    """Raised when an operation receives arguments outside its domain."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def fp_add(a: int, b: int, p: int) -> int:
    return (a + b) % p


def fp_mul(a: int, b: int, p: int) -> int:
    return (a * b) % p


def fp_neg(a: int, p: int) -> int:
    return (-a) % p


def fp_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DomainError("inverse of zero in F_%d" % p)
    return pow(a, p - 2, p)


_OPS = {
    "add": lambda a, b, p: fp_add(a, b, p),
    "mul": lambda a, b, p: fp_mul(a, b, p),
    "inv": lambda a, b, p: fp_inv(a, p),
    "neg": lambda a, b, p: fp_neg(a, p),
}


def fp_arith(a: int, b: int | None, op: str, p: int) -> int:
    """Dispatch one field operation by name (``add``, ``mul``, ``inv``, ``neg``)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError("unknown field operation %r" % op) from None
    return fn(a, b, p)


def signed(c: int, p: int) -> int:
    """Symmetric representative of ``c`` in (-p/2, p/2]."""
    c %= p
    return c - p if c > p // 2 else c


@dataclass(frozen=True)
class PolyRing:
    """k[x_1..x_n] with k = F_p."""

    n: int
    p: int = DEFAULT_PRIME
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("variable count must be non-negative")
        if not is_prime(self.p) or self.p <= 2:
            raise DomainError("characteristic must be an odd prime, got %d" % self.p)
        if not self.names:
            object.__setattr__(self, "names", tuple("x%d" % (i + 1) for i in range(self.n)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.n:
            raise DomainError("expected %d variable names" % self.n)
        if len(set(self.names)) != self.n:
            raise DomainError("variable names must be distinct")

    def drop_last(self) -> "PolyRing":
        """The ring k[x_1..x_{n-1}]."""
        if self.n == 0:
            raise DomainError("no variable to drop")
        return PolyRing(self.n - 1, self.p, self.names[:-1])
