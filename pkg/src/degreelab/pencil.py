"""Finite-length modules given by matrices of linear forms.

A pencil is phi = sum_i x_i A_i : S^m(-1) -> S^d, studied degree by degree.
A FiniteModule is a vector space F_q^l with the variables acting by
matrices; it is the input of the Dilworth-number oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from . import linalg
from .field import DEFAULT_PRIME, DomainError, is_prime
from .monomial_ideal import MonomialIdeal, binom
from .monomials import monomials_of_degree

ORACLE_BUDGET = {2: 8, 3: 6}


class OracleBudgetError(RuntimeError):
    pass


def _check_field(p: int):
    if not is_prime(p):
        raise DomainError("field size %d is not prime" % p)


# ---------- pencils ----------

@dataclass(frozen=True)
class PencilModule:
    """coker of phi = sum x_i A_i with each A_i a d x m matrix over F_p."""

    n: int
    mats: tuple
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        _check_field(self.p)
        arrs = [np.asarray(a, dtype=np.int64) % self.p for a in self.mats]
        if len(arrs) != self.n:
            raise DomainError("need one matrix per variable")
        shapes = {a.shape for a in arrs}
        if len(shapes) != 1 or len(next(iter(shapes))) != 2:
            raise DomainError("pencil matrices must share one 2-d shape")
        object.__setattr__(self, "mats", tuple(arrs))

    @property
    def d(self) -> int:
        return self.mats[0].shape[0]

    @property
    def m(self) -> int:
        return self.mats[0].shape[1]

    def image_matrix(self, k: int) -> np.ndarray:
        """Matrix of S_{k-1}^m -> S_k^d, rows (monomial, i), columns (u, j)."""
        d, m, n = self.d, self.m, self.n
        rows = monomials_of_degree(n, k)
        index = {mon: r for r, mon in enumerate(rows)}
        srcs = monomials_of_degree(n, k - 1) if k >= 1 else ()
        out = np.zeros((len(rows) * d, len(srcs) * m), dtype=np.int64)
        for s, u in enumerate(srcs):
            for v in range(n):
                a = self.mats[v]
                if not a.any():
                    continue
                t = list(u)
                t[v] += 1
                r = index[tuple(t)]
                out[r * d:(r + 1) * d, s * m:(s + 1) * m] += a
        return out % self.p

    def piece_dim(self, k: int) -> int:
        total = self.d * len(monomials_of_degree(self.n, k))
        if k == 0:
            return total
        return total - linalg.rank(self.image_matrix(k), self.p)


@dataclass(frozen=True)
class PencilPieces:
    dims: tuple
    finite: bool

    @property
    def length(self):
        return sum(self.dims) if self.finite else None


def pencil_pieces(pencil: PencilModule, cap: int = 50) -> PencilPieces:
    """dim M_k for k = 0, 1, ... until the first zero (or the cap)."""
    dims = []
    for k in range(cap + 1):
        dk = pencil.piece_dim(k)
        if dk == 0:
            return PencilPieces(tuple(dims), True)
        dims.append(dk)
    return PencilPieces(tuple(dims), False)


def finlen_bound(n: int, d: int) -> int:
    return binom(n + d - 1, d - 1)


def finlen_check(pencil: PencilModule, pieces: PencilPieces | None = None) -> bool:
    pieces = pieces or pencil_pieces(pencil)
    if not pieces.finite:
        raise DomainError("cokernel is not of finite length within the cap")
    return pieces.length <= finlen_bound(pencil.n, pencil.d)


def random_pencil(n: int, d: int, m: int, p: int, rng) -> PencilModule:
    return PencilModule(n, tuple(rng.integers(0, p, size=(d, m)) for _ in range(n)), p)


# ---------- finite modules ----------

@dataclass(frozen=True)
class FiniteModule:
    """F_p^l with commuting nilpotent operators X_1..X_n (acting on columns)."""

    ops: tuple
    p: int
    degrees: tuple = field(default=None, compare=False)

    def __post_init__(self):
        _check_field(self.p)
        arrs = tuple(np.asarray(x, dtype=np.int64) % self.p for x in self.ops)
        if not arrs:
            raise DomainError("a module needs at least one variable")
        ell = arrs[0].shape[0]
        for x in arrs:
            if x.shape != (ell, ell):
                raise DomainError("operators must be square of a common size")
        object.__setattr__(self, "ops", arrs)
        if self.degrees is None:
            object.__setattr__(self, "degrees", (0,) * ell)

    @property
    def length(self) -> int:
        return self.ops[0].shape[0]

    @property
    def n(self) -> int:
        return len(self.ops)

    def check_axioms(self) -> bool:
        """Operators commute and some power of m kills the module."""
        p, ell = self.p, self.length
        for a, b in combinations(self.ops, 2):
            if ((a @ b - b @ a) % p).any():
                return False
        # m^ell M = 0 for a nilpotent commuting family
        span = np.eye(ell, dtype=np.int64)
        for _ in range(ell):
            if span.size == 0:
                break
            nxt = np.hstack([(x @ span) % p for x in self.ops])
            span = linalg.rref(nxt.T, p)[0].T if nxt.any() else np.zeros((ell, 0), dtype=np.int64)
        return span.size == 0 or not span.any()

    def m_image(self, basis: np.ndarray) -> np.ndarray:
        """Columns spanning m·N for N spanned by the columns of ``basis``."""
        if basis.size == 0:
            return np.zeros((self.length, 0), dtype=np.int64)
        return np.hstack([(x @ basis) % self.p for x in self.ops])


def nu(mod: FiniteModule) -> int:
    """Minimal number of generators: dim M - dim mM."""
    return mod.length - linalg.rank(np.hstack(mod.ops), mod.p)


def socle_and_type(mod: FiniteModule):
    """Basis of socle(M) = intersection of the kernels, and its dimension."""
    stacked = np.vstack(mod.ops)
    basis = linalg.nullspace(stacked, mod.p)
    return basis, basis.shape[0]


def module_type(mod: FiniteModule) -> int:
    return socle_and_type(mod)[1]


def length_mod_hyperplane(mod: FiniteModule, coeffs) -> int:
    """length(M / xM) for x = sum c_i x_i."""
    x = sum(int(c) * a for c, a in zip(coeffs, mod.ops)) % mod.p
    return mod.length - linalg.rank(x, mod.p)


def matlis_dual(mod: FiniteModule) -> FiniteModule:
    return FiniteModule(tuple(x.T.copy() for x in mod.ops), mod.p, tuple(-g for g in mod.degrees))


def build_square_zero(mats, p: int = DEFAULT_PRIME) -> FiniteModule:
    """L_phi on V + W: x_i sends v to A_i v in W and kills W."""
    arrs = [np.asarray(a, dtype=np.int64) % p for a in mats]
    if not arrs:
        raise DomainError("need at least one matrix")
    shapes = {a.shape for a in arrs}
    if len(shapes) != 1 or len(next(iter(shapes))) != 2:
        raise DomainError("all matrices must have the shape dim W x dim V")
    dw, dv = arrs[0].shape
    ell = dv + dw
    ops = []
    for a in arrs:
        x = np.zeros((ell, ell), dtype=np.int64)
        x[dv:, :dv] = a
        ops.append(x)
    return FiniteModule(tuple(ops), p, (0,) * dv + (1,) * dw)


def skew_example(p: int = 3) -> FiniteModule:
    """The 3 x 3 skew-symmetric pencil in x, y, z as a square-zero module."""
    return build_square_zero(skew_matrices(), p)


def skew_matrices():
    ax = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    ay = [[0, 0, 1], [0, 0, 0], [-1, 0, 0]]
    az = [[0, 0, 0], [0, 0, 1], [0, -1, 0]]
    return (ax, ay, az)


def square_zero_presentation(mats, p: int = DEFAULT_PRIME) -> PencilModule:
    """Linear presentation of L_phi: generators V, relations ker(S_1 ⊗ V -> W)."""
    arrs = [np.asarray(a, dtype=np.int64) % p for a in mats]
    n = len(arrs)
    dw, dv = arrs[0].shape
    # column (i, j) of the map S_1 ⊗ V -> W is A_i e_j
    big = np.hstack(arrs)
    rel = linalg.nullspace(big, p)  # rows: vectors indexed by (i, j)
    cols = rel.shape[0]
    out = [np.zeros((dv, cols), dtype=np.int64) for _ in range(n)]
    for c in range(cols):
        for i in range(n):
            out[i][:, c] = rel[c, i * dv:(i + 1) * dv]
    return PencilModule(n, tuple(out), p)


def _quotient_data(pencil: PencilModule, k: int):
    """(rref rows, pivots, free coordinates) describing S_k^d / image_k."""
    p = pencil.p
    size = pencil.d * len(monomials_of_degree(pencil.n, k))
    if k == 0:
        return np.zeros((0, size), dtype=np.int64), [], list(range(size))
    img = pencil.image_matrix(k)
    if img.size == 0:
        return np.zeros((0, size), dtype=np.int64), [], list(range(size))
    rows, piv = linalg.rref(img.T, p)
    free = [c for c in range(size) if c not in set(piv)]
    return rows, piv, free


def _reduce(v, rows, piv, p):
    v = v % p
    for r, c in enumerate(piv):
        if v[c]:
            v = (v - v[c] * rows[r]) % p
    return v


def pencil_to_module(pencil: PencilModule, cap: int = 50) -> FiniteModule:
    """The cokernel as a FiniteModule, with a monomial basis of each M_k."""
    pieces = pencil_pieces(pencil, cap)
    if not pieces.finite:
        raise DomainError("cokernel is not of finite length within the cap")
    n, d, p = pencil.n, pencil.d, pencil.p
    top = len(pieces.dims)
    data = [_quotient_data(pencil, k) for k in range(top + 1)]
    offsets, pos = [], 0
    for k in range(top):
        offsets.append(pos)
        pos += len(data[k][2])
    ell = pos
    degrees = tuple(k for k in range(top) for _ in data[k][2])
    ops = [np.zeros((ell, ell), dtype=np.int64) for _ in range(n)]
    for k in range(top - 1):
        mons = monomials_of_degree(n, k)
        nxt = monomials_of_degree(n, k + 1)
        nidx = {m: r for r, m in enumerate(nxt)}
        rows, piv, free = data[k + 1]
        for a, coord in enumerate(data[k][2]):
            mon, comp = divmod(coord, d)
            for v in range(n):
                t = list(mons[mon])
                t[v] += 1
                vec = np.zeros(len(nxt) * d, dtype=np.int64)
                vec[nidx[tuple(t)] * d + comp] = 1
                red = _reduce(vec, rows, piv, p)
                ops[v][offsets[k + 1]:offsets[k + 1] + len(free), offsets[k] + a] = red[free]
    return FiniteModule(tuple(ops), p, degrees)


def module_from_monomial_quotient(j: MonomialIdeal, p: int) -> FiniteModule:
    """S/J for artinian monomial J, on the basis of monomials outside J."""
    if not j.is_artinian():
        raise DomainError("S/J must have finite length")
    basis = []
    k = 0
    while True:
        layer = [m for m in monomials_of_degree(j.n, k) if m not in j]
        if not layer:
            break
        basis.extend(layer)
        k += 1
    index = {m: i for i, m in enumerate(basis)}
    ell = len(basis)
    ops = []
    for v in range(j.n):
        x = np.zeros((ell, ell), dtype=np.int64)
        for m, i in index.items():
            t = list(m)
            t[v] += 1
            t = tuple(t)
            if t in index:
                x[index[t], i] = 1
        ops.append(x)
    return FiniteModule(tuple(ops), p, tuple(sum(m) for m in basis))


def trivial_module(t: int, n: int, p: int) -> FiniteModule:
    """k^t with every variable acting by zero."""
    return FiniteModule(tuple(np.zeros((t, t), dtype=np.int64) for _ in range(n)), p)


# ---------- Dilworth number ----------

def _canon(basis_rows, p):
    """Canonical key of the row span: its reduced echelon form."""
    if len(basis_rows) == 0:
        return ()
    r, _ = linalg.rref(np.asarray(basis_rows), p)
    return tuple(tuple(int(v) for v in row) for row in r)


def _rows(key, ell):
    return np.array(key, dtype=np.int64).reshape(len(key), ell)


def colon_m(mod: FiniteModule, key) -> np.ndarray:
    """Basis (rows) of (N : m) = {v : X_i v in N for all i}."""
    ell, p = mod.length, mod.p
    b = _rows(key, ell)
    piv = [int(np.nonzero(row)[0][0]) for row in b]
    # projection killing N: v -> v - b^T v[piv]
    q = np.eye(ell, dtype=np.int64)
    for r, c in enumerate(piv):
        q[:, c] = (q[:, c] - b[r]) % p
    stacked = np.vstack([(q @ x) % p for x in mod.ops])
    return linalg.nullspace(stacked, p)


def nu_of_submodule(mod: FiniteModule, key) -> int:
    """nu(N) = dim N - dim mN."""
    if not key:
        return 0
    b = _rows(key, mod.length).T
    return len(key) - linalg.rank(mod.m_image(b), mod.p)


def _check_budget(mod: FiniteModule):
    limit = ORACLE_BUDGET.get(mod.p)
    if limit is None or mod.length > limit:
        raise OracleBudgetError(
            "oracle budget: length %d over F_%d (allowed: l <= 8 over F_2, l <= 6 over F_3)" % (mod.length, mod.p)
        )


class _Points:
    """Every vector of F_q^l by index, with lookup tables for the module action."""

    def __init__(self, mod: FiniteModule):
        q, ell = mod.p, mod.length
        self.q, self.ell = q, ell
        self.size = q ** ell
        self.weights = q ** np.arange(ell, dtype=np.int64)
        idx = np.arange(self.size, dtype=np.int64)
        self.coords = (idx[:, None] // self.weights[None, :]) % q
        self.img = np.stack([self.encode(self.coords @ x.T) for x in mod.ops]) if ell else None
        self.mults = np.stack([self.encode(c * self.coords) for c in range(q)])

    def encode(self, vecs) -> np.ndarray:
        return ((np.asarray(vecs) % self.q) @ self.weights).astype(np.int64)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.encode(self.coords[a][:, None, :] + self.coords[b][None, :, :]).ravel()


def _enumerate(mod: FiniteModule):
    """Yield (element mask, basis indices) for every submodule, by dimension.

    Every submodule N' of dimension k+1 contains a submodule N of dimension k
    with mN' in N, so N' = N + span(v) for some v in (N : m) outside N.
    """
    pts = _Points(mod)
    zero = np.zeros(pts.size, dtype=bool)
    zero[0] = True
    layer = {zero.tobytes(): (zero, ())}
    while layer:
        nxt = {}
        for mask, basis in layer.values():
            yield mask, basis
            colon = np.all(mask[pts.img], axis=0)
            cand = colon & ~mask
            elems = np.flatnonzero(mask)
            done = np.zeros(pts.size, dtype=bool)
            for v in np.flatnonzero(cand):
                if done[v]:
                    continue
                new = np.zeros(pts.size, dtype=bool)
                new[pts.add(elems, pts.mults[:, v])] = True
                done |= new
                key = new.tobytes()
                if key not in nxt:
                    nxt[key] = (new, basis + (int(v),))
        layer = nxt


def _log_exact(size: int, q: int) -> int:
    k = 0
    while size > 1:
        size, rem = divmod(size, q)
        if rem:
            raise RuntimeError("subspace size is not a power of q")
        k += 1
    return k


def _mask_key(pts: "_Points", basis, p) -> tuple:
    return _canon(pts.coords[list(basis)], p) if basis else ()


def submodules(mod: FiniteModule) -> list:
    """All submodules as canonical echelon keys."""
    p = mod.p
    pts = _Points(mod)
    return [_mask_key(pts, basis, p) for _, basis in _enumerate(mod)]


def all_subspaces(ell: int, p: int):
    """Every subspace of F_p^ell as a reduced echelon key (slow enumerator)."""
    yield ()
    for k in range(1, ell + 1):
        for piv in combinations(range(ell), k):
            slots = [(r, c) for r in range(k) for c in range(piv[r] + 1, ell) if c not in piv]
            for vals in product(range(p), repeat=len(slots)):
                m = np.zeros((k, ell), dtype=np.int64)
                for r, c in enumerate(piv):
                    m[r, c] = 1
                for (r, c), val in zip(slots, vals):
                    m[r, c] = val
                yield tuple(tuple(int(v) for v in row) for row in m)


def is_submodule(mod: FiniteModule, key) -> bool:
    if not key:
        return True
    b = _rows(key, mod.length)
    img = mod.m_image(b.T).T
    return linalg.rank(np.vstack([b, img]), mod.p) == len(key)


def submodules_slow(mod: FiniteModule) -> list:
    return [key for key in all_subspaces(mod.length, mod.p) if is_submodule(mod, key)]


@dataclass(frozen=True)
class DilworthResult:
    dil: int
    witness: tuple
    submodule_count: int
    quotient_dil: int


def dil_bruteforce(mod: FiniteModule, method: str = "layers") -> DilworthResult:
    """dil(M) = max nu(N) over submodules N, with the quotient-type cross value.

    ``quotient_dil`` is max type(M/K) = dim (K : m) - dim K over submodules K.
    """
    _check_budget(mod)
    if method == "subspaces":
        subs = submodules_slow(mod)
        best, witness, qbest = -1, None, -1
        for key in subs:
            v = nu_of_submodule(mod, key)
            if v > best:
                best, witness = v, key
            qbest = max(qbest, colon_m(mod, key).shape[0] - len(key))
        return DilworthResult(best, witness, len(subs), qbest)
    if method != "layers":
        raise DomainError("unknown enumeration method %r" % method)
    pts = _Points(mod)
    best, witness, qbest, count = -1, None, -1, 0
    for mask, basis in _enumerate(mod):
        count += 1
        k = len(basis)
        if k:
            gens = pts.coords[list(basis)].T
            v = k - linalg.rank(mod.m_image(gens), mod.p)
        else:
            v = 0
        if v > best:
            best, witness = v, _mask_key(pts, basis, mod.p)
        colon_size = int(np.count_nonzero(np.all(mask[pts.img], axis=0)))
        qbest = max(qbest, _log_exact(colon_size, mod.p) - k)
    return DilworthResult(best, witness, count, qbest)


# ---------- the determinant criterion for square pencils ----------

def det_identically_zero(mats, p: int, seed: int = 0, points: int | None = None) -> bool:
    """Whether det(sum x_i A_i) vanishes at (n*s + 1)^2 random points."""
    arrs = [np.asarray(a, dtype=np.int64) % p for a in mats]
    s = arrs[0].shape[0]
    if arrs[0].shape != (s, s):
        raise DomainError("determinant needs square matrices")
    rng = np.random.default_rng(seed)
    points = points or (len(arrs) * s + 1) ** 2
    for _ in range(points):
        c = rng.integers(0, p, size=len(arrs))
        m = sum(int(ci) * a for ci, a in zip(c, arrs)) % p
        if linalg.det(m, p) != 0:
            return False
    return True


def generic_quotient_exceeds_nu(mod: FiniteModule, seed: int = 0, samples: int = 5) -> bool:
    """length(M/xM) > nu(M) for every one of ``samples`` random x."""
    rng = np.random.default_rng(seed)
    base = nu(mod)
    for _ in range(samples):
        c = rng.integers(0, mod.p, size=mod.n)
        if length_mod_hyperplane(mod, c) <= base:
            return False
    return True
