"""Spherical Hecke combinatorics for GL_r over F_q[t] completed at t.

Elements of O_N = F_q[t]/(t^N) are coefficient lists of length N (lowest
power first, F_q codes).  K = GL_r(O) acts on integral matrices of
t-power determinant; a right coset K x is named by the row Hermite form of
x, and a double coset K x K by its elementary-divisor type.

Row reduction modulo t^N with N > v(det x) is exact: the lattice O^r x
contains t^{v(det x)} O^r, so it is the preimage of its image mod t^N.
"""

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .caps import CapExceeded, get_cap
from .fields import gf
from .groups import general_linear


class PrecisionError(ValueError):
    pass


class ConsistencyError(AssertionError):
    pass


def as_type(a):
    if isinstance(a, str):
        a = [int(x) for x in a.split(",") if x.strip()]
    a = tuple(int(x) for x in a)
    if not a or min(a) < 0:
        raise ValueError(f"bad divisor type {a}")
    return tuple(sorted(a))


def spread(a):
    return max(a) - min(a)


class LocalRing:
    """Arithmetic in O_N = F_q[t]/(t^N) and on square matrices over it."""

    def __init__(self, q, N):
        if N < 1:
            raise ValueError("truncation level must be at least 1")
        self.F = gf(q) if isinstance(q, int) else q
        self.q = self.F.order
        self.N = N

    # -- scalars ---------------------------------------------------------------

    def elem(self, coeffs):
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [int(x) for x in coeffs][: self.N]
        return c + [0] * (self.N - len(c))

    def zero(self):
        return [0] * self.N

    def one(self):
        return self.elem([1])

    def tpow(self, k):
        out = self.zero()
        if k < self.N:
            out[k] = 1
        return out

    def add(self, a, b):
        F = self.F
        return [F.add(x, y) for x, y in zip(a, b)]

    def sub(self, a, b):
        F = self.F
        return [F.sub(x, y) for x, y in zip(a, b)]

    def mul(self, a, b):
        F, N = self.F, self.N
        out = [0] * N
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(N - i):
                if b[j]:
                    out[i + j] = F.add(out[i + j], F.mul(x, b[j]))
        return out

    def val(self, a):
        for i, x in enumerate(a):
            if x:
                return i
        return self.N

    def shift_down(self, a, v):
        """A lift of a / t^v (a must have valuation >= v)."""
        return a[v:] + [0] * v

    def unit_inv(self, u):
        F, N = self.F, self.N
        if not u[0]:
            raise ValueError("not a unit")
        inv0 = F.inv(u[0])
        out = [0] * N
        out[0] = inv0
        for k in range(1, N):
            acc = 0
            for j in range(1, k + 1):
                if u[j] and out[k - j]:
                    acc = F.add(acc, F.mul(u[j], out[k - j]))
            out[k] = F.mul(F.neg(acc), inv0)
        return out

    # -- matrices --------------------------------------------------------------

    def matrix(self, rows):
        return [[self.elem(e) for e in row] for row in rows]

    def diag_t(self, a):
        r = len(a)
        return [[self.tpow(a[i]) if i == j else self.zero() for j in range(r)]
                for i in range(r)]

    def matmul(self, A, B):
        r, s, m = len(A), len(B), len(B[0])
        out = []
        for i in range(r):
            row = []
            for j in range(m):
                acc = self.zero()
                for k in range(s):
                    acc = self.add(acc, self.mul(A[i][k], B[k][j]))
                row.append(acc)
            out.append(row)
        return out

    def det(self, A):
        r = len(A)
        F = self.F
        acc = self.zero()
        for perm in permutations(range(r)):
            term = self.one()
            for i, j in enumerate(perm):
                term = self.mul(term, A[i][j])
            inv = sum(1 for i in range(r) for j in range(i + 1, r) if perm[i] > perm[j])
            if inv % 2:
                term = [F.neg(x) for x in term]
            acc = self.add(acc, term)
        return acc

    def key(self, A):
        """Precision-independent name of a reduced matrix."""
        def trim(e):
            e = list(e)
            while e and not e[-1]:
                e.pop()
            return tuple(e)
        return tuple(tuple(trim(e) for e in row) for row in A)


def _minors(R, A, k):
    r = len(A)
    from itertools import combinations
    for rows in combinations(range(r), k):
        for cols in combinations(range(r), k):
            yield R.det([[A[i][j] for j in cols] for i in rows])


def determinantal_type(R, A):
    """Elementary divisors from valuations of gcds of k x k minors (oracle)."""
    r = len(A)
    d = [0]
    for k in range(1, r + 1):
        v = min(R.val(m) for m in _minors(R, A, k))
        if v >= R.N:
            raise PrecisionError("a determinantal divisor vanishes at this precision")
        d.append(v)
    return tuple(d[k] - d[k - 1] for k in range(1, r + 1))


def smith_type(A, q=None, N=None, ring=None):
    """Elementary divisor exponents of A over O_N, by Smith reduction.

    A is an r x r matrix of O_N elements (coefficient lists or ints).
    """
    R = ring or LocalRing(q, N)
    M = [[R.elem(e) for e in row] for row in A]
    r = len(M)
    exps = []
    for s in range(r):
        best = None
        for i in range(s, r):
            for j in range(s, r):
                v = R.val(M[i][j])
                if best is None or v < best[0]:
                    best = (v, i, j)
        v, i0, j0 = best
        if v >= R.N:
            raise PrecisionError("determinant is zero at this precision")
        M[s], M[i0] = M[i0], M[s]
        for row in M:
            row[s], row[j0] = row[j0], row[s]
        u_inv = R.unit_inv(R.shift_down(M[s][s], v))
        for i in range(s + 1, r):
            if R.val(M[i][s]) < R.N:
                f = R.mul(R.shift_down(M[i][s], v), u_inv)
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[s])]
        for j in range(s + 1, r):
            if R.val(M[s][j]) < R.N:
                f = R.mul(R.shift_down(M[s][j], v), u_inv)
                for row in M:
                    row[j] = R.sub(row[j], R.mul(f, row[s]))
        exps.append(v)
    if sum(exps) >= R.N:
        raise PrecisionError("determinant valuation is not below the precision")
    return tuple(exps)


def hermite_form(R, A):
    """Row Hermite form of A over O_N: the canonical name of the coset K A.

    Upper triangular, diagonal t^{b_j}, entries above the diagonal of
    degree < b_j in their column.  Returns (H, b).
    """
    M = [[list(e) for e in row] for row in A]
    r = len(M)
    b = []
    for j in range(r):
        best = None
        for i in range(j, r):
            v = R.val(M[i][j])
            if best is None or v < best[0]:
                best = (v, i)
        v, i0 = best
        if v >= R.N:
            raise PrecisionError("matrix is singular at this precision")
        M[j], M[i0] = M[i0], M[j]
        u_inv = R.unit_inv(R.shift_down(M[j][j], v))
        M[j] = [R.mul(u_inv, x) for x in M[j]]
        for i in range(j + 1, r):
            if R.val(M[i][j]) < R.N:
                f = R.shift_down(M[i][j], v)
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[j])]
        b.append(v)
    if sum(b) >= R.N:
        raise PrecisionError("determinant valuation is not below the precision")
    for j in range(r):
        for i in range(j):
            e = M[i][j]
            if any(e[b[j]:]):
                f = [0] * b[j] + e[b[j]:]
                f = R.shift_down(f, b[j])
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[j])]
    return M, tuple(b)


def _hnf_candidates(R, r, total):
    """All row Hermite forms with diagonal exponents summing to `total`."""
    F = R.F
    q = F.order
    for b in product(range(total + 1), repeat=r):
        if sum(b) != total:
            continue
        slots = [(i, j) for j in range(r) for i in range(j)]
        ranges = [range(q ** b[j]) for (i, j) in slots]
        for choice in product(*ranges):
            H = R.diag_t(b)
            for (i, j), code in zip(slots, choice):
                coeffs = []
                for _ in range(b[j]):
                    coeffs.append(code % q)
                    code //= q
                H[i][j] = R.elem(coeffs)
            yield H


def left_cosets(a, q, N=None):
    """Hermite-form representatives x of the cosets K x in K diag(t^a) K."""
    a = as_type(a)
    need = sum(a) + max(a) + 1
    if N is None:
        N = need
    if N < need:
        raise PrecisionError(f"precision {N} too small for type {a}")
    R = LocalRing(q, N)
    return [H for H in _hnf_candidates(R, len(a), sum(a))
            if smith_type(H, ring=R) == a]


class HeckeElement:
    """Finite formal sum of double cosets, {DivisorType: multiplicity}."""

    def __init__(self, terms=None):
        self.terms = {as_type(k): int(v) for k, v in (terms or {}).items() if v}
        if any(v < 0 for v in self.terms.values()):
            raise ValueError("multiplicities must be positive")

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, dict):
            other = HeckeElement(other)
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __repr__(self):
        return "{" + ", ".join(f"{k}: {v}" for k, v in self.items()) + "}"

    def to_json(self):
        return [{"type": list(k), "mult": v} for k, v in self.items()]


@lru_cache(maxsize=None)
def coset_count(a, q):
    return len(left_cosets(a, q))


def convolve(a, b, q, N=None):
    """Pair-count product: c_z = #{(i, j) : K x_i y_j = K z}."""
    a, b = as_type(a), as_type(b)
    if len(a) != len(b):
        raise ValueError("types of different ranks")
    need = sum(a) + sum(b) + 1
    N = need if N is None else N
    if N < need:
        raise PrecisionError("precision must exceed the total degree")
    R = LocalRing(q, max(N, sum(a) + max(a) + 1, sum(b) + max(b) + 1))
    xs = left_cosets(a, q, R.N)
    ys = left_cosets(b, q, R.N)
    hits = Counter()
    types = {}
    for x in xs:
        for y in ys:
            H, _ = hermite_form(R, R.matmul(x, y))
            k = R.key(H)
            hits[k] += 1
            if k not in types:
                types[k] = smith_type(H, ring=R)
    by_type = defaultdict(set)
    for k, z in types.items():
        by_type[z].add(k)
    out = {}
    for z, keys in by_type.items():
        full = {R.key(H) for H in left_cosets(z, q)}
        if not keys <= full:
            raise ConsistencyError("product coset outside its double coset")
        counts = {hits.get(k, 0) for k in full}
        if len(counts) != 1:
            raise ConsistencyError(f"cosets of type {z} are hit unevenly: {counts}")
        out[z] = counts.pop()
    if sum(m * coset_count(z, q) for z, m in out.items()) != len(xs) * len(ys):
        raise ConsistencyError("pair count is not conserved")
    return HeckeElement(out)


# -- vectorised arithmetic on stacks of matrices over O_M ----------------------

def _stack_mul(F, A, B, N):
    """Products of stacks A (n, N, r, r) and B (..., N, r, r) modulo t^N."""
    out = np.zeros(np.broadcast_shapes(A.shape, B.shape), dtype=np.int64)
    prime = F.base is None
    for u in range(N):
        Au = A[..., u, :, :]
        if not Au.any():
            continue
        for v in range(N - u):
            Bv = B[..., v, :, :]
            if prime:
                out[..., u + v, :, :] += Au @ Bv
            else:
                r = A.shape[-1]
                acc = np.zeros(np.broadcast_shapes(Au.shape, Bv.shape), dtype=np.int64)
                for k in range(r):
                    acc = F.vadd(acc, F.vmul(Au[..., :, k:k + 1], Bv[..., k:k + 1, :]))
                out[..., u + v, :, :] = F.vadd(out[..., u + v, :, :], acc)
    if prime:
        out %= F.p
    return out


def _to_array(R, A, N):
    r = len(A)
    out = np.zeros((N, r, r), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            e = A[i][j]
            for s in range(min(N, len(e))):
                out[s, i, j] = e[s]
    return out


def _adjugate(R, A):
    r = len(A)
    if r == 1:
        return [[R.one()]]
    F = R.F
    out = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            minor = [[A[x][y] for y in range(r) if y != j] for x in range(r) if x != i]
            d = R.det(minor)
            if (i + j) % 2:
                d = [F.neg(c) for c in d]
            out[j][i] = d
    return out


@lru_cache(maxsize=8)
def gl_stack(q, r, M, cap=None):
    """Every element of GL_r(O_M) as an array of shape (n, M, r, r)."""
    F = gf(q)
    G = general_linear(F, r)
    n = G.order * q ** (r * r * (M - 1))
    cap = get_cap("orbit", cap)
    if n > cap:
        raise CapExceeded(f"|GL_{r}(O_{M})| = {n} exceeds cap {cap}")
    base = np.array([g.a for g in G.elements()], dtype=np.int64)
    tail = np.array(list(product(range(q), repeat=r * r * (M - 1))), dtype=np.int64)
    tail = tail.reshape(len(tail), M - 1, r, r)
    out = np.zeros((len(base), len(tail), M, r, r), dtype=np.int64)
    out[:, :, 0] = base[:, None]
    out[:, :, 1:] = tail[None, :]
    return out.reshape(-1, M, r, r)


def conjugation_members(h, q, M, stack=None):
    """Mask of k in GL_r(O_M) with h k h^{-1} integral (h exact, integral).

    Uses h k adj(h) = 0 mod t^{v(det h)}; the answer only depends on k mod
    t^M when the subgroup contains the congruence kernel K(t^M).
    """
    r = len(h)
    dv = sum(smith_type(h, q=q, N=_exact_precision(h)))
    K = gl_stack(q, r, M) if stack is None else stack
    if dv == 0:
        return np.ones(len(K), dtype=bool)
    R = LocalRing(q, dv)
    F = R.F
    H = _to_array(R, h, dv)
    A = _to_array(R, _adjugate(LocalRing(q, dv), [[R.elem(e) for e in row] for row in h]), dv)
    Kp = np.zeros((len(K), dv, r, r), dtype=np.int64)
    Kp[:, : min(M, dv)] = K[:, : min(M, dv)]
    P = _stack_mul(F, _stack_mul(F, H[None], Kp, dv), A[None], dv)
    return ~P.reshape(len(K), -1).any(axis=1)


def _exact_precision(h):
    """A precision beyond every coefficient of the exact matrix h."""
    deg = max(len(e) for row in h for e in row)
    r = len(h)
    return r * deg + 1


def index_count(a, q):
    """[K : K cap g K g^{-1}] for g = diag(t^a), counted in GL_r(O_c)."""
    a = as_type(a)
    c = max(spread(a), 1)
    R = LocalRing(q, sum(a) + 1)
    g = R.diag_t(a)
    K = gl_stack(q, len(a), c)
    mask = conjugation_members(_adjugate(R, g), q, c, K)
    size = int(mask.sum())
    if len(K) % size:
        raise ConsistencyError("subgroup order does not divide the group order")
    return len(K) // size


def _iwahori_gens(q, b, M):
    """Generators of K cap g K g^{-1} mod t^M, g = diag(t^b) with b sorted."""
    F = gf(q)
    r = len(b)
    basis = [F.p ** i for i in range(F.abs_degree)]
    gens = []

    def blank():
        m = np.zeros((M, r, r), dtype=np.int64)
        for i in range(r):
            m[0, i, i] = 1
        return m

    for i in range(r):
        m = blank()
        m[0, i, i] = F.primitive
        gens.append(m)
        for s in range(1, M):
            for c in basis:
                m = blank()
                m[s, i, i] = c
                gens.append(m)
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            low = max(b[i] - b[j], 0) if i > j else 0
            for s in range(low, M):
                for c in basis:
                    m = blank()
                    m[s, i, j] = c
                    gens.append(m)
    return gens


def hco_expand(a, b, q, cap=None):
    """T_a o T_b via the double quotient (K cap g'^{-1}Kg') \\ K / (K cap gKg^{-1}).

    g' = diag(t^a), g = diag(t^b).  A class K g' k corresponds to the right
    coset K x = K g' k; the classes are the orbits of K cap gKg^{-1} on the
    cosets in K g' K.  For each orbit g'' = x g and the coefficient is
    [K cap g''^{-1}Kg'' : K cap g^{-1}Kg cap g''^{-1}Kg''].
    """
    a, b = as_type(a), as_type(b)
    if len(a) != len(b):
        raise ValueError("types of different ranks")
    r = len(a)
    N = sum(a) + sum(b) + max(a) + max(b) + 1
    R = LocalRing(q, N)
    xs = left_cosets(a, q, N)
    keys = {R.key(hermite_form(R, x)[0]): i for i, x in enumerate(xs)}
    M = max(spread(a), spread(b), 1)
    gens = [[[list(m[:, i, j]) for j in range(r)] for i in range(r)]
            for m in _iwahori_gens(q, b, M)]
    parent = list(range(len(xs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, x in enumerate(xs):
        for gmat in gens:
            y, _ = hermite_form(R, R.matmul(x, [[R.elem(e) for e in row] for row in gmat]))
            j = keys.get(R.key(y))
            if j is None:
                raise ConsistencyError("orbit left the double coset")
            pi, pj = find(i), find(j)
            if pi != pj:
                parent[max(pi, pj)] = min(pi, pj)
    reps = sorted({find(i) for i in range(len(xs))})
    g = R.diag_t(b)
    out = Counter()
    for i in reps:
        g2 = R.matmul(xs[i], g)
        z = smith_type(g2, ring=R)
        c = max(spread(b), spread(z), 1)
        K = gl_stack(q, r, c, cap)
        in_g2 = conjugation_members(g2, q, c, K)
        in_g = conjugation_members(g, q, c, K)
        big = int(in_g2.sum())
        small = int((in_g2 & in_g).sum())
        if big % small:
            raise ConsistencyError("index is not an integer")
        out[z] += big // small
    return HeckeElement(out)


def mass(h, q):
    return sum(m * coset_count(z, q) for z, m in h.terms.items())


def types_up_to(r, total):
    """All divisor types of rank r with entry sum at most `total`."""
    out = set()
    for a in product(range(total + 1), repeat=r):
        if sum(a) <= total:
            out.add(tuple(sorted(a)))
    return sorted(out, key=lambda t: (sum(t), t))
