"""Drinfeld F_q[t]-modules over a field, built from level-(t) structures.

A module is determined by phi_t = c_0 + c_1 tau + ... + c_r tau^r, a
SkewPoly whose constant coefficient is the image of t.  Two coefficient
carriers are used: a finite field L = F_{q^n} with t specialised to a
non-zero element theta, and the function field F_q(x_1..x_r, t) for
generic computations.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .fields import GF, FieldElement, FieldError
from .skew import SkewPoly, kernel_roots, skew_from_additive, skew_mul, skew_right_divide


class LevelError(ValueError):
    pass


class QuotientError(ValueError):
    pass


class ConsistencyError(AssertionError):
    """An identity that must hold by construction failed."""


def nonzero_vectors(q, r):
    """All non-zero vectors of F_q^r as code tuples, lexicographic."""
    return [v for v in product(range(q), repeat=r) if any(v)]


class LevelStructure:
    """The F_q-linear map V_r -> L sending the i-th basis vector to e_i."""

    def __init__(self, ring, q, images):
        self.ring = ring
        self.q = q
        self.images = tuple(ring(e) if isinstance(e, int) else e for e in images)

    @property
    def r(self):
        return len(self.images)

    def value(self, alpha):
        acc = self.ring(0)
        for a, e in zip(alpha, self.images):
            if a:
                acc = acc + self.ring(a) * e
        return acc

    def image_set(self):
        """lambda(V_r) (finite carriers only, elements are hashable)."""
        return {self.value(v) for v in product(range(self.q), repeat=self.r)}

    def is_injective(self):
        return all(not self.value(v).is_zero() for v in nonzero_vectors(self.q, self.r))

    def compose(self, g):
        return act_level(self, g)


class DrinfeldModule:
    def __init__(self, ring, q, coeffs):
        self.ring = ring
        self.q = q
        self.phi_t = SkewPoly(ring, list(coeffs), q)
        if self.phi_t.is_zero():
            raise ValueError("phi_t must be non-zero")

    @property
    def coeffs(self):
        return self.phi_t.coeffs

    @property
    def structure(self):
        """Image of t under the structure map, i.e. c_0."""
        return self.phi_t[0]

    @property
    def rank(self):
        return rank_of(self)

    def phi(self, a):
        return phi_a(self, a)

    def __eq__(self, other):
        return isinstance(other, DrinfeldModule) and self.q == other.q \
            and self.phi_t == other.phi_t

    def __repr__(self):
        return f"DrinfeldModule(q={self.q}, phi_t={self.phi_t!r})"

    def to_text(self):
        return module_to_text(self)


@dataclass(frozen=True)
class Isogeny:
    source: DrinfeldModule
    target: DrinfeldModule
    psi: SkewPoly

    def check(self):
        if self.psi.is_zero():
            return False
        return skew_mul(self.psi, self.source.phi_t) == skew_mul(self.target.phi_t, self.psi)

    def compose(self, other):
        """self after other."""
        if other.target != self.source:
            raise ValueError("isogenies are not composable")
        return Isogeny(other.source, self.target, skew_mul(self.psi, other.psi))


def _product_minus_x(ring, roots):
    """Coefficients (low -> high) of prod_{lam in roots} (lam - X)."""
    poly = [ring(1)]
    for lam in roots:
        new = [ring(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            new[j] = new[j] + lam * c
            new[j + 1] = new[j + 1] - c
        poly = new
    return poly


def kernel_polynomial(ring, q, roots):
    """X * prod_{h in roots} (1 - X/h) as a SkewPoly (roots all non-zero)."""
    roots = list(roots)
    P = _product_minus_x(ring, roots)
    D = ring(1)
    for h in roots:
        D = D * h
    inv = ring(1) / D
    coeffs = [ring(0)] + [inv * c for c in P]
    return skew_from_additive(ring, q, coeffs)


def from_level(level, t):
    """phi_t(X) = t X prod_{v != 0} (1 - X/lambda(v)), expanded."""
    ring, q = level.ring, level.q
    vals = [level.value(v) for v in nonzero_vectors(q, level.r)]
    if any(v.is_zero() for v in vals):
        raise LevelError("level structure is not injective")
    if isinstance(t, int):
        t = ring(t)
    if t.is_zero():
        raise LevelError("the image of t must be non-zero")
    try:
        psi = kernel_polynomial(ring, q, vals)
    except ValueError as exc:
        raise ConsistencyError(str(exc)) from exc
    coeffs = [t * c for c in psi.coeffs]
    return DrinfeldModule(ring, q, coeffs)


def phi_a(M, a):
    """phi_a for a in F_q[t] given by its coefficient codes, lowest first."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    ring, q = M.ring, M.q
    out = SkewPoly(ring, [], q)
    for c in reversed(a):
        out = skew_mul(out, M.phi_t) + SkewPoly(ring, [ring(c)], q)
    return out


def rank_of(M):
    r = M.phi_t.degree
    if r < 1:
        raise ValueError("zero module: phi_t has tau-degree 0")
    return r


def torsion(M, a, L=None):
    """Roots of phi_a in the finite field L (the coefficient field by default)."""
    if L is None:
        L = M.ring
    return kernel_roots(phi_a(M, a), L)


def _as_codes(H, L):
    out = set()
    for h in H:
        if isinstance(h, FieldElement):
            if h.field != L:
                raise FieldError("subspace elements must lie in the coefficient field")
            out.add(h.value)
        else:
            out.add(int(h))
    return out


def is_fq_subspace(L, q, codes):
    if 0 not in codes:
        return False
    for a in codes:
        for c in range(2, q):
            if L.mul(c, a) not in codes:
                return False
        for b in codes:
            if L.add(a, b) not in codes:
                return False
    return True


def quotient_by(M, H):
    """Quotient of M by a finite phi_t-stable F_q-subspace H of L.

    Returns (M', Isogeny) with psi(X) = X prod_{h != 0} (1 - X/h) and
    phi'_t the exact right quotient of psi * phi_t by psi.
    """
    L = M.ring
    if not isinstance(L, GF):
        raise FieldError("quotients are computed over finite coefficient fields")
    codes = _as_codes(H, L)
    if not is_fq_subspace(L, M.q, codes):
        raise QuotientError("H is not an F_q-subspace")
    for h in codes:
        if M.phi_t(L(h)).value not in codes:
            raise QuotientError("H is not stable under phi_t")
    roots = [L(h) for h in sorted(codes) if h]
    psi = kernel_polynomial(L, M.q, roots)
    quot, rem = skew_right_divide(skew_mul(psi, M.phi_t), psi)
    if not rem.is_zero():
        raise ConsistencyError("psi * phi_t is not right divisible by psi")
    M2 = DrinfeldModule(L, M.q, quot.coeffs)
    return M2, Isogeny(M, M2, psi)


def moore_subspace_polynomial(L, q, basis):
    """Kernel polynomial of span(basis) by the Moore recursion.

    P_0 = X, P_j = P_{j-1}^q - P_{j-1}(b_j)^(q-1) P_{j-1}, then normalised
    so that the coefficient of X is 1.
    """
    P = SkewPoly(L, [L(1)], q)
    tau = SkewPoly.tau(L, q)
    for b in basis:
        v = P(b)
        if v.is_zero():
            raise ValueError("basis is linearly dependent")
        P = skew_mul(tau, P) - SkewPoly(L, [v ** (q - 1)], q) * P
    c0 = P[0]
    return SkewPoly(L, [c / c0 for c in P.coeffs], q)


def act_level(level, g):
    """lambda o g: new images e'_j = sum_i g[i, j] e_i."""
    a = g.a if hasattr(g, "a") else np.asarray(g)
    r = level.r
    if a.shape != (r, r):
        raise ValueError("matrix size does not match the level structure")
    if hasattr(g, "is_invertible") and not g.is_invertible():
        raise FieldError("matrix is singular")
    ring = level.ring
    images = []
    for j in range(r):
        acc = ring(0)
        for i in range(r):
            if a[i, j]:
                acc = acc + ring(int(a[i, j])) * level.images[i]
        images.append(acc)
    return LevelStructure(ring, level.q, images)


def isomorphism_unit(M, M2):
    """A unit u with c'_i = u^(q^i - 1) c_i for all i, or None.

    Over a finite field the candidates for u are the solutions of the
    equation at the lowest non-constant non-zero coefficient.
    """
    if M.q != M2.q or M.phi_t.degree != M2.phi_t.degree:
        return None
    if not M.structure == M2.structure:
        return None
    L, q = M.ring, M.q
    r = M.phi_t.degree
    idx = [i for i in range(1, r + 1) if not M.phi_t[i].is_zero()]
    if any(M.phi_t[i].is_zero() != M2.phi_t[i].is_zero() for i in range(1, r + 1)):
        return None
    if not isinstance(L, GF):
        if M.phi_t == M2.phi_t:
            return L(1)
        raise NotImplementedError("isomorphism search needs a finite coefficient field")
    i0 = idx[0]
    ratio = (M2.phi_t[i0] / M.phi_t[i0]).value
    us = np.arange(1, L.order, dtype=np.int64)
    cands = us[L.vpow(us, q ** i0 - 1) == ratio]
    for u in cands.tolist():
        if all(M2.phi_t[i].value == L.mul(L.pow(u, q ** i - 1), M.phi_t[i].value)
               for i in idx):
            return L(u)
    return None


def is_isomorphic(M, M2):
    return isomorphism_unit(M, M2) is not None


def module_to_text(M):
    """Line "q r n" (or "q r generic") then c_0 .. c_r, one per line."""
    L = M.ring
    r = M.phi_t.degree
    if isinstance(L, GF):
        n = L.degree if L.base is not None and L.base.order == M.q else 1
        head = f"{M.q} {r} {n}"
        body = [L.format(c.value) for c in M.coeffs]
    else:
        head = f"{M.q} {r} generic"
        body = [str(c) for c in M.coeffs]
    return "\n".join([head] + body) + "\n"


def module_from_text(text):
    from .fields import gf

    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    q, r, n = lines[0].split()
    q, r = int(q), int(r)
    if n == "generic":
        raise ValueError("generic modules are emitted for display only")
    Fq = gf(q)
    L = Fq.extension(int(n))
    coeffs = [L(L.parse(x)) for x in lines[1:]]
    if len(coeffs) != r + 1:
        raise ValueError(f"expected {r + 1} coefficients, found {len(coeffs)}")
    return DrinfeldModule(L, q, coeffs)
