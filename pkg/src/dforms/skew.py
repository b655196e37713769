"""Twisted polynomials sum b_i tau^i with tau * b = b^q * tau.

A SkewPoly acts on its coefficient field as the additive polynomial
sum b_i X^(q^i); composition of those maps is the skew product.

Coefficients are duck-typed: anything supporting + - * / ** == and
``is_zero()`` works, which covers finite field elements and the rational
functions of `funcfield`.  The `ring` argument must be callable on small
integers (to embed F_q) and carries the characteristic ``p``.
"""

import numpy as np

from .fields import GF, FieldElement, FieldError


def embeds_in(K, L):
    """True if K is L or a field L is built over (codes embed unchanged)."""
    while L is not None:
        if L is K or L == K:
            return True
        L = L.base
    return False


class SkewPoly:
    __slots__ = ("ring", "q", "coeffs")

    def __init__(self, ring, coeffs, q):
        self.ring = ring
        self.q = q
        cs = [c if not isinstance(c, int) else ring(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def tau(cls, ring, q, k=1):
        return cls(ring, [ring(0)] * k + [ring(1)], q)

    @classmethod
    def constant(cls, ring, q, c):
        return cls(ring, [c], q)

    def _check(self, other):
        if self.q != other.q or not (self.ring is other.ring or self.ring == other.ring):
            raise FieldError("skew polynomials over different rings")

    def _lift(self, other):
        if isinstance(other, SkewPoly):
            self._check(other)
            return other
        if isinstance(other, int) or not hasattr(other, "coeffs"):
            return SkewPoly(self.ring, [other], self.q)
        return None

    @property
    def degree(self):
        """tau-degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring(0)

    @property
    def leading(self):
        return self.coeffs[-1]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self[i] + other[i] for i in range(n)], self.q)

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.ring, [-c for c in self.coeffs], self.q)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return skew_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return skew_mul(other, self)

    def __pow__(self, n):
        out = SkewPoly(self.ring, [self.ring(1)], self.q)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.q == other.q and len(self.coeffs) == len(other.coeffs) and \
            all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.q, tuple(map(str, self.coeffs))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            s = str(c)
            if i == 0:
                parts.append(s)
            else:
                tau = "tau" if i == 1 else f"tau^{i}"
                parts.append(f"({s})*{tau}")
        return " + ".join(parts)

    # -- division and evaluation ----------------------------------------------

    def right_divmod(self, other):
        return skew_right_divide(self, other)

    def __call__(self, x):
        return additive_eval(self, x)


def skew_mul(a, b):
    """Product under tau * c = c^q * tau."""
    a._check(b)
    if not a.coeffs or not b.coeffs:
        return SkewPoly(a.ring, [], a.q)
    q = a.q
    out = [a.ring(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        e = q ** i
        for j, bj in enumerate(b.coeffs):
            if bj.is_zero():
                continue
            out[i + j] = out[i + j] + ai * (bj ** e if i else bj)
    return SkewPoly(a.ring, out, q)


def skew_right_divide(a, b):
    """(quotient, remainder) with a = quotient * b + remainder."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("right division by the zero skew polynomial")
    q = a.q
    quot = [a.ring(0)] * max(a.degree - b.degree + 1, 0)
    rem = a
    lead_b = b.leading
    while not rem.is_zero() and rem.degree >= b.degree:
        s = rem.degree - b.degree
        c = rem.leading / (lead_b ** (q ** s))
        quot[s] = quot[s] + c
        term = SkewPoly(a.ring, [a.ring(0)] * s + [c], q)
        rem = rem - skew_mul(term, b)
    return SkewPoly(a.ring, quot, q), rem


def additive_eval(a, x):
    """sum_i b_i x^(q^i)."""
    if isinstance(x, int):
        x = a.ring(x)
    acc = x * 0
    y = x
    for i, c in enumerate(a.coeffs):
        if i:
            y = y ** a.q
        if not c.is_zero():
            acc = acc + _coerce_coeff(c, x) * y
    return acc


def _coerce_coeff(c, x):
    if isinstance(c, FieldElement) and isinstance(x, FieldElement) and c.field is not x.field:
        if not embeds_in(c.field, x.field):
            raise FieldError("coefficient field does not embed in the evaluation field")
        return FieldElement(x.field, c.value)
    return c


def evaluate_all(a, L):
    """Vector of additive_eval(a, x) for every code x of the finite field L."""
    if not isinstance(L, GF):
        raise FieldError("evaluation over all elements needs a finite field")
    xs = np.arange(L.order, dtype=np.int64)
    acc = np.zeros_like(xs)
    y = xs
    for i, c in enumerate(a.coeffs):
        if i:
            y = L.vpow(y, a.q)
        if c.is_zero():
            continue
        if not isinstance(c, FieldElement) or not embeds_in(c.field, L):
            raise FieldError("coefficients must lie in the search field")
        acc = L.vadd(acc, L.vmul(c.value, y))
    return acc


def kernel_roots(a, L):
    """All roots of the additive polynomial of `a` in the finite field L."""
    if a.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    vals = evaluate_all(a, L)
    return {FieldElement(L, int(x)) for x in np.flatnonzero(vals == 0)}


def skew_from_additive(ring, q, poly_coeffs):
    """Convert ordinary coefficients (index = X-exponent) to a SkewPoly.

    Raises ValueError if a coefficient sits at a non-q-power exponent.
    """
    out = []
    for e, c in enumerate(poly_coeffs):
        if c.is_zero():
            continue
        if e == 0:
            raise ValueError("additive polynomial has a constant term")
        i, n = 0, 1
        while n < e:
            n *= q
            i += 1
        if n != e:
            raise ValueError(f"non-zero coefficient at non-q-power exponent {e}")
        while len(out) <= i:
            out.append(ring(0))
        out[i] = c
    return SkewPoly(ring, out, q)
