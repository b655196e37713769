"""Sparse multivariate polynomials over a finite field."""

import numpy as np

from .fields import FieldElement, FieldError
from .linalg import rank as _rank

DEFAULT_NAMES = ("x", "y", "z", "w", "v", "s")


def default_names(n):
    if n <= len(DEFAULT_NAMES):
        return tuple(DEFAULT_NAMES[:n])
    return tuple(f"x{i}" for i in range(n))


class MPoly:
    """Polynomial sum c_e x^e stored as {exponent tuple: coefficient code}.

    Zero coefficients are never stored.
    """

    __slots__ = ("field", "nvars", "terms", "names")

    def __init__(self, field, nvars, terms=None, names=None):
        self.field = field
        self.nvars = nvars
        self.names = tuple(names) if names else default_names(nvars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            c = int(c)
            if c:
                clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, field, nvars, terms, names):
        obj = cls.__new__(cls)
        obj.field, obj.nvars, obj.terms, obj.names = field, nvars, terms, names
        return obj

    @classmethod
    def const(cls, field, nvars, c, names=None):
        c = int(c) if not isinstance(c, FieldElement) else c.value
        return cls(field, nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, field, nvars, i, names=None):
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1}, names)

    @classmethod
    def linear_form(cls, field, coeffs, names=None):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if int(c):
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = int(c)
        return cls(field, n, terms, names)

    def _like(self, terms):
        return MPoly._raw(self.field, self.nvars, terms, self.names)

    def _check(self, other):
        if self.nvars != other.nvars or self.field != other.field:
            raise FieldError("polynomials over different rings")

    def _lift(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return MPoly.const(self.field, self.nvars, self.field(other), self.names)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return self._like({e: F.neg(c) for e, c in self.terms.items()})

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
        F = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, 0), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self._like(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = int(c)
        if c == 0:
            return self._like({})
        F = self.field
        return self._like({e: F.mul(c, v) for e, v in self.terms.items()})

    def frobenius_power(self, n):
        """self ** n for n a power of the characteristic (exponent scaling)."""
        F = self.field
        return self._like({tuple(n * x for x in e): F.pow(c, n)
                           for e, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        p = self.field.p
        result = MPoly.const(self.field, self.nvars, 1, self.names)
        base = self
        # base-p digits: f^n = prod (f^{p^i})^{d_i}
        while n:
            d = n % p
            for _ in range(d):
                result = result * base
            n //= p
            if n:
                base = base.frobenius_power(p)
        return result

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, e):
        return self.terms.get(tuple(e), 0)

    def evaluate(self, values):
        """Evaluate at field codes `values` (one per variable)."""
        F = self.field
        acc = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = F.mul(t, F.pow(v, k))
            acc = F.add(acc, t)
        return acc

    def sorted_terms(self):
        """Terms in graded-lex order, largest first."""
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self._lift(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.field == other.field \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            coef = F.format(c)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coef}*{mono}" if ":" not in coef else f"({coef})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def mpoly_arith(op, f, g):
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute_linear(f, g):
    """f(g x): each variable x_i becomes sum_j g[i, j] x_j.

    This is a right action, (f|g)|h = f|(g h).
    """
    a = g.a if hasattr(g, "a") else np.asarray(g)
    n = f.nvars
    if a.shape != (n, n):
        raise ValueError("substitution matrix has the wrong size")
    if hasattr(g, "is_invertible") and not g.is_invertible():
        raise FieldError("substitution matrix is singular")
    F = f.field
    forms = [MPoly.linear_form(F, a[i].tolist(), f.names) for i in range(n)]
    powers = [{0: MPoly.const(F, n, 1, f.names)} for _ in range(n)]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * forms[i]
        return cache[k]

    out = MPoly(F, n, {}, f.names)
    for e, c in f.terms.items():
        t = MPoly.const(F, n, c, f.names)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        out = out + t
    return out


def coefficient_matrix(polys):
    """Rows of coefficients over the union of the monomials that occur."""
    monos = sorted({e for f in polys for e in f.terms}, reverse=True)
    index = {e: i for i, e in enumerate(monos)}
    M = np.zeros((len(polys), len(monos)), dtype=np.int64)
    for row, f in enumerate(polys):
        for e, c in f.terms.items():
            M[row, index[e]] = c
    return M, monos


def span_dim(polys):
    """Dimension of the F_q-span of a sequence of MPoly."""
    polys = list(polys)
    if not polys:
        return 0
    first = polys[0]
    for f in polys[1:]:
        first._check(f)
    M, _ = coefficient_matrix(polys)
    if M.shape[1] == 0:
        return 0
    return _rank(first.field, M)
