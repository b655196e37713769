"""Finite fields F_p, F_q = F_p[w]/(f) and towers F_{q^n} = F_q[y]/(h).

Elements are encoded as non-negative integers.  For an extension of degree
n over a base field of order Q0 the element sum_j b_j y^j is the integer
sum_j b_j * Q0**j, so elements of the base field are exactly the integers
below Q0.  Expanding every b_j further shows that all encodings are base-p
digit vectors, which is how addition is done.

Multiplication goes through exp/log tables built once per field.
"""

from functools import cached_property

import numpy as np

MAX_ORDER = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """Return (p, m) with q = p**m, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m, n = 0, q
            while n % p == 0:
                n //= p
                m += 1
            if n != 1 or not is_prime(p):
                raise FieldError(f"{q} is not a prime power")
            return p, m
    raise FieldError(f"{q} is not a prime power")


# -- polynomials over a field, as coefficient lists low -> high -------------

def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim(F.add(x, y) for x, y in zip(a, b))


def _pmul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _ptrim(out)


def _pdivmod(F, a, b):
    a, b = _ptrim(a), _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        s = len(a) - len(b)
        quot[s] = c
        for i, y in enumerate(b):
            a[s + i] = F.sub(a[s + i], F.mul(c, y))
        a = _ptrim(a)
    return _ptrim(quot), a


def _pgcd(F, a, b):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdivmod(F, a, b)[1]
    return a


def _ppowmod(F, a, e, f):
    result, base = [1], _pdivmod(F, a, f)[1]
    while e:
        if e & 1:
            result = _pdivmod(F, _pmul(F, result, base), f)[1]
        base = _pdivmod(F, _pmul(F, base, base), f)[1]
        e >>= 1
    return result


def is_irreducible(F, f):
    """Rabin's test for f (coefficients low -> high) over the field F."""
    f = _ptrim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    Q = F.order
    x = [0, 1]

    def frob_x(k):
        # x^(Q^k) mod f by repeated Q-th powers
        y = x
        for _ in range(k):
            y = _ppowmod(F, y, Q, f)
        return y

    if _padd(F, frob_x(n), [F.neg(c) for c in x]) != []:
        return False
    for ell in _prime_factors(n):
        h = _padd(F, frob_x(n // ell), [F.neg(c) for c in x])
        if len(_pgcd(F, f, h)) > 1:
            return False
    return True


def default_modulus(F, n):
    """Smallest monic irreducible of degree n over F.

    Candidates x^n + c_{n-1} x^{n-1} + ... + c_0 are ordered by the integer
    sum c_i * Q**i, i.e. lexicographically from the top coefficient down.
    """
    Q = F.order
    for code in range(Q ** n):
        coeffs, c = [], code
        for _ in range(n):
            coeffs.append(c % Q)
            c //= Q
        f = coeffs + [1]
        if is_irreducible(F, f):
            return tuple(f)
    raise FieldError("no irreducible polynomial found")  # unreachable


class GF:
    """A finite field, either prime or a simple extension of another GF."""

    def __init__(self, p, base=None, modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        self.p = p
        self.base = base
        if base is None:
            self.degree = 1
            self.modulus = (0, 1)
            self.order = p
        else:
            if base.p != p:
                raise FieldError("base field has a different characteristic")
            f = tuple(int(c) for c in _ptrim(modulus))
            if len(f) < 2 or f[-1] != 1:
                raise FieldError("modulus must be monic of positive degree")
            if any(not 0 <= c < base.order for c in f):
                raise FieldError("modulus coefficients outside the base field")
            if not is_irreducible(base, f):
                raise FieldError(f"modulus {f} is reducible over F_{base.order}")
            self.degree = len(f) - 1
            self.modulus = f
            self.order = base.order ** self.degree
        if self.order > MAX_ORDER:
            raise FieldError(f"field order {self.order} exceeds {MAX_ORDER}")
        self.abs_degree = self.degree * (base.abs_degree if base else 1)
        self._build_tables()

    # -- construction helpers ---------------------------------------------

    def extension(self, n, modulus=None):
        """The degree-n extension of this field (tower construction)."""
        if n < 1:
            raise FieldError("extension degree must be positive")
        if n == 1:
            return self
        if modulus is None:
            modulus = default_modulus(self, n)
        return GF(self.p, base=self, modulus=modulus)

    @property
    def base_order(self):
        """Order of the field this one is built over (p for prime fields)."""
        return self.base.order if self.base is not None else self.p

    def _slow_mul(self, a, b):
        B, Q0 = self.base, self.base.order
        da = [(a // Q0 ** i) % Q0 for i in range(self.degree)]
        db = [(b // Q0 ** i) % Q0 for i in range(self.degree)]
        prod = _pdivmod(B, _pmul(B, _ptrim(da), _ptrim(db)), list(self.modulus))[1]
        return sum(c * Q0 ** i for i, c in enumerate(prod))

    def _build_tables(self):
        Q = self.order
        p = self.p
        k = self.abs_degree
        self._pw = np.array([p ** i for i in range(k)], dtype=np.int64)
        xs = np.arange(Q, dtype=np.int64)
        self._digits = (xs[:, None] // self._pw[None, :]) % p
        if self.base is None:
            mul = lambda a, b: a * b % p  # noqa: E731
        else:
            mul = self._slow_mul
        # primitive element
        factors = _prime_factors(Q - 1)
        gen = None
        for g in range(1, Q):
            if all(self._slow_pow(mul, g, (Q - 1) // ell) != 1 for ell in factors):
                gen = g
                break
        if gen is None:  # Q == 2
            gen = 1
        exp = np.zeros(2 * (Q - 1), dtype=np.int64)
        log = np.zeros(Q, dtype=np.int64)
        x = 1
        for i in range(Q - 1):
            exp[i] = x
            log[x] = i
            x = mul(x, gen)
        exp[Q - 1:] = exp[:Q - 1]
        self.primitive = gen
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        neg = (self._digits * -1) % p @ self._pw
        self._neg_list = neg.tolist()
        self._neg = neg

    @staticmethod
    def _slow_pow(mul, a, e):
        r = 1
        while e:
            if e & 1:
                r = mul(r, a)
            a = mul(a, a)
            e >>= 1
        return r

    # -- scalar arithmetic on integer codes -------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        p, r, m = self.p, 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    def neg(self, a):
        return self._neg_list[a]

    def sub(self, a, b):
        return self.add(a, self._neg_list[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp_list[(self.order - 1 - self._log_list[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp_list[(self._log_list[a] * e) % (self.order - 1)]

    def frobenius(self, a, k=1):
        """a ** (base_order ** k)."""
        return self.pow(a, pow(self.base_order, k, self.order - 1) + (self.order - 1))

    def log(self, a):
        return self._log_list[a]

    def exp(self, i):
        return self._exp_list[i % (self.order - 1)]

    def scalar_mul(self, n, a):
        """The integer n times a."""
        return self.mul(n % self.p, a) if n % self.p else 0

    # -- numpy vectorized arithmetic --------------------------------------

    @cached_property
    def add_table(self):
        Q = self.order
        if Q > 1024:
            raise FieldError("addition table only built for fields of order <= 1024")
        d = self._digits
        return ((d[:, None, :] + d[None, :, :]) % self.p) @ self._pw

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.p
        if self.order <= 1024:
            return self.add_table[a, b]
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def vneg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.base is None:
            return (a * b) % self.p
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[self._log[a] + self._log[b]]
        out[(a == 0) | (b == 0)] = 0
        return out

    def vpow(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        out = self._exp[(self._log[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0 if e else 1, out)

    # -- element wrappers -------------------------------------------------

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            value = self.from_coords(value)
        value = int(value)
        if self.base is None:
            value %= self.p
        elif not 0 <= value < self.order:
            raise FieldError(f"{value} is not an element code of F_{self.order}")
        return FieldElement(self, value)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def gen(self):
        """The class of the adjoined variable (w or y); 1 for prime fields."""
        return FieldElement(self, self.base_order if self.base is not None else 1)

    def elements(self):
        return [FieldElement(self, a) for a in range(self.order)]

    def coords(self, a):
        """Base-p coordinate vector of the code a, lowest digit first."""
        return tuple(int(d) for d in self._digits[a])

    def from_coords(self, coords):
        coords = list(coords)
        if len(coords) > self.abs_degree:
            raise FieldError("too many coordinates")
        return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(coords))

    def format(self, a):
        if self.abs_degree == 1:
            return str(a)
        return ":".join(str(c) for c in self.coords(a))

    def parse(self, text):
        text = text.strip()
        if ":" in text:
            return self.from_coords(int(c) for c in text.split(":"))
        v = int(text)
        if self.abs_degree == 1:
            return v % self.p
        if not 0 <= v < self.order:
            raise FieldError(f"{text!r} is not an element of F_{self.order}")
        return v

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        return f"GF({self.order}) over GF({self.base.order}) mod {self.modulus}"

    def __eq__(self, other):
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.modulus, self.base) == (other.p, other.modulus, other.base)

    def __hash__(self):
        return hash((self.p, self.modulus, self.base))


class FieldElement:
    """Immutable element of a GF, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("operands live in different fields")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(b, self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, k=1):
        return FieldElement(self.field, self.field.frobenius(self.value, k))

    def is_zero(self):
        return self.value == 0

    def coords(self):
        return self.field.coords(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return self.field.format(self.value)


def field_make(p, m=1, modulus=None):
    """F_q with q = p**m; the modulus defaults to the smallest irreducible.

    `modulus` lists coefficients over F_p from the constant term up.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError("degree must be at least 1")
    prime = GF(p)
    if m == 1:
        if modulus is not None and len(_ptrim(modulus)) != 2:
            raise FieldError("a degree-1 modulus must be linear")
        return prime
    if modulus is not None and len(_ptrim(modulus)) - 1 != m:
        raise FieldError(f"modulus has degree {len(_ptrim(modulus)) - 1}, expected {m}")
    return prime.extension(m, modulus)


_FIELD_CACHE = {}


def gf(q):
    """Cached F_q for a prime power q, with the default modulus."""
    if q not in _FIELD_CACHE:
        p, m = prime_power(q)
        _FIELD_CACHE[q] = field_make(p, m)
    return _FIELD_CACHE[q]
