"""The graded ring R_r generated by the reciprocals 1/v of linear forms.

Generators u_n = 1/n are indexed by the projective lines of V_r = F_q^r,
each represented by the vector whose first non-zero entry is 1; a
non-normalised v = alpha*n gives 1/v = alpha^{-1} u_n.  Degree-k elements
are sparse maps {exponent vector over the lines: coefficient}.

Monomial representations are not unique (partial fractions), so equality
and linear algebra go through numerators in S_r = F_q[x_1..x_r]: for a
degree-k element f and exponent bounds m_n >= every exponent of u_n in f,
f * prod_n n^{m_n} is a polynomial, and multiplying by it is injective.
Numerators are handled densely after setting x_r = 1, which is injective
on homogeneous polynomials of a fixed degree.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement, product
from math import comb, prod

import numpy as np

from .caps import CapExceeded, get_cap
from .fields import gf
from .groups import MatrixGroup, columns_fixed, double_cosets, general_linear, is_fine_image
from .linalg import independent_rows, left_nullspace, rank as _rank
from .mpoly import MPoly, default_names


class ConsistencyError(AssertionError):
    """An identity that holds by theory failed (signals an arithmetic bug)."""


def normalize_vector(F, v):
    """(alpha, n) with v = alpha * n and the first non-zero entry of n equal to 1."""
    v = tuple(int(x) for x in v)
    for x in v:
        if x:
            inv = F.inv(x)
            return x, tuple(F.mul(inv, y) for y in v)
    raise ValueError("the zero vector has no projective class")


class SatakeRing:
    """Bookkeeping for R_r over F_q: lines, generator names, numerators."""

    def __init__(self, q, r):
        if r < 1:
            raise ValueError("rank must be at least 1")
        self.F = gf(q) if isinstance(q, int) else q
        self.q = self.F.order
        self.r = r
        F = self.F
        self.lines = sorted({normalize_vector(F, v)[1]
                             for v in product(range(self.q), repeat=r) if any(v)})
        self.index = {n: i for i, n in enumerate(self.lines)}
        self.L = len(self.lines)
        self.var_names = default_names(r)

    def normalize(self, v):
        """(alpha, line index) with v = alpha * lines[index]."""
        alpha, n = normalize_vector(self.F, v)
        return alpha, self.index[n]

    def form_name(self, n):
        parts = []
        for a, name in zip(n, self.var_names):
            if a:
                c = self.F.format(a)
                parts.append(name if a == 1 else f"{c}{name}" if ":" not in c else f"({c}){name}")
        return "+".join(parts)

    @cached_property
    def display_order(self):
        """Line indices for printing: fewer variables first, then x before y."""
        return sorted(range(self.L), key=lambda i: (
            sum(1 for a in self.lines[i] if a), [-a for a in self.lines[i]]))

    @cached_property
    def gen_names(self):
        out = []
        for n in self.lines:
            s = self.form_name(n)
            out.append(f"u_{s}" if len(s) == 1 else f"u_{{{s}}}")
        return out

    # -- elements ------------------------------------------------------------

    def gen(self, i):
        e = [0] * self.L
        e[i] = 1
        return RElement(self, 1, {tuple(e): 1})

    def gen_of(self, v):
        """1/v for any non-zero vector v (the scaling relation applied)."""
        alpha, i = self.normalize(v)
        g = self.gen(i)
        return g.scale(self.F.inv(alpha))

    def one(self):
        return RElement(self, 0, {(0,) * self.L: 1})

    def zero(self, k):
        return RElement(self, k, {})

    def monomials(self, k, cap=None):
        cap = get_cap("monomials", cap)
        n = comb(self.L + k - 1, k)
        if n > cap:
            raise CapExceeded(f"{n} monomials of degree {k} exceed cap {cap}")
        out = []
        for combo in combinations_with_replacement(range(self.L), k):
            e = [0] * self.L
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out

    # -- dense numerators ----------------------------------------------------

    def _linmul(self, arr, n):
        """Multiply a dehomogenised numerator by the linear form n."""
        F, r = self.F, self.r
        a = n
        if r == 1:
            return F.vmul(a[0], arr)
        d1 = arr.shape[0]
        out = np.zeros((d1 + 1,) * (r - 1), dtype=np.int64)
        core = (slice(0, d1),) * (r - 1)
        prime = F.base is None
        if a[r - 1]:
            out[core] = (a[r - 1] * arr) if prime else F.vmul(a[r - 1], arr)
        for i in range(r - 1):
            if not a[i]:
                continue
            sl = tuple(slice(1, d1 + 1) if j == i else slice(0, d1) for j in range(r - 1))
            if prime:
                out[sl] += a[i] * arr
            else:
                out[sl] = F.vadd(out[sl], F.vmul(a[i], arr))
        if prime:
            out %= F.p
        return out

    def _unit(self):
        if self.r == 1:
            return np.ones(1, dtype=np.int64)
        return np.ones((1,) * (self.r - 1), dtype=np.int64)

    def cofactor_products(self, cofactors):
        """Dense prod_n n^{f_n} for every exponent vector f in `cofactors`.

        Shared prefixes are multiplied once (depth-first over the lines).
        """
        cofactors = [tuple(f) for f in cofactors]
        result = {}
        order = sorted(set(cofactors))

        def walk(group, depth, arr):
            if depth == self.L:
                for f in group:
                    result[f] = arr
                return
            n = self.lines[depth]
            i, prev, cur = 0, 0, arr
            while i < len(group):
                v = group[i][depth]
                j = i
                while j < len(group) and group[j][depth] == v:
                    j += 1
                for _ in range(v - prev):
                    cur = self._linmul(cur, n)
                prev = v
                walk(group[i:j], depth + 1, cur)
                i = j

        if order:
            walk(order, 0, self._unit())
        return result

    def numerator_rows(self, elements, bounds=None):
        """Matrix whose rows are numerators of `elements` (all of one degree).

        `bounds` defaults to the largest exponent of each generator across
        the elements; every row is then f * prod_n n^{bounds_n}.
        """
        elements = list(elements)
        if not elements:
            return np.zeros((0, 0), dtype=np.int64)
        k = elements[0].degree
        if any(f.degree != k for f in elements):
            raise ValueError("numerator rows need elements of one degree")
        if bounds is None:
            bounds = [0] * self.L
            for f in elements:
                for e in f.terms:
                    bounds = [max(b, x) for b, x in zip(bounds, e)]
        bounds = tuple(bounds)
        d = sum(bounds) - k
        cof = {e: tuple(b - x for b, x in zip(bounds, e))
               for f in elements for e in f.terms}
        prods = self.cofactor_products(cof.values())
        width = (d + 1) ** (self.r - 1) if self.r > 1 else 1
        F = self.F
        M = np.zeros((len(elements), width), dtype=np.int64)
        for row, f in enumerate(elements):
            acc = np.zeros(width, dtype=np.int64)
            for e, c in f.terms.items():
                acc = F.vadd(acc, F.vmul(c, prods[cof[e]].ravel()))
            M[row] = acc
        return M

    def dense_to_mpoly(self, arr, d):
        r = self.r
        terms = {}
        if r == 1:
            if int(arr.ravel()[0]):
                terms[(d,)] = int(arr.ravel()[0])
            return MPoly(self.F, 1, terms, self.var_names)
        for idx in zip(*np.nonzero(arr)):
            idx = tuple(int(i) for i in idx)
            s = sum(idx)
            if s > d:
                raise ConsistencyError("numerator exceeds its degree")
            terms[idx + (d - s,)] = int(arr[idx])
        return MPoly(self.F, r, terms, self.var_names)

    @cached_property
    def denominator(self):
        """D = product of the normalised linear forms, as an MPoly."""
        out = MPoly.const(self.F, self.r, 1, self.var_names)
        for n in self.lines:
            out = out * MPoly.linear_form(self.F, n, self.var_names)
        return out

    # -- group action --------------------------------------------------------

    def generator_action(self, g):
        """(perm, scalars) with u_i | g = scalars[i] * u_{perm[i]}."""
        F = self.F
        a = g.a if hasattr(g, "a") else np.asarray(g)
        perm, scal = [], []
        for n in self.lines:
            image = [0] * self.r
            for j in range(self.r):
                acc = 0
                for i in range(self.r):
                    if n[i] and a[i, j]:
                        acc = F.add(acc, F.mul(n[i], int(a[i, j])))
                image[j] = acc
            alpha, idx = self.normalize(image)
            perm.append(idx)
            scal.append(F.inv(alpha))
        return perm, scal

    def __eq__(self, other):
        return isinstance(other, SatakeRing) and self.q == other.q and self.r == other.r

    def __hash__(self):
        return hash((self.q, self.r))

    def __repr__(self):
        return f"SatakeRing(q={self.q}, r={self.r}, lines={self.L})"


@lru_cache(maxsize=None)
def satake_ring(q, r):
    return SatakeRing(q, r)


class RElement:
    """Homogeneous element of R_r."""

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring, degree, terms):
        self.ring = ring
        self.degree = degree
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != ring.L or sum(e) != degree:
                raise ValueError(f"monomial {e} is not of degree {degree}")
            if c:
                clean[e] = int(c)
        self.terms = clean

    def _like(self, degree, terms):
        obj = RElement.__new__(RElement)
        obj.ring, obj.degree, obj.terms = self.ring, degree, terms
        return obj

    def _same(self, other):
        if other.ring != self.ring:
            raise ValueError("elements of different rings")
        if self.terms and other.terms and self.degree != other.degree:
            raise ValueError("sum of elements of different degrees")

    def __add__(self, other):
        self._same(other)
        F = self.ring.F
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        deg = self.degree if self.terms else other.degree
        return self._like(deg, out)

    def __neg__(self):
        F = self.ring.F
        return self._like(self.degree, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.ring.F
        c = int(c)
        if not c:
            return self._like(self.degree, {})
        return self._like(self.degree, {e: F.mul(c, v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.ring.F(other).value)
        if other.ring != self.ring:
            raise ValueError("elements of different rings")
        F = self.ring.F
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = F.add(out.get(e, 0), F.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return self._like(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = RElement(self.ring, 0, {(0,) * self.ring.L: 1})
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        """Canonical test: true iff the element vanishes in R_r."""
        if not self.terms:
            return True
        return not self.ring.numerator_rows([self]).any()

    def __eq__(self, other):
        if not isinstance(other, RElement):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.terms == other.terms and self.degree == other.degree:
            return True
        if self.degree != other.degree and self.terms and other.terms:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def evaluate(self, L, point):
        """Value at a point z of L^r with every line form non-zero (u_n -> 1/n(z))."""
        vals = []
        for n in self.ring.lines:
            acc = 0
            for a, z in zip(n, point):
                if a:
                    acc = L.add(acc, L.mul(a, int(z)))
            if not acc:
                raise ZeroDivisionError(f"line {n} vanishes at the point")
            vals.append(L.inv(acc))
        out = 0
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t = L.mul(t, L.pow(v, k))
            out = L.add(out, t)
        return out

    def structurally_equal(self, other):
        return self.degree == other.degree and self.terms == other.terms

    def act(self, g):
        return group_act(self, g)

    def __str__(self):
        if not self.terms:
            return "0"
        F, names = self.ring.F, self.ring.gen_names
        order = self.ring.display_order
        parts = []
        for e, c in sorted(self.terms.items(), key=lambda it: [it[0][i] for i in order],
                           reverse=True):
            mono = "*".join(names[i] if e[i] == 1 else f"{names[i]}^{e[i]}"
                            for i in order if e[i])
            coef = F.format(c)
            if not mono:
                parts.append(coef)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coef}*{mono}" if ":" not in coef else f"({coef})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


# -- canonical forms and dimensions -------------------------------------------

def clear_denominators(f):
    """f * D^k as a polynomial in S_r (D = product of the line forms)."""
    ring = f.ring
    k = f.degree
    d = (ring.L - 1) * k
    if not f.terms:
        return MPoly(ring.F, ring.r, {}, ring.var_names)
    row = ring.numerator_rows([f], bounds=[k] * ring.L)[0]
    shape = (d + 1,) * (ring.r - 1) if ring.r > 1 else (1,)
    return ring.dense_to_mpoly(row.reshape(shape), d)


def span_dim_r(elements):
    """Dimension of the F_q-span of homogeneous elements of one degree."""
    elements = [f for f in elements if f.terms]
    if not elements:
        return 0
    ring = elements[0].ring
    return _rank(ring.F, ring.numerator_rows(elements))


def graded_dim(r, q, k, cap=None):
    """dim of the degree-k piece of R_r, by row reduction of numerators."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if k == 0:
        return 1
    ring = satake_ring(q, r)
    monos = ring.monomials(k, cap)
    M = ring.numerator_rows([RElement(ring, k, {e: 1}) for e in monos],
                            bounds=[k] * ring.L)
    return _rank(ring.F, M)


def dim_formula(r, q, k):
    """sum over i in {0,1}^(r-1) of q^(sum nu*i_nu) * binomial(k, sum i_nu)."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    total = 0
    for bits in product((0, 1), repeat=r - 1):
        w = sum((nu + 1) * b for nu, b in enumerate(bits))
        total += q ** w * comb(k, sum(bits))
    return total


def weighted_hilbert(weights, k):
    """Number of multisets of `weights` summing to k."""
    weights = list(weights)
    if not weights or any(w <= 0 for w in weights):
        raise ValueError("weights must be a non-empty list of positive integers")
    if k < 0:
        return 0
    ways = [1] + [0] * k
    for w in weights:
        for s in range(w, k + 1):
            ways[s] += ways[s - w]
    return ways[k]


def gl_weights(q, r):
    return [q ** i - 1 for i in range(1, r + 1)]


def sl_weights(q, r):
    return [q ** i - 1 for i in range(1, r)] + [(q ** r - 1) // (q - 1)]


def unipotent_weights(q, r):
    return [1] * r


# -- universal family ------------------------------------------------------------

@dataclass
class UniversalFamily:
    """Coefficients c_1..c_r of t X prod_{v != 0}(1 - X/v), with t factored out."""

    ring: SatakeRing
    coeffs: list
    checks: dict = field(default_factory=dict)

    @property
    def r(self):
        return len(self.coeffs)

    def degrees(self):
        return [c.degree for c in self.coeffs]

    def rank(self):
        nz = [i + 1 for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return max(nz, default=0)


def _line_factor(F, q):
    """Coefficients in Y of prod_{alpha in F_q^*} (1 - alpha^{-1} Y)."""
    poly = [1]
    for alpha in range(1, q):
        b = F.neg(F.inv(alpha))
        new = [0] * (len(poly) + 1)
        for j, c in enumerate(poly):
            new[j] = F.add(new[j], c)
            new[j + 1] = F.add(new[j + 1], F.mul(b, c))
        poly = new
    return poly


def universal_coeffs(r, q, check=True):
    """Expand prod over v in V_r \\ 0 of (1 - u_v X) in R_r[X].

    Raises ConsistencyError if a coefficient at an exponent X^m with m + 1
    not a power of q survives (checked canonically in R_r).
    """
    ring = satake_ring(q, r)
    F, L = ring.F, ring.L
    factor = _line_factor(F, ring.q)
    expected = [1] + [0] * (ring.q - 2) + [F.neg(1)]
    if factor != expected:
        raise ConsistencyError("product over scalars is not 1 - Y^(q-1)")
    poly = {0: {(0,) * L: 1}}
    for i in range(L):
        new = {}
        for m, terms in poly.items():
            for j, c in enumerate(factor):
                if not c:
                    continue
                bucket = new.setdefault(m + j, {})
                for e, v in terms.items():
                    e2 = list(e)
                    e2[i] += j
                    e2 = tuple(e2)
                    s = F.add(bucket.get(e2, 0), F.mul(c, v))
                    if s:
                        bucket[e2] = s
                    else:
                        bucket.pop(e2, None)
        poly = {m: t for m, t in new.items() if t}
    qpowers = {ring.q ** i - 1: i for i in range(r + 1)}
    coeffs = [ring.zero(ring.q ** i - 1) for i in range(1, r + 1)]
    vanish = True
    for m in sorted(poly):
        elem = RElement(ring, m, poly[m])
        if m in qpowers:
            if qpowers[m] >= 1:
                coeffs[qpowers[m] - 1] = elem
        elif check and not elem.is_zero():
            vanish = False
            raise ConsistencyError(f"coefficient of X^{m + 1} does not vanish")
    fam = UniversalFamily(ring, coeffs)
    if check:
        fam.checks = {
            "q_power_exponents_only": vanish,
            "degrees": fam.degrees() == [ring.q ** i - 1 for i in range(1, r + 1)],
            "top_nonzero": not coeffs[-1].is_zero(),
        }
    return fam


def subspace_elements(F, basis):
    """{vector: coordinates} for every vector in the span of the basis rows."""
    basis = [tuple(int(x) for x in b) for b in basis]
    out = {}
    r = len(basis[0]) if basis else 0
    for beta in product(range(F.order), repeat=len(basis)):
        v = [0] * r
        for c, b in zip(beta, basis):
            if c:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        out.setdefault(tuple(v), beta)
    return out


def specialize_stratum(U, basis):
    """Kill u_v for v outside span(basis) and rename the rest into R_{r'}.

    Returns the specialised family on SatakeRing(q, r') (coefficients
    c_1..c_r, those beyond r' expected to vanish).
    """
    ring = U.ring
    F = ring.F
    basis = [tuple(int(x) for x in b) for b in basis]
    rp = len(basis)
    if rp == 0:
        raise ValueError("the stratum of the zero subspace is empty")
    if any(len(b) != ring.r for b in basis):
        raise ValueError("basis vectors have the wrong length")
    span = subspace_elements(F, basis)
    if len(span) != ring.q ** rp:
        raise ValueError("basis vectors are linearly dependent")
    target = satake_ring(ring.q, rp)
    mapping = []
    for n in ring.lines:
        if n in span:
            gamma, j = target.normalize(span[n])
            mapping.append((j, F.inv(gamma)))
        else:
            mapping.append(None)

    def image(f):
        out = {}
        for e, c in f.terms.items():
            if any(k and mapping[i] is None for i, k in enumerate(e)):
                continue
            e2 = [0] * target.L
            coef = c
            for i, k in enumerate(e):
                if k:
                    j, s = mapping[i]
                    e2[j] += k
                    coef = F.mul(coef, F.pow(s, k))
            e2 = tuple(e2)
            v = F.add(out.get(e2, 0), coef)
            if v:
                out[e2] = v
            else:
                out.pop(e2, None)
        return RElement(target, f.degree, out)

    return UniversalFamily(target, [image(c) for c in U.coeffs])


def stratum_matches(U, basis):
    """(specialised family, equals universal_coeffs(r'), rank)."""
    S = specialize_stratum(U, basis)
    rp = S.ring.r
    ref = universal_coeffs(rp, S.ring.q, check=False)
    ok = all(S.coeffs[i] == ref.coeffs[i] for i in range(rp))
    ok = ok and all(c.is_zero() for c in S.coeffs[rp:])
    return S, ok, S.rank()


# -- group action and invariants -------------------------------------------------

def group_act(f, g):
    """f | g: each generator u_v goes to 1/(v o g), renormalised."""
    ring = f.ring
    F = ring.F
    perm, scal = ring.generator_action(g)
    out = {}
    for e, c in f.terms.items():
        e2 = [0] * ring.L
        coef = c
        for i, k in enumerate(e):
            if k:
                e2[perm[i]] += k
                coef = F.mul(coef, F.pow(scal[i], k))
        e2 = tuple(e2)
        v = F.add(out.get(e2, 0), coef)
        if v:
            out[e2] = v
        else:
            out.pop(e2, None)
    return RElement(ring, f.degree, out)


def _invariant_system(K, k, cap=None):
    ring = satake_ring(K.field.order, K.r)
    if k == 0:
        return ring, [ring.one()], np.zeros((1, 0), dtype=np.int64)
    monos = ring.monomials(k, cap)
    index = {e: i for i, e in enumerate(monos)}
    N = ring.numerator_rows([RElement(ring, k, {e: 1}) for e in monos],
                            bounds=[k] * ring.L)
    basis = independent_rows(ring.F, N)
    F = ring.F
    blocks = []
    for g in K.gens:
        perm, scal = ring.generator_action(g)
        rows = np.zeros((len(basis), N.shape[1]), dtype=np.int64)
        for r_i, b in enumerate(basis):
            e = monos[b]
            e2 = [0] * ring.L
            coef = 1
            for i, x in enumerate(e):
                if x:
                    e2[perm[i]] += x
                    coef = F.mul(coef, F.pow(scal[i], x))
            rows[r_i] = F.vmul(coef, N[index[tuple(e2)]])
        blocks.append(F.vsub(rows, N[basis]))
    basis_elems = [RElement(ring, k, {monos[b]: 1}) for b in basis]
    delta = np.hstack(blocks) if blocks else np.zeros((len(basis), 0), dtype=np.int64)
    return ring, basis_elems, delta


def invariant_dim(K, k, cap=None):
    """dim of the K-invariants in degree k (kernel of g - 1 over generators)."""
    ring, basis, delta = _invariant_system(K, k, cap)
    if delta.shape[1] == 0:
        return len(basis)
    return len(basis) - _rank(ring.F, delta)


def invariant_basis(K, k, cap=None):
    """A basis of the degree-k K-invariants, as RElements."""
    ring, basis, delta = _invariant_system(K, k, cap)
    if delta.shape[1] == 0:
        return basis
    out = []
    for vec in left_nullspace(ring.F, delta):
        f = ring.zero(k)
        for c, b in zip(vec.tolist(), basis):
            if c:
                f = f + b.scale(c)
        out.append(f)
    return out


def is_invariant(f, K):
    return all(group_act(f, g) == f for g in K.gens)


def generalized_binomial(n, j):
    """binomial(n, j) as a polynomial in n (so binomial(-1, j) = (-1)^j)."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= n - i
    den = 1
    for i in range(1, j + 1):
        den *= i
    return num // den


def level_dim_terms(K, cap=None):
    """[(s, |K\\GL_r/J_s|, prod_{i<=s}(q^i - 1))] for s = 1..r."""
    F, r = K.field, K.r
    q = F.order
    G = general_linear(F, r)
    G.cap = cap
    out = []
    for s in range(1, r + 1):
        J = columns_fixed(F, r, s)
        count = double_cosets(K, G, J)[0]
        out.append((s, count, prod(q ** i - 1 for i in range(1, s + 1))))
    return out


def level_dim_formula(K, r, q, k, cap=None):
    """sum_s |K\\GL_r/J_s| / prod_{i<=s}(q^i-1) * binomial(k-1, s-1)."""
    if K.r != r or K.field.order != q:
        raise ValueError("subgroup does not match (q, r)")
    if not is_fine_image(K):
        raise ValueError("the level dimension formula needs a unipotent image")
    total = 0
    for s, count, den in level_dim_terms(K, cap):
        if count % den:
            raise ConsistencyError(f"summand for s={s} is not integral: {count}/{den}")
        total += count // den * generalized_binomial(k - 1, s - 1)
    return total


def trace_invariants(f, Kp, K):
    """sum over right cosets Kp h in K of f | h."""
    if not Kp.is_subgroup_of(K):
        raise ValueError("K' is not contained in K")
    if not is_invariant(f, Kp):
        raise ValueError("f is not invariant under K'")
    out = f.ring.zero(f.degree)
    for h in Kp.right_coset_reps(K):
        out = out + group_act(f, h)
    return out


def subgroup_index(Kp, K):
    return K.order // Kp.order


def enumerate_subspaces(F, r):
    """Every non-zero subspace of F^r, each as its reduced echelon basis."""
    from .linalg import rref

    seen = {}
    vectors = [v for v in product(range(F.order), repeat=r) if any(v)]
    for d in range(1, r + 1):
        for combo in product(vectors, repeat=d):
            M = np.array(combo, dtype=np.int64)
            rk, R, _ = rref(F, M)
            if rk != d:
                continue
            key = tuple(tuple(int(x) for x in row) for row in R[:d])
            seen.setdefault(key, None)
    return sorted(seen, key=lambda b: (len(b), b))
