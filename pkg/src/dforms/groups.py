"""Subgroups of GL_r(F_q) given by generators.

Element sets are computed by breadth-first closure and cached.  The
standard families used for the level subgroups are built here: GL_r, SL_r,
the upper unitriangular group and the groups J_s whose first s columns are
those of the identity.
"""

from collections import deque

import numpy as np

from .caps import CapExceeded, get_cap
from .fields import FieldError, gf
from .linalg import FqMatrix


class MatrixGroup:
    """Subgroup of GL_r(F) generated by `gens` (a list of FqMatrix)."""

    def __init__(self, field, r, gens=(), name=None, cap=None):
        self.field = field
        self.r = r
        self.gens = []
        for g in gens:
            if not isinstance(g, FqMatrix):
                g = FqMatrix(field, g)
            if g.shape != (r, r):
                raise ValueError(f"generator has shape {g.shape}, expected {(r, r)}")
            if not g.is_invertible():
                raise FieldError("generator is not invertible")
            self.gens.append(g)
        self.name = name
        self.cap = cap
        self._elements = None

    @classmethod
    def from_elements(cls, field, r, elements, name=None):
        G = cls(field, r, [], name=name)
        els = set(elements)
        els.add(FqMatrix.identity(field, r))
        G._elements = sorted(els, key=FqMatrix.sort_key)
        G.gens = [g for g in G._elements if g != FqMatrix.identity(field, r)]
        return G

    @property
    def identity(self):
        return FqMatrix.identity(self.field, self.r)

    def elements(self):
        """All group elements, sorted by their entry tuples."""
        if self._elements is None:
            cap = get_cap("group", self.cap)
            one = self.identity
            seen = {one}
            queue = deque([one])
            while queue:
                x = queue.popleft()
                for g in self.gens:
                    y = x @ g
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise CapExceeded(f"group closure exceeds cap {cap}")
                        queue.append(y)
            self._elements = sorted(seen, key=FqMatrix.sort_key)
        return self._elements

    def element_set(self):
        return set(self.elements())

    @property
    def order(self):
        return len(self.elements())

    def __len__(self):
        return self.order

    def __contains__(self, g):
        return g in self.element_set()

    def is_subgroup_of(self, other):
        big = other.element_set()
        return all(g in big for g in self.elements())

    def right_coset_reps(self, big):
        """Representatives h of the right cosets self*h in `big`."""
        if not self.is_subgroup_of(big):
            raise ValueError("not a subgroup")
        H = self.elements()
        left = set(big.elements())
        reps = []
        for g in big.elements():
            if g in left:
                reps.append(g)
                left.difference_update(h @ g for h in H)
        return reps

    def __repr__(self):
        return f"MatrixGroup({self.name or '?'}, r={self.r}, q={self.field.order})"


def group_elements(G):
    return G.elements()


def _elementary(field, r, i, j, alpha):
    m = np.eye(r, dtype=np.int64)
    m[i, j] = alpha
    return FqMatrix(field, m)


def _diag(field, r, i, alpha):
    m = np.eye(r, dtype=np.int64)
    m[i, i] = alpha
    return FqMatrix(field, m)


def _prime_basis(field):
    # F_p-basis of F_q in the encoding: the codes p**i
    return [field.p ** i for i in range(field.abs_degree)]


def general_linear(field, r):
    gens = [_elementary(field, r, i, j, a)
            for i in range(r) for j in range(r) if i != j
            for a in _prime_basis(field)]
    if field.order > 2:
        gens.append(_diag(field, r, 0, field.primitive))
    return MatrixGroup(field, r, gens, name="GL")


def special_linear(field, r):
    gens = [_elementary(field, r, i, j, a)
            for i in range(r) for j in range(r) if i != j
            for a in _prime_basis(field)]
    return MatrixGroup(field, r, gens, name="SL")


def unipotent(field, r):
    gens = [_elementary(field, r, i, j, a)
            for i in range(r) for j in range(i + 1, r)
            for a in _prime_basis(field)]
    return MatrixGroup(field, r, gens, name="U")


def trivial(field, r):
    return MatrixGroup(field, r, [], name="1")


def columns_fixed(field, r, s):
    """J_s: matrices whose first s columns are those of the identity."""
    gens = [_elementary(field, r, i, j, a)
            for j in range(s, r) for i in range(r) if i != j
            for a in _prime_basis(field)]
    if field.order > 2:
        gens += [_diag(field, r, j, field.primitive) for j in range(s, r)]
    return MatrixGroup(field, r, gens, name=f"J{s}")


def standard_group(kind, q, r):
    F = gf(q)
    table = {"gl": general_linear, "sl": special_linear,
             "unipotent": unipotent, "trivial": trivial}
    if kind not in table:
        raise ValueError(f"unknown group {kind!r}")
    return table[kind](F, r)


def double_cosets(H, G, J):
    """Partition G into double cosets H g J.

    Returns (count, representatives, class sizes).
    """
    Gset = G.element_set()
    Hel, Jel = H.elements(), J.elements()
    if not all(h in Gset for h in Hel) or not all(j in Gset for j in Jel):
        raise ValueError("H and J must be subgroups of G")
    remaining = set(Gset)
    reps, sizes = [], []
    for g in G.elements():
        if g not in remaining:
            continue
        cls = {h @ g @ j for h in Hel for j in Jel}
        reps.append(g)
        sizes.append(len(cls))
        remaining -= cls
    if sum(sizes) != len(Gset):
        raise AssertionError("double cosets do not partition the group")
    return len(reps), reps, sizes


def is_unipotent(g):
    r = g.rows
    return ((g - FqMatrix.identity(g.field, r)) ** r).is_zero()


def is_fine_image(K):
    """True iff every element of the closure is unipotent."""
    return all(is_unipotent(g) for g in K.elements())


def parse_subgroup_text(text):
    """Parse the plain-text subgroup format.

    First line ``q r``; each further non-blank line is one generator with
    r*r entries.  Entries are integers over prime fields and ``a:b``
    coordinate tuples (lowest coordinate first) over extensions.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty subgroup description")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'q r'")
    q, r = int(head[0]), int(head[1])
    if r < 1:
        raise ValueError("rank must be positive")
    F = gf(q)
    gens = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != r * r:
            raise ValueError(f"generator line has {len(parts)} entries, expected {r * r}")
        vals = [F.parse(x) for x in parts]
        gens.append(FqMatrix(F, np.array(vals, dtype=np.int64).reshape(r, r)))
    return MatrixGroup(F, r, gens, name="file")


def format_subgroup_text(G):
    F = G.field
    out = [f"{F.order} {G.r}"]
    for g in G.gens:
        out.append(" ".join(F.format(int(x)) for x in g.a.ravel()))
    return "\n".join(out) + "\n"
