"""Rational functions F_q(x_1, ..., x_n) as unreduced fractions of MPoly.

No gcd cancellation is attempted; equality is tested by cross
multiplication.  This is enough for the generic Drinfeld modules built
from level structures, whose coefficients share one denominator.
"""

from .fields import FieldElement, FieldError
from .mpoly import MPoly, default_names


class FunctionField:
    def __init__(self, field, names):
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.p = field.p

    def __call__(self, c):
        if isinstance(c, RationalFunction):
            return c
        if isinstance(c, MPoly):
            return RationalFunction(self, c, self._const(1))
        return RationalFunction(self, self._const(c), self._const(1))

    def _const(self, c):
        if isinstance(c, FieldElement):
            c = c.value
        return MPoly.const(self.field, self.nvars, self.field(c).value, self.names)

    def gen(self, name):
        i = self.names.index(name)
        return self(MPoly.var(self.field, self.nvars, i, self.names))

    def gens(self):
        return [self.gen(n) for n in self.names]

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and self.field == other.field \
            and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"F_{self.field.order}({', '.join(self.names)})"


def function_field(field, nvars, with_t=True):
    names = default_names(nvars)
    if with_t:
        names = names + ("t",)
    return FunctionField(field, names)


class RationalFunction:
    __slots__ = ("parent", "num", "den")

    def __init__(self, parent, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.parent = parent
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            if other.parent != self.parent:
                raise FieldError("rational functions over different fields")
            return other
        if isinstance(other, (int, FieldElement, MPoly)):
            return self.parent(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.parent, self.num + o.num, self.den)
        return RationalFunction(self.parent, self.num * o.den + o.num * self.den,
                                self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.parent, -self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return self.parent.zero
        return RationalFunction(self.parent, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.parent, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if n < 0:
            return self.parent.one / (self ** (-n))
        return RationalFunction(self.parent, self.num ** n, self.den ** n)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("rational functions are not hashable (no canonical form)")

    def __repr__(self):
        if self.den == self.parent._const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"
