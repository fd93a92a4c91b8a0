"""Exact ground fields: the rationals and prime fields of odd characteristic.

Elements of Q are plain ``fractions.Fraction`` values.  Elements of F_p are
``Mod`` instances, which interoperate with Python ints so that generic
linear-algebra code can write ``x * y - 1`` without knowing the field.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class Mod:
    """Residue class modulo an odd prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldError("mixing prime fields %d and %d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class Field:
    """A ground field descriptor: ``Field()`` is Q, ``Field(p)`` is F_p."""

    def __init__(self, prime: int | None = None):
        if prime is not None:
            if not isinstance(prime, int) or not _is_prime(prime):
                raise FieldError("field characteristic must be prime, got %r" % (prime,))
            if prime == 2:
                raise FieldError("characteristic 2 is not supported")
        self.prime = prime

    @property
    def characteristic(self) -> int:
        return self.prime or 0

    def __eq__(self, other):
        return isinstance(other, Field) and other.prime == self.prime

    def __hash__(self):
        return hash(("Field", self.prime))

    def __repr__(self):
        return "Field()" if self.prime is None else "Field(%d)" % self.prime

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce an int, Fraction, Mod or exact string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, bool):
            raise FieldError("booleans are not scalars")
        if self.prime is None:
            if isinstance(x, Mod):
                raise FieldError("cannot read an F_p element as a rational")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise FieldError("not an exact scalar: %r" % (x,))
        if isinstance(x, Mod):
            if x.p != self.prime:
                raise FieldError("element of F_%d used in F_%d" % (x.p, self.prime))
            return x
        if isinstance(x, int):
            return Mod(x, self.prime)
        if isinstance(x, Fraction):
            if x.denominator % self.prime == 0:
                raise FieldError("%s has no image in F_%d" % (x, self.prime))
            return Mod(x.numerator * pow(x.denominator, -1, self.prime), self.prime)
        raise FieldError("not an exact scalar: %r" % (x,))

    def to_json(self):
        return "rational" if self.prime is None else {"prime": self.prime}

    @classmethod
    def from_json(cls, obj) -> "Field":
        if obj == "rational":
            return cls()
        if isinstance(obj, dict) and set(obj) == {"prime"}:
            return cls(obj["prime"])
        raise FieldError("unknown field descriptor %r" % (obj,))

    def elements(self):
        """All elements of a prime field, in the order 0, 1, ..., p-1."""
        if self.prime is None:
            raise FieldError("the rationals are infinite")
        return [Mod(i, self.prime) for i in range(self.prime)]


def scalar_str(x) -> str:
    """Canonical exact string for a scalar."""
    if isinstance(x, Mod):
        return str(x.v)
    return str(Fraction(x))


_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name,
            ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd, ast.Load)


def eval_expr(text, field: Field, params: Mapping[str, object] | None = None):
    """Evaluate a coefficient expression such as ``-lambda`` or ``1/2*mu``.

    Only numbers, parameter names and ``+ - * / **`` (integer exponents) are
    accepted.  The result lives in ``field``.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return field(text)
    if not isinstance(text, str):
        raise FieldError("coefficient must be a string or integer, got %r" % (text,))
    params = params or {}
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise FieldError("cannot parse coefficient %r" % text) from exc
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise FieldError("disallowed syntax in coefficient %r" % text)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise FieldError("only integer literals allowed in %r" % text)
            return field(node.value)
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise FieldError("unknown parameter %r in %r" % (node.id, text))
            return params[node.id]
        if isinstance(node, ast.UnaryOp):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        a, b = ev(node.left), ev(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if b == 0:
                raise FieldError("division by zero in %r" % text)
            return a / b
        if not isinstance(node.right, ast.Constant) or not isinstance(node.right.value, int):
            raise FieldError("exponent must be an integer literal in %r" % text)
        e = node.right.value
        if e < 0:
            return field.one / a ** (-e)
        return a ** e if not isinstance(a, Mod) else Mod(pow(a.v, e, a.p), a.p)

    return field(ev(tree))
