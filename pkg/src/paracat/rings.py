"""Exact scalars for reflection representations.

Crystallographic systems act by integer matrices, so plain ``int`` is used
there.  Systems with a pentagonal bond need the golden integers: values
a + b*phi with phi**2 = phi + 1.  :class:`Golden` implements those with
exact comparisons (the sign of a + b*phi is decided by case analysis on the
signs of a and b, falling back to comparing (2a+b)**2 with 5*b**2), and its
components may be ``Fraction``s when field arithmetic is required.

Ring literals in text formats use ``p`` for phi: ``2``, ``1+1p``, ``-1p``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, "Golden"]


class Golden:
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    def __repr__(self):
        return format_scalar(self)

    def __hash__(self):
        # Golden(a, 0) must hash like the plain number a: matrix entries mix
        # ints with Golden values and dict keys rely on the equality below.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __eq__(self, other):
        if isinstance(other, Golden):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, Golden):
            return Golden(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return Golden(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Golden) else Golden(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Golden):
            # (a + b phi)(c + d phi) with phi^2 = phi + 1
            bd = self.b * other.b
            return Golden(self.a * other.a + bd,
                          self.a * other.b + self.b * other.a + bd)
        if isinstance(other, (int, Fraction)):
            return Golden(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def sign(self) -> int:
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        u, v = 2 * a + b, b
        if u >= 0 and v >= 0:
            return 1
        if u <= 0 and v <= 0:
            return -1
        lhs, rhs = u * u, 5 * v * v
        if u > 0:
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return -1 if lhs > rhs else (1 if lhs < rhs else 0)

    def __lt__(self, other):
        return (self - _coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - _coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - _coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - _coerce(other)).sign() >= 0

    def conj(self) -> "Golden":
        """Image under phi -> 1 - phi."""
        return Golden(self.a + self.b, -self.b)

    def norm(self):
        """self * self.conj(), a rational number: a^2 + a b - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b


PHI = Golden(0, 1)


def _coerce(x) -> Golden:
    return x if isinstance(x, Golden) else Golden(x)


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, Golden):
        return x.sign()
    return (x > 0) - (x < 0)


def to_field(x: Scalar) -> Golden:
    """Embed an int or Golden into Q(phi) with Fraction components."""
    if isinstance(x, Golden):
        return Golden(Fraction(x.a), Fraction(x.b))
    return Golden(Fraction(x), Fraction(0))


def field_div(num: Scalar, den: Scalar) -> Golden:
    """Exact division in Q(phi); raises ZeroDivisionError on zero divisor."""
    num, den = to_field(num), to_field(den)
    n = den.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Q(phi)")
    q = num * den.conj()
    return Golden(q.a / n, q.b / n)


def is_positive_integer(x: Golden) -> bool:
    """True for elements of Z_{>0} inside Q(phi)."""
    return x.b == 0 and x.a > 0 and Fraction(x.a).denominator == 1


def format_scalar(x: Scalar) -> str:
    if not isinstance(x, Golden):
        return str(x)
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    phi_part = f"{b}p"
    if a == 0:
        return phi_part
    return f"{a}+{phi_part}" if scalar_sign(_coerce(b)) >= 0 else f"{a}{phi_part}"


def parse_scalar(text: str) -> Scalar:
    """Parse ring literals: '2', '-1', '1+1p', '-2p', '3-1p'.

    >>> parse_scalar("1+1p")
    1+1p
    >>> parse_scalar("-3")
    -3
    """
    text = text.strip().replace(" ", "")
    if "p" not in text:
        return int(text)
    body = text[:-1] if text.endswith("p") else None
    if body is None:
        raise ValueError(f"bad ring literal {text!r}")
    # split off a leading integer part if present: a+bp or a-bp
    for k in range(1, len(body)):
        if body[k] in "+-" and body[k - 1] not in "+-":
            a = int(body[:k])
            rest = body[k:]
            b = int(rest) if rest not in ("+", "-") else int(rest + "1")
            return Golden(a, b)
    b = int(body) if body not in ("", "+", "-") else int(body + "1")
    return Golden(0, b)
