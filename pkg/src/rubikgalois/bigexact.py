"""Exact scalars: rationals, the Eisenstein field Q(omega), and power tests.

Rationals are ``fractions.Fraction``; it already keeps the canonical form
(reduced, positive denominator, zero as 0/1). Elements of Q(omega) are
``a + b*omega`` with ``omega**2 = -1 - omega``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import mpmath

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rat_arith(lhs, rhs, op: str) -> Fraction:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs == 0:
            raise ZeroDivisionError("rational division by zero")
        return lhs / rhs
    raise ValueError(f"unknown op {op!r}")


# -- perfect powers ---------------------------------------------------------

def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0 (integer Newton iteration)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _int_root_exact(n: int, k: int):
    if n < 0:
        if k % 2 == 0:
            return None
        r = _int_root_exact(-n, k)
        return None if r is None else -r
    r = iroot(n, k)
    return r if r ** k == n else None


def _rational_root(q, k):
    q = Fraction(q)
    num = _int_root_exact(q.numerator, k)
    if num is None:
        return None
    den = _int_root_exact(q.denominator, k)
    if den is None:
        return None
    return Fraction(num, den)


def is_perfect_square(q) -> tuple[bool, Fraction | None]:
    """Return ``(True, root)`` if q is the square of a rational, else ``(False, None)``.

    The root returned is the non-negative one.
    """
    root = _rational_root(q, 2)
    return (root is not None, root)


def is_perfect_cube_rat(q) -> tuple[bool, Fraction | None]:
    root = _rational_root(q, 3)
    return (root is not None, root)


# -- Eisenstein rationals ---------------------------------------------------

@dataclass(frozen=True)
class EisensteinRational:
    """The element ``a + b*omega`` of Q(omega)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def coerce(cls, x) -> "EisensteinRational":
        if isinstance(x, EisensteinRational):
            return x
        if isinstance(x, (int, _RationalABC)):
            return cls(Fraction(x), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        other = EisensteinRational.coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational(-self.a, -self.b)

    def __sub__(self, other):
        other = EisensteinRational.coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = EisensteinRational.coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        bd = b * d
        return EisensteinRational(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conj(self) -> "EisensteinRational":
        return EisensteinRational(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """a^2 - ab + b^2, the product with the conjugate."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "EisensteinRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        c = self.conj()
        return EisensteinRational(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = EisensteinRational.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = EisensteinRational(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = EisensteinRational.coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"EisensteinRational({format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + ({format_rational(self.b)})w"


OMEGA = EisensteinRational(0, 1)
OMEGA_BAR = EisensteinRational(-1, -1)


def eis_arith(x, y=None, op: str = "add", k: int | None = None) -> EisensteinRational:
    x = EisensteinRational.coerce(x)
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "conj":
        return x.conj()
    if op == "pow":
        if k is None or k < 0:
            raise ValueError("pow needs k >= 0")
        return x ** k
    raise ValueError(f"unknown op {op!r}")


def eis_is_cube(z) -> tuple[bool, EisensteinRational | None]:
    """Decide whether z is a cube in Q(omega); return a verified root if so.

    If z = c^3 and D is a common denominator of z's coordinates, then
    (D c)^3 = D^3 z lies in Z[omega], and Z[omega] is integrally closed, so
    D c has integer coordinates. We approximate the three complex cube roots
    of D^3 z with enough working precision to round each to the nearest
    point of Z[omega], then cube exactly.
    """
    z = EisensteinRational.coerce(z)
    if not z:
        return True, EisensteinRational(0, 0)
    den = math.lcm(z.a.denominator, z.b.denominator)
    scaled = z * (den ** 3)
    A, B = int(scaled.a), int(scaled.b)
    bits = max(abs(A).bit_length(), abs(B).bit_length(), 1)
    with mpmath.workprec(bits + 64):
        w = mpmath.exp(2j * mpmath.pi / 3)
        zc = A + B * w
        r0 = zc ** (mpmath.mpf(1) / 3)
        for k in range(3):
            r = r0 * w ** k
            # r = x + y w  =>  Im r = y sqrt(3)/2,  Re r = x - y/2
            y = r.imag * 2 / mpmath.sqrt(3)
            x = r.real + y / 2
            cand = EisensteinRational(int(mpmath.nint(x)), int(mpmath.nint(y)))
            if cand ** 3 == scaled:
                root = EisensteinRational(cand.a / den, cand.b / den)
                assert root ** 3 == z
                return True, root
    return False, None


# -- norm form and primality -------------------------------------------------

@dataclass(frozen=True)
class NormFormWitness:
    v: int
    w: int
    d: Fraction

    def __post_init__(self):
        if self.v * self.v - 11 * self.w * self.w != self.d:
            raise ValueError("v^2 - 11 w^2 != d")


def verify_norm_form(d, v: int, w: int) -> bool:
    return Fraction(v * v - 11 * w * w) == Fraction(d)


# Deterministic for n < 3.317e24 (Sorenson & Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def probable_prime(n: int, rounds: int = 64, rng: random.Random | None = None) -> bool:
    """Strong-pseudoprime test (Miller-Rabin)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if n < _MR_DETERMINISTIC_BOUND:
        return not any(witness(a) for a in _MR_WITNESSES)
    rng = rng or random.Random(n)
    return not any(witness(rng.randrange(2, n - 1)) for _ in range(rounds))
