"""Dense univariate polynomials over exact fields.

Coefficient scalars may be ``Fraction``, ``EisensteinRational`` or ``ModP``;
anything supporting field arithmetic and ``== 0`` works. Coefficients are
stored lowest degree first, with no trailing zeros (the zero polynomial is
the empty tuple).

Resultant sign convention::

    Res(f, g) = lc(g)^deg(f) * prod f(beta)      (beta over the roots of g)

which differs from the textbook ``lc(f)^deg(g) * prod g(alpha)`` by
``(-1)^(deg f * deg g)``. Discriminants are unaffected.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .bigexact import EisensteinRational, OMEGA, OMEGA_BAR, format_rational, parse_rational


class ModP:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        self.p = p
        if isinstance(v, Fraction):
            if v.denominator % p == 0:
                raise ZeroDivisionError(f"{v} is not {p}-integral")
            self.v = v.numerator * pow(v.denominator, -1, p) % p
        else:
            self.v = int(v) % p

    def _lift(self, o):
        if isinstance(o, ModP):
            if o.p != self.p:
                raise ValueError("mixing prime fields")
            return o.v
        if isinstance(o, (int, Fraction)):
            return ModP(o, self.p).v
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        return NotImplemented if o is NotImplemented else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return NotImplemented if o is NotImplemented else ModP(self.v - o, self.p)

    def __rsub__(self, o):
        o = self._lift(o)
        return NotImplemented if o is NotImplemented else ModP(o - self.v, self.p)

    def __mul__(self, o):
        o = self._lift(o)
        return NotImplemented if o is NotImplemented else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return ModP(o, self.p) / self

    def __pow__(self, k):
        return ModP(pow(self.v, k, self.p), self.p)

    def __eq__(self, o):
        o = self._lift(o)
        return False if o is NotImplemented else self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    __str__ = lambda self: str(self.v)


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    # -- basic accessors ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def map(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs])

    # -- ring operations --------------------------------------------------
    @staticmethod
    def _coerce(o):
        return o if isinstance(o, Poly) else Poly([o])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return divrem(self, other)

    def __floordiv__(self, other):
        return divrem(self, other)[0]

    def __mod__(self, other):
        return divrem(self, other)[1]

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return to_string(self)


# -- operations -----------------------------------------------------------------

def divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(f.coeffs)
    dg = g.degree
    lc_inv = 1 / g.lc if not isinstance(g.lc, int) else Fraction(1, g.lc)
    if len(rem) <= dg:
        return Poly(), f
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg] * lc_inv
        quot[k] = c
        if c == 0:
            continue
        for j, gj in enumerate(g.coeffs):
            rem[k + j] = rem[k + j] - c * gj
    return Poly(quot), Poly(rem[:dg])


def monic(f: Poly) -> Poly:
    if not f:
        return f
    inv = 1 / f.lc if not isinstance(f.lc, int) else Fraction(1, f.lc)
    return f * inv


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while g:
        f, g = g, divrem(f, g)[1]
    return monic(f)


def derivative(f: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(f.coeffs)][1:])


def evaluate(f: Poly, x):
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def compose(f: Poly, g: Poly) -> Poly:
    """f(g(X))."""
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def poly_arith(f: Poly, g=None, op: str = "add"):
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return divrem(f, g)
    if op == "gcd":
        return gcd(f, g)
    if op == "derivative":
        return derivative(f)
    if op == "evaluate":
        return evaluate(f, g)
    raise ValueError(f"unknown op {op!r}")


def _field_one(f: Poly):
    c = f.lc
    return c * (1 / c) if not isinstance(c, int) else Fraction(1)


def _resultant_textbook(A: Poly, B: Poly):
    """lc(A)^deg(B) prod B(alpha) by the subresultant PRS (content-free variant)."""
    if not A or not B:
        return 0
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -s
    if B.degree == 0:
        return s * B.lc ** A.degree
    one = _field_one(A)
    g = h = one
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = divrem(A * (B.lc ** (delta + 1)), B)[1]
        A = B
        B = R * (1 / (g * h ** delta))
        if not B:
            return 0 * one
        g = A.lc
        h = h * (g / h) ** delta if delta else h
    # deg B == 0
    h = (B.lc / h) ** A.degree * h if A.degree else h
    return s * h


def resultant(f: Poly, g: Poly):
    """Res(f, g) = lc(g)^deg(f) prod_{g(beta)=0} f(beta)."""
    if not f or not g:
        raise ValueError("resultant of the zero polynomial")
    return _resultant_textbook(g, f)


def discriminant(f: Poly):
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    sgn = -1 if (n * (n - 1) // 2) % 2 else 1
    return sgn * resultant(f, derivative(f)) / f.lc


def squarefree_check(f: Poly) -> bool:
    return gcd(f, derivative(f)).degree <= 0


@dataclass(frozen=True)
class RationalMap:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("rational map with zero denominator")


# (X^3 - 3X + 1) / (X^2 - X): the cyclic cubic lifting map.
CUBIC_LIFT = RationalMap(
    Poly([Fraction(1), Fraction(-3), Fraction(0), Fraction(1)]),
    Poly([Fraction(0), Fraction(-1), Fraction(1)]),
)


def compose_rational(f: Poly, m: RationalMap) -> Poly:
    """den^deg(f) * f(num/den), expanded exactly (no content removal)."""
    n = f.degree
    if n < 0:
        return Poly()
    num_pows = [Poly([1])]
    den_pows = [Poly([1])]
    for _ in range(n):
        num_pows.append(num_pows[-1] * m.numerator)
        den_pows.append(den_pows[-1] * m.denominator)
    acc = Poly()
    for k, c in enumerate(f.coeffs):
        if c != 0:
            acc = acc + num_pows[k] * den_pows[n - k] * c
    return acc


def cubic_lift(f: Poly) -> Poly:
    return compose_rational(f, CUBIC_LIFT)


def mobius_conjugate(f: Poly) -> Poly:
    """(-w X - wbar)^24 f((X + 1)/(-w X - wbar)) over Q(omega), for deg f = 24."""
    if f.degree != 24:
        raise ValueError("mobius_conjugate expects a degree-24 polynomial")
    E = EisensteinRational
    num = Poly([E(1), E(1)])
    den = Poly([-OMEGA_BAR, -OMEGA])
    fe = Poly([E.coerce(c) for c in f.coeffs])
    return compose_rational(fe, RationalMap(num, den))


def normalize_content(f: Poly) -> Poly:
    """Clear denominators, divide by the integer content, make lc positive."""
    if not f:
        return f
    den = math.lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    content = math.gcd(*ints)
    if ints[-1] < 0:
        content = -content
    return Poly([Fraction(c // content) for c in ints])


def rational_poly(coeffs) -> Poly:
    return Poly([Fraction(c) for c in coeffs])


def support(f: Poly) -> list[int]:
    return [k for k, c in enumerate(f.coeffs) if c != 0]


# -- text / JSON formats ----------------------------------------------------------

def to_string(f: Poly, var: str = "X") -> str:
    if not f:
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f[k]
        if c == 0:
            continue
        cs = format_rational(c) if isinstance(c, (int, Fraction)) else f"({c})"
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and cs == "1":
            terms.append(mono)
        elif mono and cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(cs + ("*" + mono if mono else ""))
    return " + ".join(terms).replace("+ -", "- ")


def to_json_obj(f: Poly, var: str = "x") -> dict:
    coeffs = []
    for c in f.coeffs:
        if isinstance(c, EisensteinRational):
            coeffs.append([format_rational(c.a), format_rational(c.b)])
        else:
            coeffs.append(format_rational(c))
    return {"var": var, "coeffs": coeffs}


def from_json_obj(obj: dict) -> Poly:
    coeffs = []
    for c in obj["coeffs"]:
        if isinstance(c, list):
            coeffs.append(EisensteinRational(parse_rational(c[0]), parse_rational(c[1])))
        else:
            coeffs.append(parse_rational(str(c)))
    return Poly(coeffs)


def dumps(f: Poly, var: str = "x") -> str:
    return json.dumps(to_json_obj(f, var))


def loads(text: str) -> Poly:
    return from_json_obj(json.loads(text))
