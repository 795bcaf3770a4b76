"""Rebuilding the degree-24 polynomials, the parametric family and the appendix data.

Conventions: ``f8(X) = X^8 - t X - s``; the degree-24 lift is
``(X^2 - X)^8 f8((X^3 - 3X + 1)/(X^2 - X))``; ``g24(X) = X^24 + r^2 (X^2 + 1)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bigexact import (
    OMEGA,
    OMEGA_BAR,
    EisensteinRational,
    eis_is_cube,
    is_perfect_square,
    verify_norm_form,
)
from .permgroup import Permutation, sign
from .polyring import (
    Poly,
    cubic_lift,
    discriminant,
    mobius_conjugate,
    normalize_content,
    rational_poly,
    support,
)


class PreconditionError(ValueError):
    pass


# -- trinomials ----------------------------------------------------------------------

@dataclass(frozen=True)
class TrinomialParams:
    t: Fraction
    s: Fraction

    def f8(self) -> Poly:
        return trinomial(8, self.t, self.s)


def trinomial(n: int, t, s) -> Poly:
    """X^n - t X - s."""
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = -Fraction(s)
    coeffs[1] = -Fraction(t)
    coeffs[n] = Fraction(1)
    return Poly(coeffs)


def trinomial_disc(n: int, a, b) -> Fraction:
    """Discriminant of X^n - a X + b in closed form."""
    if n < 2:
        raise ValueError("n >= 2 required")
    a, b = Fraction(a), Fraction(b)
    sgn = -1 if (n * (n - 1) // 2) % 2 else 1
    return sgn * (n ** n * b ** (n - 1) - (n - 1) ** (n - 1) * a ** n)


# -- Eisenstein parameter solving ------------------------------------------------------

def _defining_lhs(t, s, conjugate=False) -> EisensteinRational:
    # 3 w t - s + 6561 wbar
    return OMEGA * (3 * Fraction(t)) - Fraction(s) + OMEGA_BAR * 6561


def solve_params(a, b, c, convention: str = "plain") -> TrinomialParams:
    """Solve 3wt - s + 6561 wbar = c (a + w b)^3 for rational (t, s).

    ``convention="conjugate"`` uses ``c (a + wbar b)^3`` on the right
    instead. Writing the right side as A + B w gives s = -A - 6561 and
    t = (B + 6561) / 3.
    """
    if convention not in ("plain", "conjugate"):
        raise ValueError("convention is 'plain' or 'conjugate'")
    unit = OMEGA if convention == "plain" else OMEGA_BAR
    rhs = (Fraction(a) + unit * Fraction(b)) ** 3 * Fraction(c)
    s = -rhs.a - 6561
    t = (rhs.b + 6561) / 3
    params = TrinomialParams(t, s)
    assert _defining_lhs(t, s) == rhs
    return params


# -- Theorem-1 style builders ---------------------------------------------------------

def r_from_witness(v: int, w: int) -> Fraction:
    return Fraction(12 ** 6 * w, 11 ** 5 * v)


def g12_from_r(r) -> Poly:
    """X^12 + r^2 (X + 1)."""
    r2 = Fraction(r) ** 2
    return Poly([r2, r2] + [Fraction(0)] * 10 + [Fraction(1)])


def g24_from_r(r) -> Poly:
    """X^24 + r^2 (X^2 + 1)."""
    r2 = Fraction(r) ** 2
    coeffs = [Fraction(0)] * 25
    coeffs[0] = coeffs[2] = r2
    coeffs[24] = Fraction(1)
    return Poly(coeffs)


def f24_from_params(t, s) -> Poly:
    return normalize_content(cubic_lift(trinomial(8, t, s)))


def normalized_mobius(f24: Poly) -> Poly:
    m = mobius_conjugate(f24)
    inv = m.lc.inverse()
    return m * inv


@dataclass
class Theorem1Data:
    t: Fraction
    s: Fraction
    v: int
    w: int
    f8: Poly
    f24: Poly
    g24: Poly
    r: Fraction
    disc_f8: Fraction
    mobius_support: list
    cube_root: EisensteinRational | None


def build_theorem1(t, s, v: int, w: int) -> Theorem1Data:
    """Build (f24, g24) from f8 = X^8 - tX - s and a norm-form witness (v, w)."""
    t, s = Fraction(t), Fraction(s)
    f8 = trinomial(8, t, s)
    d = discriminant(f8)
    if not verify_norm_form(d, v, w):
        raise PreconditionError(f"disc(f8) = {d} is not v^2 - 11 w^2 for v={v}, w={w}")
    f24 = normalize_content(cubic_lift(f8))
    r = r_from_witness(v, w)
    mob = normalized_mobius(f24)
    ok, root = eis_is_cube(mob[0])
    return Theorem1Data(t, s, v, w, f8, f24, g24_from_r(r), r, d, support(mob), root if ok else None)


# -- parametric family -----------------------------------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.u == 0:
            raise PreconditionError("u must be nonzero")
        if 7 + (1 - 11 * self.u ** 2) * self.v ** 2 == 0:
            raise PreconditionError("7 + (1 - 11u^2) v^2 must be nonzero")
        # disc of the octic is a nonzero multiple of (1 - 11u^2) v^2
        if self.v == 0:
            raise PreconditionError("v = 0 makes the octic inseparable")


def family_ts(u, v) -> tuple[Fraction, Fraction]:
    fp = FamilyParams(u, v)
    t = Fraction(-(8 ** 8)) / (7 ** 6 * (7 + (1 - 11 * fp.u ** 2) * fp.v ** 2))
    s = Fraction(-(12 ** 12), 11 ** 10) * fp.u ** 2
    return t, s


def family_octic(t) -> Poly:
    """X^8 - t(X + 1)."""
    return trinomial(8, t, t)


def family_dodecic(s) -> Poly:
    """X^12 - s(X + 1)."""
    return trinomial(12, s, s)


def squared_variable(f: Poly) -> Poly:
    """f(X^2)."""
    coeffs = [Fraction(0)] * (2 * f.degree + 1)
    for k, c in enumerate(f.coeffs):
        coeffs[2 * k] = c
    return Poly(coeffs)


def cubed_variable(f: Poly) -> Poly:
    coeffs = [Fraction(0)] * (3 * f.degree + 1)
    for k, c in enumerate(f.coeffs):
        coeffs[3 * k] = c
    return Poly(coeffs)


def build_family_factors(u, v) -> tuple[Poly, Poly]:
    """The two degree-24 factors of p(u, v, X): the cubic lift of the octic and g(s, X^2)."""
    t, s = family_ts(u, v)
    return cubic_lift(family_octic(t)), squared_variable(family_dodecic(s))


def build_family_p(u, v) -> Poly:
    f, g = build_family_factors(u, v)
    return f * g


# -- appendix ----------------------------------------------------------------------

def appendix_h(t) -> Poly:
    """2(18X^4 - 36X^2 - 16X + 3)^3 - 9t(6X^3 - 9X - 4)^4."""
    a = rational_poly([3, -16, -36, 0, 18])
    b = rational_poly([-4, -9, 0, 6])
    return a ** 3 * 2 - b ** 4 * (9 * Fraction(t))


def appendix_g12(t) -> Poly:
    t = Fraction(t)
    if t == 1:
        raise PreconditionError("t = 1 is degenerate")
    return appendix_h(t) * (1 / (-11664 * t + 11664))


def appendix_g12_constant(t) -> Fraction:
    t = Fraction(t)
    return (Fraction(16, 81) * t - Fraction(1, 216)) / (t - 1)


def appendix_g12_disc_formula(t) -> Fraction:
    t = Fraction(t)
    return -Fraction(1, 2 ** 25 * 3 ** 59) * (t - 1) ** -17 * t ** 8


def hyperbola_point(s) -> tuple[Fraction, Fraction]:
    s = Fraction(s)
    if s == 0:
        raise PreconditionError("s must be nonzero")
    return s / 2 - Fraction(125, 512) / s, s / 2 + Fraction(125, 512) / s


def appendix_t_of_s(s) -> Fraction:
    s = Fraction(s)
    if s == 0:
        raise PreconditionError("s must be nonzero")
    return 1 + (s - Fraction(125, 256) / s) ** 2 / 2


# -- elliptic curve y^2 = x^3 + 189 ------------------------------------------------

EC_B = 189


@dataclass(frozen=True)
class EllipticPoint:
    x: Fraction | None
    y: Fraction | None
    at_infinity: bool = False

    def __post_init__(self):
        if not self.at_infinity:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))
            if self.y ** 2 != self.x ** 3 + EC_B:
                raise ValueError(f"({self.x}, {self.y}) is not on y^2 = x^3 + {EC_B}")

    @classmethod
    def infinity(cls) -> "EllipticPoint":
        return cls(None, None, True)

    def __neg__(self):
        return self if self.at_infinity else EllipticPoint(self.x, -self.y)

    def __add__(self, other):
        return ec_add(self, other)


EC_GENERATOR = EllipticPoint(-5, 8)


def ec_add(P: EllipticPoint, Q: EllipticPoint) -> EllipticPoint:
    if P.at_infinity:
        return Q
    if Q.at_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return EllipticPoint.infinity()
        lam = 3 * P.x ** 2 / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam ** 2 - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return EllipticPoint(x3, y3)


def ec_multiples(n: int, P: EllipticPoint = EC_GENERATOR) -> list[EllipticPoint]:
    out = []
    acc = EllipticPoint.infinity()
    for _ in range(n):
        acc = ec_add(acc, P)
        out.append(acc)
    return out


def appendix_t_of_xn(x_n) -> Fraction:
    x_n = Fraction(x_n)
    if x_n == 0:
        raise PreconditionError("x_n must be nonzero")
    return (Fraction(2 ** 8 * 3) / (7 ** 2 * x_n)) ** 3


def appendix_f8(t) -> Poly:
    """X^8 - t(X + 1)."""
    return family_octic(t)


def curve_to_diophantine(P: EllipticPoint) -> tuple[Fraction, Fraction]:
    """(x, y) -> (u, v) = (3/x, y u^2 / 3), a point on v^2 = 3u(7u^3 + 1)."""
    u = 3 / P.x
    return u, P.y * u ** 2 / 3


# -- order-two elements of ((C3)^8 x| S8)° ------------------------------------------

def _involutions(n):
    """All permutations of range(n) with p^2 = id, identity included."""
    def rec(rest):
        if not rest:
            yield {}
            return
        a, tail = rest[0], rest[1:]
        for sub in rec(tail):
            yield {a: a, **sub}
        for i, b in enumerate(tail):
            for sub in rec(tail[:i] + tail[i + 1:]):
                yield {a: b, b: a, **sub}
    for m in rec(list(range(n))):
        yield Permutation([m[i] for i in range(n)])


def count_order2_semidirect(variant: str = "natural") -> int:
    """Count elements of order exactly 2 in ((C3)^8 x| S8)° by enumeration.

    ``(x, rho)^2 = (x + eps(rho) * (x o rho), rho^2)`` with ``eps = 1``
    for the natural permutation action and ``eps = sign`` for the twisted
    one; x ranges over sum-zero vectors.
    """
    if variant not in ("natural", "sign_twisted"):
        raise ValueError("variant is 'natural' or 'sign_twisted'")
    vecs = np.array(list(itertools.product(range(3), repeat=8)), dtype=np.int8)
    vecs = vecs[vecs.sum(axis=1) % 3 == 0]
    count = 0
    for rho in _involutions(8):
        eps = sign(rho) if variant == "sign_twisted" else 1
        idx = list(rho._img)
        square = (vecs + eps * vecs[:, idx]) % 3
        count += int(np.count_nonzero(~square.any(axis=1)))
    return count - 1  # drop the identity


def semidirect_order() -> int:
    return 3 ** 7 * math.factorial(8)
