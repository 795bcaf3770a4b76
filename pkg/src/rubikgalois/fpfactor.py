"""Factorization over prime fields and Frobenius degree patterns.

Hot loops work on plain ``list[int]`` coefficient vectors (lowest degree
first, entries in ``range(p)``, no trailing zeros); ``Poly``/``ModP`` are
only used at the API boundary.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .polyring import ModP, Poly


class UnusablePrime(ValueError):
    pass


@dataclass(frozen=True)
class DegreePattern:
    """Irreducible factor degrees, sorted descending."""

    parts: tuple[int, ...]

    @classmethod
    def of(cls, parts) -> "DegreePattern":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return " ".join(map(str, self.parts))


@dataclass(frozen=True)
class GoodPrimeReport:
    p: int
    usable: bool
    reason: str  # "ok" | "divides leading denominator" | "not squarefree mod p"


# -- int-list kernel -------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _trim(out)


def _sub(a, b, p):
    out = a[:] + [0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _trim(out)


def _scale(a, c, p):
    return _trim([x * c % p for x in a])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) <= db:
        return [], a
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % p
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] = (a[k + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    return _monic(a, p)


def _deriv(a, p):
    return _trim([k * a[k] % p for k in range(1, len(a))])


def _powmod(base, e, m, p):
    result = [1]
    base = _mod(base, m, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), m, p)
        base = _mod(_mul(base, base, p), m, p)
        e >>= 1
    return result


def _frobenius_matrix(f, p):
    """Rows X^(p*j) mod f, j < deg f."""
    n = len(f) - 1
    xp = _powmod([0, 1], p, f, p)
    rows = [[1]]
    for _ in range(1, n):
        rows.append(_mod(_mul(rows[-1], xp, p), f, p))
    return rows


def _apply_frobenius(h, rows, p, n):
    out = [0] * n
    for j, c in enumerate(h):
        if c:
            for i, r in enumerate(rows[j]):
                out[i] += c * r
    return _trim([x % p for x in out])


def _distinct_degree(f, p):
    """f monic squarefree; returns [(d, product of the degree-d irreducible factors)]."""
    n = len(f) - 1
    out = []
    if n <= 0:
        return out
    rows = _frobenius_matrix(f, p)
    g = f
    h = [0, 1] if n > 1 else _mod([0, 1], f, p)
    d = 0
    while 2 * (d + 1) <= len(g) - 1:
        d += 1
        h = _apply_frobenius(h, rows, p, n)
        c = _gcd(g, _sub(h, [0, 1], p), p)
        if len(c) > 1:
            out.append((d, c))
            g = _divmod(g, c, p)[0]
    if len(g) > 1:
        out.append((len(g) - 1, g))
    return out


def _squarefree_decomposition(f, p):
    """Monic f -> [(g, m)] with f = prod g^m, g squarefree (Yun, with p-th roots)."""
    out = []
    f = _monic(f, p)
    if len(f) <= 1:
        return out
    df = _deriv(f, p)
    if not df:
        # f(X) = g(X^p) = g(X)^p over F_p
        root = [f[i] for i in range(0, len(f), p)]
        return [(g, m * p) for g, m in _squarefree_decomposition(root, p)]
    c = _gcd(f, df, p)
    w = _divmod(f, c, p)[0]
    m = 1
    while len(w) > 1:
        y = _gcd(w, c, p)
        z = _divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, m))
        m += 1
        w = y
        c = _divmod(c, y, p)[0]
    if len(c) > 1:
        # what is left is a p-th power
        out.extend(_pth_power_part(c, p))
    return out


def _pth_power_part(c, p):
    root = [c[i] for i in range(0, len(c), p)]
    return [(g, m * p) for g, m in _squarefree_decomposition(root, p)]


def _equal_degree(g, d, p, rng):
    """Split monic squarefree g whose irreducible factors all have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) <= 1:
            continue
        if p == 2:
            t = a[:]
            sq = a
            for _ in range(d - 1):
                sq = _mod(_mul(sq, sq, p), g, p)
                t = _add(t, sq, p)
            cand = t
        else:
            e = (p ** d - 1) // 2
            cand = _sub(_powmod(a, e, g, p), [1], p)
        c = _gcd(g, cand, p)
        if 1 < len(c) < len(g):
            return _equal_degree(c, d, p, rng) + _equal_degree(_divmod(g, c, p)[0], d, p, rng)


# -- public API ---------------------------------------------------------------------

def _as_intlist(f: Poly, p: int):
    return _trim([int(c) % p if isinstance(c, ModP) else ModP(c, p).v for c in f.coeffs])


def _to_poly(a, p):
    return Poly([ModP(x, p) for x in a])


def reduce_mod(f: Poly, p: int) -> Poly:
    """Image of a p-integral polynomial in F_p[X], keeping its degree."""
    for c in f.coeffs:
        if Fraction(c).denominator % p == 0:
            raise UnusablePrime(f"{p} divides a coefficient denominator")
    if Fraction(f.lc).numerator % p == 0:
        raise UnusablePrime(f"{p} divides the leading coefficient")
    return Poly([ModP(Fraction(c), p) for c in f.coeffs])


def factor_fp(f: Poly, seed=0) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities; ``f`` has ``ModP`` coefficients."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    p = f.lc.p
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    a = _as_intlist(f, p)
    out = []
    for g, m in _squarefree_decomposition(a, p):
        for d, block in _distinct_degree(g, p):
            for h in _equal_degree(block, d, p, rng):
                out.append((_to_poly(h, p), m))
    out.sort(key=lambda fm: (fm[0].degree, [int(c) for c in fm[0].coeffs], fm[1]))
    return out


class ReducedModel:
    """Cached integer data of a rational polynomial for fast reduction mod many primes."""

    def __init__(self, f: Poly):
        self.f = f
        self.nums = [Fraction(c).numerator for c in f.coeffs]
        self.dens = [Fraction(c).denominator for c in f.coeffs]

    def check(self, p: int):
        """Return (report, int-list reduction or None)."""
        if any(d % p == 0 for d in self.dens) or self.nums[-1] % p == 0:
            return GoodPrimeReport(p, False, "divides leading denominator"), None
        a = _trim([n * pow(d, -1, p) % p for n, d in zip(self.nums, self.dens)])
        a = _monic(a, p)
        if len(_gcd(a, _deriv(a, p), p)) > 1:
            return GoodPrimeReport(p, False, "not squarefree mod p"), None
        return GoodPrimeReport(p, True, "ok"), a


def _pattern_of(a, p):
    parts = []
    for d, block in _distinct_degree(a, p):
        parts.extend([d] * ((len(block) - 1) // d))
    return DegreePattern.of(parts)


def degree_pattern(f, p: int):
    """Factor degrees of f mod p, or a ``GoodPrimeReport`` explaining why p is unusable."""
    model = f if isinstance(f, ReducedModel) else ReducedModel(f)
    report, a = model.check(p)
    if not report.usable:
        return report
    return _pattern_of(a, p)


def prime_report(f: Poly, p: int) -> GoodPrimeReport:
    return ReducedModel(f).check(p)[0]


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


def pattern_counts(pattern: DegreePattern) -> Counter:
    return Counter(pattern.parts)
