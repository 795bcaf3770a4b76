"""Permutations on {1..n} and a deterministic Schreier-Sims BSGS.

Permutations are written in the usual cycle notation ``(1,2,3)(4,5)`` with
``(1,2,3)`` meaning 1->2, 2->3, 3->1. Products are read left to right:
``p * q`` applies p first, then q (the GAP/Magma convention, so words like
``T2^2 T5 T4 T6^-1 T2^-1`` read as written).

Internally images are stored 0-based in a tuple for speed; every public
entry point speaks 1-based points.
"""

from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass, field


class CycleParseError(ValueError):
    pass


class Permutation:
    __slots__ = ("_img",)

    def __init__(self, images0):
        self._img = tuple(images0)

    # -- construction ---------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_images(cls, images1) -> "Permutation":
        """Build from 1-based images: ``images1[i-1]`` is the image of i."""
        img = tuple(i - 1 for i in images1)
        if sorted(img) != list(range(len(img))):
            raise ValueError("images do not form a bijection")
        return cls(img)

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= n:
                    raise CycleParseError(f"point {pt} out of range 1..{n}")
                if pt in seen:
                    raise CycleParseError(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    # -- accessors ------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> list[int]:
        """1-based image list."""
        return [i + 1 for i in self._img]

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    # -- group law --------------------------------------------------------
    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(other._img) != len(self._img):
            raise ValueError("permutations on different point sets")
        o = other._img
        return Permutation([o[i] for i in self._img])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self):
        return hash(self._img)

    # -- cycle structure ----------------------------------------------------
    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return format_cycles(self)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!s}, n={self.degree})"


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation; whitespace is ignored, ``""`` or ``"()"`` is the identity."""
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "()"):
        return Permutation.identity(n)
    if not re.fullmatch(r"(\(\d+(,\d+)*\))+", compact):
        raise CycleParseError(f"malformed cycle notation: {text!r}")
    cycles = [[int(x) for x in body.split(",")] for body in re.findall(r"\(([^)]*)\)", compact)]
    return Permutation.from_cycles(cycles, n)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def power(p: Permutation, k: int) -> Permutation:
    return p ** k


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths, fixed points included, sorted descending."""

    parts: tuple[int, ...]

    @classmethod
    def of(cls, parts) -> "CycleType":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def counts(self) -> Counter:
        return Counter(self.parts)

    def __str__(self):
        return " ".join(map(str, self.parts))


def cycle_type(p: Permutation) -> CycleType:
    return CycleType.of(len(c) for c in p.cycles(include_fixed=True))


def sign(p: Permutation) -> int:
    ncycles = len(p.cycles(include_fixed=True))
    return -1 if (p.degree - ncycles) % 2 else 1


def element_order(p: Permutation) -> int:
    return math.lcm(*cycle_type(p).parts) if p.degree else 1


# -- Schreier-Sims -------------------------------------------------------------

@dataclass
class _Level:
    point: int  # 0-based base point
    gens: list  # strong generators fixing all earlier base points
    transversal: dict = field(default_factory=dict)  # orbit point -> coset rep u with u(point) = orbit point

    def rebuild_orbit(self, n):
        ident = Permutation.identity(n)
        self.transversal = {self.point: ident}
        queue = [self.point]
        for pt in queue:
            u = self.transversal[pt]
            for g in self.gens:
                img = g._img[pt]
                if img not in self.transversal:
                    self.transversal[img] = u * g
                    queue.append(img)


class BSGS:
    """Base and strong generating set with explicit transversals.

    Built by the deterministic incremental Schreier-Sims algorithm; the
    result is immutable in practice (nothing mutates it after ``build``).
    """

    def __init__(self, n: int, levels: list[_Level], generators):
        self.n = n
        self._levels = levels
        self.generators = tuple(generators)

    @property
    def base(self) -> list[int]:
        return [lv.point + 1 for lv in self._levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for lv in self._levels:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    @property
    def orbit_lengths(self) -> list[int]:
        return [len(lv.transversal) for lv in self._levels]

    @property
    def order(self) -> int:
        return math.prod(self.orbit_lengths)

    def sift(self, p: Permutation) -> tuple[Permutation, int]:
        """Strip p through the chain; returns (residue, level reached)."""
        h = p
        for i, lv in enumerate(self._levels):
            b = h._img[lv.point]
            u = lv.transversal.get(b)
            if u is None:
                return h, i
            h = h * u.inverse()
        return h, len(self._levels)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.n:
            raise ValueError("degree mismatch")
        h, depth = self.sift(p)
        return depth == len(self._levels) and h.is_identity()

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform element: one uniformly chosen coset representative per level."""
        g = Permutation.identity(self.n)
        for lv in reversed(self._levels):
            reps = list(lv.transversal.values())
            g = g * reps[rng.randrange(len(reps))]
        return g


def _first_moved(p: Permutation):
    for i, j in enumerate(p._img):
        if i != j:
            return i
    return None


def bsgs_build(generators) -> BSGS:
    gens = [g for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("generators on different point sets")
    gens = [g for g in gens if not g.is_identity()]
    levels: list[_Level] = []
    for g in gens:
        _ensure_base_moves(levels, g, n)
    for i, lv in enumerate(levels):
        lv.gens = [g for g in gens if all(g._img[levels[j].point] == levels[j].point for j in range(i))]
        lv.rebuild_orbit(n)

    # Process levels from the bottom up; when a Schreier generator fails to
    # sift, add its residue at the level where it failed and restart there.
    i = len(levels) - 1
    while i >= 0:
        new_i = _check_level(levels, i, n)
        i = i - 1 if new_i is None else new_i
    return BSGS(n, levels, generators)


def _ensure_base_moves(levels, h, n):
    if all(h._img[lv.point] == lv.point for lv in levels):
        pt = _first_moved(h)
        if pt is not None:
            levels.append(_Level(point=pt, gens=[]))


def _sift_from(levels, start, p):
    h = p
    for j in range(start, len(levels)):
        lv = levels[j]
        u = lv.transversal.get(h._img[lv.point])
        if u is None:
            return h, j
        h = h * u.inverse()
    return h, len(levels)


def _check_level(levels, i, n):
    """Verify Schreier generators of level i; return the level to resume at, or None."""
    lv = levels[i]
    for pt, u in list(lv.transversal.items()):
        for g in lv.gens:
            ug = u * g
            v = lv.transversal[ug._img[lv.point]]
            schreier = ug * v.inverse()
            if schreier.is_identity():
                continue
            h, j = _sift_from(levels, i + 1, schreier)
            if j < len(levels) or not h.is_identity():
                if j == len(levels):
                    levels.append(_Level(point=_first_moved(h), gens=[]))
                for k in range(i + 1, j + 1):
                    levels[k].gens.append(h)
                    levels[k].rebuild_orbit(n)
                return j
    return None


def bsgs_contains(g: BSGS, p: Permutation) -> bool:
    return g.contains(p)


def bsgs_random(g: BSGS, seed) -> Permutation:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return g.random_element(rng)
