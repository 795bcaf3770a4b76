"""Two models of the Rubik's Cube group.

The facet model is the subgroup of S_48 generated by the six face turns
below (facet numbering of the unfolded cube, centres omitted). The wreath
model describes a position as ``(x, rho, y, sigma)`` with corner twists
``x`` in (Z/3)^8, corner permutation ``rho`` in S_8, edge flips ``y`` in
(Z/2)^12 and edge permutation ``sigma`` in S_12; legal positions are the
kernel of ``psi``.

The two models are only compared through group order and cycle-type
statistics: no facet-to-cubie dictionary is built.

Wreath law (right action, products read left to right)::

    (x, rho)(x', rho') = (x + x' o rho, rho rho')

where ``(x' o rho)_i = x'_{rho(i)}``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass

from .permgroup import (
    BSGS,
    CycleType,
    Permutation,
    bsgs_build,
    format_cycles,
    parse_cycles,
    sign,
)

FACE_TURNS_TEXT = {
    "T1": "(1,3,8,6)(2,5,7,4)(9,33,25,17)(10,34,26,18)(11,35,27,19)",
    "T2": "(9,11,16,14)(10,13,15,12)(1,17,41,40)(4,20,44,37)(6,22,46,35)",
    "T3": "(17,19,24,22)(18,21,23,20)(6,25,43,16)(7,28,42,13)(8,30,41,11)",
    "T4": "(25,27,32,30)(26,29,31,28)(3,38,43,19)(5,36,45,21)(8,33,48,24)",
    "T5": "(33,35,40,38)(34,37,39,36)(3,9,46,32)(2,12,47,29)(1,14,48,27)",
    "T6": "(41,43,48,46)(42,45,47,44)(14,22,30,38)(15,23,31,39)(16,24,32,40)",
}

RUBIK_ORDER = 43252003274489856000


def face_turns() -> dict[str, Permutation]:
    return {name: parse_cycles(text, 48) for name, text in FACE_TURNS_TEXT.items()}


def evaluate_word(word: str, gens: dict[str, Permutation]) -> Permutation:
    """Evaluate a word like ``"T2^2 T5 T4 T6^-1 T2^-1"`` left to right."""
    n = next(iter(gens.values())).degree
    result = Permutation.identity(n)
    for name, exp in re.findall(r"([A-Za-z]\w*)(?:\^(-?\d+))?", word):
        result = result * gens[name] ** int(exp or 1)
    return result


ALPHA_WORD = "T2^2 T5 T4 T6^-1 T2^-1"
BETA_WORD = "T1 T2 T4 T1 T4^-1 T1^-1 T2^-1"


def two_generators() -> tuple[Permutation, Permutation]:
    T = face_turns()
    return evaluate_word(ALPHA_WORD, T), evaluate_word(BETA_WORD, T)


def facet_group() -> BSGS:
    return bsgs_build(list(face_turns().values()))


# -- wreath model ----------------------------------------------------------------

@dataclass(frozen=True)
class CubeStateWreath:
    x: tuple[int, ...]
    rho: Permutation
    y: tuple[int, ...]
    sigma: Permutation

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(v % 3 for v in self.x))
        object.__setattr__(self, "y", tuple(v % 2 for v in self.y))
        if len(self.x) != 8 or self.rho.degree != 8:
            raise ValueError("corner data must live on 8 points")
        if len(self.y) != 12 or self.sigma.degree != 12:
            raise ValueError("edge data must live on 12 points")

    @classmethod
    def identity(cls) -> "CubeStateWreath":
        return cls((0,) * 8, Permutation.identity(8), (0,) * 12, Permutation.identity(12))

    def __mul__(self, other: "CubeStateWreath") -> "CubeStateWreath":
        return compose_states(self, other)

    def inverse(self) -> "CubeStateWreath":
        x, rho = _wreath_inverse(self.x, self.rho, 3)
        y, sigma = _wreath_inverse(self.y, self.sigma, 2)
        return CubeStateWreath(x, rho, y, sigma)

    def __str__(self):
        return format_state(self)


def _wreath_mul(x, rho, x2, rho2, m):
    img = rho._img
    return tuple((x[i] + x2[img[i]]) % m for i in range(len(x))), rho * rho2


def _wreath_inverse(x, rho, m):
    # (x, rho)^-1 = (-(x o rho^-1), rho^-1)
    inv = rho.inverse()
    img = inv._img
    return tuple((-x[img[i]]) % m for i in range(len(x))), inv


def compose_states(s1: CubeStateWreath, s2: CubeStateWreath) -> CubeStateWreath:
    x, rho = _wreath_mul(s1.x, s1.rho, s2.x, s2.rho, 3)
    y, sigma = _wreath_mul(s1.y, s1.sigma, s2.y, s2.sigma, 2)
    return CubeStateWreath(x, rho, y, sigma)


def psi(state: CubeStateWreath) -> tuple[int, int, int]:
    return sum(state.x) % 3, sum(state.y) % 2, sign(state.rho) * sign(state.sigma)


def is_realistic(state: CubeStateWreath) -> bool:
    return psi(state) == (0, 0, 1)


def wreath_group_order() -> int:
    full = 3 ** 8 * math.factorial(8) * 2 ** 12 * math.factorial(12)
    image_size = 3 * 2 * 2  # psi is onto Z/3 x Z/2 x {+-1}
    return full // image_size


def _random_perm(n, rng):
    img = list(range(n))
    rng.shuffle(img)
    return Permutation(img)


def _random_sum_zero(n, m, rng):
    v = [rng.randrange(m) for _ in range(n - 1)]
    v.append(-sum(v) % m)
    return tuple(v)


def random_realistic(seed) -> CubeStateWreath:
    """Uniform sample from the kernel of psi; sigma's sign is matched by rejection."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    x = _random_sum_zero(8, 3, rng)
    rho = _random_perm(8, rng)
    y = _random_sum_zero(12, 2, rng)
    target = sign(rho)
    while True:
        sigma = _random_perm(12, rng)
        if sign(sigma) == target:
            break
    return CubeStateWreath(x, rho, y, sigma)


def random_state(seed) -> CubeStateWreath:
    """Uniform sample from the whole product (C3 wr S8) x (C2 wr S12)."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return CubeStateWreath(
        tuple(rng.randrange(3) for _ in range(8)), _random_perm(8, rng),
        tuple(rng.randrange(2) for _ in range(12)), _random_perm(12, rng),
    )


@dataclass(frozen=True)
class FacetPatternPair:
    corner: CycleType
    edge: CycleType


def _lifted_pattern(labels, perm, m):
    parts = []
    for cyc in perm.cycles(include_fixed=True):
        d = len(cyc)
        twist = sum(labels[i - 1] for i in cyc) % m
        if twist:
            parts.append(m * d)
        else:
            parts.extend([d] * m)
    return CycleType.of(parts)


def facet_pattern(state: CubeStateWreath) -> FacetPatternPair:
    """Cycle types of the state acting on the 24 corner facets and the 24 edge facets."""
    return FacetPatternPair(_lifted_pattern(state.x, state.rho, 3), _lifted_pattern(state.y, state.sigma, 2))


# -- text format -------------------------------------------------------------------

_STATE_RE = re.compile(
    r"^\s*x=\[(?P<x>[^\]]*)\]\s+rho=(?P<rho>\S*)\s+y=\[(?P<y>[^\]]*)\]\s+sigma=(?P<sigma>\S*)\s*$"
)


def format_state(s: CubeStateWreath) -> str:
    return (
        f"x=[{''.join(map(str, s.x))}] rho={format_cycles(s.rho)} "
        f"y=[{''.join(map(str, s.y))}] sigma={format_cycles(s.sigma)}"
    )


def parse_state(text: str) -> CubeStateWreath:
    m = _STATE_RE.match(text)
    if not m:
        raise ValueError(f"malformed cube state: {text!r}")

    def digits(s):
        return tuple(int(c) for c in re.sub(r"[\s,]", "", s))

    return CubeStateWreath(
        digits(m["x"]), parse_cycles(m["rho"], 8), digits(m["y"]), parse_cycles(m["sigma"], 12)
    )
