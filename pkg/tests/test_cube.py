import math
import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rubikgalois.cube import (
    RUBIK_ORDER,
    CubeStateWreath,
    compose_states,
    facet_group,
    facet_pattern,
    format_state,
    is_realistic,
    parse_state,
    psi,
    random_realistic,
    random_state,
    wreath_group_order,
)
from rubikgalois.permgroup import CycleType, Permutation, cycle_type, parse_cycles, sign

ID8, ID12 = Permutation.identity(8), Permutation.identity(12)
seeds = st.integers(0, 2 ** 32)


def facet_action(state):
    """Explicit permutation of the 24 + 24 facet slots; point (i, o) -> (rho(i), o + x_i)."""
    corner = [0] * 24
    for i in range(8):
        for o in range(3):
            corner[3 * i + o] = 3 * state.rho._img[i] + (o + state.x[i]) % 3
    edge = [0] * 24
    for i in range(12):
        for o in range(2):
            edge[2 * i + o] = 2 * state.sigma._img[i] + (o + state.y[i]) % 2
    return Permutation(corner), Permutation(edge)


def state(x=(0,) * 8, rho="", y=(0,) * 12, sigma=""):
    return CubeStateWreath(tuple(x), parse_cycles(rho, 8), tuple(y), parse_cycles(sigma, 12))


def test_psi_examples():
    assert psi(CubeStateWreath.identity()) == (0, 0, 1)
    assert psi(state(x=(1,) + (0,) * 7)) == (1, 0, 1)
    assert psi(state(rho="(1,2)")) == (0, 0, -1)


def test_realistic_examples():
    assert is_realistic(CubeStateWreath.identity())
    assert not is_realistic(state(x=(1,) + (0,) * 7))
    assert is_realistic(state(rho="(1,2)", sigma="(1,2)"))
    assert not is_realistic(state(y=(1,) + (0,) * 11))


def test_state_validation():
    with pytest.raises(ValueError):
        CubeStateWreath((0,) * 7, ID8, (0,) * 12, ID12)
    with pytest.raises(ValueError):
        CubeStateWreath((0,) * 8, ID12, (0,) * 12, ID12)


def test_wreath_order():
    full = 3 ** 8 * math.factorial(8) * 2 ** 12 * math.factorial(12)
    assert wreath_group_order() == RUBIK_ORDER
    # psi is onto Z/3 x Z/2 x {+-1}, so the kernel has index 12
    assert full // wreath_group_order() == 12 and full % RUBIK_ORDER == 0
    assert wreath_group_order() == facet_group().order


@given(seeds, seeds, seeds)
def test_group_law_axioms(a, b, c):
    s1, s2, s3 = random_state(a), random_state(b), random_state(c)
    e = CubeStateWreath.identity()
    assert (s1 * s2) * s3 == s1 * (s2 * s3)
    assert s1 * e == s1 == e * s1
    assert s1 * s1.inverse() == e == s1.inverse() * s1


@given(seeds, seeds)
def test_action_is_homomorphism(a, b):
    s1, s2 = random_state(a), random_state(b)
    c1, e1 = facet_action(s1)
    c2, e2 = facet_action(s2)
    c12, e12 = facet_action(compose_states(s1, s2))
    assert c12 == c1 * c2 and e12 == e1 * e2


@given(seeds)
def test_psi_is_homomorphism_and_predicate(a):
    s, t = random_state(a), random_state(a + 1)
    p, q, pq = psi(s), psi(t), psi(s * t)
    assert pq == ((p[0] + q[0]) % 3, (p[1] + q[1]) % 2, p[2] * q[2])
    assert is_realistic(s) == (psi(s) == (0, 0, 1))


def test_realistic_closed():
    rng = random.Random(0)
    for _ in range(10 ** 4):
        s1, s2 = random_realistic(rng), random_realistic(rng)
        assert is_realistic(s1 * s2)
        assert is_realistic(s1.inverse())


def test_sampling_frequencies():
    rng = random.Random(2024)
    n = 10 ** 5
    even = eight = 0
    for _ in range(n):
        s = random_realistic(rng)
        assert is_realistic(s)
        even += sign(s.rho) == 1
        eight += cycle_type(s.rho).parts == (8,)
    assert abs(even / n - 0.5) <= 0.02
    assert abs(eight / n - 1 / 8) <= 0.01


def test_facet_pattern_examples():
    fp = facet_pattern(CubeStateWreath.identity())
    assert fp.corner.parts == (1,) * 24 and fp.edge.parts == (1,) * 24
    fp = facet_pattern(state(rho="(1,2,3,4,5,6,7,8)"))
    assert fp.corner.parts == (8, 8, 8) and fp.edge.parts == (1,) * 24
    fp = facet_pattern(state(y=(1,) + (0,) * 11, sigma="(1,2,3,4,5,6,7,8,9,10,11,12)"))
    assert fp.edge.parts == (24,) and fp.corner.parts == (1,) * 24
    fp = facet_pattern(state(x=(1, 1, 1, 0, 0, 0, 0, 0), rho="(1,2)"))
    assert fp.corner.parts == (6, 3) + (1,) * 15


@given(seeds)
def test_facet_pattern_matches_explicit_action(a):
    s = random_state(a)
    fp = facet_pattern(s)
    corner, edge = facet_action(s)
    assert fp.corner == cycle_type(corner) and fp.edge == cycle_type(edge)
    assert sum(fp.corner.parts) == 24 and sum(fp.edge.parts) == 24


def test_realistic_twist_and_flip_counts():
    rng = random.Random(99)
    for _ in range(10 ** 5):
        s = random_realistic(rng)
        twisted = sum(1 for c in s.rho.cycles(include_fixed=True) if sum(s.x[i - 1] for i in c) % 3)
        flipped = sum(1 for c in s.sigma.cycles(include_fixed=True) if sum(s.y[i - 1] for i in c) % 2)
        assert twisted != 1
        assert flipped % 2 == 0


def test_state_text_roundtrip():
    s = random_realistic(5)
    assert parse_state(format_state(s)) == s
    assert format_state(CubeStateWreath.identity()) == "x=[00000000] rho=() y=[000000000000] sigma=()"
    with pytest.raises(ValueError):
        parse_state("x=[0] rho=()")
