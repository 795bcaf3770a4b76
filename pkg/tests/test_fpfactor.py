import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rubikgalois.evidence import corner_compatible, subset_sum_irreducibility
from rubikgalois.fpfactor import (
    DegreePattern,
    GoodPrimeReport,
    UnusablePrime,
    degree_pattern,
    factor_fp,
    prime_report,
    primes_up_to,
    reduce_mod,
)
from rubikgalois.polyring import ModP, Poly, rational_poly

from .oracles import brute_irreducible


def fp(coeffs, p):
    return Poly([ModP(c, p) for c in coeffs])


def product(factors, p):
    acc = fp([1], p)
    for h, m in factors:
        acc = acc * h ** m
    return acc


def as_ints(f):
    return [int(c) for c in f.coeffs]


def test_reduce_examples(main_data):
    assert reduce_mod(rational_poly([1, 0, 1]), 5) == fp([1, 0, 1], 5)
    with pytest.raises(UnusablePrime):
        reduce_mod(main_data.g24, 5)
    assert 384257037754753807138505851908147025 % 5 == 0
    assert main_data.g24[0].denominator == 384257037754753807138505851908147025
    f8 = rational_poly([6489, -2139] + [0] * 6 + [1])
    assert reduce_mod(f8, 2) == fp([1, 1] + [0] * 6 + [1], 2)
    report = prime_report(main_data.g24, 5)
    assert report == GoodPrimeReport(5, False, "divides leading denominator")


def test_factor_examples():
    assert [as_ints(h) for h, _ in factor_fp(fp([1, 0, 1], 5))] == [[2, 1], [3, 1]]
    assert [(as_ints(h), m) for h, m in factor_fp(fp([1, 0, 1], 3))] == [([1, 0, 1], 1)]
    lin = factor_fp(fp([0, -1, 0, 0, 0, 1], 5))
    assert sorted(as_ints(h)[0] for h, _ in lin) == [0, 1, 2, 3, 4]
    assert all(h.degree == 1 and m == 1 for h, m in lin)


def test_degree_pattern_examples():
    f = rational_poly([16, 20, 0, 0, 0, 1])
    assert degree_pattern(f, 7) == DegreePattern((3, 1, 1))
    assert degree_pattern(f, 3) == DegreePattern((5,))
    assert str(degree_pattern(f, 7)) == "3 1 1"
    f10 = rational_poly([-16, 0, 20] + [0] * 7 + [1])
    # irreducible over Q, but only by combining two primes
    assert degree_pattern(f10, 3) == DegreePattern((5, 5))
    assert degree_pattern(f10, 7) == DegreePattern((6, 2, 1, 1))
    assert subset_sum_irreducibility([degree_pattern(f10, 3), degree_pattern(f10, 7)], 10) == {0, 10}
    rep = degree_pattern(f, 2)
    assert isinstance(rep, GoodPrimeReport) and rep.reason == "not squarefree mod p"
    rep = degree_pattern(rational_poly([1, Fraction(1, 7), 1]), 7)
    assert not rep.usable and rep.reason == "divides leading denominator"


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_irreducibility_matches_brute_force(p):
    for deg in range(1, 5):
        for low in itertools.product(range(p), repeat=deg):
            coeffs = list(low) + [1]
            factors = factor_fp(fp(coeffs, p))
            irreducible = len(factors) == 1 and factors[0][1] == 1
            assert irreducible == brute_irreducible(coeffs, p), coeffs
            assert product(factors, p) == fp(coeffs, p)
            for h, _ in factors:
                assert brute_irreducible(as_ints(h), p)


@given(st.sampled_from([2, 3, 5, 7, 11, 13, 31]), st.lists(st.integers(0, 30), min_size=2, max_size=16), st.integers(0, 10 ** 6))
def test_factor_product_roundtrip(p, coeffs, seed):
    coeffs[-1] = coeffs[-1] % p or 1
    f = fp(coeffs, p)
    factors = factor_fp(f, seed=seed)
    assert product(factors, p) * f.lc == f
    assert all(h.lc == ModP(1, p) for h, _ in factors)


@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=3, max_size=6), st.integers(1, 3))
def test_repeated_factors(p, coeffs, k):
    coeffs[-1] = 1
    base = fp(coeffs, p)
    f = base ** (p * k) * fp([1, 1], p)
    assert product(factor_fp(f), p) == f


@given(st.integers(0, 2 ** 30), st.integers(0, 2 ** 30))
def test_seed_independence(s1, s2):
    f = fp([3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 1], 7)
    assert factor_fp(f, s1) == factor_fp(f, s2)


def test_pattern_matches_full_factorization():
    rng = random.Random(4)
    for p in (2, 3, 5, 11):
        for _ in range(30):
            coeffs = [rng.randrange(-20, 21) for _ in range(rng.randrange(3, 12))] + [1]
            f = rational_poly(coeffs)
            pat = degree_pattern(f, p)
            if isinstance(pat, GoodPrimeReport):
                continue
            degs = sorted((h.degree for h, m in factor_fp(reduce_mod(f, p)) for _ in range(m)), reverse=True)
            assert list(pat.parts) == degs


def test_full_cycle_absent_for_f24(main_data):
    # the corner model forbids a single 24-cycle, so no usable prime may show one
    assert not corner_compatible(DegreePattern((24,)))[0]
    seen = 0
    for p in primes_up_to(3000):
        pat = degree_pattern(main_data.f24, p)
        if isinstance(pat, GoodPrimeReport):
            continue
        seen += 1
        assert pat.parts != (24,)
        if seen == 200:
            break
    assert seen == 200


def test_primes_up_to():
    ps = primes_up_to(1000)
    assert len(ps) == 168 and ps[:5] == [2, 3, 5, 7, 11]
    assert all(all(q % d for d in range(2, math.isqrt(q) + 1)) for q in ps)
    assert primes_up_to(1) == []
