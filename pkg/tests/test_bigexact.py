from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rubikgalois.bigexact import (
    OMEGA,
    OMEGA_BAR,
    EisensteinRational,
    NormFormWitness,
    eis_arith,
    eis_is_cube,
    format_rational,
    iroot,
    is_perfect_cube_rat,
    is_perfect_square,
    parse_rational,
    probable_prime,
    rat_arith,
    verify_norm_form,
)

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)
eisensteins = st.builds(EisensteinRational, rationals, rationals)


def test_rat_arith_examples():
    assert rat_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    z = rat_arith(Fraction(2, 4), Fraction(0, 1), "mul")
    assert (z.numerator, z.denominator) == (0, 1)
    r = rat_arith(12 ** 6 * 18262481960816352, 11 ** 5 * 106936663173678765, "div")
    assert format_rational(r) == "1962764241992810496/619884697145165705"


def test_rat_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "div")


def test_parse_format_roundtrip():
    for text in ("0", "-7", "3/4", "-1962764241992810496/619884697145165705"):
        assert format_rational(parse_rational(text)) == text
    assert format_rational(parse_rational("6/8")) == "3/4"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("x")


def test_iroot():
    assert iroot(10 ** 30, 3) == 10 ** 10
    assert iroot(10 ** 30 - 1, 3) == 10 ** 10 - 1
    assert iroot(2 ** 101, 2) ** 2 <= 2 ** 101 < (iroot(2 ** 101, 2) + 1) ** 2


def test_square_examples():
    assert is_perfect_square(Fraction(4, 9)) == (True, Fraction(2, 3))
    assert is_perfect_square(-1)[0] is False
    assert is_perfect_square(0)[0] is True


def test_cube_examples():
    ok, root = is_perfect_cube_rat(Fraction(-452984832, 14706125))
    assert ok and root == Fraction(-768, 245)
    assert is_perfect_cube_rat(8) == (True, 2)
    assert is_perfect_cube_rat(4)[0] is False


@settings(max_examples=1000)
@given(rationals)
def test_square_of_random_rational(q):
    ok, root = is_perfect_square(q * q)
    assert ok and abs(root) == abs(q)


@given(st.integers(2, 10 ** 6))
def test_squarefree_nonsquares(n):
    # n * (n + 1) is never a square for n >= 1; squarefree nonsquares are a subset
    assert not is_perfect_square(n * (n + 1))[0]
    assert not is_perfect_square(Fraction(n * (n + 1), 4))[0]


@given(rationals)
def test_cube_of_random_rational(q):
    ok, root = is_perfect_cube_rat(q ** 3)
    assert ok and root == q


def test_eis_examples():
    one = EisensteinRational(1, 0)
    assert eis_arith(one - OMEGA, k=3, op="pow") == EisensteinRational(-3, -6)
    assert eis_arith(OMEGA, op="conj") == EisensteinRational(-1, -1) == OMEGA_BAR
    assert eis_arith(one + 2 * OMEGA, k=2, op="pow") == EisensteinRational(-3, 0)
    assert OMEGA ** 3 == one
    assert OMEGA * OMEGA == OMEGA_BAR


def test_eis_conj_formula():
    z = EisensteinRational(Fraction(2, 3), Fraction(-5, 7))
    assert z.conj() == EisensteinRational(z.a - z.b, -z.b)
    assert z * z.conj() == EisensteinRational(z.norm(), 0)


def test_eis_is_cube_examples():
    ok, root = eis_is_cube(EisensteinRational(-3, -6))
    assert ok and root ** 3 == EisensteinRational(-3, -6)
    ok, root = eis_is_cube(1)
    assert ok and root ** 3 == EisensteinRational(1, 0)
    assert eis_is_cube(OMEGA) == (False, None)
    assert eis_is_cube(2)[0] is False
    assert eis_is_cube(EisensteinRational(3, 0))[0] is False


@settings(max_examples=500)
@given(eisensteins)
def test_random_eisenstein_cubes(c):
    z = c ** 3
    ok, root = eis_is_cube(z)
    assert ok
    assert root ** 3 == z


@given(eisensteins, eisensteins, eisensteins)
def test_eis_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x * y).norm() == x.norm() * y.norm()
    if x:
        assert x * x.inverse() == EisensteinRational(1, 0)


def test_norm_form_examples():
    d = 3 ** 8 * 7 ** 7 * 1437417619559484462138047
    assert verify_norm_form(d, 106936663173678765, 18262481960816352)
    v, w = 1992257950336974, 42646860008631
    d2 = v * v - 11 * w * w
    assert d2 == 3949085439326327289928812040905
    assert verify_norm_form(d2, v, w)
    assert verify_norm_form(1, 1, 0)
    assert not verify_norm_form(2, 1, 0)
    with pytest.raises(ValueError):
        NormFormWitness(1, 1, 0)


@given(st.integers(-10 ** 20, 10 ** 20), st.integers(-10 ** 20, 10 ** 20))
def test_norm_form_random(v, w):
    assert verify_norm_form(v * v - 11 * w * w, v, w)


def test_probable_prime_examples():
    assert probable_prime(1437417619559484462138047)
    assert probable_prime(58727088785134974217580322839)
    assert not probable_prime(15)
    assert not probable_prime(1)


def test_probable_prime_against_trial_division():
    def trial(n):
        return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))

    for n in range(2000):
        assert probable_prime(n) == trial(n)
    # strong pseudoprimes to several bases
    for n in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not probable_prime(n)
    assert probable_prime(2 ** 127 - 1)
    assert not probable_prime((2 ** 61 - 1) * (2 ** 89 - 1))
