import math
import random
from fractions import Fraction

import pytest

from heckeform.cyclo import (CycloNum, RationalC, root_of_unity_log, sign_of_real,
                             smallest_e, specialize, sqrt_root_of_unity)
from heckeform.laurent import LaurentPoly

Q = LaurentPoly.q_power(1)
ONE = LaurentPoly.one()


def random_cyclo(rng, m, size=4):
    from heckeform.cyclo import _euler_phi
    deg = _euler_phi(m)
    return CycloNum(m, [rng.randint(-size, size) for _ in range(deg)],
                    rng.randint(1, size))


def test_rationalc_window():
    assert RationalC(Fraction(3, 4)).value == Fraction(-1, 4)
    assert RationalC(Fraction(1, 2)).value == Fraction(1, 2)
    assert RationalC(Fraction(-1, 2)).value == Fraction(1, 2)
    assert RationalC.parse("2/6").value == Fraction(1, 3)
    assert str(RationalC.parse("0")) == "0"


def test_smallest_e():
    assert smallest_e(RationalC.parse("1/3")) == 3
    assert smallest_e(RationalC.parse("0")) is math.inf
    assert smallest_e(RationalC.parse("2/5")) == 5
    assert smallest_e(RationalC.parse("1/2")) == 2


def test_specialize_examples():
    c3 = RationalC.parse("1/3")
    assert specialize(ONE + Q + Q * Q, c3).is_zero
    assert specialize(Q, RationalC.parse("1/2")) == CycloNum.from_fraction(Fraction(-1))
    z3 = CycloNum.root_of_unity(3, 1)
    assert specialize(ONE + Q, c3) == -(z3 * z3)


def test_conj_examples():
    i = CycloNum.root_of_unity(4, 1)
    assert i.conj() == -i
    assert CycloNum.from_fraction(Fraction(7, 3)).conj() == CycloNum.from_fraction(Fraction(7, 3))
    z3 = CycloNum.root_of_unity(3, 1)
    assert (CycloNum.one() + z3).conj() == -z3


def test_field_axioms_sampled():
    rng = random.Random(5)
    for m in (1, 2, 3, 4, 5, 6, 8, 12, 24):
        for _ in range(8):
            a, b, c = (random_cyclo(rng, m) for _ in range(3))
            assert a * (b + c) == a * b + a * c
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            if not a.is_zero:
                assert a * a.inverse() == CycloNum.one()
            assert a.conj().conj() == a
            assert (a * b).conj() == a.conj() * b.conj()


def test_specialize_bar_compatibility():
    rng = random.Random(9)
    for m in range(1, 13):
        c = RationalC(Fraction(1, m)) if m > 1 else RationalC(Fraction(0))
        for _ in range(5):
            p = LaurentPoly({rng.randint(-5, 5): rng.randint(-6, 6) for _ in range(4)})
            assert specialize(p.bar(), c) == specialize(p, c).conj()


def test_promotion_consistency():
    z3 = CycloNum.root_of_unity(3, 1)
    z12 = CycloNum.root_of_unity(12, 4)
    assert z3 == z12
    assert z3 + CycloNum.root_of_unity(4, 1) == z12 + CycloNum.root_of_unity(12, 3)


def test_sign_certificates():
    assert sign_of_real(CycloNum.zero(5)).sign == 0
    x = CycloNum.root_of_unity(5, 1) + CycloNum.root_of_unity(5, 4)
    cert = sign_of_real(x)
    assert cert.sign == 1 and cert.precision_used >= 64
    # exact cancellation without escalation: 1 + z3 + z3^2 - (-1) ... = 0
    z3 = CycloNum.root_of_unity(3, 1)
    zero = CycloNum.one() + z3 + z3 * z3 + CycloNum.from_fraction(Fraction(-1)) + CycloNum.one()
    assert sign_of_real(zero).sign == 0 and sign_of_real(zero).precision_used == 0
    with pytest.raises(ValueError):
        sign_of_real(z3)


def test_sign_matches_float():
    rng = random.Random(3)
    for m in (5, 7, 8, 12):
        for _ in range(10):
            x = random_cyclo(rng, m)
            x = x + x.conj()  # force real
            approx = x.to_complex().real
            if abs(approx) > 1e-6:
                assert sign_of_real(x).sign == (1 if approx > 0 else -1)


def test_roots_of_unity_helpers():
    assert root_of_unity_log(CycloNum.root_of_unity(3, 2)) == (6, 4)
    u = CycloNum.root_of_unity(8, 3)
    a = sqrt_root_of_unity(u)
    assert a * a == u
    v = -CycloNum.root_of_unity(5, 2)
    b = sqrt_root_of_unity(v)
    assert b * b == v
    with pytest.raises(ValueError):
        root_of_unity_log(CycloNum.from_fraction(Fraction(2)))


def test_json_roundtrip():
    x = CycloNum(12, [1, -2, 0, 3], 5)
    assert CycloNum.from_json(x.to_json()) == x
