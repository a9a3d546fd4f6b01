from fractions import Fraction

import pytest

from paracat.rings import (
    Golden,
    PHI,
    field_div,
    format_scalar,
    is_positive_integer,
    parse_scalar,
    scalar_sign,
    to_field,
)


def test_phi_defining_relation():
    assert PHI * PHI == PHI + 1
    assert PHI * PHI * PHI == 2 * PHI + 1


def test_mixed_arithmetic_and_hash():
    assert Golden(3, 0) == 3
    assert hash(Golden(3, 0)) == hash(3)
    assert 1 + PHI == Golden(1, 1)
    assert 2 * PHI - PHI == PHI
    assert (1 - PHI) * PHI == -1  # phi * (1 - phi) = -1
    assert {Golden(2, 0), 2} == {2}


def test_sign_case_analysis():
    assert PHI.sign() == 1
    assert (-PHI).sign() == -1
    assert Golden(0, 0).sign() == 0
    # mixed-sign components need the quadratic comparison
    assert Golden(5, -3).sign() == 1      # 5 - 3*phi ~ 0.146
    assert Golden(3, -2).sign() == -1     # 3 - 2*phi ~ -0.236
    assert Golden(-3, 2).sign() == 1
    assert Golden(-5, 3).sign() == -1
    assert Golden(Fraction(5), Fraction(-3)).sign() == 1


def test_comparisons():
    assert PHI > 1
    assert PHI < 2
    assert Golden(1, 1) >= PHI
    assert sorted([PHI, Golden(0, 0), Golden(2, -1)]) == \
        [Golden(0, 0), Golden(2, -1), PHI]


def test_conj_and_norm():
    x = Golden(2, 3)
    assert x.conj() == Golden(5, -3)
    assert x * x.conj() == x.norm() == 4 + 6 - 9


def test_field_div():
    q = field_div(1, PHI)
    assert q * PHI == Golden(Fraction(1), Fraction(0))
    assert field_div(Golden(2, 2), 2) == Golden(1, 1)
    with pytest.raises(ZeroDivisionError):
        field_div(1, Golden(0, 0))


def test_is_positive_integer():
    assert is_positive_integer(to_field(3))
    assert not is_positive_integer(to_field(-3))
    assert not is_positive_integer(to_field(PHI))
    assert not is_positive_integer(Golden(Fraction(1, 2), Fraction(0)))


def test_parse_and_format_round_trip():
    for text, value in [("2", 2), ("-3", -3), ("1p", PHI), ("-1p", -PHI),
                        ("1+1p", Golden(1, 1)), ("3-2p", Golden(3, -2)),
                        ("-2+1p", Golden(-2, 1))]:
        assert parse_scalar(text) == value
    for value in [Golden(0, 1), Golden(1, -1), Golden(-2, 3), 5, -7, Golden(4, 0)]:
        assert parse_scalar(format_scalar(value)) == value


def test_scalar_sign_on_ints():
    assert scalar_sign(4) == 1
    assert scalar_sign(0) == 0
    assert scalar_sign(-2) == -1
