from fractions import Fraction

import pytest

from poisson_atlas.errors import ScalarDomainError, ExtensionRequiredError
from poisson_atlas.scalars import (
    Scalar,
    common_domain,
    format_scalar,
    scalar_sqrt,
    squarefree_decompose,
)


def test_rational_arithmetic_reduced():
    a = Scalar(Fraction(2, 4))
    assert a == Scalar(Fraction(1, 2))
    assert a + a == Scalar(1)
    assert a * 4 == Scalar(2)
    assert (a - 1) == Scalar(Fraction(-1, 2))
    assert Scalar(7) / Scalar(2) == Scalar(Fraction(7, 2))


def test_extension_arithmetic():
    i = Scalar(0, 1, -1)
    assert i * i == Scalar(-1)
    assert (1 + i) * (1 - i) == Scalar(2)
    r5 = Scalar(0, 1, 5)
    assert r5 * r5 == Scalar(5)
    assert (Scalar(1, 2, 5)).inverse() * Scalar(1, 2, 5) == Scalar(1)


def test_extension_with_zero_b_collapses_to_rational():
    s = Scalar(3, 0, 7)
    assert s.is_rational and s == Scalar(3)
    # arithmetic that cancels the sqrt part comes back rational
    r = Scalar(1, 1, 5) - Scalar(0, 1, 5)
    assert r == Scalar(1) and r.d == 0


def test_mixing_extensions_rejected():
    with pytest.raises(ScalarDomainError):
        Scalar(0, 1, 2) + Scalar(0, 1, 3)
    with pytest.raises(ScalarDomainError):
        Scalar(0, 1, -1) * Scalar(0, 1, 5)
    # rationals embed into any extension
    assert Scalar(2) + Scalar(0, 1, 5) == Scalar(2, 1, 5)


def test_pow_and_division():
    i = Scalar(0, 1, -1)
    assert i**4 == Scalar(1)
    assert i**-1 == -i
    assert Scalar(Fraction(3, 2)) ** 3 == Scalar(Fraction(27, 8))


def test_squarefree_decompose():
    assert squarefree_decompose(0) == (0, 1)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_decompose(-18) == (3, -2)
    assert squarefree_decompose(3125) == (25, 5)


def test_scalar_sqrt():
    assert scalar_sqrt(Fraction(9, 4)) == Scalar(Fraction(3, 2))
    assert scalar_sqrt(8) == Scalar(0, 2, 2)
    assert scalar_sqrt(-4) == Scalar(0, 2, -1)
    assert scalar_sqrt(Fraction(1, 3)) == Scalar(0, Fraction(1, 3), 3)
    assert scalar_sqrt(0).is_zero
    with pytest.raises(ExtensionRequiredError):
        scalar_sqrt(Scalar(0, 1, 2))


def test_formatting():
    assert format_scalar(Scalar(Fraction(5, 2))) == "5/2"
    assert format_scalar(Scalar(-3)) == "-3"
    assert format_scalar(Scalar(0, 1, -1)) == "sqrt(-1)"
    assert format_scalar(Scalar(0, -2, 5)) == "-2*sqrt(5)"
    assert format_scalar(Scalar(Fraction(1, 2), Fraction(-3, 2), -1)) == "1/2-3/2*sqrt(-1)"


def test_common_domain():
    assert common_domain([Scalar(1), Scalar(2)]) == 0
    assert common_domain([Scalar(1), Scalar(0, 1, 5)]) == 5
    with pytest.raises(ScalarDomainError):
        common_domain([Scalar(0, 1, 5), Scalar(0, 1, -1)])


def test_hash_consistency():
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    s = {Scalar(1), Scalar(1, 0, 5), 1}
    assert len(s) == 1


def test_reflected_operators():
    s = Scalar(Fraction(1, 2))
    assert 1 - s == Scalar(Fraction(1, 2))
    assert 2 / s == Scalar(4)
    assert 3 + s == Scalar(Fraction(7, 2))
    i = Scalar(0, 1, -1)
    assert 1 / i == -i
