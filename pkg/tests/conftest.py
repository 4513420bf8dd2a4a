import random
from fractions import Fraction

import pytest

from virab.scalars import I, Scalar


def sc(x) -> Scalar:
    """Scalar from anything Fraction accepts: sc(3), sc("1/2"), sc("-2")."""
    f = Fraction(x)
    return Scalar.rational(f.numerator, f.denominator)


def sci(re, im) -> Scalar:
    """Scalar re + im*i from two Fraction-like inputs."""
    return sc(re) + sc(im) * I


@pytest.fixture
def rng():
    return random.Random(20240817)
