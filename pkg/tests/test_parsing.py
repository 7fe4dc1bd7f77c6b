import random

import pytest
from hypothesis import given, settings, strategies as st

from sepdiff import errors
from sepdiff.diffpoly import DiffRing
from sepdiff.field import make_presentation
from sepdiff.parsing import parse_dpoly, parse_element, parse_element_tuple, parse_field
from sepdiff.sampling import random_dpoly, random_element


def test_parse_field():
    assert parse_field("GF(5)(;t)") == make_presentation(5)
    assert parse_field("GF(3)(c;t)") == make_presentation(3, ["c"])
    assert parse_field("GF(2)(a,b)") == make_presentation(2, ["a", "b"], False)


@pytest.mark.parametrize("text, kind", [
    ("GF(4)(;t)", "NonPrimeCharacteristic"),
    ("GF(3)(c,c;t)", "DuplicateGeneratorName"),
    ("GF(3)[c]", "ParseError"),
])
def test_parse_field_errors(text, kind):
    with pytest.raises(errors.ParseError) as info:
        parse_field(text)
    assert info.value.kind == kind and info.value.exit_code == 2


def test_parse_dpoly(R5):
    x = R5.x
    t = R5.const(R5.field.t)
    assert parse_dpoly("x'^2 - x", R5) == x(1) ** 2 - x(0)
    assert parse_dpoly("d(x,2) + t*x", R5) == x(2) + t * x(0)
    assert parse_dpoly("x''' - d(x,3)", R5).is_zero()
    assert parse_dpoly("(x + t)/(t^2 + 1)", R5) * (t * t + 1) == x(0) + t


@pytest.mark.parametrize("text", ["x' ** 2", "x +", "(x", "x/x", "y", "x^-1", "d(x,)"])
def test_parse_dpoly_errors(R5, text):
    with pytest.raises(errors.ParseError):
        parse_dpoly(text, R5)


def test_parse_error_position(R5):
    with pytest.raises(errors.ParseError) as info:
        parse_dpoly("x' ** 2", R5)
    assert info.value.position is not None


def test_parse_elements(K3c):
    c, t = K3c.gen("c"), K3c.t
    assert parse_element("(t+c)/(c*t)", K3c) == (t + c) / (c * t)
    assert parse_element_tuple("c, (t^2+1)/c, 2", K3c) == (c, (t ** 2 + 1) / c, K3c(2))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from([2, 3, 5]))
def test_element_roundtrip(seed, p):
    K = make_presentation(p, ["c", "d"])
    a = random_element(K, random.Random(seed))
    assert parse_element(str(a), K) == a


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from([2, 3, 5]))
def test_dpoly_roundtrip(seed, p):
    K = make_presentation(p, ["c"])
    R = DiffRing(K, ("x", "y"))
    f = random_dpoly(R, random.Random(seed), max_order=4, fraction_prob=0.3)
    assert parse_dpoly(str(f), R) == f
