from fractions import Fraction as F

import pytest

from indevents import NoTailInfo, NotConvergent, SeriesFamily
from indevents.errors import DomainError


def brute_tail(fam, n, upto=20000):
    return sum(float(fam.term(k)) for k in range(n + 1, upto))


def test_geometric_terms_and_exact_tail():
    fam = SeriesFamily.geometric(F(1, 2), F(1, 2))
    assert fam.terms(3) == [F(1, 2), F(1, 4), F(1, 8)]
    assert fam.tail_sum(3) == F(1, 8)
    assert fam.tail_sum(0) == 1


@pytest.mark.parametrize("n", [1, 5, 40])
def test_power_tail_is_upper_bound(n):
    fam = SeriesFamily.power(F(1), 2)
    assert fam.tail_sum(n) >= brute_tail(fam, n)


def test_power_float_exponent():
    fam = SeriesFamily.power(0.5, 1.5)
    assert not fam.exact
    assert fam.tail_sum(10) >= brute_tail(fam, 10, 200000)


def test_divergent_kinds():
    for fam in (SeriesFamily.shifted_harmonic(), SeriesFamily.constant(F(1, 10)),
                SeriesFamily.power(F(1, 2), 1), SeriesFamily.geometric(F(1, 3), 1)):
        assert fam.diverges
        with pytest.raises(NotConvergent):
            fam.tail_sum(5)


def test_explicit_family():
    fam = SeriesFamily.explicit([F(1, 2), F(1, 3)])
    assert fam.term(3) == 0
    assert fam.tail_sum(0) == F(5, 6)
    assert fam.tail_sum(1) == F(1, 3)
    assert fam.tail_sum(7) == 0
    assert fam.truncation_index(0) == 2


def test_truncation_index_is_first():
    fam = SeriesFamily.geometric(F(1, 2), F(1, 2))
    n = fam.truncation_index(F(1, 1000))
    assert fam.tail_sum(n) <= F(1, 1000) < fam.tail_sum(n - 1)


def test_custom_without_tail():
    fam = SeriesFamily.custom(lambda n: F(1, n * n + 1))
    with pytest.raises(NoTailInfo):
        fam.tail_sum(1)


@pytest.mark.parametrize(
    "text, kind",
    [("geometric:1/2,1/2", "geometric"), ("harmonic", "shifted-harmonic"),
     ("constant:0", "constant"), ("power:1,2", "power"), ("explicit:1/2,1/3", "explicit")],
)
def test_parse(text, kind):
    assert SeriesFamily.parse(text).kind == kind


@pytest.mark.parametrize("text", ["nope", "geometric:1/2", "harmonic:1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        SeriesFamily.parse(text)


def test_terms_in_unit_interval():
    with pytest.raises(DomainError):
        SeriesFamily.geometric(F(1, 2), F(3, 2))
    with pytest.raises(DomainError):
        SeriesFamily.constant(2)
