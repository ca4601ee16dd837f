from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hktwist.series import ChernMonomial, GradedSeries, UNIT


def c(factors):
    return ChernMonomial(factors)


def test_monomial_validation():
    with pytest.raises(ValueError):
        ChernMonomial({3: 1})
    with pytest.raises(ValueError):
        ChernMonomial({0: 1})
    with pytest.raises(ValueError):
        ChernMonomial({2: -1})


def test_monomial_weight_and_mul():
    m = c({2: 2, 4: 1})
    assert m.weight == 8
    assert c({2: 1}) * c({2: 1, 4: 1}) == c({2: 2, 4: 1})
    assert UNIT.weight == 0 and UNIT.is_unit


def test_series_truncation_drops_heavy_terms():
    s = GradedSeries(2, {c({2: 2}): Fraction(5), c({2: 1}): Fraction(1)})
    assert s.coeff(c({2: 2})) == 0
    assert s.coeff(c({2: 1})) == 1


def test_mixed_truncation_rejected():
    a = GradedSeries.one(4)
    b = GradedSeries.one(6)
    with pytest.raises(ValueError):
        a * b


def test_inverse_total_chern():
    total = GradedSeries.one(4) + GradedSeries.symbol(2, 4) + GradedSeries.symbol(4, 4)
    inv = total.inverse()
    assert inv.coeff(UNIT) == 1
    assert inv.coeff(c({2: 1})) == -1
    assert inv.coeff(c({2: 2})) == 1
    assert inv.coeff(c({4: 1})) == -1
    assert (inv * total) == GradedSeries.one(4)


def test_inverse_weight6():
    total = (
        GradedSeries.one(6)
        + GradedSeries.symbol(2, 6)
        + GradedSeries.symbol(4, 6)
        + GradedSeries.symbol(6, 6)
    )
    inv = total.inverse()
    assert inv.coeff(c({2: 3})) == -1
    assert inv.coeff(c({2: 1, 4: 1})) == 2
    assert inv.coeff(c({6: 1})) == -1


def test_inverse_requires_unit_constant():
    with pytest.raises(ValueError):
        GradedSeries.symbol(2, 4).inverse()


def test_sqrt_squares_back():
    s = GradedSeries.one(6) + GradedSeries.symbol(2, 6) * Fraction(1, 12)
    root = s.sqrt()
    assert root * root == s
    assert root.coeff(c({2: 1})) == Fraction(1, 24)


def test_component_extraction():
    s = GradedSeries(4, {UNIT: 1, c({2: 1}): 2, c({2: 2}): 3, c({4: 1}): 4})
    comp = s.component(4)
    assert comp == {c({2: 2}): 3, c({4: 1}): 4}
    assert s.constant == 1


def test_json_roundtrip():
    s = GradedSeries(4, {UNIT: Fraction(1), c({2: 2}): Fraction(-7, 3)})
    assert GradedSeries.from_json(s.to_json()) == s


_series_strategy = st.integers(min_value=0, max_value=8).flatmap(
    lambda trunc: st.dictionaries(
        st.builds(
            lambda factors: ChernMonomial(factors),
            st.dictionaries(
                st.sampled_from([2, 4, 6]).filter(lambda i: i <= max(trunc, 2)),
                st.integers(min_value=1, max_value=3),
                max_size=2,
            ),
        ),
        st.fractions(min_value=-8, max_value=8, max_denominator=6),
        max_size=4,
    ).map(lambda terms: GradedSeries(trunc, {**terms, UNIT: Fraction(1)}))
)


@settings(max_examples=120, deadline=None, derandomize=True)
@given(_series_strategy)
def test_inverse_roundtrip_property(series):
    """series * series.inverse() == 1 for unit-constant series, trunc <= 8."""
    inv = series.inverse()
    assert series * inv == GradedSeries.one(series.truncation)
    assert inv.inverse() == series


@settings(max_examples=120, deadline=None, derandomize=True)
@given(_series_strategy)
def test_sqrt_roundtrip_property(series):
    """series.sqrt() ** 2 == series for unit-constant series, trunc <= 8."""
    root = series.sqrt()
    assert root * root == series
