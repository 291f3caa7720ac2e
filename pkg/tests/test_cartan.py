import pytest
from hypothesis import given, strategies as st

from affcrystal.cartan import (KINDS, MIN_RANK, AffineFamily, dominant_weights_of_level,
                               fundamental, level, sigma_apply, sigma_power)
from affcrystal.errors import DimensionError


def test_levels_match_dynkin_labels():
    assert AffineFamily("B1", 3).levels == (1, 1, 2, 1)
    assert AffineFamily("C1", 2).levels == (1, 1, 1)
    assert AffineFamily("A1", 3).levels == (1, 1, 1, 1)
    assert AffineFamily("A2even", 3).levels == (1, 2, 2, 2)
    assert AffineFamily("D2", 3).levels == (1, 2, 2, 1)
    assert AffineFamily("A2odd", 4).levels == (1, 1, 2, 2, 2)
    assert AffineFamily("D1", 5).levels == (1, 1, 2, 2, 1, 1)


def test_level_examples():
    assert level(AffineFamily("B1", 3), fundamental(AffineFamily("B1", 3), 2)) == 2
    assert level(AffineFamily("C1", 2), (1, 0, 1)) == 2
    assert level(AffineFamily("D1", 4), (0,) * 5) == 0


def test_level_dimension_error():
    with pytest.raises(DimensionError):
        level(AffineFamily("B1", 3), (1, 0, 0))


def test_rank_too_small():
    with pytest.raises(ValueError):
        AffineFamily("D1", 3)


def test_sigma_examples():
    a3 = AffineFamily("A1", 3)
    assert sigma_apply(a3, (1, 0, 0, 0), k=2) == (0, 0, 1, 0)
    b3 = AffineFamily("B1", 3)
    assert sigma_apply(b3, (1, 0, 0, 0)) == (0, 1, 0, 0)
    assert sigma_power(b3, (1, 0, 0, 0), 2) == (1, 0, 0, 0)
    assert sigma_apply(AffineFamily("A2even", 2), (1, 0, 0)) == (1, 0, 0)
    assert sigma_apply(AffineFamily("D1", 4), (1, 0, 0, 2, 0)) == (0, 1, 0, 0, 2)


def test_dominant_weights_examples():
    assert dominant_weights_of_level(AffineFamily("A1", 1), 2) == [(0, 2), (1, 1), (2, 0)]
    assert dominant_weights_of_level(AffineFamily("C1", 2), 1) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert dominant_weights_of_level(AffineFamily("B1", 3), 1) == [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0)]
    assert dominant_weights_of_level(AffineFamily("B1", 3), -1) == []


families = st.builds(lambda kind, extra: AffineFamily(kind, MIN_RANK[kind] + extra),
                     st.sampled_from(KINDS), st.integers(0, 2))


@given(families, st.integers(0, 3), st.integers(1, 4))
def test_sigma_is_level_preserving_bijection(fam, l, k):
    k = min(k, fam.n)
    weights = dominant_weights_of_level(fam, l)
    images = [sigma_apply(fam, lam, k) for lam in weights]
    assert sorted(images) == weights


@given(st.integers(1, 5), st.integers(1, 5))
def test_type_a_rotation_order(n, k):
    fam = AffineFamily("A1", n)
    k = min(k, n)
    for lam in dominant_weights_of_level(fam, 2):
        assert sigma_power(fam, lam, n + 1, k) == lam
