"""Codegree set algebra."""

import pytest

from sporadic_verify.codegrees import (CodegreeSet, codegree_set_simple,
                                       count_dividing, is_subset,
                                       witness_codegree)

# ATLAS M11: |G| = 7920, degrees 1, 10, 10, 10, 11, 16, 16, 44, 45, 55.
M11_ORDER = 7920
M11_DEGREES = (1, 10, 10, 10, 11, 16, 16, 44, 45, 55)
M11_CODEGREES = (1, 144, 176, 180, 495, 720, 792)


def test_codegree_set_m11_oracle():
    cod = codegree_set_simple(M11_ORDER, M11_DEGREES)
    assert tuple(cod) == M11_CODEGREES
    assert len(cod) == 7
    assert 792 in cod and 2 not in cod


def test_codegree_set_collapses_duplicates():
    # three degree-10 characters give a single codegree 792
    cod = codegree_set_simple(M11_ORDER, M11_DEGREES)
    assert sorted(set(cod.values)) == list(cod.values)


def test_codegree_set_requires_trivial_character():
    with pytest.raises(ValueError):
        codegree_set_simple(60, (3, 3, 4, 5))
    with pytest.raises(ValueError):
        codegree_set_simple(60, (1, 7))  # 7 does not divide 60


def test_codegree_set_validation():
    with pytest.raises(ValueError):
        CodegreeSet((1, 3, 2))      # unsorted
    with pytest.raises(ValueError):
        CodegreeSet((2, 3))         # missing 1
    with pytest.raises(ValueError):
        CodegreeSet(())


def test_count_dividing_counts_the_trivial_codegree():
    cod = CodegreeSet((1, 4, 6, 25))
    assert count_dividing(cod, 12) == 3   # 1, 4, 6
    assert count_dividing(cod, 5) == 1    # only 1
    assert count_dividing(cod, 100) == 3  # 1, 4, 25
    with pytest.raises(ValueError):
        count_dividing(cod, 0)


def test_is_subset():
    a = CodegreeSet((1, 4))
    b = CodegreeSet((1, 4, 6))
    assert is_subset(a, b) and not is_subset(b, a)
    assert is_subset(a, a)


def test_witness_codegree():
    # 2.M12 with a faithful degree 10: codegree 2*95040/10
    assert witness_codegree(2 * 95040, 10) == 19008
    with pytest.raises(ValueError):
        witness_codegree(100, 7)
    with pytest.raises(ValueError):
        witness_codegree(100, 0)
