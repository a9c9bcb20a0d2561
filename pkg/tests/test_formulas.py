import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shufflebits.formulas import bytes_per_permutation, ceil_log2, shuffle_count, storage_bytes

# Result-set sizes listed for symmetric and 2:5 instances.
RESULT_SET_TABLE = [
    (1, 1, 2),
    (5, 5, 252),
    (10, 10, 184_756),
    (20, 20, 137_846_528_820),
    (40, 40, 107_507_208_733_336_176_461_620),
    (2, 5, 21),
    (4, 10, 1_001),
    (8, 20, 3_108_105),
    (16, 40, 41_648_951_840_265),
    (32, 80, 10_484_776_488_844_408_407_191_115_273),
]


@pytest.mark.parametrize("x, y, expected", RESULT_SET_TABLE)
def test_result_set_table(x, y, expected):
    assert shuffle_count(x, y) == expected
    assert shuffle_count(x, y) == math.comb(x + y, x)


def test_empty_side():
    assert shuffle_count(0, 0) == 1
    assert shuffle_count(0, 17) == 1
    assert shuffle_count(17, 0) == 1
    with pytest.raises(ValueError):
        shuffle_count(-1, 3)


@given(st.integers(0, 100), st.integers(0, 100))
def test_matches_library_binomial(x, y):
    assert shuffle_count(x, y) == math.comb(x + y, y)


@given(st.integers(0, 100), st.integers(0, 100))
def test_symmetry(x, y):
    assert shuffle_count(x, y) == shuffle_count(y, x)


@given(st.integers(1, 99), st.integers(1, 99))
def test_pascal(x, y):
    if x + y > 100:
        x, y = x // 2 + 1, y // 2
    assert shuffle_count(x, y) == shuffle_count(x - 1, y) + shuffle_count(x, y - 1)


@pytest.mark.parametrize("n, expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4), (64, 6), (65, 7)])
def test_ceil_log2_on_integers(n, expected):
    assert ceil_log2(n) == expected
    assert expected == math.ceil(math.log2(n))


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (10, 10, 739_024),
        (1, 1, 2),
        (32, 32, math.comb(64, 32) * 8),
        (32, 32, 14_660_993_127_540_724_272),
        (0, 1, 1),
        (4, 5, 126 * 2),
    ],
)
def test_storage_bytes(x, y, expected):
    assert storage_bytes(x, y) == expected


def test_storage_undefined_for_empty():
    with pytest.raises(ValueError):
        storage_bytes(0, 0)


@given(st.integers(0, 100), st.integers(0, 100))
def test_storage_is_count_times_power_of_two_bytes(x, y):
    if x + y == 0:
        return
    width = storage_bytes(x, y) // shuffle_count(x, y)
    assert storage_bytes(x, y) % shuffle_count(x, y) == 0
    assert width == bytes_per_permutation(x, y)
    assert width & (width - 1) == 0
    assert width == math.ceil(2 ** math.ceil(math.log2(x + y)) / 8)
