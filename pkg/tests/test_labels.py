import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from rvsim import (
    assign_weighted_code,
    fast_phase_bits,
    minimal_code_length,
    prefix_free_code,
    unrank_weighted_code,
)


def all_weighted_codes(length, weight):
    """Enumeration oracle: every weight-w characteristic string, sorted."""
    codes = []
    for subset in combinations(range(length), weight):
        bits = ["0"] * length
        for i in subset:
            bits[i] = "1"
        codes.append("".join(bits))
    return sorted(codes)


@pytest.mark.parametrize(
    "label,expected",
    [(1, "1101"), (5, "11001101"), (2, "110001")],
)
def test_prefix_free_code_values(label, expected):
    assert prefix_free_code(label) == expected


def test_code_of_2_not_prefix_of_code_of_5():
    assert not prefix_free_code(5).startswith(prefix_free_code(2))


def test_prefix_freeness_small():
    codes = {x: prefix_free_code(x) for x in range(1, 17)}
    for x in codes:
        for y in codes:
            if x != y:
                assert not codes[y].startswith(codes[x])


def test_prefix_free_code_rejects_zero():
    with pytest.raises(ValueError):
        prefix_free_code(0)


def test_fast_phase_bits_label_1():
    assert fast_phase_bits(1) == "111110011"


def test_fast_phase_bits_length():
    # code length m = 2*(1 + floor(log2 label)) + 2; phase bits are 2m+1 long
    assert len(fast_phase_bits(5)) == 17


@pytest.mark.parametrize("label", range(1, 33))
def test_fast_phase_bits_start_with_one(label):
    bits = fast_phase_bits(label)
    assert bits[0] == "1"
    assert len(bits) % 2 == 1


def test_minimal_code_length_examples():
    assert minimal_code_length(8, 2) == 5  # C(4,2)=6 < 8 <= C(5,2)=10
    assert minimal_code_length(2, 1) == 2


@pytest.mark.parametrize("weight", [1, 2, 3])
@pytest.mark.parametrize("space", [4, 8, 16, 32, 64])
def test_minimal_code_length_constant_weight_bound(space, weight):
    # t' = w * space**(1/w) satisfies C(t', w) >= (t'/w)**w = space
    t = minimal_code_length(space, weight)
    t_prime = math.ceil(weight * space ** (1 / weight))
    assert math.comb(t_prime, weight) >= space
    assert t <= t_prime


def test_unrank_first_and_last():
    assert unrank_weighted_code(1, 5, 2) == "00011"
    assert unrank_weighted_code(10, 5, 2) == "11000"


def test_unrank_injective_small():
    codes = [unrank_weighted_code(r, 5, 2) for r in range(1, 11)]
    assert len(set(codes)) == 10


def test_unrank_out_of_range():
    with pytest.raises(ValueError):
        unrank_weighted_code(11, 5, 2)
    with pytest.raises(ValueError):
        unrank_weighted_code(0, 5, 2)


@pytest.mark.parametrize("length", range(1, 13))
def test_unrank_matches_enumeration_oracle(length):
    for weight in range(1, length + 1):
        oracle = all_weighted_codes(length, weight)
        for rank, expected in enumerate(oracle, start=1):
            assert unrank_weighted_code(rank, length, weight) == expected


@given(
    length=st.integers(min_value=2, max_value=20),
    weight=st.integers(min_value=1, max_value=20),
    data=st.data(),
)
def test_unrank_is_lexicographically_monotone(length, weight, data):
    weight = min(weight, length)
    total = math.comb(length, weight)
    if total < 2:
        return
    rank = data.draw(st.integers(min_value=1, max_value=total - 1))
    a = unrank_weighted_code(rank, length, weight)
    b = unrank_weighted_code(rank + 1, length, weight)
    assert a < b
    assert a.count("1") == b.count("1") == weight


def test_relabel_distinct_and_weighted():
    codes = [assign_weighted_code(x, 8, 2) for x in range(1, 9)]
    assert len(set(codes)) == 8
    assert all(c.count("1") == 2 and len(c) == 5 for c in codes)


def test_relabel_first_label():
    assert assign_weighted_code(1, 8, 2) == "00011"


def test_relabel_rejects_label_outside_space():
    with pytest.raises(ValueError):
        assign_weighted_code(9, 8, 2)
