from hypothesis import given
from hypothesis import strategies as st

from bk_lab.utils.bits import bits_to_list, full_mask, iter_bits, list_to_bits, lowest_bit, popcount


def test_examples():
    assert popcount(0b101101) == 4
    assert bits_to_list(0b101101) == [0, 2, 3, 5]
    assert list_to_bits([5, 0, 3, 2, 3]) == 0b101101
    assert lowest_bit(0b101000) == 3
    assert lowest_bit(0) == -1
    assert full_mask(0) == 0
    assert full_mask(4) == 0b1111
    assert list(iter_bits(0)) == []


@given(st.sets(st.integers(0, 600)))
def test_sets_survive_bit_packing(vertices):
    bits = list_to_bits(vertices)
    assert bits_to_list(bits) == sorted(vertices)
    assert popcount(bits) == len(vertices)
    assert lowest_bit(bits) == (min(vertices) if vertices else -1)
