#!/usr/bin/env python3
"""
Bit-parallel vertex set helpers. A vertex set is a non-negative int whose bit v is set iff vertex v is a member.
"""

from typing import Iterable, Iterator, List


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def iter_bits(bits: int) -> Iterator[int]:
    """Yields member vertices in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_to_list(bits: int) -> List[int]:
    return list(iter_bits(bits))


def list_to_bits(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def lowest_bit(bits: int) -> int:
    """Index of the lowest member, -1 for the empty set."""
    return (bits & -bits).bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1
