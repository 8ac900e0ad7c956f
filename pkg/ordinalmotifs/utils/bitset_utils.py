"""Object and attribute sets as Python ints: bit i set iff index i is a member."""
from functools import reduce
from typing import Iterable, Iterator, List


def from_indices(indices: Iterable[int]) -> int:
    return reduce(lambda memo, i: memo | 1 << int(i), indices, 0)


def to_indices(bits: int) -> List[int]:
    return list(iter_bits(bits))


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def full_mask(size: int) -> int:
    return (1 << size) - 1


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0
