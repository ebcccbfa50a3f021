"""Small helpers for vertex sets stored as Python ints.

Bit ``p`` of a mask stands for position ``p``; bit 0 is never used so that
positions and bit indices coincide.
"""

from typing import Iterable, Iterator, List


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> List[int]:
    return list(iter_bits(mask))


def to_mask(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def first(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def last(mask: int) -> int:
    return mask.bit_length() - 1


def below(p: int) -> int:
    """Positions 1..p-1."""
    return ((1 << p) - 1) & ~1


def above(p: int, n: int) -> int:
    """Positions p+1..n."""
    return ((1 << (n + 1)) - 1) & ~((1 << (p + 1)) - 1)


def interval(lo: int, hi: int) -> int:
    """Positions lo..hi inclusive (empty when lo > hi)."""
    if lo > hi:
        return 0
    return ((1 << (hi + 1)) - 1) & ~((1 << lo) - 1)


def first_k(mask: int, k: int) -> int:
    out = 0
    while mask and k > 0:
        low = mask & -mask
        out |= low
        mask ^= low
        k -= 1
    return out


def last_k(mask: int, k: int) -> int:
    out = 0
    while mask and k > 0:
        top = 1 << (mask.bit_length() - 1)
        out |= top
        mask ^= top
        k -= 1
    return out
