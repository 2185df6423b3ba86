"""Deterministic 64-bit linear congruential generator.

Suites draw every random choice from this generator so that failures are
reproducible from the seed alone, across runs and across implementations.
The recurrence is

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2^64

and each draw returns the top 32 bits of the new state.
"""

from __future__ import annotations

from fractions import Fraction

_MUL = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class LCG:
    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK

    def next_u32(self) -> int:
        self.state = (_MUL * self.state + _INC) & _MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u32() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def fraction(self) -> Fraction:
        """Small nonzero rational for measure values and coefficients."""
        num = self.choice([1, 2, 3, -1, -2, 5])
        den = self.choice([1, 2, 3])
        return Fraction(num, den)
