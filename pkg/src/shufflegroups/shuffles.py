"""Generalized perfect shuffles.

A deck of ``m*n`` cards is cut into ``m`` stacks of ``n`` and the stacks are
interlaced one card at a time.  Picking up the stacks left to right gives the
out m-shuffle (top card stays on top); right to left gives the in m-shuffle
(top card ends up at position ``m - 1``).

On a deck of ``m**k`` cards a position is a ``k``-digit base-``m`` number and
both shuffles act on those digits by rotation (plus a digit flip
``x -> (m-1) - x`` for the in shuffle).  This module builds the shuffles from
their modular formulas, from a literal stack layout, and from the digit model,
so each construction can be checked against the others.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

import numpy as np

from .errors import ParameterError, ResourceLimitError
from .perm import MAX_DEGREE, Perm, compose, index_dtype, power

__all__ = [
    "ShuffleKind",
    "DeckParams",
    "PowerDeckParams",
    "DigitVector",
    "out_shuffle",
    "in_shuffle",
    "shuffle",
    "stack_interleave_oracle",
    "index_to_digits",
    "digits_to_index",
    "digit_action",
    "digit_permutation",
    "flip_digits",
    "power_shuffle",
    "power_shuffle_formula",
    "b_generator",
    "c_generator",
    "integer_log",
]


class ShuffleKind(enum.Enum):
    OUT = "O"
    IN = "I"

    @classmethod
    def parse(cls, s: str) -> "ShuffleKind":
        try:
            return cls(s.upper())
        except ValueError:
            raise ParameterError(f"unknown shuffle kind {s!r}") from None


@dataclass(frozen=True)
class DeckParams:
    """``m`` stacks of ``n`` cards."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2:
            raise ParameterError(f"need at least 2 stacks, got m={self.m}")
        if self.n < 1:
            raise ParameterError(f"need at least 1 card per stack, got n={self.n}")
        if self.m * self.n > MAX_DEGREE:
            raise ResourceLimitError(f"deck of {self.m * self.n} cards exceeds {MAX_DEGREE}")

    @property
    def size(self) -> int:
        return self.m * self.n

    @classmethod
    def for_deck(cls, deck: int, m: int) -> "DeckParams":
        if m < 2:
            raise ParameterError(f"need at least 2 stacks, got m={m}")
        if deck % m:
            raise ParameterError(f"m={m} does not divide deck size {deck}")
        return cls(m, deck // m)


@dataclass(frozen=True)
class PowerDeckParams:
    """Deck of ``m**k`` cards shuffled with ``m**y`` stacks."""

    m: int
    k: int
    y: int

    def __post_init__(self):
        if self.m < 2:
            raise ParameterError(f"m must be >= 2, got {self.m}")
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")
        if not 1 <= self.y < self.k:
            raise ParameterError(f"y must satisfy 1 <= y < k, got y={self.y}, k={self.k}")
        if self.m ** self.k > MAX_DEGREE:
            raise ResourceLimitError(f"deck of {self.m}**{self.k} cards exceeds {MAX_DEGREE}")

    @property
    def size(self) -> int:
        return self.m ** self.k

    @property
    def c(self) -> int:
        return math.gcd(self.y, self.k)

    def reduced(self) -> "PowerDeckParams":
        """The same deck viewed in base ``m**c``: parameters ``(m**c, k/c, y/c)``."""
        c = self.c
        return PowerDeckParams(self.m ** c, self.k // c, self.y // c)


class DigitVector(NamedTuple):
    """Base-``base`` digits of a position, most significant first."""

    digits: tuple[int, ...]
    base: int

    @property
    def k(self) -> int:
        return len(self.digits)


def out_shuffle(m: int, n: int) -> Perm:
    """Out m-shuffle on ``m*n`` cards: ``i -> m*i mod (mn-1)``, last card fixed."""
    p = DeckParams(m, n)
    size = p.size
    i = np.arange(size, dtype=np.int64)
    if size == 1:
        dest = i
    else:
        dest = (m * i) % (size - 1)
        dest[-1] = size - 1
    return Perm._trusted(dest.astype(index_dtype(size)))


def in_shuffle(m: int, n: int) -> Perm:
    """In m-shuffle on ``m*n`` cards: ``i -> m*i + (m-1) mod (mn+1)``."""
    p = DeckParams(m, n)
    size = p.size
    i = np.arange(size, dtype=np.int64)
    dest = (m * i + (m - 1)) % (size + 1)
    return Perm._trusted(dest.astype(index_dtype(size)))


def shuffle(kind: ShuffleKind, m: int, n: int) -> Perm:
    return out_shuffle(m, n) if kind is ShuffleKind.OUT else in_shuffle(m, n)


def stack_interleave_oracle(m: int, n: int, kind: ShuffleKind) -> Perm:
    """Build the shuffle by literally laying out ``m`` stacks and picking them up.

    Row ``j`` / column ``q`` (both 1-based) holds the card originally at
    ``(q-1)*n + (j-1)``.  Out pickup reads each row left to right, in pickup
    reads it right to left.  No modular arithmetic is involved.
    """
    DeckParams(m, n)
    dest = [0] * (m * n)
    for j in range(1, n + 1):
        for q in range(1, m + 1):
            original = (q - 1) * n + (j - 1)
            if kind is ShuffleKind.OUT:
                picked_before = (q - 1) + (j - 1) * m
            else:
                picked_before = (m - q) + (j - 1) * m
            dest[original] = picked_before
    return Perm(dest)


def integer_log(size: int, m: int) -> int:
    """``k`` with ``m**k == size``; raises if ``size`` is not a power of ``m``."""
    k, x = 0, 1
    while x < size:
        x *= m
        k += 1
    if x != size:
        raise ParameterError(f"deck size {size} is not a power of {m}")
    return k


def index_to_digits(i: int, m: int, k: int) -> DigitVector:
    if m < 2 or k < 1:
        raise ParameterError(f"invalid base/length m={m}, k={k}")
    if not 0 <= i < m ** k:
        raise ParameterError(f"index {i} out of range for {m}**{k} cards")
    digits = [0] * k
    for pos in range(k - 1, -1, -1):
        i, digits[pos] = divmod(i, m)
    return DigitVector(tuple(digits), m)


def digits_to_index(d: DigitVector) -> int:
    i = 0
    for x in d.digits:
        if not 0 <= x < d.base:
            raise ParameterError(f"digit {x} out of range for base {d.base}")
        i = i * d.base + x
    return i


def digit_action(kind: ShuffleKind, y: int, d: DigitVector) -> DigitVector:
    """Where an ``m**y``-shuffle sends the card with digits ``d``.

    Out: rotate the digits left by ``y``.  In: rotate left by ``y`` and flip
    the ``y`` digits that wrapped around to the end.
    """
    k, m = d.k, d.base
    if not 1 <= y <= k:
        raise ParameterError(f"y must satisfy 1 <= y <= k, got y={y}, k={k}")
    head, tail = d.digits[:y], d.digits[y:]
    if kind is ShuffleKind.IN:
        head = tuple((m - 1) - x for x in head)
    return DigitVector(tail + head, m)


def digit_permutation(m: int, k: int, fn: Callable[[DigitVector], DigitVector]) -> Perm:
    """Permutation of ``m**k`` cards induced by a map on digit vectors."""
    size = m ** k
    if size > MAX_DEGREE:
        raise ResourceLimitError(f"deck of {m}**{k} cards exceeds {MAX_DEGREE}")
    return Perm([digits_to_index(fn(index_to_digits(i, m, k))) for i in range(size)])


def flip_digits(m: int, k: int, positions: Iterable[int]) -> Perm:
    """Flip (``x -> (m-1) - x``) the given 1-based digit positions of every card."""
    pos = sorted(set(positions))
    if any(not 1 <= j <= k for j in pos):
        raise ParameterError(f"digit positions must lie in 1..{k}")
    # Flipping digit j subtracts x*w and adds (m-1-x)*w, with w = m**(k-j).
    size = m ** k
    i = np.arange(size, dtype=np.int64)
    dest = i.copy()
    for j in pos:
        w = m ** (k - j)
        x = (i // w) % m
        dest += ((m - 1) - 2 * x) * w
    return Perm(dest.astype(index_dtype(size)))


def _base_shuffle(kind: ShuffleKind, m: int, k: int) -> Perm:
    return shuffle(kind, m, m ** (k - 1))


def power_shuffle(m: int, k: int, y: int, kind: ShuffleKind) -> Perm:
    """The ``m**y``-stack shuffle on ``m**k`` cards, as ``y`` repeated m-shuffles."""
    PowerDeckParams(m, k, y)
    return power(_base_shuffle(kind, m, k), y)


def power_shuffle_formula(m: int, k: int, y: int, kind: ShuffleKind) -> Perm:
    """Same shuffle built directly from the modular formula with ``m**y`` stacks."""
    PowerDeckParams(m, k, y)
    return shuffle(kind, m ** y, m ** (k - y))


def _check_j(j: int, k: int) -> None:
    if not 1 <= j <= k:
        raise ParameterError(f"generator index j must lie in 1..{k}, got {j}")


def b_generator(j: int, m: int, k: int) -> Perm:
    """``O^(j-1) * I * O^(-j)`` on ``m**k`` cards; flips digit ``j`` only."""
    _check_j(j, k)
    o = _base_shuffle(ShuffleKind.OUT, m, k)
    i = _base_shuffle(ShuffleKind.IN, m, k)
    return compose(compose(power(o, j - 1), i), power(o, -j))


def c_generator(j: int, m: int, k: int) -> Perm:
    """``O^(j-1) * I_{m^2} * O^(-(j+1))`` on ``m**k`` cards.

    Flips digits ``j`` and ``j+1``; for ``j == k`` it flips digits 1 and ``k``.
    Needs ``k >= 2``.
    """
    if k < 2:
        raise ParameterError("c generators need k >= 2")
    _check_j(j, k)
    o = _base_shuffle(ShuffleKind.OUT, m, k)
    i2 = power(_base_shuffle(ShuffleKind.IN, m, k), 2)
    return compose(compose(power(o, j - 1), i2), power(o, -(j + 1)))
