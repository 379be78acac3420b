"""Dense permutations of card positions.

A :class:`Perm` of degree ``N`` is stored as its destination map: ``dest[i]``
is the position that the card currently at position ``i`` moves to.

Products are read **left to right**: ``compose(a, b)`` (also written
``a * b``) applies ``a`` first and then ``b``, so
``compose(a, b).dest[i] == b.dest[a.dest[i]]``.  This is the opposite of the
right-to-left convention used by most group theory libraries, and it matches
the way shuffle sequences are written down (``"OIO"`` means out, then in,
then out).
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeMismatchError, InvalidDegreeError

__all__ = [
    "MAX_DEGREE",
    "Perm",
    "identity",
    "compose",
    "inverse",
    "power",
    "cycle_decomposition",
    "element_order",
    "parity",
    "apply_to_deck",
    "from_cycles",
    "transposition",
    "format_cycles",
    "format_one_line",
]

#: Largest deck size any constructor accepts.
MAX_DEGREE = 2**31


def index_dtype(n: int) -> np.dtype:
    """Smallest unsigned dtype able to hold the values ``0..n-1``."""
    if n <= 1 << 8:
        return np.dtype(np.uint8)
    if n <= 1 << 16:
        return np.dtype(np.uint16)
    return np.dtype(np.uint32)


class Perm:
    """Immutable permutation of ``{0, ..., degree - 1}`` in destination form.

    Equality and hashing use the full destination list, so perms can be
    stored in sets and used as dict keys.
    """

    __slots__ = ("_dest", "_key")

    def __init__(self, dest: Sequence[int] | np.ndarray):
        arr = np.asarray(dest)
        if arr.ndim != 1:
            raise InvalidDegreeError("dest must be one-dimensional")
        n = arr.shape[0]
        if n < 1:
            raise InvalidDegreeError("degree must be at least 1")
        if n > MAX_DEGREE:
            raise InvalidDegreeError(f"degree {n} exceeds {MAX_DEGREE}")
        if arr.dtype.kind not in "iu":
            if arr.dtype.kind == "f" and np.all(arr == np.floor(arr)):
                arr = arr.astype(np.int64)
            else:
                raise InvalidDegreeError("dest entries must be integers")
        if arr.min() < 0 or arr.max() >= n:
            raise InvalidDegreeError("dest entries must lie in 0..degree-1")
        if not np.all(np.bincount(arr.astype(np.int64), minlength=n) == 1):
            raise InvalidDegreeError("dest is not a bijection")
        self._set(arr.astype(index_dtype(n)))

    def _set(self, arr: np.ndarray) -> None:
        arr.flags.writeable = False
        self._dest = arr
        self._key = None

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Perm":
        # arr must already be a valid bijection in the compact dtype.
        p = cls.__new__(cls)
        p._set(arr)
        return p

    @property
    def degree(self) -> int:
        return int(self._dest.shape[0])

    @property
    def dest(self) -> np.ndarray:
        """Read-only destination array."""
        return self._dest

    @property
    def key(self) -> bytes:
        """Canonical hashable form (the raw destination list)."""
        if self._key is None:
            self._key = self._dest.tobytes()
        return self._key

    def __call__(self, i: int) -> int:
        return int(self._dest[i])

    def __len__(self) -> int:
        return self.degree

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.degree == other.degree and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, e: int) -> "Perm":
        return power(self, e)

    def __invert__(self) -> "Perm":
        return inverse(self)

    def is_identity(self) -> bool:
        return bool(np.all(self._dest == np.arange(self.degree)))

    def tolist(self) -> list[int]:
        return self._dest.tolist()

    def __repr__(self) -> str:
        if self.degree <= 32:
            return f"Perm({self.tolist()})"
        return f"Perm(degree={self.degree}, cycles={format_cycles(self)[:60]}...)"


def identity(n: int) -> Perm:
    if n < 1 or n > MAX_DEGREE:
        raise InvalidDegreeError(f"invalid degree {n}")
    return Perm._trusted(np.arange(n, dtype=index_dtype(n)))


def _check_same_degree(a: Perm, b: Perm) -> None:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degrees differ: {a.degree} != {b.degree}")


def compose(a: Perm, b: Perm) -> Perm:
    """Apply ``a`` first, then ``b``."""
    _check_same_degree(a, b)
    return Perm._trusted(b.dest[a.dest])


def inverse(a: Perm) -> Perm:
    inv = np.empty_like(a.dest)
    inv[a.dest] = np.arange(a.degree, dtype=a.dest.dtype)
    return Perm._trusted(inv)


def power(a: Perm, e: int) -> Perm:
    """``e``-fold product of ``a`` with itself; negative ``e`` uses the inverse."""
    if e < 0:
        a, e = inverse(a), -e
    result = np.arange(a.degree, dtype=a.dest.dtype)
    base = a.dest
    while e:
        if e & 1:
            result = base[result]
        e >>= 1
        if e:
            base = base[base]
    return Perm._trusted(result)


def cycle_decomposition(a: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``a``, fixed points included.

    Each cycle starts at its smallest element and cycles are sorted by that
    element, so the output is canonical.
    """
    dest = a.dest.tolist()
    seen = [False] * len(dest)
    cycles = []
    for start in range(len(dest)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = dest[start]
        while j != start:
            seen[j] = True
            cycle.append(j)
            j = dest[j]
        cycles.append(tuple(cycle))
    return cycles


def element_order(a: Perm) -> int:
    return math.lcm(*(len(c) for c in cycle_decomposition(a)))


def parity(a: Perm) -> str:
    """``"even"`` or ``"odd"``."""
    return "odd" if (a.degree - len(cycle_decomposition(a))) % 2 else "even"


def apply_to_deck(a: Perm, deck: Sequence) -> list:
    """Rearrange ``deck`` (top card first) by ``a``: ``out[a.dest[i]] = deck[i]``."""
    if len(deck) != a.degree:
        raise DegreeMismatchError(
            f"deck has {len(deck)} cards but permutation has degree {a.degree}")
    out = [None] * a.degree
    for i, d in enumerate(a.dest.tolist()):
        out[d] = deck[i]
    return out


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a degree-``n`` perm from disjoint cycles ``(a b c)`` meaning a->b->c->a."""
    dest = list(range(n))
    touched = set()
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if x in touched:
                raise InvalidDegreeError("cycles are not disjoint")
            touched.add(x)
            dest[x] = cycle[(i + 1) % len(cycle)]
    return Perm(dest)


def transposition(n: int, i: int, j: int) -> Perm:
    return from_cycles(n, [(i, j)])


def format_cycles(a: Perm) -> str:
    """Disjoint-cycle notation in canonical order, fixed points shown."""
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(a))


def format_one_line(a: Perm) -> str:
    """Destination list, e.g. ``[0, 2, 1, 3]``."""
    return "[" + ", ".join(map(str, a.tolist())) + "]"
