"""Groups generated by permutations.

Two independent engines:

* :func:`bfs_enumerate` lists every element by breadth-first closure.  Exact
  but only practical for small groups.
* :func:`schreier_sims` builds a stabilizer chain (base and strong generating
  set) and reads off the exact order as a Python ``int``.

The chain engine works on raw destination arrays internally; products follow
the package-wide left-to-right convention (``a * b`` applies ``a`` first).
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import DegreeMismatchError, ParameterError
from .perm import Perm, identity

__all__ = [
    "DEFAULT_BFS_CAP",
    "Enumeration",
    "BSGS",
    "bfs_enumerate",
    "schreier_sims",
    "group_order",
    "contains",
]

logger = logging.getLogger(__name__)

DEFAULT_BFS_CAP = 10**6


def _common_degree(generators: Sequence[Perm]) -> int:
    degrees = {g.degree for g in generators}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"generators have mixed degrees {sorted(degrees)}")
    return degrees.pop()


@dataclass
class Enumeration:
    """Result of a breadth-first closure.

    Elements are kept as raw destination bytes (the canonical key) in
    discovery order; :attr:`elements` rebuilds :class:`Perm` views lazily.
    """

    degree: int
    generator_labels: list[tuple[str, Perm]]
    keys: list[bytes]
    complete: bool
    _dtype: np.dtype = field(repr=False, default=np.dtype(np.uint8))
    _index: dict[bytes, int] = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def order(self) -> int:
        return len(self.keys)

    def perm_at(self, idx: int) -> Perm:
        return Perm._trusted(np.frombuffer(self.keys[idx], dtype=self._dtype))

    @property
    def elements(self) -> Iterator[Perm]:
        for i in range(len(self.keys)):
            yield self.perm_at(i)

    def index(self, p: Perm) -> int:
        return self._index[p.key]

    def __contains__(self, p: Perm) -> bool:
        return p.key in self._index


def _labelled(generators) -> list[tuple[str, Perm]]:
    out = []
    for n, g in enumerate(generators):
        if isinstance(g, tuple):
            out.append((str(g[0]), g[1]))
        else:
            out.append((f"g{n}", g))
    return out


def bfs_enumerate(generators, cap: int = DEFAULT_BFS_CAP, degree: int | None = None) -> Enumeration:
    """Breadth-first closure of the identity under right multiplication.

    ``generators`` may be plain perms or ``(label, perm)`` pairs.  If the
    element count would exceed ``cap`` the search stops and the result is
    flagged ``complete=False``.  An empty generator list needs ``degree`` and
    yields the trivial group.
    """
    if cap < 1:
        raise ParameterError("cap must be at least 1")
    labelled = _labelled(generators)
    gens = [g for _, g in labelled]
    if gens:
        n = _common_degree(gens)
        if degree is not None and degree != n:
            raise DegreeMismatchError(f"degree {degree} does not match generators ({n})")
    elif degree is None:
        raise ParameterError("degree is required when there are no generators")
    else:
        n = degree
    e = identity(n).dest
    dtype = e.dtype
    gen_arrays = [g.dest for g in gens]
    keys = [e.tobytes()]
    index = {keys[0]: 0}
    complete = True
    queue = deque([e])
    while queue and complete:
        x = queue.popleft()
        for s in gen_arrays:
            y = s[x]
            k = y.tobytes()
            if k in index:
                continue
            if len(keys) >= cap:
                complete = False
                break
            index[k] = len(keys)
            keys.append(k)
            queue.append(y)
    return Enumeration(n, labelled, keys, complete, dtype, index)


class _Level:
    """One step of the stabilizer chain: generators, orbit and transversal."""

    __slots__ = ("point", "gens", "reps", "inv_reps", "orbit", "checked")

    def __init__(self, point: int, ident: np.ndarray):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.reps: dict[int, np.ndarray] = {point: ident}
        self.inv_reps: dict[int, np.ndarray] = {point: ident}
        self.orbit: list[int] = [point]
        # (orbit point, generator index) pairs whose Schreier generator is known to sift.
        self.checked: set[tuple[int, int]] = set()

    def extend_orbit(self) -> None:
        # Extends the transversal without touching existing representatives.
        gens = self.gens
        frontier = list(self.orbit)
        while frontier:
            new = []
            for p in frontier:
                u = self.reps[p]
                for s in gens:
                    q = int(s[p])
                    if q not in self.reps:
                        r = s[u]
                        inv = np.empty_like(r)
                        inv[r] = np.arange(r.shape[0], dtype=r.dtype)
                        self.reps[q] = r
                        self.inv_reps[q] = inv
                        self.orbit.append(q)
                        new.append(q)
            frontier = new


@dataclass
class BSGS:
    """Base, strong generating set and explicit transversals."""

    degree: int
    base: list[int]
    strong_generators: list[Perm]
    transversals: list[dict[int, Perm]]
    order: int
    _levels: list[_Level] = field(repr=False, default_factory=list)

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]


def _sift(levels: list[_Level], h: np.ndarray, start: int) -> tuple[np.ndarray, int]:
    """Strip ``h`` through ``levels[start:]``.

    Returns the residue and the level at which it dropped out
    (``len(levels)`` if it made it through every level).
    """
    for l in range(start, len(levels)):
        lev = levels[l]
        beta = int(h[lev.point])
        inv = lev.inv_reps.get(beta)
        if inv is None:
            return h, l
        h = inv[h]
    return h, len(levels)


def schreier_sims(generators: Sequence[Perm], degree: int | None = None) -> BSGS:
    """Deterministic Schreier-Sims.

    New base points are the smallest point moved by the element that forced
    the new level.  Transversals only ever grow, so a Schreier generator that
    sifted once is never re-sifted.
    """
    gens = list(generators)
    if gens:
        n = _common_degree(gens)
    elif degree is None:
        raise ParameterError("degree is required when there are no generators")
    else:
        n = degree
    ident = identity(n).dest
    id_key = ident.tobytes()
    levels: list[_Level] = []

    def first_moved(a: np.ndarray) -> int:
        return int(np.flatnonzero(a != ident)[0])

    def add_gen(level_idx: int, a: np.ndarray) -> None:
        lev = levels[level_idx]
        lev.gens.append(a)
        lev.extend_orbit()

    nontrivial = [g.dest for g in gens if g.key != id_key]
    for a in nontrivial:
        if all(int(a[lev.point]) == lev.point for lev in levels):
            levels.append(_Level(first_moved(a), ident))
    for l, lev in enumerate(levels):
        fixed = [levels[t].point for t in range(l)]
        lev.gens = [a for a in nontrivial if all(int(a[b]) == b for b in fixed)]
        lev.extend_orbit()

    i = len(levels) - 1
    while i >= 0:
        lev = levels[i]
        restarted = False
        for p in lev.orbit:
            u = lev.reps[p]
            for gi, s in enumerate(lev.gens):
                if (p, gi) in lev.checked:
                    continue
                lev.checked.add((p, gi))
                q = int(s[p])
                us = s[u]
                v_inv = lev.inv_reps[q]
                h = v_inv[us]
                if h.tobytes() == id_key:
                    continue
                r, j = _sift(levels, h, i + 1)
                if j == len(levels) and r.tobytes() == id_key:
                    continue
                if j == len(levels):
                    levels.append(_Level(first_moved(r), ident))
                for l in range(i + 1, j + 1):
                    add_gen(l, r)
                i = j
                restarted = True
                break
            if restarted:
                break
        if not restarted:
            i -= 1

    order = 1
    for lev in levels:
        order *= len(lev.orbit)
    strong: list[Perm] = []
    seen = set()
    for lev in levels:
        for a in lev.gens:
            k = a.tobytes()
            if k not in seen:
                seen.add(k)
                strong.append(Perm._trusted(a))
    transversals = [{p: Perm._trusted(lev.reps[p]) for p in lev.orbit} for lev in levels]
    logger.debug("schreier_sims degree=%d base=%s orbits=%s", n,
                 [lev.point for lev in levels], [len(lev.orbit) for lev in levels])
    return BSGS(n, [lev.point for lev in levels], strong, transversals, order, levels)


def group_order(b: BSGS) -> int:
    order = 1
    for t in b.transversals:
        order *= len(t)
    return order


def contains(b: BSGS, p: Perm) -> bool:
    """Membership test by sifting ``p`` through the whole chain."""
    if p.degree != b.degree:
        raise DegreeMismatchError(f"degree {p.degree} does not match group degree {b.degree}")
    h, j = _sift(b._levels, p.dest, 0)
    return j == len(b._levels) and bool(np.all(h == np.arange(b.degree)))
