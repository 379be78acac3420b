"""Structure of in/out shuffle groups on decks of ``m**k`` cards.

With ``c = gcd(y, k)`` and ``t = k / c`` the group generated by the in and out
``m**y``-shuffles is an elementary abelian 2-group extended by a cyclic group
of order ``t``:

* ``y / c`` odd: ``(Z_2)^t`` with ``Z_t`` acting by cyclically shifting
  coordinates, order ``2**t * t``;
* ``y / c`` even: ``(Z_2)^(t-1)`` with the twisted action of
  :func:`twisted_action`, order ``2**(t-1) * t``.

:func:`verify` checks a prediction by building the digit-flip generators of
the normal subgroup and testing every relation that pins the semidirect
product down, next to an independently computed group order.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from functools import reduce
from itertools import combinations

import numpy as np

from .errors import ParameterError, ResourceLimitError
from .group import bfs_enumerate, contains, schreier_sims
from .perm import Perm, compose, element_order, identity, inverse, power
from .shuffles import (
    PowerDeckParams,
    ShuffleKind,
    b_generator,
    c_generator,
    flip_digits,
    out_shuffle,
    power_shuffle,
)

__all__ = [
    "SCHEMA_VERSION",
    "VERIFY_MAX_DEGREE",
    "StructurePrediction",
    "GeneratorCheck",
    "VerificationReport",
    "predict",
    "verify",
    "twisted_action",
    "cyclic_shift_action",
    "central_symmetry",
    "symmetry_bound",
]

SCHEMA_VERSION = 1

#: verify() refuses decks larger than this.
VERIFY_MAX_DEGREE = 1 << 16

CYCLIC_SHIFT = "cyclic-shift"
TWISTED = "twisted"


@dataclass(frozen=True)
class StructurePrediction:
    params: PowerDeckParams
    t: int
    abelian_rank: int
    action: str
    predicted_order: int

    @property
    def c(self) -> int:
        return self.params.c

    def describe(self) -> str:
        return f"(Z_2)^{self.abelian_rank} x| Z_{self.t} ({self.action} action)"

    def to_dict(self) -> dict:
        p = self.params
        return {
            "schema_version": SCHEMA_VERSION,
            "params": {"m": p.m, "k": p.k, "y": p.y, "c": p.c},
            "t": self.t,
            "abelian_rank": self.abelian_rank,
            "action": self.action,
            "predicted_order": str(self.predicted_order),
            "structure": self.describe(),
        }


def _params(m, k=None, y=None) -> PowerDeckParams:
    if isinstance(m, PowerDeckParams):
        return m
    return PowerDeckParams(m, k, y)


def predict(m, k: int | None = None, y: int | None = None) -> StructurePrediction:
    """Predicted group for the ``m**y``-shuffles on ``m**k`` cards.

    Accepts either ``(m, k, y)`` or a :class:`PowerDeckParams`.
    """
    p = _params(m, k, y)
    c = p.c
    t = p.k // c
    if (p.y // c) % 2:
        rank, action = t, CYCLIC_SHIFT
    else:
        rank, action = t - 1, TWISTED
    return StructurePrediction(p, t, rank, action, 2**rank * t)


def cyclic_shift_action(a: tuple[int, ...]) -> tuple[int, ...]:
    """``(a_1, ..., a_t) -> (a_t, a_1, ..., a_{t-1})`` over Z_2."""
    return (a[-1],) + tuple(a[:-1])


def twisted_action(a: tuple[int, ...]) -> tuple[int, ...]:
    """``(a_1, ..., a_r) -> (a_r, a_1 + a_r, ..., a_{r-1} + a_r)`` over Z_2."""
    last = a[-1]
    return (last,) + tuple((x + last) % 2 for x in a[:-1])


@dataclass(frozen=True)
class GeneratorCheck:
    label: str
    involution: bool
    digit_action_matches: bool


@dataclass
class VerificationReport:
    params: PowerDeckParams
    predicted_order: int
    computed_order: int
    order_matches: bool
    generator_checks: list[GeneratorCheck]
    commutation_ok: bool
    conjugation_ok: bool
    product_relation_ok: bool | None  # None in the cyclic-shift case
    complement_ok: bool
    verdict: bool = field(init=False)

    def __post_init__(self):
        self.verdict = (
            self.order_matches
            and all(g.involution and g.digit_action_matches for g in self.generator_checks)
            and self.commutation_ok
            and self.conjugation_ok
            and self.product_relation_ok is not False
            and self.complement_ok
        )

    def to_dict(self) -> dict:
        p = self.params
        return {
            "schema_version": SCHEMA_VERSION,
            "params": {"m": p.m, "k": p.k, "y": p.y, "c": p.c},
            "predicted_order": str(self.predicted_order),
            "computed_order": str(self.computed_order),
            "order_matches": self.order_matches,
            "generator_checks": [asdict(g) for g in self.generator_checks],
            "commutation_ok": self.commutation_ok,
            "conjugation_ok": self.conjugation_ok,
            "product_relation_ok": self.product_relation_ok,
            "complement_ok": self.complement_ok,
            "verdict": self.verdict,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        p = d["params"]
        report = cls(
            params=PowerDeckParams(p["m"], p["k"], p["y"]),
            predicted_order=int(d["predicted_order"]),
            computed_order=int(d["computed_order"]),
            order_matches=d["order_matches"],
            generator_checks=[GeneratorCheck(**g) for g in d["generator_checks"]],
            commutation_ok=d["commutation_ok"],
            conjugation_ok=d["conjugation_ok"],
            product_relation_ok=d["product_relation_ok"],
            complement_ok=d["complement_ok"],
        )
        if report.verdict != d["verdict"]:
            raise ValueError("verdict is inconsistent with the component checks")
        return report

    @classmethod
    def from_json(cls, s: str) -> "VerificationReport":
        return cls.from_dict(json.loads(s))


def _product(perms: list[Perm], degree: int) -> Perm:
    return reduce(compose, perms, identity(degree))


def _flip_sets(kind: str, K: int) -> list[set[int]]:
    if kind == CYCLIC_SHIFT:
        return [{j} for j in range(1, K + 1)]
    return [{j, j + 1} for j in range(1, K)] + [{1, K}]


def verify(m, k: int | None = None, y: int | None = None, *,
           max_degree: int = VERIFY_MAX_DEGREE) -> VerificationReport:
    """Check the predicted structure of ``<I_{m^y}, O_{m^y}>`` on ``m**k`` cards.

    The flip generators are built for the equivalent problem in base
    ``m**c`` (``k/c`` digits, shuffle exponent ``y/c``).  ``complement_ok``
    requires that the flip subgroup has the expected size, that it and the
    base out shuffle lie in the shuffle group, and that
    ``|flip subgroup| * |<O_{m^y}>|`` equals the computed order, which forces a
    trivial intersection.
    """
    p = _params(m, k, y)
    if p.size > max_degree:
        raise ResourceLimitError(f"deck of {p.size} cards exceeds verify limit {max_degree}")
    pred = predict(p)
    n = p.size

    in_y = power_shuffle(p.m, p.k, p.y, ShuffleKind.IN)
    out_y = power_shuffle(p.m, p.k, p.y, ShuffleKind.OUT)
    chain = schreier_sims([in_y, out_y])
    computed = chain.order

    r = p.reduced()
    M, K = r.m, r.k
    twisted = pred.action == TWISTED
    make = c_generator if twisted else b_generator
    letter = "C" if twisted else "B"
    gens = [make(j, M, K) for j in range(1, K + 1)]
    labels = [f"{letter}{j}" for j in range(1, K + 1)]
    expected = [flip_digits(M, K, s) for s in _flip_sets(pred.action, K)]
    ident = identity(n)

    checks = [
        GeneratorCheck(label, power(g, 2) == ident and g != ident, g == e)
        for label, g, e in zip(labels, gens, expected)
    ]
    commutation_ok = all(compose(a, b) == compose(b, a) for a, b in combinations(gens, 2))

    o = out_shuffle(M, M ** (K - 1))
    o_inv = inverse(o)

    def conj(g: Perm) -> Perm:
        return compose(compose(o, g), o_inv)

    if not twisted:
        conjugation_ok = all(conj(gens[j]) == gens[(j + 1) % K] for j in range(K))
        product_relation_ok = None
        complement = gens
    else:
        complement = gens[:K - 1]
        table_ok = all(conj(gens[j]) == gens[j + 1] for j in range(K - 2))
        table_ok = table_ok and conj(gens[K - 2]) == _product(complement, n)
        # Cross-check against the abstract action: C_j <-> j-th basis vector.
        phi_ok = True
        for j in range(K - 1):
            e = tuple(int(i == j) for i in range(K - 1))
            image = twisted_action(e)
            as_perm = _product([c for c, a in zip(complement, image) if a], n)
            phi_ok = phi_ok and conj(complement[j]) == as_perm
        conjugation_ok = table_ok and phi_ok
        product_relation_ok = _product(gens, n) == ident

    sub = bfs_enumerate(complement, cap=2 ** len(complement) + 1)
    complement_ok = (
        sub.complete
        and sub.order == 2 ** pred.abelian_rank
        and sub.order * element_order(out_y) == computed
        and all(contains(chain, g) for g in gens)
        and contains(chain, o)
    )

    return VerificationReport(
        params=p,
        predicted_order=pred.predicted_order,
        computed_order=computed,
        order_matches=computed == pred.predicted_order,
        generator_checks=checks,
        commutation_ok=commutation_ok,
        conjugation_ok=conjugation_ok,
        product_relation_ok=product_relation_ok,
        complement_ok=complement_ok,
    )


def central_symmetry(p: Perm) -> bool:
    """True iff cards equidistant from the centre stay equidistant from it."""
    d = p.dest.astype(np.int64)
    return bool(np.all(d + d[::-1] == p.degree - 1))


def symmetry_bound(n: int) -> int:
    """Order ``n! * 2**n`` of the centrally symmetric perms of ``2n`` cards."""
    if n < 1:
        raise ParameterError("n must be at least 1")
    return math.factorial(n) * 2**n
