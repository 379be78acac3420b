"""Generalized perfect shuffles and the permutation groups they generate.

Products of permutations are read left to right: ``a * b`` applies ``a``
first and then ``b``.
"""
from .cayley import CayleyGraph
from .errors import (
    DegreeMismatchError,
    InvalidDegreeError,
    ParameterError,
    ResourceLimitError,
    ShuffleGroupError,
)
from .group import BSGS, Enumeration, bfs_enumerate, contains, group_order, schreier_sims
from .perm import (
    Perm,
    apply_to_deck,
    compose,
    cycle_decomposition,
    element_order,
    identity,
    inverse,
    parity,
    power,
)
from .shuffles import (
    DeckParams,
    DigitVector,
    PowerDeckParams,
    ShuffleKind,
    b_generator,
    c_generator,
    digit_action,
    digits_to_index,
    in_shuffle,
    index_to_digits,
    out_shuffle,
    power_shuffle,
    stack_interleave_oracle,
)
from .structure import (
    StructurePrediction,
    VerificationReport,
    central_symmetry,
    predict,
    symmetry_bound,
    verify,
)

__version__ = "0.1.0"
