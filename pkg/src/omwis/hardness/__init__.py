"""Hardness-side instance generators and their empirical verifiers."""

from .base import ReductionOutput
from .exact import mis_size
from .sat import CnfError, CnfFormula, gen_3sat, parse_dimacs, random_3cnf, satisfiable
from .subdivision import LONG_VARIANTS, TWO_SCHEMES, gen_long_subdivision, gen_two_subdivision
from .trains import (
    TARGETS,
    Boundaried,
    PermutationGadget,
    Train,
    TrainError,
    braiding_pair,
    bubble_swaps,
    caboose,
    check_interchangeable,
    compose_gadgets,
    couple_trains,
    gadget_boundaried,
    gadget_for,
    gen_train_reduction,
    identity_gadget,
    locomotive,
    swap_gadget,
)
from .verify import CATALOG, NOT_CHECKED, exact_alpha, freeness, verify_reduction

__all__ = [
    "Boundaried", "CATALOG", "CnfError", "CnfFormula", "LONG_VARIANTS", "NOT_CHECKED",
    "PermutationGadget", "ReductionOutput", "TARGETS", "TWO_SCHEMES", "Train", "TrainError",
    "braiding_pair", "bubble_swaps", "caboose", "check_interchangeable", "compose_gadgets",
    "couple_trains", "exact_alpha", "freeness", "gadget_boundaried", "gadget_for",
    "gen_3sat", "gen_long_subdivision", "gen_train_reduction", "gen_two_subdivision",
    "identity_gadget", "locomotive", "mis_size", "parse_dimacs", "random_3cnf",
    "satisfiable", "swap_gadget", "verify_reduction",
]
