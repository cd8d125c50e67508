import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel

from commands.factor import format_stats
from commands.output import add_budget_flags, emit, emit_json
from core.dependencies import parse_natural, resolve_budget
from core.errors import EXIT_OK, BudgetExhausted, InvalidInput
from factoring.fermat import (
    SearchStats,
    SplitKind,
    SymmetryForm,
    fermat_split,
    representations,
    symmetry_form,
)
from factoring.numcore import Natural

logger = logging.getLogger(__name__)


# ============== MODELS ==============

class Representation(BaseModel):
    b: Natural
    c: Natural


class SplitResponse(BaseModel):
    p: Natural
    kind: SplitKind
    b: Natural
    c: Natural
    factor_hi: Natural
    factor_lo: Natural
    stats: SearchStats
    symmetry: Optional[SymmetryForm] = None
    representations: Optional[List[Representation]] = None
    representations_complete: Optional[bool] = None


# ============== HELPER FUNCTIONS ==============

def _collect_representations(p: int, budget) -> Tuple[List[Tuple[int, int]], bool]:
    """
    Every representation the budget reaches. An exhausted listing keeps the
    pairs found so far and reports itself incomplete; the split stands.
    """
    pairs: List[Tuple[int, int]] = []
    try:
        for pair in representations(p, budget):
            pairs.append(pair)
    except BudgetExhausted as exc:
        logger.warning("representation listing of %s stopped: %s", p, exc.detail)
        return pairs, False
    return pairs, True


# ============== COMMAND ==============

def cmd_split(args) -> int:
    """SPLIT - one Fermat search on an odd non-square p, with its statistics"""
    p = parse_natural(args.p, minimum=3, name="p")
    if p % 2 == 0:
        raise InvalidInput(f"p must be odd, got {p}")
    budget = resolve_budget(args.budget, args.unbounded)

    outcome = fermat_split(p, budget)
    symmetry = None if outcome.is_prime else symmetry_form(outcome)
    pairs = None
    listing_complete = None
    if args.all:
        pairs, listing_complete = _collect_representations(p, budget)

    if args.json:
        emit_json(SplitResponse(
            p=p,
            kind=outcome.kind,
            b=outcome.b,
            c=outcome.c,
            factor_hi=outcome.factor_hi,
            factor_lo=outcome.factor_lo,
            stats=outcome.stats,
            symmetry=symmetry,
            representations=[Representation(b=b, c=c) for b, c in pairs] if pairs is not None else None,
            representations_complete=listing_complete,
        ))
        return EXIT_OK

    label = "prime" if outcome.is_prime else "nontrivial split"
    emit(f"{label}: b={outcome.b} c={outcome.c} factors={outcome.factor_hi},{outcome.factor_lo}")
    if symmetry is not None:
        emit(f"symmetry: n={symmetry.n} r={symmetry.r} a={symmetry.a}")
    emit(format_stats(outcome.stats))

    for b, c in pairs or []:
        emit(f"b={b} c={c} factors={b + c},{b - c}")
    if listing_complete is False:
        emit("representations: unresolved (budget exhausted)")

    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("split", parents=parents, help="single Fermat split of an odd non-square p")
    parser.add_argument("p", help="odd non-square decimal natural number >= 3")
    add_budget_flags(parser)
    parser.add_argument("--all", action="store_true", help="also list every representation p = b^2 - c^2")
    parser.set_defaults(handler=cmd_split)
