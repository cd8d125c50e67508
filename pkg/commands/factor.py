from typing import List, Optional

from pydantic import BaseModel

from commands.output import add_budget_flags, emit, emit_json
from core.dependencies import parse_natural, resolve_budget
from core.errors import EXIT_OK
from factoring.factorizer import Factorization, FactorStep, PrimePower, factorize
from factoring.fermat import SearchStats
from factoring.numcore import Natural


# ============== MODELS ==============

class FactorResponse(BaseModel):
    n: Natural
    factors: List[PrimePower]
    stats: SearchStats
    trace: Optional[List[FactorStep]] = None


# ============== HELPER FUNCTIONS ==============

def format_factors(factorization: Factorization) -> str:
    """`2^4 * 3^2 * 5^2 * 7^2`; the empty product prints as `1`."""
    if not factorization.factors:
        return "1"
    return " * ".join(
        str(f.p) if f.e == 1 else f"{f.p}^{f.e}"
        for f in factorization.factors
    )


def format_stats(stats: SearchStats) -> str:
    return (
        f"candidates_tested={stats.candidates_tested} "
        f"filter_rejections={stats.filter_rejections} "
        f"isqrt_confirmations={stats.isqrt_confirmations}"
    )


# ============== COMMAND ==============

def cmd_factor(args) -> int:
    """FACTOR - Complete prime factorization of n"""
    n = parse_natural(args.n, minimum=1)
    budget = resolve_budget(args.budget, args.unbounded)

    factorization = factorize(n, budget=budget, trace=args.trace)

    if args.json:
        emit_json(FactorResponse(
            n=factorization.n,
            factors=factorization.factors,
            stats=factorization.stats,
            trace=factorization.trace if args.trace else None,
        ))
        return EXIT_OK

    for step in factorization.trace:
        emit(f"# {step.action.value}: {step.detail}")
    emit(format_factors(factorization))
    if args.stats:
        emit(format_stats(factorization.stats))

    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("factor", parents=parents, help="prime factorization of n")
    parser.add_argument("n", help="decimal natural number >= 1")
    add_budget_flags(parser)
    parser.add_argument("--stats", action="store_true", help="print aggregate search statistics")
    parser.add_argument("--trace", action="store_true", help="print every reduction and split")
    parser.set_defaults(handler=cmd_factor)
