from pydantic import BaseModel

from commands.output import add_budget_flags, emit, emit_json
from core.dependencies import parse_natural, resolve_budget
from core.errors import EXIT_COMPOSITE, EXIT_OK, BudgetExhausted
from factoring.fermat import is_prime
from factoring.numcore import Natural


# ============== MODELS ==============

class PrimalityResponse(BaseModel):
    n: Natural
    verdict: str


# ============== COMMAND ==============

def _report(args, n: int, verdict: str) -> None:
    if args.json:
        emit_json(PrimalityResponse(n=n, verdict=verdict))
    else:
        emit(verdict)


def cmd_isprime(args) -> int:
    """ISPRIME - prime (exit 0), composite (exit 1) or unresolved (exit 2)"""
    n = parse_natural(args.n, minimum=2)
    budget = resolve_budget(args.budget, args.unbounded)

    try:
        verdict = is_prime(n, budget)
    except BudgetExhausted:
        _report(args, n, "unresolved")
        raise

    if verdict:
        _report(args, n, "prime")
        return EXIT_OK

    _report(args, n, "composite")
    return EXIT_COMPOSITE


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("isprime", parents=parents, help="primality verdict for n")
    parser.add_argument("n", help="decimal natural number >= 2")
    add_budget_flags(parser)
    parser.set_defaults(handler=cmd_isprime)
