from typing import Optional

from pydantic import BaseModel

from commands.output import emit, emit_json
from core.dependencies import parse_natural
from core.errors import EXIT_OK
from factoring.numcore import Natural, check_square
from utils.mappings import digit_class


# ============== MODELS ==============

class SquareResponse(BaseModel):
    n: Natural
    square: bool
    passes_filter: bool
    digit_class: Optional[str] = None
    root: Optional[Natural] = None


# ============== COMMAND ==============

def cmd_issquare(args) -> int:
    """ISSQUARE - square root, or which test rejected n"""
    n = parse_natural(args.n)
    check = check_square(n)

    if args.json:
        emit_json(SquareResponse(
            n=n,
            square=check.is_square,
            passes_filter=check.passes_filter,
            digit_class=digit_class(n % 100) or None,
            root=check.root,
        ))
    elif check.is_square:
        emit(f"square root={check.root}")
    elif not check.passes_filter:
        emit("non-square (filter)")
    else:
        emit("non-square (confirmed)")

    return EXIT_OK


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("issquare", parents=parents, help="perfect-square test for n")
    parser.add_argument("n", help="decimal natural number")
    parser.set_defaults(handler=cmd_issquare)
