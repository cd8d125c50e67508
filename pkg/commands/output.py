import sys

from pydantic import BaseModel


def emit(line: str) -> None:
    """Write one result line to stdout."""
    sys.stdout.write(line + "\n")


def emit_json(payload: BaseModel) -> None:
    """Naturals serialise as decimal strings; counts stay integers."""
    sys.stdout.write(payload.model_dump_json(exclude_none=True) + "\n")


def add_budget_flags(parser) -> None:
    parser.add_argument(
        "--budget", type=int, default=None,
        help="max candidates tested per Fermat split (default from FERMAT_SEARCH_DEFAULT_BUDGET)",
    )
    parser.add_argument(
        "--unbounded", action="store_true",
        help="no candidate limit: scan until the trivial split if necessary",
    )
