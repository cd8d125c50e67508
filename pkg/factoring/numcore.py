import math
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from core.errors import InvalidInput
from utils.mappings import SQUARE_RESIDUES_MOD_100

# Unbounded non-negative integer. JSON output carries it as a decimal
# string so no precision is lost in consumers with fixed-width numbers.
Natural = Annotated[
    int,
    Field(ge=0),
    PlainSerializer(lambda value: str(value), return_type=str, when_used="json"),
]


# ============== MODELS ==============

class SquareCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    passes_filter: bool
    root: Optional[Natural] = None

    @property
    def is_square(self) -> bool:
        return self.root is not None


# ============== OPERATIONS ==============

def isqrt(n: int) -> int:
    """
    Exact integer square root: the r with r*r <= n < (r+1)*(r+1).
    Never rounds through floating point.
    """
    if n < 0:
        raise InvalidInput(f"isqrt of a negative number: {n}")
    return math.isqrt(n)


def square_filter(n: int) -> bool:
    """
    Last-two-digit test: False means n is certainly not a perfect square.
    True only means it could be one (21 passes, for instance).
    """
    return n % 100 in SQUARE_RESIDUES_MOD_100


def check_square(n: int) -> SquareCheck:
    """
    Filter first, confirm with isqrt only when the filter passes.
    """
    if not square_filter(n):
        return SquareCheck(passes_filter=False)

    root = isqrt(n)
    if root * root == n:
        return SquareCheck(passes_filter=True, root=root)

    return SquareCheck(passes_filter=True)
