import logging
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from core.errors import InvalidInput
from factoring.fermat import SearchStats, fermat_split
from factoring.numcore import Natural, check_square
from utils.factors import group_prime_exponents, product_of_powers

logger = logging.getLogger(__name__)


# ============== MODELS ==============

class PrimePower(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: Natural
    e: int = Field(ge=1)


class StepAction(str, Enum):
    EXTRACT_TWOS = "extract_twos"
    REDUCE_SQUARE = "reduce_square"
    SPLIT = "split"
    PRIME = "prime"


class FactorStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    action: StepAction
    value: Natural
    weight: int
    detail: str


class Factorization(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: Natural
    factors: List[PrimePower] = []
    stats: SearchStats = SearchStats()
    trace: List[FactorStep] = []

    def as_pairs(self) -> List[Tuple[int, int]]:
        return [(f.p, f.e) for f in self.factors]

    def product(self) -> int:
        return product_of_powers(self.as_pairs())


# ============== HELPER FUNCTIONS ==============

class _Pipeline:
    """
    Depth-first worker for one factorize call: square reduction, then a
    Fermat split, then factor_lo before factor_hi.
    `weight` is the exponent multiplier picked up from square reductions above.
    """

    def __init__(self, budget: Optional[int], trace: bool):
        self.budget = budget
        self.tracing = trace
        self.pairs: List[Tuple[int, int]] = []
        self.stats = SearchStats()
        self.steps: List[FactorStep] = []

    def step(self, action: StepAction, value: int, weight: int, detail: str) -> None:
        logger.debug("%s %s (weight %s): %s", action.value, value, weight, detail)
        if self.tracing:
            self.steps.append(FactorStep(action=action, value=value, weight=weight, detail=detail))

    def run(self, p: int, weight: int) -> None:
        base, multiplier = reduce_square(p)
        if multiplier > 1:
            self.step(StepAction.REDUCE_SQUARE, p, weight, f"{p} = {base}^{multiplier}")
        if base == 1:
            return

        weight *= multiplier
        outcome = fermat_split(base, self.budget)
        self.stats += outcome.stats

        if outcome.is_prime:
            self.pairs.append((base, weight))
            self.step(StepAction.PRIME, base, weight, f"{base} has only the trivial split {base} * 1")
            return

        self.step(
            StepAction.SPLIT, base, weight,
            f"{base} = {outcome.b}^2 - {outcome.c}^2 = {outcome.factor_hi} * {outcome.factor_lo}",
        )
        self.run(outcome.factor_lo, weight)
        self.run(outcome.factor_hi, weight)


# ============== OPERATIONS ==============

def extract_twos(n: int) -> Tuple[int, int]:
    """N = 2^m * P with P odd."""
    if n < 1:
        raise InvalidInput(f"cannot extract factors of 2 from {n}")

    m = (n & -n).bit_length() - 1
    return m, n >> m


def reduce_square(p: int) -> Tuple[int, int]:
    """
    Take exact square roots while P is a perfect square.
    Returns (base, multiplier) with base^multiplier = P; multiplier is a power of 2.
    """
    if p < 1:
        raise InvalidInput(f"cannot reduce {p}")

    multiplier = 1
    while p > 1:
        check = check_square(p)
        if not check.is_square:
            break
        p = check.root
        multiplier *= 2

    return p, multiplier


def factorize(n: int, budget: Optional[int] = None, trace: bool = False) -> Factorization:
    """
    Complete prime factorization: separate the factors of 2, reduce squares,
    split each odd non-square with the Fermat search and repeat on both
    factors until every factor is prime.
    All or nothing: BudgetExhausted names the cofactor that could not be resolved.
    """
    m, p = extract_twos(n)

    pipeline = _Pipeline(budget, trace)
    if m:
        pipeline.pairs.append((2, m))
        pipeline.step(StepAction.EXTRACT_TWOS, n, 1, f"{n} = 2^{m} * {p}")

    pipeline.run(p, 1)

    factors = [PrimePower(p=prime, e=exponent) for prime, exponent in group_prime_exponents(pipeline.pairs)]
    return Factorization(n=n, factors=factors, stats=pipeline.stats, trace=pipeline.steps)
