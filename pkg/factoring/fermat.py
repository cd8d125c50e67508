import logging
import math
from enum import Enum
from typing import Iterator, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from core.errors import BudgetExhausted, InvalidInput
from factoring.numcore import Natural, check_square, isqrt, square_filter

logger = logging.getLogger(__name__)

# (b + 50)^2 = b^2 + 100*b + 2500, so b^2 mod 100 repeats every 50 values of b
SQUARE_PERIOD = 50


# ============== MODELS ==============

class SplitKind(str, Enum):
    NONTRIVIAL_SPLIT = "nontrivial_split"
    PRIME = "prime"


class SearchBounds(BaseModel):
    model_config = ConfigDict(frozen=True)

    b_min: Natural
    b_max: Natural
    c_max: Natural


class SearchStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    candidates_tested: int = 0
    filter_rejections: int = 0
    isqrt_confirmations: int = 0

    def __add__(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            candidates_tested=self.candidates_tested + other.candidates_tested,
            filter_rejections=self.filter_rejections + other.filter_rejections,
            isqrt_confirmations=self.isqrt_confirmations + other.isqrt_confirmations,
        )


class SplitOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: SplitKind
    p: Natural
    b: Natural
    c: Natural
    factor_hi: Natural
    factor_lo: Natural
    stats: SearchStats

    @property
    def is_prime(self) -> bool:
        return self.kind is SplitKind.PRIME


class SymmetryForm(BaseModel):
    """P = (2n + r)^2 - (r - 1)^2, with b^2 = (P + 1) + a."""
    model_config = ConfigDict(frozen=True)

    n: Natural
    r: Natural
    a: Natural


# ============== HELPER FUNCTIONS ==============

def _require_odd(p: int) -> None:
    if p < 3:
        raise InvalidInput(f"Fermat search needs P >= 3, got {p}")
    if p % 2 == 0:
        raise InvalidInput(f"Fermat search needs an odd P, got {p}; extract the factors of 2 first")


def _filter_steps(b_min: int, p: int) -> list:
    """
    Offsets d in [0, 50) for which (b_min + d)^2 - p can end in a square
    digit pair. Every other candidate in the period fails square_filter.
    """
    b_low, p_low = b_min % 100, p % 100
    return [
        d for d in range(SQUARE_PERIOD)
        if square_filter((b_low + d) * (b_low + d) - p_low)
    ]


def _scan(p: int, budget: Optional[int]) -> Iterator[Tuple[SearchBounds, int, int, SearchStats]]:
    """
    Walk b = b_min, b_min + 1, ... and yield every b for which b^2 - p is a
    perfect square c^2, with the stats accumulated up to and including b.

    Candidates rejected by the digit filter are skipped a period at a time,
    yet counted exactly: candidates_tested is always b - b_min + 1.
    """
    bounds = search_bounds(p)

    root = isqrt(p)
    if root * root == p:
        raise InvalidInput(f"{p} is a perfect square ({root}^2); reduce it before splitting")

    steps = _filter_steps(bounds.b_min, p)
    # last b the budget allows
    stop = bounds.b_max if budget is None else min(bounds.b_max, bounds.b_min + budget - 1)
    root_of = math.isqrt

    b_prev = bounds.b_min
    square = b_prev * b_prev
    confirmations = 0
    base = bounds.b_min

    while base <= stop:
        for step in steps:
            b = base + step
            if b > stop:
                break

            # b^2 - b_prev^2 = (b - b_prev)(b + b_prev)
            square += (b - b_prev) * (b + b_prev)
            b_prev = b

            remainder = square - p
            confirmations += 1
            c = root_of(remainder)
            if c * c == remainder:
                tested = b - bounds.b_min + 1
                stats = SearchStats(
                    candidates_tested=tested,
                    filter_rejections=tested - confirmations,
                    isqrt_confirmations=confirmations,
                )
                yield bounds, b, c, stats

        base += SQUARE_PERIOD

    if stop < bounds.b_max:
        raise BudgetExhausted(cofactor=p, tested=budget, budget=budget)


# ============== OPERATIONS ==============

def search_bounds(p: int) -> SearchBounds:
    """
    Search interval for an odd P >= 3:
    ceil(sqrt(P)) <= b <= k and 1 <= c <= k - 1, where 2k - 1 = P.
    """
    _require_odd(p)

    root = isqrt(p)
    b_min = root if root * root == p else root + 1
    k = (p + 1) // 2

    return SearchBounds(b_min=b_min, b_max=k, c_max=k - 1)


def fermat_split(p: int, budget: Optional[int] = None) -> SplitOutcome:
    """
    Find the smallest b with b^2 - P = c^2, c >= 1.
    c = b - 1 is the trivial split P = P * 1, which is only reached at
    b = (P + 1) / 2 and certifies that P is prime.
    """
    for bounds, b, c, stats in _scan(p, budget):
        if c == b - 1:
            outcome = SplitOutcome(
                kind=SplitKind.PRIME, p=p, b=b, c=c,
                factor_hi=p, factor_lo=1, stats=stats,
            )
        else:
            outcome = SplitOutcome(
                kind=SplitKind.NONTRIVIAL_SPLIT, p=p, b=b, c=c,
                factor_hi=b + c, factor_lo=b - c, stats=stats,
            )

        logger.debug(
            "split %s: b=%s c=%s -> %s (%s candidates)",
            p, b, c, outcome.kind.value, stats.candidates_tested,
        )
        return outcome

    # b_max always yields c = b_max - 1
    raise RuntimeError(f"scan of {p} ended without reaching the trivial split")


def representations(p: int, budget: Optional[int] = None) -> Iterator[Tuple[int, int]]:
    """
    Every (b, c) with b^2 - c^2 = P and c >= 1, by increasing b.
    The last pair is always the trivial split.
    """
    for _, b, c, _ in _scan(p, budget):
        yield b, c


def symmetry_form(outcome: SplitOutcome) -> SymmetryForm:
    """Rewrite a nontrivial split as (n, r) with b = 2n + r and c = r - 1."""
    if outcome.is_prime:
        raise InvalidInput(f"{outcome.p} has only the trivial split; no symmetry form with n >= 1")

    r = outcome.c + 1
    n = (outcome.b - r) // 2

    return SymmetryForm(n=n, r=r, a=outcome.c * outcome.c - 1)


def is_prime(n: int, budget: Optional[int] = None) -> bool:
    """
    Primality by exhaustion of the b/c ranges: N is prime iff its only
    representation is the trivial one.
    """
    if n < 2:
        raise InvalidInput(f"primality is defined for N >= 2, got {n}")
    if n == 2:
        return True
    if n % 2 == 0:
        return False

    # odd squares > 1 have their root as a proper divisor
    if check_square(n).is_square:
        return False

    return fermat_split(n, budget).is_prime
