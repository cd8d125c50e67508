"""
Trial-division oracle.

Deliberately naive: divide by 2, then by 3, 5, 7, ... up to the square root.
It is the reference the Fermat pipeline is checked against and the baseline
of the benchmark, never a factoring method of the toolkit itself.
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

from core.errors import InvalidInput
from factoring.factorizer import Factorization, PrimePower


class OracleRun(BaseModel):
    model_config = ConfigDict(frozen=True)

    factorization: Factorization
    divisions: int


def _divide_out(n: int) -> Tuple[List[Tuple[int, int]], int]:
    pairs: List[Tuple[int, int]] = []
    divisions = 0
    d = 2
    while d * d <= n:
        exponent = 0
        while True:
            divisions += 1
            if n % d:
                break
            n //= d
            exponent += 1
        if exponent:
            pairs.append((d, exponent))
        d = 3 if d == 2 else d + 2

    if n > 1:
        pairs.append((n, 1))

    return pairs, divisions


def trial_division_run(n: int) -> OracleRun:
    """Factorization plus the number of trial divisions it took."""
    if n < 1:
        raise InvalidInput(f"trial division needs N >= 1, got {n}")

    pairs, divisions = _divide_out(n)
    factorization = Factorization(n=n, factors=[PrimePower(p=p, e=e) for p, e in pairs])

    return OracleRun(factorization=factorization, divisions=divisions)


def trial_division_factorize(n: int) -> Factorization:
    return trial_division_run(n).factorization


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        raise InvalidInput(f"primality is defined for N >= 2, got {n}")

    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d = 3 if d == 2 else d + 2

    return True
