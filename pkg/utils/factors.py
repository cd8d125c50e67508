from typing import Dict, Iterable, List, Tuple


def group_prime_exponents(pairs: Iterable[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """
    Merge (prime, exponent) pairs into one entry per prime.
    Returns the pairs ordered by ascending prime.
    """
    exponents: Dict[int, int] = {}
    for prime, exponent in pairs:
        if prime not in exponents:
            exponents[prime] = 0
        exponents[prime] += exponent

    return sorted(exponents.items())


def product_of_powers(pairs: Iterable[Tuple[int, int]]) -> int:
    """Multiply out prime^exponent pairs; the empty product is 1."""
    total = 1
    for prime, exponent in pairs:
        total *= prime ** exponent
    return total
