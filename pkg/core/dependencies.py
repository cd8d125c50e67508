# core/dependencies.py
import re
from typing import Iterator, List, Optional

from pydantic import BaseModel, ConfigDict

from core.errors import InvalidInput
from core.settings import settings

DECIMAL_RE = re.compile(r"[0-9]+")
RANGE_RE = re.compile(r"([0-9]+)\.\.([0-9]+)(?:\s+(odd|even))?")


def parse_natural(text: str, minimum: int = 0, name: str = "n") -> int:
    """
    Parse a plain decimal string into a natural number.
    Signs, underscores, hex and scientific notation are rejected.
    """
    value = text.strip()
    if not DECIMAL_RE.fullmatch(value):
        raise InvalidInput(f"{name} must be a decimal natural number, got {text!r}")

    number = int(value)
    if number < minimum:
        raise InvalidInput(f"{name} must be >= {minimum}, got {number}")

    return number


def resolve_budget(budget: Optional[int], unbounded: bool) -> Optional[int]:
    """
    Returns the candidate budget for a command.
    --unbounded wins, then an explicit --budget, then the configured default.
    """
    if unbounded:
        return None
    if budget is None:
        return settings.search.default_budget
    if budget < 1:
        raise InvalidInput(f"budget must be >= 1, got {budget}")
    return budget


class TargetRange(BaseModel):
    """Inclusive bench range; a single target has start == stop."""
    model_config = ConfigDict(frozen=True)

    start: int
    stop: int
    parity: Optional[str] = None

    def _first(self) -> int:
        if self.parity == "odd" and self.start % 2 == 0:
            return self.start + 1
        if self.parity == "even" and self.start % 2 == 1:
            return self.start + 1
        return self.start

    def count(self) -> int:
        first = self._first()
        if first > self.stop:
            return 0
        step = 1 if self.parity is None else 2
        return (self.stop - first) // step + 1

    def numbers(self) -> Iterator[int]:
        step = 1 if self.parity is None else 2
        return iter(range(self._first(), self.stop + 1, step))


def parse_targets(specs: List[str]) -> List[TargetRange]:
    """
    Validate bench target specs without expanding them.
    Each spec is a comma-separated list of items; an item is `N`,
    `A..B`, `A..B odd` or `A..B even` (bounds inclusive).
    """
    ranges: List[TargetRange] = []
    for spec in specs:
        for item in spec.split(","):
            item = " ".join(item.split())
            if not item:
                continue

            match = RANGE_RE.fullmatch(item)
            if match is None:
                n = parse_natural(item, minimum=2, name="target")
                ranges.append(TargetRange(start=n, stop=n))
                continue

            start, stop, parity = int(match.group(1)), int(match.group(2)), match.group(3)
            if start > stop:
                raise InvalidInput(f"empty range {item!r}")
            if start < 2:
                raise InvalidInput(f"targets must be >= 2, got range {item!r}")

            target_range = TargetRange(start=start, stop=stop, parity=parity)
            if target_range.count() == 0:
                raise InvalidInput(f"no {parity} numbers in range {item!r}")
            ranges.append(target_range)

    if not ranges:
        raise InvalidInput("no benchmark targets given")

    return ranges


def iter_targets(ranges: List[TargetRange]) -> Iterator[int]:
    """Targets in the order given, generated lazily."""
    for target_range in ranges:
        yield from target_range.numbers()


def count_targets(ranges: List[TargetRange]) -> int:
    return sum(target_range.count() for target_range in ranges)
