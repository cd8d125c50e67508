import pytest

from core.dependencies import count_targets, iter_targets, parse_natural, parse_targets, resolve_budget
from core.errors import InvalidInput
from core.settings import SearchConfig, settings


@pytest.mark.parametrize("text, expected", [("0", 0), ("176400", 176400), (" 42 ", 42), ("007", 7)])
def test_parse_natural(text, expected):
    assert parse_natural(text) == expected


@pytest.mark.parametrize("text", ["", "-1", "+1", "1_000", "0x1f", "1e5", "4.0", "١٢"])
def test_parse_natural_rejects_non_decimal(text):
    with pytest.raises(InvalidInput):
        parse_natural(text)


def test_parse_natural_minimum():
    with pytest.raises(InvalidInput):
        parse_natural("1", minimum=2)


def test_resolve_budget():
    assert resolve_budget(None, unbounded=True) is None
    assert resolve_budget(500, unbounded=True) is None
    assert resolve_budget(500, unbounded=False) == 500
    assert resolve_budget(None, unbounded=False) == settings.search.default_budget
    with pytest.raises(InvalidInput):
        resolve_budget(0, unbounded=False)


def test_default_budget_from_env(monkeypatch):
    assert SearchConfig().default_budget == 10**8
    monkeypatch.setenv("FERMAT_SEARCH_DEFAULT_BUDGET", "1234")
    assert SearchConfig().default_budget == 1234


def _expand(*specs):
    return list(iter_targets(parse_targets(list(specs))))


def test_parse_targets():
    assert _expand("3..9 odd") == [3, 5, 7, 9]
    assert _expand("2..6 even", "9991") == [2, 4, 6, 9991]
    assert _expand("176400, 9409,5..6") == [176400, 9409, 5, 6]
    assert _expand("4..10 odd") == [5, 7, 9]
    assert len(_expand("3..99 odd")) == 49
    assert count_targets(parse_targets(["3..99 odd", "7"])) == 50


def test_parse_targets_keeps_huge_ranges_lazy():
    ranges = parse_targets(["2..%d" % 10**30])
    assert count_targets(ranges) == 10**30 - 1
    numbers = iter_targets(ranges)
    assert [next(numbers) for _ in range(3)] == [2, 3, 4]


@pytest.mark.parametrize("spec", ["1", "0..4", "7..3", "x..y", ",", "3..9 prime", "4..4 odd"])
def test_parse_targets_rejects(spec):
    with pytest.raises(InvalidInput):
        parse_targets([spec])
