import pytest

from core.errors import InvalidInput
from factoring.oracle import trial_division_factorize, trial_division_is_prime, trial_division_run


@pytest.mark.parametrize("n, expected", [(2, True), (105, False), (97, True), (3, True), (4, False), (9409, False)])
def test_is_prime_examples(n, expected):
    assert trial_division_is_prime(n) is expected


@pytest.mark.parametrize("n", [0, 1])
def test_is_prime_rejects_small(n):
    with pytest.raises(InvalidInput):
        trial_division_is_prime(n)


@pytest.mark.parametrize("n, expected", [
    (176400, [(2, 4), (3, 2), (5, 2), (7, 2)]),
    (1, []),
    (9991, [(97, 1), (103, 1)]),
])
def test_factorize_examples(n, expected):
    assert trial_division_factorize(n).as_pairs() == expected


def test_factorize_rejects_zero():
    with pytest.raises(InvalidInput):
        trial_division_factorize(0)


def test_division_count_for_balanced_semiprime():
    run = trial_division_run(9991)
    # 2, the odd candidates 3..97, then 97 once more against the cofactor 103
    assert run.divisions == 50
    assert run.divisions >= 20


def test_self_consistency_and_reconstruction():
    for n in range(1, 10**5 + 1):
        result = trial_division_factorize(n)
        assert result.product() == n
        if n >= 2:
            single_prime = len(result.factors) == 1 and result.factors[0].e == 1
            assert trial_division_is_prime(n) == single_prime, n
