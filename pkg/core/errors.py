# core/errors.py

EXIT_OK = 0
EXIT_COMPOSITE = 1
EXIT_DISAGREEMENT = 1
EXIT_BUDGET = 2
EXIT_INVALID = 3


class ToolkitError(Exception):
    """
    Base error of the toolkit.
    Carries the process exit code and a one-line detail, the way an
    HTTPException carries a status code and detail.
    """

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


class InvalidInput(ToolkitError):
    """Input outside an operation's precondition (caller bug or bad CLI argument)."""

    def __init__(self, detail: str):
        super().__init__(EXIT_INVALID, detail)


class BudgetExhausted(ToolkitError):
    """
    A Fermat scan tested more candidates than allowed.
    The verdict for `cofactor` is unresolved; it is never reported as prime.
    """

    def __init__(self, cofactor: int, tested: int, budget: int):
        super().__init__(
            EXIT_BUDGET,
            f"budget of {budget} candidates exhausted on cofactor {cofactor}",
        )
        self.cofactor = cofactor
        self.tested = tested
        self.budget = budget
