"""Exception types shared across the package."""


class PlanError(Exception):
    """A decoding plan fails one of the decodability conditions."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}: {detail}" if detail else condition)


class BudgetError(Exception):
    """An exhaustive computation would exceed its enumeration budget."""


class DecodingInvariantError(Exception):
    """A provable decoder invariant failed; indicates an implementation bug."""
