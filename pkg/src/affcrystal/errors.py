"""Exception hierarchy shared by all modules."""


class CrystalError(Exception):
    pass


class DimensionError(CrystalError, ValueError):
    """A weight or coordinate vector has the wrong length."""


class MembershipError(CrystalError, ValueError):
    """An element is not a member of the crystal it was handed to."""


class UnsupportedWeightError(CrystalError, ValueError):
    """No ground state, schedule or closed form is known for this weight."""


class BudgetError(CrystalError, RuntimeError):
    """A closure grew past the configured element budget."""


class ConditionFailure(CrystalError):
    """A prerequisite condition report failed; carries the report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
