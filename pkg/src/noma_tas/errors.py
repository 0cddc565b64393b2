"""Exception types shared across the package."""


class DomainError(ValueError):
    """A numeric argument is outside the domain of the requested operation."""


class InvalidImpairmentError(ValueError):
    """Impairment inputs are physically inconsistent (e.g. error variance >= channel power)."""


class UnsupportedConfigurationError(ValueError):
    """The closed-form path does not exist for this configuration.

    Raised when an analytic evaluation is requested for a configuration the
    closed forms do not cover (non-integer Gamma shape, user index outside
    the three-user table, or antenna counts other than two).
    """


class SpecValidationError(ValueError):
    """An experiment spec failed validation; carries every problem found."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("\n".join(self.problems))
