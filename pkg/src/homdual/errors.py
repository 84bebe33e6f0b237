"""Exceptions shared across the library."""


class InputError(ValueError):
    """An argument failed validation: bad shape, zero parameter, malformed document."""


class MorphismError(InputError):
    """A map that was required to be a morphism failed its check.

    The failing report is attached so callers can inspect the violations.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
