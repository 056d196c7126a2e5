"""Exception hierarchy shared by all modules."""


class TranslatioError(Exception):
    """Base class for errors raised by this package."""


class ConfigurationError(TranslatioError, ValueError):
    """Unknown root system label, malformed Weyl word, wrong arity, ..."""


class DomainError(TranslatioError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(TranslatioError, RuntimeError):
    """A configured size guard (group order, dimension) would be exceeded."""


class PoleError(TranslatioError, ZeroDivisionError):
    """Evaluation hit a factor with negative exponent that vanishes."""

    def __init__(self, form, point):
        self.form = form
        self.point = point
        super().__init__(f"pole of {form!r} at {tuple(str(c) for c in point)}")
