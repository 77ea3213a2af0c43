"""Exception types.  Everything a caller can trigger with bad input is a
:class:`PreconditionError`; the CLI maps those to exit code 2."""


class PreconditionError(ValueError):
    """Input violates the documented precondition of an operation."""


class FieldMismatchError(PreconditionError):
    pass


class ZeroCovectorError(PreconditionError):
    pass


class DuplicateHyperplaneError(PreconditionError):
    def __init__(self, first: int, second: int):
        super().__init__(f"hyperplanes {first} and {second} are proportional")
        self.first = first
        self.second = second


class MalformedDocumentError(PreconditionError):
    pass


class InapplicableError(PreconditionError):
    """A criterion was asked about an arrangement outside its scope."""


class SliceError(PreconditionError):
    """No generic 3-dimensional slice was found within the retry budget."""


class ConsistencyError(RuntimeError):
    """An internal cross-check disagreed with a proven statement."""
