"""Exception hierarchy.

``ValidationError`` covers inputs that parse but cannot be analysed;
``ParseError`` covers malformed files. The CLI maps the two families to
different exit codes.
"""


class HomophilyError(Exception):
    """Base class for all package errors."""


class ParseError(HomophilyError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}"
        if line is not None:
            where += f":{line}" if where else f"line {line}"
        super().__init__(f"{where}: {message}" if where else message)


class ValidationError(HomophilyError):
    pass


class DuplicatePaperId(ValidationError):
    pass


class UnknownLabel(ValidationError):
    pass


class EmptyNetwork(ValidationError):
    pass


class AllRecordsDropped(EmptyNetwork):
    pass


class InvalidGraph(ValidationError):
    pass


class ZeroDegree(ValidationError):
    pass


class InconsistentTable(ValidationError):
    pass


class UndefinedMetric(ValidationError):
    """A metric has no value on this input (only one label class present)."""


class OneSidedPopulation(UndefinedMetric):
    pass


class DegenerateMixing(UndefinedMetric):
    pass
