class ContractError(ValueError):
    """An operation was called outside its precondition."""


class CapacityError(RuntimeError):
    """An exponential routine hit one of its configured limits.

    Kept distinct from a "no" answer: the question was not decided.
    """


class NotSplitError(ContractError):
    pass


class FormatError(ValueError):
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = f"{source}:" if source is not None else ""
        if lineno is not None:
            where += f"{lineno}:" if source is not None else f"line {lineno}:"
        super().__init__(f"{where} {message}" if where else message)
