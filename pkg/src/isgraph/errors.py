"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class IsgraphError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class InvalidSpec(IsgraphError):
    pass


class ParseError(IsgraphError):
    exit_code = 3

    def __init__(self, message: str, token: str = "", position: int = -1):
        super().__init__(message)
        self.token = token
        self.position = position


class CapExceeded(IsgraphError):
    exit_code = 2


class OrderCapExceeded(CapExceeded):
    pass


class SubgroupCountCapExceeded(CapExceeded):
    pass


class VertexCapExceeded(CapExceeded):
    pass


class MixedLattice(IsgraphError):
    pass


class PrimeDoesNotDivideOrder(IsgraphError):
    pass


class NotAPGroup(IsgraphError):
    pass


class IndexOutOfRange(IsgraphError):
    pass


class OutOfRange(IsgraphError):
    pass


class NotOddPowerOfTwo(IsgraphError):
    pass


class PreconditionViolated(IsgraphError):
    pass
