class MfqError(Exception):
    """Base class for all errors raised by mfq."""


class InputError(MfqError, ValueError):
    pass


class SingularError(MfqError, ArithmeticError):
    pass


class CapExceeded(MfqError):
    """A probe or enumeration ran past its cap; not a mathematical fact."""


class Unsupported(MfqError):
    pass


class NotSurfaceKernel(MfqError):
    pass


class InternalInconsistency(MfqError):
    """Raised when a computation contradicts an identity that must hold."""


class CatalogError(MfqError):
    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class PipelineFailure(MfqError):
    pass
