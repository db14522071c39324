"""Exception types raised by the enumeration library."""


class EnumFPTError(Exception):
    """Base class for all library errors."""


class QueueEmpty(EnumFPTError, IndexError):
    """Raised when extracting from an empty solution queue."""

    def __init__(self, msg="queue-empty"):
        super().__init__(msg)


class InconsistentSet(EnumFPTError, ValueError):
    """An operation set adds and removes the same edge, or touches a deleted vertex."""

    def __init__(self, msg="inconsistent-set"):
        super().__init__(msg)


class InapplicableOperation(EnumFPTError, ValueError):
    def __init__(self, msg="inapplicable-operation"):
        super().__init__(msg)


class LengthMismatch(EnumFPTError, ValueError):
    def __init__(self, msg="length-mismatch"):
        super().__init__(msg)


class PositionOutOfRange(EnumFPTError, IndexError):
    def __init__(self, msg="position-out-of-range"):
        super().__init__(msg)


class UnsupportedClass(EnumFPTError, ValueError):
    def __init__(self, msg="unsupported-class"):
        super().__init__(msg)


class InstanceTooLarge(EnumFPTError, ValueError):
    def __init__(self, msg="instance-too-large"):
        super().__init__(msg)


class ParseError(EnumFPTError, ValueError):
    """Malformed input file. ``lineno`` is 1-based, or None for whole-file problems."""

    def __init__(self, msg, lineno=None):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(f"parse-error: {where}{msg}")


class InvariantViolation(EnumFPTError, ValueError):
    def __init__(self, msg):
        super().__init__(f"invariant-violation: {msg}")
