"""Exception hierarchy shared by every module of the engine."""


class GammaSpaceError(ValueError):
    """Base class for all engine errors."""


class CarrierError(GammaSpaceError):
    """A set or carrier size does not fit the supported bounds."""


class CarrierTooLarge(CarrierError):
    pass


class TopologyError(GammaSpaceError):
    pass


class MissingEmptyOrFull(TopologyError):
    def __init__(self, missing: int):
        self.missing = missing
        super().__init__(f"family lacks required member {missing:#x}")


class NotClosedUnderUnion(TopologyError):
    def __init__(self, first: int, second: int):
        self.pair = (first, second)
        super().__init__(f"union of {first:#x} and {second:#x} is not a member")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, first: int, second: int):
        self.pair = (first, second)
        super().__init__(f"intersection of {first:#x} and {second:#x} is not a member")


class OperationError(GammaSpaceError):
    pass


class MissingEntry(OperationError):
    def __init__(self, open_set: int):
        self.open_set = open_set
        super().__init__(f"no value given for open set {open_set:#x}")


class ExtraEntry(OperationError):
    def __init__(self, key: int):
        self.key = key
        super().__init__(f"value given for {key:#x}, which is not open")


class NotExpansive(OperationError):
    def __init__(self, open_set: int, value: int):
        self.open_set = open_set
        self.value = value
        super().__init__(f"value {value:#x} does not contain open set {open_set:#x}")


class RuleError(OperationError):
    """A rule expression is malformed or references an unknown point."""


class NotAGammaOpenCover(GammaSpaceError):
    """Raised with either a non-gamma-open member or an uncovered point."""

    def __init__(self, *, member: int | None = None, point: int | None = None):
        self.member = member
        self.point = point
        if member is not None:
            msg = f"cover member {member:#x} is not gamma-open"
        else:
            msg = f"point {point} is not covered"
        super().__init__(msg)


class ScopeTooLarge(GammaSpaceError):
    pass
