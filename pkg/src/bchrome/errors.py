"""Exception hierarchy shared by all bchrome modules."""


class BchromeError(Exception):
    """Base class for all library errors."""


class SelfLoopError(BchromeError):
    pass


class VertexOutOfRangeError(BchromeError):
    pass


class GirthTooSmallError(BchromeError):
    pass


class NotInAnyBunchError(BchromeError):
    pass


class NotInS2Error(BchromeError):
    pass


class BunchAlreadyColoredError(BchromeError):
    pass


class NotTotalError(BchromeError):
    pass


class CompletionFailedError(BchromeError):
    def __init__(self, vertex: int):
        super().__init__(f"no color available for vertex {vertex}")
        self.vertex = vertex


class HallFailure(BchromeError):
    """A bunch coloring step hit a Hall violator.

    Carries the violating index set; under the theorems' hypotheses this
    cannot happen, so seeing one means either the input violates a
    hypothesis or there is an ordering bug upstream.
    """

    def __init__(self, violator: frozenset):
        super().__init__(f"Hall condition violated by index set {sorted(violator)}")
        self.violator = violator


class PreconditionViolated(BchromeError):
    pass


class InternalInvariantViolation(BchromeError):
    pass


class RepairStuck(BchromeError):
    pass


class ConstructionFailed(BchromeError):
    """A step of the matrix ordering could not find a vertex the theorem
    guarantees to exist.  Such inputs are counterexample candidates and are
    surfaced with the step name and a log, never patched silently."""

    def __init__(self, step: str, log: list[str] | None = None):
        super().__init__(f"construction failed at step: {step}")
        self.step = step
        self.log = log or []


class NoStrategyApplies(BchromeError):
    def __init__(self, reasons: dict):
        super().__init__("no coloring strategy applies to any vertex")
        self.reasons = reasons


class MalformedGraph6(BchromeError):
    def __init__(self, position: int, message: str = "bad byte"):
        super().__init__(f"malformed graph6 at position {position}: {message}")
        self.position = position


class MalformedDimacs(BchromeError):
    def __init__(self, line: int, message: str = "bad line"):
        super().__init__(f"malformed DIMACS at line {line}: {message}")
        self.line = line


class SchemaViolation(BchromeError):
    def __init__(self, path: str, message: str = "invalid"):
        super().__init__(f"certificate schema violation at {path}: {message}")
        self.path = path


class GenerationFailed(BchromeError):
    def __init__(self, attempts: int):
        super().__init__(f"generation failed after {attempts} attempts")
        self.attempts = attempts


class FamilyTooLarge(BchromeError):
    pass
