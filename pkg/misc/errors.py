class FanFreeError(Exception):
    """Base class for every error raised by the library."""


class GraphInputError(FanFreeError, ValueError):
    pass


class Graph6ParseError(GraphInputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class CapabilityError(FanFreeError):
    """A size cap (vertex count, budget, dimension) was exceeded."""


class ConstructionError(FanFreeError):
    pass


class EquitabilityError(FanFreeError):
    def __init__(self, vertex: int, class_index: int, expected: int, found: int):
        super().__init__(f"partition is not equitable: vertex {vertex} has {found} neighbours "
                         f"in class {class_index}, its class mates have {expected}")
        self.vertex = vertex
        self.class_index = class_index


class ConvergenceError(FanFreeError):
    def __init__(self, message: str, best):
        super().__init__(message)
        self.best = best


class ConfigError(FanFreeError):
    pass
