"""Exception types shared across the package."""


class OrderCoreError(Exception):
    """Base class for all package errors."""


class SelfLoop(OrderCoreError):
    def __init__(self, u):
        super().__init__(f"self-loop on vertex {u}")
        self.vertex = u


class DuplicateEdge(OrderCoreError):
    def __init__(self, u, v):
        super().__init__(f"edge ({u}, {v}) already present")
        self.edge = (u, v)


class MissingEdge(OrderCoreError):
    def __init__(self, u, v):
        super().__init__(f"edge ({u}, {v}) not present")
        self.edge = (u, v)


class ParseError(OrderCoreError):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownVertex(OrderCoreError):
    def __init__(self, v):
        super().__init__(f"vertex {v} is not indexed")
        self.vertex = v


class DifferentBuckets(OrderCoreError):
    def __init__(self, u, v):
        super().__init__(f"vertices {u} and {v} are in different buckets")


class CheckFailed(OrderCoreError):
    """Raised when a consistency check against the oracle fails during replay."""

    def __init__(self, op_index, detail):
        super().__init__(f"check failed at op {op_index}: {detail}")
        self.op_index = op_index
        self.detail = detail


class InternalInvariant(OrderCoreError):
    """Raised in checked mode when a post-update invariant does not hold."""
