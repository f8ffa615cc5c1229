"""Exception hierarchy shared by every module."""


class InflataError(Exception):
    pass


class InputError(InflataError, ValueError):
    """Malformed or out-of-contract input."""


class GraphFormatError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InfeasibleError(InputError):
    """No k-tuple total dominating set exists (minimum degree below k)."""


class CapacityError(InflataError):
    """A size cap or search budget was exceeded.

    ``interval`` holds the best ``(lower, upper)`` known when the search
    stopped, and ``witness`` the incumbent set (if any).
    """

    def __init__(self, message, interval=None, witness=None, nodes=0):
        super().__init__(message)
        self.interval = interval
        self.witness = witness
        self.nodes = nodes


class UnsupportedError(InflataError):
    pass
