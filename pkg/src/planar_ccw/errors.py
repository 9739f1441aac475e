"""Exception hierarchy shared by every stage of the pipeline."""


class GraphError(ValueError):
    """Structural problem with a graph or embedding (bad ids, malformed rotation, ...)."""


class EmbeddingError(GraphError):
    """The rotation system is malformed or does not describe a plane embedding."""


class NotConnectedError(GraphError):
    """An operation that requires a connected graph received a disconnected one."""


class SchemaError(GraphError):
    """A JSON document does not match the expected schema.

    ``path`` points at the offending field, e.g. ``"edges[3]"``.
    """

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class OracleLimitError(ValueError):
    """Brute-force oracle called on an instance above its size limit."""


class InvariantBreach(RuntimeError):
    """A bound or post-condition that the construction guarantees did not hold.

    Carries the pipeline ``stage`` that detected it and a ``witness``
    (vertex, edge, bag, ...) so the failure can be reproduced.
    """

    def __init__(self, stage, message, witness=None):
        super().__init__(f"[{stage}] {message}" + ("" if witness is None else f" (witness: {witness!r})"))
        self.stage = stage
        self.witness = witness
