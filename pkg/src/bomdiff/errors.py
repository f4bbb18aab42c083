"""Exception types shared across the package."""


class BomDiffError(Exception):
    """Base class for all errors raised by bomdiff."""


class DuplicateNodeId(BomDiffError):
    """A node id was added twice to the same graph."""


class UnknownEndpoint(BomDiffError):
    """An edge references a node id that is not in the graph."""


class SelfLoop(BomDiffError):
    """An edge's source and target are the same node."""


class UnknownNode(BomDiffError):
    """A node id lookup failed."""


class MalformedDocument(BomDiffError):
    """An input document could not be parsed as a supported BOM format."""


class NoSeedFound(BomDiffError):
    """No uniquely-matching starting pair exists between the two graphs."""


class InconsistentMapping(BomDiffError):
    """A node mapping references nodes that do not exist in its graphs."""
