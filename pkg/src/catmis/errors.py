"""Exception hierarchy shared by all catmis modules."""


class CatmisError(Exception):
    """Base class for all catmis errors."""


class ParseError(CatmisError):
    """Malformed input text (edge list or instance spec)."""


class EmptyInputError(ParseError):
    """Input contained no usable lines."""


class InvalidKError(ParseError):
    """Instance spec declares a backbone length below 1."""


class NotATreeError(CatmisError):
    """Edge list describes a graph with a cycle or a disconnected graph."""


class UnknownVertexError(CatmisError):
    """A vertex label does not occur in the graph."""


class NotGeneralizedCaterpillarError(CatmisError):
    """Tree is not a caterpillar with hairs of length one or two."""


class IllegalKindError(CatmisError):
    """Level-graph vertex kind is impossible for the stage's hair profile."""


class TooLargeError(CatmisError):
    """Graph exceeds the brute-force oracle's vertex guard."""
