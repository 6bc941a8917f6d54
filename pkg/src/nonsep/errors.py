"""Exception hierarchy shared by all modules.

The CLI maps each class to a distinct exit code, so finders must raise the
most specific one that applies.
"""
from __future__ import annotations


class NonsepError(Exception):
    """Base class for every error raised by this package."""


class InputError(NonsepError, ValueError):
    """Malformed arguments: out-of-range vertices, bad shape parameters."""


class ParseError(InputError):
    """Edge-list or shape-spec text could not be parsed."""


class PreconditionError(InputError):
    """The input does not satisfy a finder's degree/connectivity hypotheses."""


class InvalidEmbeddingError(InputError):
    """An embedding does not map its shape onto the host graph."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("invalid embedding: " + "; ".join(self.problems))


class NotFoundError(NonsepError):
    """An exhaustive search finished without finding a tree.

    When the hypotheses of an existence theorem were checked beforehand this
    means the search (or the theorem) is wrong, so tests treat it as failure.
    """


class ContradictionError(NonsepError):
    """A step that the case analysis guarantees would succeed did not.

    ``witness`` carries enough state (edge list text, current tree, case
    label) to replay the failure offline.
    """

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}
