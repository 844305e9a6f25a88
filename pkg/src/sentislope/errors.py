"""Exception types shared across the pipeline.

This module must stay import-free so the compiled smoother kernel can
depend on it without cycles.
"""


class SentiError(Exception):
    """Base class for all pipeline errors."""


class CorpusError(SentiError):
    """Unreadable, malformed, or empty corpus input."""


class LexiconError(SentiError):
    """Malformed or empty lexicon file."""


class LexiconWarning(UserWarning):
    """Recoverable lexicon oddity, e.g. duplicate entries."""


class SmoothingError(SentiError):
    """Invalid smoothing request (too few points, bad window)."""


class SingularWindowError(SmoothingError):
    """Local window admits no unique weighted least-squares solution."""

    def __init__(self, x0: float, detail: str = ""):
        self.x0 = x0
        msg = f"singular local window at x0={x0!r}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)
