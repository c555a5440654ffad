"""Exception hierarchy.

Every error raised on purpose by the library derives from ``LatticeError``,
so callers (the CLI in particular) can separate bad input from bugs.
"""


class LatticeError(ValueError):
    pass


# construction

class NotAcyclic(LatticeError):
    pass


class NoUniqueBottom(LatticeError):
    pass


class NoUniqueTop(LatticeError):
    pass


class MeetFails(LatticeError):
    def __init__(self, x, y):
        super().__init__(f"elements {x} and {y} have no greatest lower bound")
        self.pair = (x, y)


class JoinFails(LatticeError):
    def __init__(self, x, y):
        super().__init__(f"elements {x} and {y} have no least upper bound")
        self.pair = (x, y)


class TransitiveCoverEdge(LatticeError):
    def __init__(self, lo, hi):
        super().__init__(f"cover ({lo}, {hi}) is implied by a longer path")
        self.edge = (lo, hi)


class NotComparable(LatticeError):
    pass


class TooLarge(LatticeError):
    pass


# structural hypotheses

class NotGraded(LatticeError):
    pass


class NotLeftModular(LatticeError):
    pass


class NotModular(LatticeError):
    pass


class NotSemimodular(LatticeError):
    pass


class NotGeometric(LatticeError):
    pass


class ChainNotModular(LatticeError):
    pass


class NotMaximalChain(LatticeError):
    pass


class NotLL(LatticeError):
    pass


class RankPreservationFails(LatticeError):
    def __init__(self, b, pair=None):
        msg = f"tau_b is not rank-preserving for b={b}"
        if pair is not None:
            msg += f" (pair {pair})"
        super().__init__(msg)
        self.b = b
        self.pair = pair


class HypothesisFailed(LatticeError):
    def __init__(self, hypothesis, detail=""):
        super().__init__(f"hypothesis failed: {hypothesis}" + (f" ({detail})" if detail else ""))
        self.hypothesis = hypothesis


class EmptyFiber(LatticeError):
    pass


class NoUniqueMax(LatticeError):
    pass


class EmptyD(LatticeError):
    pass


class IdentityFailed(LatticeError):
    """A proven identity did not hold; always a bug or corrupted input."""
