"""Exception hierarchy shared by every chordspan module."""


class ChordspanError(Exception):
    """Base class for all errors raised by chordspan."""


class InvalidGraph(ChordspanError, ValueError):
    """A chord set does not describe a maximal outerplanar graph."""


class ChordCountMismatch(InvalidGraph):
    pass


class CrossingChords(InvalidGraph):
    def __init__(self, first, second):
        self.pair = (tuple(first), tuple(second))
        super().__init__(f"chords {tuple(first)} and {tuple(second)} cross")


class InvalidChord(InvalidGraph):
    pass


class NotACycleEdge(ChordspanError, ValueError):
    pass


class NotAnEar(ChordspanError, ValueError):
    pass


class NotAChord(ChordspanError, ValueError):
    pass


class CapExceeded(ChordspanError):
    """Requested order is above the configured enumeration cap."""


class VerificationFailure(ChordspanError, AssertionError):
    """A brute-force check disagreed with a closed form. Carries the counterexample."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class WalkStuck(ChordspanError, RuntimeError):
    pass


class OutOfRange(ChordspanError, ValueError):
    pass


class SearchExhausted(ChordspanError, RuntimeError):
    def __init__(self, message, expanded=0, best_gap=None):
        super().__init__(message)
        self.expanded = expanded
        self.best_gap = best_gap


class ParseError(ChordspanError, ValueError):
    pass
