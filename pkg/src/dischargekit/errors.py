"""Exception types shared across modules."""


class HypothesisError(ValueError):
    """A lemma or algorithm precondition does not hold on the input."""


class Infeasible(Exception):
    """No object of the requested kind exists (a definite answer, not a failure)."""


class InvariantViolation(RuntimeError):
    """A configuration guaranteed by a structural lemma was not found.

    Seeing this means either a bug or a counterexample to the lemma.
    """
