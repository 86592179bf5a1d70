"""Exception types raised by construction and validation routines.

Every failure that has a finite counterexample carries it in structured
fields so callers (and the CLI) can render deterministic reports.  All
witnesses are the lexicographically smallest ones for the scan order
documented on the routine that raises them.
"""

from __future__ import annotations


class PolyadicError(Exception):
    """Base class for all library errors."""


class ParseError(PolyadicError):
    """A document failed to lex, parse, or resolve.

    Carries (line, column) of the offending token when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{line}:{column}: {message}"
        super().__init__(message)


class NotAssociative(PolyadicError):
    def __init__(self, i, j, witness):
        self.i = i
        self.j = j
        self.witness = tuple(witness)
        super().__init__(
            f"associativity fails for places ({i},{j}) at {self.witness}"
        )


class NotSolvable(PolyadicError):
    def __init__(self, place, context, target):
        self.place = place
        self.context = tuple(context)
        self.target = target
        super().__init__(
            f"no solution at place {place} for context {self.context} "
            f"and target {target}"
        )


class NotUnique(PolyadicError):
    def __init__(self, place, context, target, solutions):
        self.place = place
        self.context = tuple(context)
        self.target = target
        self.solutions = tuple(solutions)
        super().__init__(
            f"multiple solutions {self.solutions} at place {place} for "
            f"context {self.context} and target {target}"
        )


class NotCentral(PolyadicError):
    def __init__(self, b, witness):
        self.b = b
        self.witness = witness
        super().__init__(
            f"element {b} is not central: commutes badly with {witness}"
        )


class NotAutomorphism(PolyadicError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not an automorphism: witness {witness}")


class ConsistencyViolation(PolyadicError):
    """The twisting identity phi^(n-1)(x) * b = b * x fails at x."""

    def __init__(self, x):
        self.x = x
        super().__init__(f"twisting identity fails at x={x}")


class NotASubgroup(PolyadicError):
    def __init__(self, subset, witness):
        self.subset = tuple(sorted(subset))
        self.witness = witness
        super().__init__(
            f"{set(self.subset)} is not closed: witness {witness}"
        )


class HypothesisViolated(PolyadicError):
    """A construction's hypothesis failed; `clause` names which one."""

    def __init__(self, clause, detail):
        self.clause = clause
        self.detail = detail
        super().__init__(f"hypothesis {clause} violated: {detail}")


class ChainViolation(PolyadicError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(f"not a strictly nested chain: {detail}")


class NotIncreasing(PolyadicError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"map is not strictly increasing on {pair}")


class NotUnipotent(PolyadicError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(f"group is not unipotent: {detail}")


class CarrierTooLarge(PolyadicError):
    def __init__(self, size, bound):
        self.size = size
        self.bound = bound
        super().__init__(
            f"carrier size {size} exceeds the exhaustive bound {bound}"
        )


class ArityMismatch(PolyadicError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"expected arity {expected}, got {got}")
