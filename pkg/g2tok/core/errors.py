"""Exceptions raised by the exact-algebra and symbolic layers."""


class AlgebraError(Exception):
    """Error in exact polynomial or rational-function arithmetic."""

    pass


class NonDivisible(AlgebraError):
    """Exact division left a nonzero remainder."""

    pass


class PoleError(AlgebraError):
    """A denominator factor vanishes at the evaluation point."""

    pass


class SymbolicError(Exception):
    """Error in the parametric summation engine."""

    pass


class UnboundedError(SymbolicError):
    """A summation bound is missing."""

    pass


class NonAffineError(SymbolicError):
    """An exponent is not affine (or not summable) in the summation variable."""

    pass


class DegenerateSumError(SymbolicError):
    """The geometric ratio of a sum is 1, so no closed form of the expected shape exists."""

    pass


class UnresolvedParity(SymbolicError):
    """A parity condition still involves a free variable after substitution."""

    pass


class TermLimitError(SymbolicError):
    """A symbolic sum grew past the configured term cap."""

    pass
