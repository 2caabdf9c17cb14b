"""
Custom Exceptions for Bruhat Orbits.

Provides a hierarchy of exceptions for the arithmetic, combinatorial and
geometric layers, so callers can tell misuse apart from a failed check.
"""

from __future__ import annotations


class BruhatOrbitsError(Exception):
    """Base exception for all Bruhat Orbits errors."""

    def __init__(self, message: str, recoverable: bool = True):
        super().__init__(message)
        self.message = message
        self.recoverable = recoverable


# =============================================================================
# Field Errors
# =============================================================================


class FieldError(BruhatOrbitsError):
    """Base exception for exact scalar arithmetic."""

    pass


class DivisionByZeroError(FieldError, ZeroDivisionError):
    """Inverse of zero requested."""

    def __init__(self, operand: str = "0"):
        super().__init__(f"division by zero (operand {operand})", recoverable=False)
        self.operand = operand


class PoleAtZeroError(FieldError):
    """Limit at t = 0 requested for a polynomial with negative valuation."""

    def __init__(self, valuation: int):
        super().__init__(f"pole at t = 0 (valuation {valuation})", recoverable=False)
        self.valuation = valuation


class NotASquareError(FieldError):
    """Square root requested for an element that is not a recognised square."""

    def __init__(self, value: str):
        super().__init__(f"{value} is not a perfect square in Q(zeta_8)")
        self.value = value


class NotInvertibleError(FieldError):
    """Laurent polynomial without an inverse in the Laurent ring."""

    def __init__(self, value: str):
        super().__init__(f"{value} is not a unit of the Laurent ring")
        self.value = value


# =============================================================================
# Group Errors
# =============================================================================


class GroupError(BruhatOrbitsError):
    """Base exception for signed permutations and Weyl groups."""

    pass


class InvalidPermutationError(GroupError):
    """Images do not describe an element of the requested group."""

    def __init__(self, images: tuple[int, ...], reason: str):
        super().__init__(f"Invalid signed permutation {images}: {reason}")
        self.images = images
        self.reason = reason


class RankMismatchError(GroupError):
    """Operands live in different groups."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Operands belong to different groups: {left} vs {right}")
        self.left = left
        self.right = right


class NotAnInvolutionError(GroupError):
    """An involution was required."""

    def __init__(self, images: tuple[int, ...]):
        super().__init__(f"{images} is not an involution")
        self.images = images


class SupportUndefinedError(GroupError):
    """Non-basis involution of type B or D."""

    def __init__(self, images: tuple[int, ...]):
        super().__init__(f"support not well-defined for non-basis involution {images}")
        self.images = images


class CartanTypeError(GroupError):
    """Operation defined only for some Cartan types."""

    def __init__(self, operation: str, expected: str, got: str):
        super().__init__(f"{operation} is defined for type {expected} only, got {got}")
        self.operation = operation
        self.expected = expected
        self.got = got


class EnumerationLimitError(GroupError):
    """Requested group is too large to enumerate."""

    def __init__(self, rank: int, limit: int):
        super().__init__(f"Rank {rank} exceeds enumeration limit {limit}")
        self.rank = rank
        self.limit = limit


# =============================================================================
# Root System Errors
# =============================================================================


class RootSystemError(BruhatOrbitsError):
    """Base exception for root system errors."""

    pass


class RootNotInSystemError(RootSystemError):
    """Root is not a positive root of the ambient system."""

    def __init__(self, root: str, system: str):
        super().__init__(f"Root {root} is not a positive root of {system}")
        self.root = root
        self.system = system


class NonOrthogonalRootsError(RootSystemError):
    """A set of roots expected to be pairwise orthogonal is not."""

    def __init__(self, first: str, second: str):
        super().__init__(f"Roots {first} and {second} are not orthogonal")
        self.first = first
        self.second = second


class RootParseError(RootSystemError):
    """Root text could not be parsed."""

    def __init__(self, text: str):
        super().__init__(f"Cannot parse root '{text}' (expected e1-e2, e1+e5, e3 or 2e4)")
        self.text = text


# =============================================================================
# Matrix Errors
# =============================================================================


class MatrixError(BruhatOrbitsError):
    """Base exception for exact matrix computations."""

    pass


class ShapeMismatchError(MatrixError):
    """Matrix operands have incompatible shapes."""

    def __init__(self, reason: str):
        super().__init__(f"Shape mismatch: {reason}")


class SingularMatrixError(MatrixError):
    """Group element is not an invertible upper-triangular matrix."""

    def __init__(self, reason: str):
        super().__init__(f"Matrix is not invertible in B: {reason}", recoverable=False)


# =============================================================================
# Orbit Errors
# =============================================================================


class OrbitError(BruhatOrbitsError):
    """Base exception for orbit computations."""

    pass


class IndexTupleError(OrbitError):
    """Index tuple operation applied outside its domain."""

    def __init__(self, indices: tuple[int, ...], reason: str):
        super().__init__(f"Invalid index tuple {indices}: {reason}")
        self.indices = indices
        self.reason = reason


class HypothesisError(OrbitError):
    """Inputs do not satisfy the hypotheses of a vanishing check."""

    def __init__(self, reason: str):
        super().__init__(f"hypothesis not satisfied: {reason}")
        self.reason = reason


class ParityConditionError(HypothesisError):
    """The two support parity conditions disagree when |I u J| = n - a + 1."""

    def __init__(self, involution: str, a: int, b: int):
        super().__init__(f"parity conditions disagree for {involution} at a={a}, b={b}")
        self.involution = involution
        self.a = a
        self.b = b


# =============================================================================
# Chain Errors
# =============================================================================


class PairTypeError(BruhatOrbitsError):
    """Pair of involutions does not have the requested table type."""

    def __init__(self, expected: str, reason: str):
        super().__init__(f"Pair is not of type {expected}: {reason}")
        self.expected = expected


# =============================================================================
# Configuration Errors
# =============================================================================


class ConfigError(BruhatOrbitsError):
    """Base exception for configuration errors."""

    def __init__(self, message: str):
        super().__init__(message, recoverable=False)


class RankLimitError(ConfigError):
    """Requested rank is outside what a command supports."""

    def __init__(self, command: str, rank: int, limit: int):
        super().__init__(f"Command '{command}' supports rank <= {limit}, got {rank}")
        self.command = command
        self.rank = rank
        self.limit = limit
