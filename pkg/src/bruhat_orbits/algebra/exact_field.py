"""
Exact scalars for the orbit computations.

``CycloElement`` is an element of the cyclotomic field Q(zeta_8), stored as the
coefficient 4-tuple of 1, z, z^2, z^3 with z^4 = -1. The field contains
sqrt(2) = z - z^3 and the imaginary unit I = z^2, which is every irrational
scalar the matrix realizations need. ``LaurentPoly`` is a Laurent polynomial in
one parameter t over that field, used for one-parameter degenerations.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Union

from bruhat_orbits.core.exceptions import (
    DivisionByZeroError,
    NotASquareError,
    NotInvertibleError,
    PoleAtZeroError,
)

Rational = Union[int, Fraction]
ScalarLike = Union[int, Fraction, "CycloElement"]

_BASIS_TEXT = ("", "z", "z^2", "z^3")


def _power_of_zeta(exponent: int) -> tuple[int, int]:
    """Return (sign, k) with z^exponent = sign * z^k and 0 <= k < 4."""
    exponent %= 8
    if exponent >= 4:
        return -1, exponent - 4
    return 1, exponent


def _rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class CycloElement:
    """Element a + b*z + c*z^2 + d*z^3 of Q(zeta_8)."""

    __slots__ = ("_coeffs",)

    def __init__(
        self, a: Rational = 0, b: Rational = 0, c: Rational = 0, d: Rational = 0
    ) -> None:
        self._coeffs: tuple[Fraction, Fraction, Fraction, Fraction] = (
            Fraction(a),
            Fraction(b),
            Fraction(c),
            Fraction(d),
        )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> CycloElement:
        a, b, c, d = coeffs
        return cls(a, b, c, d)

    @classmethod
    def coerce(cls, value: object) -> CycloElement:
        """Convert ints and Fractions; raise TypeError for anything else."""
        if isinstance(value, CycloElement):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot interpret {value!r} as an element of Q(zeta_8)")

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not any(self._coeffs)

    @property
    def is_rational(self) -> bool:
        return not (self._coeffs[1] or self._coeffs[2] or self._coeffs[3])

    def rational_part(self) -> Fraction:
        return self._coeffs[0]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloElement):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self._coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __neg__(self) -> CycloElement:
        a, b, c, d = self._coeffs
        return CycloElement(-a, -b, -c, -d)

    def __add__(self, other: object) -> CycloElement:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        rhs = CycloElement.coerce(other)
        return CycloElement.from_coeffs(x + y for x, y in zip(self._coeffs, rhs._coeffs))

    __radd__ = __add__

    def __sub__(self, other: object) -> CycloElement:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        rhs = CycloElement.coerce(other)
        return CycloElement.from_coeffs(x - y for x, y in zip(self._coeffs, rhs._coeffs))

    def __rsub__(self, other: object) -> CycloElement:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        return CycloElement.coerce(other) - self

    def __mul__(self, other: object) -> CycloElement:
        if isinstance(other, (int, Fraction)):
            return CycloElement.from_coeffs(x * other for x in self._coeffs)
        if not isinstance(other, CycloElement):
            return NotImplemented
        if other.is_rational:
            scale = other._coeffs[0]
            return CycloElement.from_coeffs(x * scale for x in self._coeffs)
        if self.is_rational:
            scale = self._coeffs[0]
            return CycloElement.from_coeffs(x * scale for x in other._coeffs)
        product = [Fraction(0)] * 7
        for i, x in enumerate(self._coeffs):
            if not x:
                continue
            for j, y in enumerate(other._coeffs):
                if y:
                    product[i + j] += x * y
        # z^4 = -1
        return CycloElement(
            product[0] - product[4],
            product[1] - product[5],
            product[2] - product[6],
            product[3],
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> CycloElement:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        return self * CycloElement.coerce(other).inverse()

    def __rtruediv__(self, other: object) -> CycloElement:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        return CycloElement.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> CycloElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Galois structure
    # ------------------------------------------------------------------

    def galois(self, k: int) -> CycloElement:
        """Apply the automorphism z -> z^k (k odd)."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) use odd exponents")
        out = [Fraction(0)] * 4
        for m, coeff in enumerate(self._coeffs):
            if coeff:
                sign, target = _power_of_zeta(k * m)
                out[target] += sign * coeff
        return CycloElement.from_coeffs(out)

    def norm(self) -> Fraction:
        """Field norm to Q: the product of the four Galois conjugates."""
        product = self * self.galois(3) * self.galois(5) * self.galois(7)
        return product.rational_part()

    def inverse(self) -> CycloElement:
        if self.is_zero:
            raise DivisionByZeroError(str(self))
        if self.is_rational:
            return CycloElement(1 / self._coeffs[0])
        cofactor = self.galois(3) * self.galois(5) * self.galois(7)
        norm = (self * cofactor).rational_part()
        return cofactor * (1 / norm)

    def sqrt(self) -> CycloElement:
        """
        Square root of q*z^k when it lies in the field.

        Covers rational squares, their negatives (via I = z^2), twice a square
        (via sqrt(2)) and the even powers of z. Anything else raises
        NotASquareError.
        """
        if self.is_zero:
            return ZERO
        support = [k for k, coeff in enumerate(self._coeffs) if coeff]
        if len(support) != 1:
            raise NotASquareError(str(self))
        k = support[0]
        q = self._coeffs[k]
        exponent = k if q > 0 else k + 4
        if exponent % 2:
            raise NotASquareError(str(self))
        sign, half = _power_of_zeta(exponent // 2)
        root_of_unity = CycloElement.from_coeffs(
            sign if m == half else 0 for m in range(4)
        )
        magnitude = abs(q)
        rational_root = _rational_sqrt(magnitude)
        if rational_root is not None:
            root = root_of_unity * rational_root
        else:
            half_root = _rational_sqrt(magnitude / 2)
            if half_root is None:
                raise NotASquareError(str(self))
            root = root_of_unity * SQRT2 * half_root
        if root * root != self:
            raise NotASquareError(str(self))
        return root

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        pieces: list[tuple[bool, str]] = []
        for k, coeff in enumerate(self._coeffs):
            if not coeff:
                continue
            magnitude = _format_rational(abs(coeff))
            text = magnitude if k == 0 else f"{magnitude}*{_BASIS_TEXT[k]}"
            pieces.append((coeff < 0, text))
        if not pieces:
            return "0"
        negative, text = pieces[0]
        rendered = f"-{text}" if negative else text
        for negative, text in pieces[1:]:
            rendered += f" - {text}" if negative else f" + {text}"
        return rendered

    def __repr__(self) -> str:
        return f"CycloElement({self})"


ZERO = CycloElement()
ONE = CycloElement(1)
ZETA = CycloElement(0, 1)
IMAG = CycloElement(0, 0, 1)
SQRT2 = CycloElement(0, 1, 0, -1)


class LaurentPoly:
    """Laurent polynomial in t with CycloElement coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, ScalarLike] | None = None) -> None:
        cleaned: dict[int, CycloElement] = {}
        for exponent, coeff in (terms or {}).items():
            value = CycloElement.coerce(coeff)
            if value:
                cleaned[int(exponent)] = value
        self._terms: tuple[tuple[int, CycloElement], ...] = tuple(sorted(cleaned.items()))

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: ScalarLike, exponent: int) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, coeff: ScalarLike) -> LaurentPoly:
        return cls({0: coeff})

    @classmethod
    def coerce(cls, value: object) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(CycloElement.coerce(value))

    @property
    def terms(self) -> dict[int, CycloElement]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return self._terms[0][0] if self._terms else None

    @property
    def degree(self) -> int | None:
        return self._terms[-1][0] if self._terms else None

    def coefficient(self, exponent: int) -> CycloElement:
        for exp, coeff in self._terms:
            if exp == exponent:
                return coeff
        return ZERO

    def limit_at_zero(self) -> CycloElement:
        """Value at t = 0; defined when no negative power survives."""
        valuation = self.valuation
        if valuation is not None and valuation < 0:
            raise PoleAtZeroError(valuation)
        return self.coefficient(0)

    def evaluate(self, value: ScalarLike) -> CycloElement:
        point = CycloElement.coerce(value)
        total = ZERO
        for exponent, coeff in self._terms:
            total = total + coeff * point**exponent
        return total

    def inverse(self) -> LaurentPoly:
        if self.is_zero:
            raise DivisionByZeroError(str(self))
        if not self.is_monomial:
            raise NotInvertibleError(str(self))
        exponent, coeff = self._terms[0]
        return LaurentPoly({-exponent: coeff.inverse()})

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (CycloElement, int, Fraction)):
            return self._terms == LaurentPoly.coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms})

    def __add__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        out = dict(self._terms)
        for exponent, coeff in LaurentPoly.coerce(other)._terms:
            out[exponent] = out.get(exponent, ZERO) + coeff
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        out: dict[int, CycloElement] = {}
        for e1, c1 in self._terms:
            for e2, c2 in LaurentPoly.coerce(other)._terms:
                out[e1 + e2] = out.get(e1 + e2, ZERO) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        return self * LaurentPoly.coerce(other).inverse()

    def __rtruediv__(self, other: object) -> LaurentPoly:
        if not isinstance(other, (LaurentPoly, CycloElement, int, Fraction)):
            return NotImplemented
        return LaurentPoly.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LaurentPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coeff})*t^{exponent}" for exponent, coeff in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


Scalar = Union[CycloElement, LaurentPoly]


def to_scalar(value: object) -> Scalar:
    """Normalize ints and Fractions to CycloElement; pass scalars through."""
    if isinstance(value, (CycloElement, LaurentPoly)):
        return value
    return CycloElement.coerce(value)


def scalar_inverse(value: Scalar) -> Scalar:
    return value.inverse()


def format_scalar(value: object) -> str:
    return str(to_scalar(value))
