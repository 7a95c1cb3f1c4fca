"""Dense exact-integer polynomials in one variable t.

Every Poincare polynomial in this package is an ``IntPolynomial``: a tuple of
arbitrary-precision integer coefficients, ``coeffs[i]`` being the coefficient
of t^i, with trailing zeros stripped.  The zero polynomial is the empty tuple.

Coefficients are Python ints on purpose: bracelet counts grow roughly like
2^d/d, so fixed-width integers would overflow around d = 60.
"""
from __future__ import annotations

import itertools


class IntPolynomial:
    """Immutable dense polynomial over the integers.

    >>> p = IntPolynomial([1, 0, 2])
    >>> print(p)
    1 + 2t^2
    >>> print(p * p)
    1 + 4t^2 + 4t^4
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPolynomial:
        """The polynomial ``coefficient * t^exponent``."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * exponent + (coefficient,))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        """Coefficient of t^i; zero outside the stored range."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPolynomial(
            a + b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPolynomial(
            a - b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __rsub__(self, other) -> IntPolynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divexact(self, divisor: int) -> IntPolynomial:
        """Divide every coefficient by ``divisor``, requiring exactness.

        Raises ArithmeticError on any nonzero remainder; a remainder here
        always signals a transcription bug in a closed formula, never a
        rounding situation.
        """
        if divisor == 0:
            raise ZeroDivisionError("divisor is zero")
        out = []
        for i, c in enumerate(self.coeffs):
            q, r = divmod(c, divisor)
            if r != 0:
                raise ArithmeticError(
                    f"coefficient {c} of t^{i} is not divisible by {divisor}"
                )
            out.append(q)
        return IntPolynomial(out)

    # -- structural operations --------------------------------------------

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t^k, i.e. move all coefficients up by k slots."""
        if k < 0:
            raise ValueError("shift amount must be nonnegative")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reverse(self, top_degree: int) -> IntPolynomial:
        """Reverse the coefficient sequence within the window [0, top_degree].

        Sends the coefficient of t^i to t^(top_degree - i).  This is the
        Poincare-duality involution for a space of complex dimension
        top_degree/2.
        """
        if self.degree > top_degree:
            raise ValueError(
                f"degree {self.degree} exceeds reversal window {top_degree}"
            )
        out = [0] * (top_degree + 1)
        for i, c in enumerate(self.coeffs):
            out[top_degree - i] = c
        return IntPolynomial(out)

    def eval_at_one(self) -> int:
        """Sum of coefficients, i.e. the Euler characteristic when the
        polynomial has no odd terms."""
        return sum(self.coeffs)

    def is_palindromic(self, top_degree: int) -> bool:
        return self.degree <= top_degree and self.reverse(top_degree) == self

    def odd_coefficients_vanish(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    # -- serialization -----------------------------------------------------

    def to_coeff_strings(self) -> list[str]:
        """Coefficients as decimal strings, index = exponent."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, strings) -> IntPolynomial:
        return cls(int(s) for s in strings)

    # -- dunder plumbing ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}t" if i == 1 else f"{mag}t^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)
