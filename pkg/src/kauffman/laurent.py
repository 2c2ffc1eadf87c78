"""Sparse Laurent polynomials with exact integer coefficients.

A polynomial is stored as a mapping from integer exponents to nonzero
Python integer coefficients, so every operation is exact at any size.
The variable is anonymous; rendering helpers take the variable name as
an argument (``A`` by default, ``q`` after :meth:`LaurentPoly.to_q`).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

__all__ = ["InexactDivisionError", "LaurentPoly", "NotDivisibleByFourError"]


class InexactDivisionError(ArithmeticError):
    """Raised when a quotient of Laurent polynomials has a remainder."""


class NotDivisibleByFourError(ArithmeticError):
    """Raised by ``to_q`` when some exponent is not a multiple of four."""


class LaurentPoly:
    """An immutable Laurent polynomial over the integers.

    Internally a dict mapping exponent to coefficient, with zero
    coefficients never stored.  Supports ring arithmetic, exact division,
    degree queries and canonical text/JSON rendering.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        data: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponent, coefficient in items:
            if coefficient:
                merged = data.get(exponent, 0) + coefficient
                if merged:
                    data[exponent] = merged
                else:
                    del data[exponent]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPoly":
        return cls({exponent: coefficient})

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exponent: int) -> int:
        """Coefficient at the given exponent, zero when absent."""
        return self._terms.get(exponent, 0)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(self._terms)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs, highest exponent first."""
        for exponent in sorted(self._terms, reverse=True):
            yield exponent, self._terms[exponent]

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring arithmetic -------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            merged = terms.get(exponent, 0) + coefficient
            if merged:
                terms[exponent] = merged
            else:
                terms.pop(exponent, None)
        return _wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return _wrap({e: c * other for e, c in self._terms.items()})
        product: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = e1 + e2
                merged = product.get(exponent, 0) + c1 * c2
                if merged:
                    product[exponent] = merged
                else:
                    del product[exponent]
        return _wrap(product)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, offset: int) -> "LaurentPoly":
        """Multiply by the variable raised to ``offset``."""
        return _wrap({e + offset: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute the variable by its reciprocal (negate exponents)."""
        return _wrap({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly, raising :class:`InexactDivisionError` on remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        remainder = dict(self._terms)
        divisor_top = divisor.max_degree()
        divisor_lead = divisor.coeff(divisor_top)
        # an exact quotient spans exactly the exponent range
        # [min(self) - min(divisor), max(self) - max(divisor)]: its
        # extreme terms multiply the divisor's without cancellation.
        # Descending past that floor proves a remainder, and bounds
        # the loop (Laurent division would otherwise recurse forever
        # on inputs like 1 / (A + 1)).
        lowest_shift = self.min_degree() - divisor.min_degree()
        quotient: dict[int, int] = {}
        while remainder:
            top = max(remainder)
            lead = remainder[top]
            factor, residue = divmod(lead, divisor_lead)
            if residue:
                raise InexactDivisionError(
                    f"leading coefficient {lead} not divisible by {divisor_lead}"
                )
            shift = top - divisor_top
            if shift < lowest_shift:
                raise InexactDivisionError(
                    "division leaves a remainder below the divisor range"
                )
            quotient[shift] = factor
            for exponent, coefficient in divisor._terms.items():
                target = exponent + shift
                merged = remainder.get(target, 0) - factor * coefficient
                if merged:
                    remainder[target] = merged
                else:
                    remainder.pop(target, None)
            if remainder and max(remainder) >= top:
                raise InexactDivisionError("division does not terminate")
        return _wrap(quotient)

    def evaluate_poly(self, value: "LaurentPoly") -> "LaurentPoly":
        """Substitute another polynomial for the variable.

        Only valid when this polynomial has no negative exponents.
        """
        if self._terms and self.min_degree() < 0:
            raise ValueError("substitution requires a plain polynomial")
        result = LaurentPoly()
        for exponent, coefficient in self._terms.items():
            result = result + (value**exponent) * coefficient
        return result

    # -- variable change -------------------------------------------------

    def to_q(self) -> "LaurentPoly":
        """Reinterpret a polynomial in A as one in q via q = A**-4.

        Every exponent must be a multiple of four; an A-exponent e becomes
        the q-exponent -e // 4, so maximal A-degree maps to minimal
        q-degree.
        """
        converted: dict[int, int] = {}
        for exponent, coefficient in self._terms.items():
            if exponent % 4:
                raise NotDivisibleByFourError(
                    f"exponent {exponent} is not a multiple of 4"
                )
            converted[-exponent // 4] = coefficient
        return _wrap(converted)

    # -- rendering -------------------------------------------------------

    def to_text(self, var: str = "A") -> str:
        """Canonical text, terms by decreasing exponent.

        Example: ``-A^6 - 3*A^2 - 3*A^-2 - A^-6``.
        """
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exponent, coefficient in self.terms():
            sign = "-" if coefficient < 0 else "+"
            size = abs(coefficient)
            if exponent == 0:
                body = str(size)
            else:
                power = var if exponent == 1 else f"{var}^{exponent}"
                body = power if size == 1 else f"{size}*{power}"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def to_pairs(self) -> list[list[int]]:
        """JSON-friendly [[exponent, coefficient], ...], decreasing exponent."""
        return [[e, c] for e, c in self.terms()]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"


def _coerce(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    return LaurentPoly({0: value})


def _wrap(terms: dict[int, int]) -> LaurentPoly:
    poly = LaurentPoly.__new__(LaurentPoly)
    object.__setattr__(poly, "_terms", terms)
    return poly
