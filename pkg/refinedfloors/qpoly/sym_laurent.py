"""SymLaurent - Laurent polynomials in q^(1/2) with integer coefficients"""
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from errors import HalfIntegerExponent, InexactDivision, ZeroPolynomial


class SymLaurent:
    """
    Laurent polynomial in u = q^(1/2).

    Exponents are stored in u-units so every exponent is an integer;
    q^(n/2) is the key n. Zero coefficients are never stored.
    Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        self._coeffs: Dict[int, int] = {
            int(e): int(c) for e, c in (coeffs or {}).items() if c != 0
        }

    @classmethod
    def monomial(cls, u_exponent: int, coeff: int = 1) -> "SymLaurent":
        return cls({u_exponent: coeff})

    @classmethod
    def one(cls) -> "SymLaurent":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "SymLaurent":
        return cls()

    # ─── Inspection ───

    def is_zero(self) -> bool:
        return not self._coeffs

    def items(self) -> Iterator[Tuple[int, int]]:
        """(u-exponent, coefficient) pairs, highest exponent first."""
        return iter(sorted(self._coeffs.items(), reverse=True))

    def coeff(self, u_exponent: int) -> int:
        return self._coeffs.get(u_exponent, 0)

    @property
    def degree_u(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def valuation_u(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomial("the zero polynomial has no valuation")
        return min(self._coeffs)

    @property
    def degree(self) -> Fraction:
        """Degree in q (may be a half-integer)."""
        return Fraction(self.degree_u, 2)

    def is_palindromic(self) -> bool:
        return all(self._coeffs.get(-e, 0) == c for e, c in self._coeffs.items())

    # ─── Arithmetic ───

    def __add__(self, other: Union["SymLaurent", int]) -> "SymLaurent":
        other = _coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return SymLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "SymLaurent":
        return SymLaurent({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Union["SymLaurent", int]) -> "SymLaurent":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["SymLaurent", int]) -> "SymLaurent":
        return _coerce(other) - self

    def __mul__(self, other: Union["SymLaurent", int]) -> "SymLaurent":
        if isinstance(other, int):
            return SymLaurent({e: c * other for e, c in self._coeffs.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return SymLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "SymLaurent":
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = SymLaurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, u_offset: int) -> "SymLaurent":
        """Multiply by u^u_offset."""
        return SymLaurent({e + u_offset: c for e, c in self._coeffs.items()})

    def exact_div(self, divisor: "SymLaurent") -> "SymLaurent":
        """
        Exact quotient self / divisor.

        Raises:
            ZeroPolynomial: divisor is zero
            InexactDivision: divisor does not divide self over the integers
        """
        if divisor.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        if self.is_zero():
            return SymLaurent()

        remainder = dict(self._coeffs)
        d_top = divisor.degree_u
        d_lead = divisor.coeff(d_top)
        d_low = divisor.valuation_u
        floor = min(remainder) - d_low  # lowest exponent a quotient term can have
        quotient: Dict[int, int] = {}

        while remainder:
            top = max(remainder)
            shift = top - d_top
            if shift < floor:
                break
            c = remainder[top]
            if c % d_lead:
                raise InexactDivision(f"leading coefficient {c} not divisible by {d_lead}")
            factor = c // d_lead
            quotient[shift] = factor
            for e, dc in divisor._coeffs.items():
                key = e + shift
                value = remainder.get(key, 0) - factor * dc
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)

        if remainder:
            raise InexactDivision(f"non-zero remainder dividing {self} by {divisor}")
        return SymLaurent(quotient)

    # ─── Evaluation and output ───

    def evaluate(self, q: int) -> int:
        """
        Value at q = 1 or q = -1.

        Raises:
            HalfIntegerExponent: q = -1 and some exponent is not an integer power of q
        """
        if q == 1:
            return sum(self._coeffs.values())
        if q == -1:
            if any(e % 2 for e in self._coeffs):
                raise HalfIntegerExponent(f"{self} has half-integer q-exponents; value at q=-1 is ambiguous")
            return sum(c if (e // 2) % 2 == 0 else -c for e, c in self._coeffs.items())
        raise ValueError(f"evaluation is only defined at q = 1 or q = -1, not {q}")

    def to_json(self) -> List[List]:
        """[[u-exponent, "coefficient"], ...] sorted by exponent."""
        return [[e, str(c)] for e, c in sorted(self._coeffs.items())]

    @classmethod
    def from_json(cls, payload: List[List]) -> "SymLaurent":
        return cls({int(e): int(c) for e, c in payload})

    def pretty(self) -> str:
        """Human-readable form with q-powers descending, e.g. 'q + 10 + q^-1'."""
        if not self._coeffs:
            return "0"
        parts: List[str] = []
        for e, c in self.items():
            monomial = _q_power(e)
            if monomial == "":
                body = str(abs(c))
            elif abs(c) == 1:
                body = monomial
            else:
                body = f"{abs(c)}*{monomial}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if c < 0 else body))
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, SymLaurent):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"SymLaurent({self.pretty()})"

    __str__ = pretty


def _coerce(value: Union[SymLaurent, int]) -> SymLaurent:
    if isinstance(value, SymLaurent):
        return value
    if isinstance(value, int):
        return SymLaurent({0: value})
    raise TypeError(f"cannot combine SymLaurent with {type(value).__name__}")


def _q_power(u_exponent: int) -> str:
    if u_exponent == 0:
        return ""
    if u_exponent % 2 == 0:
        k = u_exponent // 2
        return "q" if k == 1 else f"q^{k}"
    return f"q^({u_exponent}/2)"
