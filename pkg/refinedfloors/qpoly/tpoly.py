"""TPoly - dense integer polynomials in t"""
from typing import Iterable, List, Sequence, Union


class TPoly:
    """
    Polynomial in t with integer coefficients, stored densely.

    Index i holds the coefficient of t^i; trailing zeros are trimmed so
    equal polynomials have equal coefficient tuples.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def one(cls) -> "TPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "TPoly":
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> int:
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def truncate(self, n: int) -> "TPoly":
        """Keep the coefficients of t^0 .. t^(n-1)."""
        return TPoly(self._coeffs[:max(n, 0)])

    def __add__(self, other: Union["TPoly", int]) -> "TPoly":
        other = _coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return TPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(-c for c in self._coeffs)

    def __sub__(self, other: Union["TPoly", int]) -> "TPoly":
        return self + (-_coerce(other))

    def __mul__(self, other: Union["TPoly", int]) -> "TPoly":
        if isinstance(other, int):
            return TPoly(c * other for c in self._coeffs)
        return self.mul_truncated(other, len(self._coeffs) + len(other._coeffs))

    __rmul__ = __mul__

    def mul_truncated(self, other: "TPoly", n: int) -> "TPoly":
        """Product modulo t^n."""
        a, b = self._coeffs, other._coeffs
        if not a or not b or n <= 0:
            return TPoly()
        out = [0] * min(n, len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if i >= len(out):
                break
            if ca == 0:
                continue
            for j, cb in enumerate(b[:len(out) - i]):
                out[i + j] += ca * cb
        return TPoly(out)

    def __pow__(self, n: int) -> "TPoly":
        result = TPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def to_json(self) -> List[str]:
        return [str(c) for c in self._coeffs]

    def pretty(self) -> str:
        if not self._coeffs:
            return "0"
        parts: List[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            monomial = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            body = str(abs(c)) if not monomial else (monomial if abs(c) == 1 else f"{abs(c)}*{monomial}")
            if parts:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
            else:
                parts.append(f"-{body}" if c < 0 else body)
        return " ".join(parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TPoly({self.pretty()})"

    __str__ = pretty


def _coerce(value: Union[TPoly, int, Sequence[int]]) -> TPoly:
    if isinstance(value, TPoly):
        return value
    if isinstance(value, int):
        return TPoly((value,))
    raise TypeError(f"cannot combine TPoly with {type(value).__name__}")
