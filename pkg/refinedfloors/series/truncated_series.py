"""TruncatedSeries - power series in x modulo x^(order+1) over an exact ring"""
from typing import Iterable, List, Optional

from sympy.polys.domains import QQ

from errors import ConstantTermNotOne


class TruncatedSeries:
    """
    Power series c_0 + c_1 x + ... + c_N x^N with exact coefficients.

    The coefficient ring is either sympy's QQ domain or a sympy PolyRing
    over QQ; integers are converted on construction. Binary operations
    require both operands to share order and ring.
    """

    __slots__ = ("order", "ring", "_coeffs")

    def __init__(self, coeffs: Iterable, order: int, ring=QQ):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        values = [ring(c) if not _is_element(c, ring) else c for c in coeffs][:order + 1]
        values.extend([ring.zero] * (order + 1 - len(values)))
        self.order = order
        self.ring = ring
        self._coeffs = tuple(values)

    # ─── Constructors ───

    @classmethod
    def one(cls, order: int, ring=QQ) -> "TruncatedSeries":
        return cls([1], order, ring)

    @classmethod
    def geometric(cls, step: int, order: int, ring=QQ) -> "TruncatedSeries":
        """1 / (1 - x^step)"""
        return cls([1 if j % step == 0 else 0 for j in range(order + 1)], order, ring)

    # ─── Access ───

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coefficient(self, i: int):
        return self._coeffs[i] if 0 <= i <= self.order else self.ring.zero

    def __getitem__(self, i: int):
        return self.coefficient(i)

    def to_ring(self, ring) -> "TruncatedSeries":
        """Same series with coefficients lifted into another ring."""
        return TruncatedSeries([ring(c) for c in self._coeffs], self.order, ring)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs[:order + 1], order, self.ring)

    # ─── Arithmetic ───

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ ({self.order} vs {other.order})")
        if self.ring != other.ring:
            raise ValueError("coefficient rings differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)], self.order, self.ring)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self._coeffs, other._coeffs)], self.order, self.ring)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self._coeffs], self.order, self.ring)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            scalar = self.ring(other) if not _is_element(other, self.ring) else other
            return TruncatedSeries([a * scalar for a in self._coeffs], self.order, self.ring)
        self._check(other)
        a, b = self._coeffs, other._coeffs
        out = [self.ring.zero] * (self.order + 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j in range(self.order + 1 - i):
                if b[j]:
                    out[i + j] += ca * b[j]
        return TruncatedSeries(out, self.order, self.ring)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """
        Multiplicative inverse.

        Raises:
            ConstantTermNotOne: constant term is not 1 or -1
        """
        c0 = self._coeffs[0]
        if c0 not in (self.ring.one, -self.ring.one):
            raise ConstantTermNotOne(f"inverse needs constant term ±1, got {c0}")
        out = [c0] + [self.ring.zero] * self.order  # 1/c0 == c0 for ±1
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc += self._coeffs[k] * out[n - k]
            out[n] = -acc * c0
        return TruncatedSeries(out, self.order, self.ring)

    def log(self) -> "TruncatedSeries":
        """
        Formal logarithm of a series with constant term 1.

        Uses n g_n = n f_n - sum_{k<n} k g_k f_{n-k}.
        """
        f = self._coeffs
        if f[0] != self.ring.one:
            raise ConstantTermNotOne(f"log needs constant term 1, got {f[0]}")
        g = [self.ring.zero] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = f[n] * n
            for k in range(1, n):
                acc -= g[k] * k * f[n - k]
            g[n] = acc * QQ(1, n)
        return TruncatedSeries(g, self.order, self.ring)

    def exp(self) -> "TruncatedSeries":
        """
        Formal exponential of a series with zero constant term.

        Uses n f_n = sum_{k=1..n} k g_k f_{n-k}.
        """
        g = self._coeffs
        if g[0]:
            raise ConstantTermNotOne(f"exp needs constant term 0, got {g[0]}")
        f = [self.ring.one] + [self.ring.zero] * self.order
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                if g[k]:
                    acc += g[k] * k * f[n - k]
            f[n] = acc * QQ(1, n)
        return TruncatedSeries(f, self.order, self.ring)

    def pow_int(self, n: int) -> "TruncatedSeries":
        """Integer power; negative powers go through the inverse."""
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = TruncatedSeries.one(self.order, self.ring)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def pow_symbolic(self, exponent, ring) -> "TruncatedSeries":
        """
        self ** exponent = exp(exponent * log(self)) with a polynomial exponent.

        Args:
            exponent: Element of ring (a sympy PolyElement)
            ring: Target coefficient ring

        Raises:
            ConstantTermNotOne: constant term of self is not 1
        """
        if self._coeffs[0] != self.ring.one:
            raise ConstantTermNotOne(f"symbolic powers need constant term 1, got {self._coeffs[0]}")
        return (self.log().to_ring(ring) * exponent).exp()

    def substitute_power(self, k: int) -> "TruncatedSeries":
        """x -> x^k"""
        out = [self.ring.zero] * (self.order + 1)
        for j, c in enumerate(self._coeffs):
            if j * k > self.order:
                break
            out[j * k] = c
        return TruncatedSeries(out, self.order, self.ring)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, self._coeffs))

    def to_ints(self) -> List[int]:
        """Integer coefficients of a QQ series; raises ValueError on a fraction."""
        out = []
        for c in self._coeffs:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(int(c.numerator))
        return out

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)}, order={self.order})"


def _is_element(value, ring) -> bool:
    if ring == QQ:
        return QQ.of_type(value)
    return getattr(value, "ring", None) == ring


def series_from_ints(values: Iterable[int], order: Optional[int] = None) -> TruncatedSeries:
    values = list(values)
    return TruncatedSeries(values, len(values) - 1 if order is None else order)
