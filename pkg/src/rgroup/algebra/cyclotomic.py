"""Exact arithmetic in Q(ζ_N), stored as integer coordinates in the power basis mod Φ_N."""

# Libraries
import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import Poly, cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def _modulus(order: int) -> tuple[int, ...]:
    """Coefficients of Φ_order, lowest degree first."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(order, _x), _x).all_coeffs()))


def _reduce(coeffs: list[int], order: int) -> tuple[int, ...]:
    phi = _modulus(order)
    degree = len(phi) - 1
    coeffs = list(coeffs) + [0] * max(0, degree - len(coeffs))
    for k in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[k]
        if c:
            for j in range(degree + 1):
                coeffs[k - degree + j] -= c * phi[j]
    return tuple(coeffs[:degree])


@dataclass(frozen=True)
class CyclotomicNumber:
    order: int
    coeffs: tuple[int, ...]

    @classmethod
    def root_of_unity(cls, order: int, k: int) -> "CyclotomicNumber":
        k %= order
        return cls(order, _reduce([0] * k + [1], order))

    @classmethod
    def integer(cls, order: int, n: int) -> "CyclotomicNumber":
        return cls(order, _reduce([n], order))

    def _coerce(self, other) -> "CyclotomicNumber":
        if isinstance(other, int):
            return CyclotomicNumber.integer(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"Cannot mix Q(ζ_{self.order}) and Q(ζ_{other.order})")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        product = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return CyclotomicNumber(self.order, _reduce(product, self.order))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber.integer(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation ζ ↦ ζ⁻¹."""
        out = [0] * self.order
        for k, a in enumerate(self.coeffs):
            out[(-k) % self.order] += a
        return CyclotomicNumber(self.order, _reduce(out, self.order))

    def exact_divide(self, n: int) -> "CyclotomicNumber":
        if any(a % n for a in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {n} in Z[ζ_{self.order}]")
        return CyclotomicNumber(self.order, tuple(a // n for a in self.coeffs))

    def rational(self) -> int | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else 0

    def __str__(self) -> str:
        value = self.rational()
        if value is not None:
            return str(value)
        terms = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            base = "1" if k == 0 else (f"ζ{self.order}" if k == 1 else f"ζ{self.order}^{k}")
            if k == 0:
                text = str(abs(a))
            elif abs(a) == 1:
                text = base
            else:
                text = f"{abs(a)}{base}"
            terms.append(("-" if a < 0 else "+", text))
        sign, text = terms[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def field_order(exponent: int) -> int:
    """Order of the cyclotomic field used for a group of the given exponent."""
    return math.lcm(exponent, 2)
