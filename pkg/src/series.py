"""
Series - Exact univariate polynomials and rational generating functions in y.

Denominators are products of (1 - y^a)^m, so every series has a unit constant
term and expands by truncated multiplication with 1 + y^a + y^2a + ...
Arithmetic runs in sympy's sparse integer polynomial ring.
"""

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul
from sympy.polys.rings import PolyElement, ring

from config import GSTAR_NUMERATOR_FILE


RING, Y = ring("y", ZZ)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in y; coeffs[i] is the coefficient of y^i."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly":
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_ring(cls, element: PolyElement) -> "IntPoly":
        terms = {monom[0]: int(coeff) for monom, coeff in element.items()}
        size = max(terms, default=-1) + 1
        return cls(tuple(terms.get(i, 0) for i in range(size)))

    def to_ring(self) -> PolyElement:
        return RING.from_dict({(i,): c for i, c in enumerate(self.coeffs) if c})

    @property
    def degree(self) -> float:
        """len - 1, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def coefficient(self, exponent: int) -> int:
        return self.coeffs[exponent] if 0 <= exponent < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_ring(self.to_ring() + other.to_ring())

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_ring(self.to_ring() - other.to_ring())

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly.from_ring(self.to_ring() * other.to_ring())

    def __pow__(self, exponent: int) -> "IntPoly":
        return IntPoly.from_ring(self.to_ring() ** exponent)

    def __call__(self, value: int) -> int:
        return sum(c * value**i for i, c in enumerate(self.coeffs))

    def as_expr(self) -> sympy.Expr:
        y = sympy.Symbol("y")
        return sum((c * y**i for i, c in enumerate(self.coeffs)), sympy.Integer(0))


ONE = IntPoly((1,))


def one_minus_y_power(a: int) -> IntPoly:
    """1 - y^a."""
    return ONE - IntPoly.monomial(a)


@dataclass(frozen=True)
class RationalGF:
    """numerator / prod (1 - y^a)^m over the (a, m) pairs of `denominator`."""
    numerator: IntPoly
    denominator: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        denominator = tuple((int(a), int(m)) for a, m in self.denominator)
        if any(a < 1 or m < 1 for a, m in denominator):
            raise ValueError(f"Denominator factors need a >= 1 and m >= 1: {denominator}")
        object.__setattr__(self, 'denominator', denominator)

    def denominator_poly(self) -> IntPoly:
        product = ONE
        for a, m in self.denominator:
            product = product * one_minus_y_power(a) ** m
        return product

    def __add__(self, other: "RationalGF") -> "RationalGF":
        if sorted(self.denominator) != sorted(other.denominator):
            raise ValueError("Only series over the same denominator can be added")
        return RationalGF(self.numerator + other.numerator, self.denominator)

    def describe(self) -> str:
        """Human-readable factored form, e.g. (y**3 + ...)/((1 - y)**6)."""
        factors = []
        for a, m in self.denominator:
            base = "(1 - y)" if a == 1 else f"(1 - y**{a})"
            factors.append(base if m == 1 else f"{base}**{m}")
        numerator = str(self.numerator.as_expr())
        if not factors:
            return numerator
        return f"({numerator}) / ({' * '.join(factors)})"


def expand(f: RationalGF, n: int) -> list[int]:
    """First n+1 Taylor coefficients of f at y = 0."""
    if n < 0:
        raise ValueError(f"Number of terms must be nonnegative, got {n}")
    precision = n + 1
    series = f.numerator.to_ring()
    series = rs_mul(series, RING.one, Y, precision)
    for a, m in f.denominator:
        geometric = RING.from_dict({(a * j,): 1 for j in range(n // a + 1)})
        for _ in range(m):
            series = rs_mul(series, geometric, Y, precision)
    coefficients = IntPoly.from_ring(series)
    return [coefficients.coefficient(i) for i in range(precision)]


def closed_form_G() -> RationalGF:
    """Number of magic labellings by magic sum: (1 + 3y + 3y^2 + y^3) / (1 - y)^6."""
    return RationalGF(IntPoly((1, 3, 3, 1)), ((1, 6),))


def type_gf(offset: int) -> RationalGF:
    """Series of one shifted free monoid with six generators of weight 1."""
    return RationalGF(IntPoly.monomial(offset), ((1, 6),))


def load_gstar_numerator(path: Optional[str] = None) -> IntPoly:
    """Read the numerator N and check it against the stored checksum."""
    with open(path or GSTAR_NUMERATOR_FILE, 'r') as f:
        data = json.load(f)
    coefficients = data['coefficients']
    numerator = IntPoly(tuple(coefficients))
    if numerator(1) != data['checksum']:
        raise ValueError(f"Numerator checksum mismatch: N(1) = {numerator(1)}, expected {data['checksum']}")
    return numerator


GSTAR_DENOMINATOR = ((3, 1), (16, 1)) + tuple((a, 1) for a in range(5, 15))


def closed_form_Gstar(numerator: Optional[IntPoly] = None) -> RationalGF:
    """y^17 (1-y)^4 (1-y^2)^2 N / ((1-y^3)(1-y^16) prod_{a=5}^{14} (1-y^a))."""
    numerator = load_gstar_numerator() if numerator is None else numerator
    full = (
        IntPoly.monomial(17)
        * one_minus_y_power(1) ** 4
        * one_minus_y_power(2) ** 2
        * numerator
    )
    return RationalGF(full, GSTAR_DENOMINATOR)


def closed_form_F1_spec() -> RationalGF:
    """F1 with every edge variable set to 1: y^8 / ((1-y)^4 (1-y^4))."""
    return RationalGF(IntPoly.monomial(8), ((1, 4), (4, 1)))


def closed_form_F2_spec() -> RationalGF:
    """F2 with every edge variable set to 1; collapses to the same series as F1."""
    return RationalGF(IntPoly.monomial(8), ((1, 4), (4, 1)))


def quasi_period(f: RationalGF) -> int:
    """lcm of the denominator orders."""
    return math.lcm(1, *(a for a, _ in f.denominator))


def finite_difference(values: Sequence[int], order: int) -> list[int]:
    values = list(values)
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def truncated_product(coefficients: Sequence[int], poly: IntPoly, n: int) -> list[int]:
    """First n+1 coefficients of (sum coefficients[i] y^i) * poly."""
    series = IntPoly(tuple(coefficients)).to_ring()
    product = IntPoly.from_ring(rs_mul(series, poly.to_ring(), Y, n + 1))
    return [product.coefficient(i) for i in range(n + 1)]
