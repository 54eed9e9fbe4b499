"""Dense univariate polynomials with integer coefficients."""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from .exceptions import DomainError


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple, so the leading
    coefficient of a nonzero polynomial is always nonzero.
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def x_pow_minus_one(cls, degree: int) -> "IntPoly":
        return cls((-1,) + (0,) * (degree - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        # skip zero coefficients: products of x^p - 1 factors are very sparse
        rhs = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in rhs:
                    out[i + j] += a * b
        return IntPoly(out)

    def divmod_monic(self, divisor: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        """Exact quotient and remainder by a monic divisor."""
        if divisor.is_zero or divisor.leading != 1:
            raise DomainError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly(), self
        quot = [0] * (len(rem) - dd)
        dcoeffs = [(j, b) for j, b in enumerate(divisor.coeffs[:-1]) if b]
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quot[i - dd] = c
                rem[i] = 0
                for j, b in dcoeffs:
                    rem[i - dd + j] -= c * b
        return IntPoly(quot), IntPoly(rem[:dd])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                xp = "x" if i == 1 else f"x^{i}"
                body = xp if a == 1 else f"{a}*{xp}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_product(polys: Sequence[IntPoly]) -> IntPoly:
    out = IntPoly((1,))
    for p in polys:
        out = out * p
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, via x^d - 1 = prod_{e | d} Phi_e."""
    if d < 1:
        raise DomainError(f"cyclotomic index must be positive, got {d}")
    num = IntPoly.x_pow_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            num, rem = num.divmod_monic(cyclotomic(e))
            assert rem.is_zero
    return num
