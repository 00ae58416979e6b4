"""Dense univariate polynomials over a finite field.

Coefficients are field elements stored little-endian with no trailing zeros.
The field object only needs ``zero``, ``one`` and ``order``; elements need the
usual arithmetic operators.  Used both for the modulus search inside the field
module (over GF(p) and GF(q^2)) and for generator polynomials of codes.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Any

from sympy import factorint


class Polynomial:
    """Polynomial with coefficients in a single finite field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Any, coeffs: Iterable[Any] = ()) -> None:
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def x(cls, field: Any) -> Polynomial:
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: Any, c: Any) -> Polynomial:
        return cls(field, (c,))

    @classmethod
    def from_roots(cls, field: Any, roots: Iterable[Any]) -> Polynomial:
        """Monic polynomial prod (x - root)."""
        cs = [field.one]
        for root in roots:
            # multiply by (x - root) in place, high degree first
            cs.append(field.zero)
            for i in range(len(cs) - 1, 0, -1):
                cs[i] = cs[i - 1] - root * cs[i]
            cs[0] = -root * cs[0]
        return cls(field, cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Any:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"({c})" if i == 0 else f"({c})*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def _check(self, other: Polynomial) -> None:
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Any) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial(self.field, [c * other for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial(self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = divisor.coeffs
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            return Polynomial(self.field), Polynomial(self.field, rem)
        inv_lead = self.field.one / dv[-1]
        quot = [self.field.zero] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c * inv_lead
            quot[i - dd] = c
            for j in range(dd + 1):
                rem[i - dd + j] = rem[i - dd + j] - c * dv[j]
        return Polynomial(self.field, quot), Polynomial(self.field, rem[:dd])

    def __floordiv__(self, divisor: Polynomial) -> Polynomial:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Polynomial) -> Polynomial:
        return divmod(self, divisor)[1]

    def __call__(self, point: Any) -> Any:
        """Horner evaluation; ``point`` may live in an extension of the field."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return self.field.zero if acc is None else acc

    def monic(self) -> Polynomial:
        if not self.coeffs:
            return self
        return self * (self.field.one / self.coeffs[-1])

    def map(self, fn: Any, field: Any) -> Polynomial:
        """Apply ``fn`` to every coefficient, landing in ``field``."""
        return Polynomial(field, [fn(c) for c in self.coeffs])

    def powmod(self, exponent: int, modulus: Polynomial) -> Polynomial:
        result = Polynomial.constant(self.field, self.field.one) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            exponent >>= 1
            if exponent:
                base = (base * base) % modulus
        return result


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def is_irreducible(f: Polynomial) -> bool:
    """Rabin's test over the coefficient field GF(Q).

    f of degree k is irreducible iff x^(Q^k) = x mod f and
    gcd(f, x^(Q^(k/r)) - x) = 1 for every prime r dividing k.
    """
    k = f.degree
    if k < 1:
        return False
    if k == 1:
        return True
    f = f.monic()
    x = Polynomial.x(f.field) % f
    big_q = f.field.order
    frob: list[Polynomial] = [x]
    for _ in range(k):
        frob.append(frob[-1].powmod(big_q, f))
    if frob[k] != x:
        return False
    for r in factorint(k):
        if gcd(f, frob[k // r] - x).degree > 0:
            return False
    return True


def coefficient_ints(f: Polynomial) -> list[int]:
    """Integer encodings of the coefficients, little-endian."""
    return [int(c) for c in f.coeffs]


def poly_from_ints(field: Any, values: Sequence[int]) -> Polynomial:
    return Polynomial(field, [field.from_int(v) for v in values])
