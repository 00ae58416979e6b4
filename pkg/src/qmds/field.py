"""Finite fields GF(p), GF(q^2) and GF(q^4) for q = p^l.

GF(p^k) for k in {1, 2l} is a polynomial-basis extension of GF(p) modulo a
monic irreducible polynomial.  GF(q^4) is a quadratic extension of GF(q^2)
modulo y^2 + c1*y + c0, so an element of GF(q^4) is a pair a0 + a1*y with
a0, a1 in GF(q^2) and projecting to GF(q^2) is coefficient extraction.

Every element is a tuple of GF(p) residues (little-endian; for GF(q^4) the
residues of a0 followed by those of a1) and encodes to the integer
sum(c_i * p^i).  That integer encoding fixes all search orders: moduli and
canonical generators are the first admissible candidates in increasing
encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Union

import numpy as np
from sympy import factorint, isprime

from qmds.poly import Polynomial, is_irreducible


class SubfieldError(ValueError):
    """Element of GF(q^4) does not lie in GF(q^2)."""


@dataclass(frozen=True)
class PrimePower:
    p: int
    l: int = 1

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError(f"exponent must be >= 1, got {self.l}")
        if not isprime(self.p):
            raise ValueError(f"p={self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p**self.l

    @classmethod
    def from_q(cls, q: int) -> PrimePower:
        if q < 2:
            raise ValueError(f"q={q} is not a prime power")
        f = factorint(q)
        if len(f) != 1:
            raise ValueError(f"q={q} is not a prime power")
        (p, l), = f.items()
        return cls(p, l)


def _digits(v: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        v, d = divmod(v, p)
        out.append(d)
    if v:
        raise ValueError("integer encoding out of range")
    return tuple(out)


Coeffs = tuple[int, ...]


class FieldCtx:
    """GF(p^degree) in polynomial basis over GF(p).

    Immutable after construction; build through :func:`build_field`.
    """

    subfield: FieldCtx | None = None
    _generator_start = 1

    def __init__(self, pp: PrimePower, degree: int, modulus: Coeffs) -> None:
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of the field degree")
        self.pp = pp
        self.p = pp.p
        self.degree = degree
        self.modulus = tuple(modulus)
        self.order = pp.p**degree
        self.zero = FieldElement(self, (0,) * degree)
        self.one = FieldElement(self, (1,) + (0,) * (degree - 1))

    @property
    def key(self) -> tuple:
        return (self.p, self.degree, self.modulus)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.degree})"

    # raw tuple arithmetic

    def _add(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: Coeffs) -> Coeffs:
        p = self.p
        return tuple(-x % p for x in a)

    def _scale(self, a: Coeffs, c: int) -> Coeffs:
        p = self.p
        return tuple(x * c % p for x in a)

    def _mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p, k = self.p, self.degree
        if k == 1:
            return (a[0] * b[0] % p,)
        if k == 2:
            # x^2 = -f1*x - f0
            f0, f1 = self.modulus[0], self.modulus[1]
            t0 = a[0] * b[0]
            t1 = a[0] * b[1] + a[1] * b[0]
            t2 = a[1] * b[1]
            return ((t0 - f0 * t2) % p, (t1 - f1 * t2) % p)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        f = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * f[j]
        return tuple(c % p for c in prod[:k])

    def _pow(self, a: Coeffs, e: int) -> Coeffs:
        result = self.one.coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            e >>= 1
            if e:
                base = self._mul(base, base)
        return result

    def _inv(self, a: Coeffs) -> Coeffs:
        if not any(a):
            raise ZeroDivisionError("division by zero in " + repr(self))
        return self._pow(a, self.order - 2)

    # element construction

    def __call__(self, value: Union[int, Coeffs, FieldElement]) -> FieldElement:
        """Element from a GF(p) constant, a coefficient tuple or an element."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError(f"element of {value.ctx} is not in {self}")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) for c in value)
        if len(coeffs) != self.degree or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {coeffs} for {self}")
        return FieldElement(self, coeffs)

    def from_int(self, v: int) -> FieldElement:
        if not 0 <= v < self.order:
            raise ValueError(f"encoding {v} out of range for {self}")
        return FieldElement(self, _digits(v, self.p, self.degree))

    def elements(self):
        for v in range(self.order):
            yield self.from_int(v)

    @cached_property
    def _order_primes(self) -> tuple[int, ...]:
        return tuple(factorint(self.order - 1))

    @cached_property
    def generator(self) -> FieldElement:
        """Smallest element (by encoding) of multiplicative order |F|-1."""
        n = self.order - 1
        one = self.one.coeffs
        cofactors = [n // r for r in self._order_primes]
        for v in range(self._generator_start, self.order):
            g = _digits(v, self.p, self.degree)
            if all(self._pow(g, c) != one for c in cofactors):
                return FieldElement(self, g)
        raise RuntimeError(f"no generator found in {self}")

    def conj_exponent(self) -> int:
        return self.pp.q

    @cached_property
    def tables(self) -> FieldTables:
        return FieldTables(self)


class TowerCtx(FieldCtx):
    """Quadratic extension of ``subfield`` modulo y^2 + c1*y + c0."""

    def __init__(self, subfield: FieldCtx, c0: FieldElement, c1: FieldElement) -> None:
        self.subfield = subfield
        self.half = subfield.degree
        self.c0 = c0.coeffs
        self.c1 = c1.coeffs
        flat = subfield.modulus + self.c0 + self.c1
        self.pp = subfield.pp
        self.p = subfield.p
        self.degree = 2 * subfield.degree
        self.modulus = flat
        self.order = subfield.order**2
        # encodings below |subfield| are subfield elements, never primitive here
        self._generator_start = subfield.order
        self.zero = FieldElement(self, (0,) * self.degree)
        self.one = FieldElement(self, (1,) + (0,) * (self.degree - 1))

    @property
    def tower_modulus(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        sub = self.subfield
        return (FieldElement(sub, self.c0), FieldElement(sub, self.c1), sub.one)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.degree}) over {self.subfield!r}"

    def _mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        sub, h = self.subfield, self.half
        a0, a1, b0, b1 = a[:h], a[h:], b[:h], b[h:]
        t0 = sub._mul(a0, b0)
        t2 = sub._mul(a1, b1)
        t1 = sub._sub(sub._sub(sub._mul(sub._add(a0, a1), sub._add(b0, b1)), t0), t2)
        return sub._sub(t0, sub._mul(self.c0, t2)) + sub._sub(t1, sub._mul(self.c1, t2))

    def _inv(self, a: Coeffs) -> Coeffs:
        if not any(a):
            raise ZeroDivisionError("division by zero in " + repr(self))
        sub, h = self.subfield, self.half
        a0, a1 = a[:h], a[h:]
        # (a0 + a1 y)(a0 - c1 a1 - a1 y) = a0^2 - c1 a0 a1 + c0 a1^2 in the subfield
        norm = sub._add(
            sub._sub(sub._mul(a0, a0), sub._mul(self.c1, sub._mul(a0, a1))),
            sub._mul(self.c0, sub._mul(a1, a1)),
        )
        ninv = sub._inv(norm)
        return sub._mul(sub._sub(a0, sub._mul(self.c1, a1)), ninv) + sub._mul(sub._neg(a1), ninv)

    def embed(self, b: FieldElement) -> FieldElement:
        if b.ctx != self.subfield:
            raise ValueError(f"{b.ctx} is not the subfield of {self}")
        return FieldElement(self, b.coeffs + (0,) * self.half)

    def project(self, a: FieldElement) -> FieldElement:
        if a.ctx != self:
            raise ValueError(f"element of {a.ctx} is not in {self}")
        if any(a.coeffs[self.half :]):
            raise SubfieldError(f"{a!r} is not in {self.subfield}")
        return FieldElement(self.subfield, a.coeffs[: self.half])


class FieldElement:
    """Value-type element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Coeffs) -> None:
        self.ctx = ctx
        self.coeffs = coeffs

    def _other(self, other: object) -> Coeffs:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ValueError(f"field mismatch: {self.ctx} vs {other.ctx}")
            return other.coeffs
        if isinstance(other, (int, np.integer)):
            return self.ctx(int(other)).coeffs
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.coeffs, b))

    def __rsub__(self, other: object) -> FieldElement:
        return (-self) + other

    def __neg__(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx._neg(self.coeffs))

    def __mul__(self, other: object) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, b))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx._inv(self.coeffs))

    def __truediv__(self, other: object) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, self.ctx._inv(b)))

    def __rtruediv__(self, other: object) -> FieldElement:
        return self.ctx(other) * self.inverse()

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        if e and any(self.coeffs):
            e %= self.ctx.order - 1
            if e == 0:
                return self.ctx.one
        return FieldElement(self.ctx, self.ctx._pow(self.coeffs, e))

    def conj(self) -> FieldElement:
        """Hermitian conjugate a -> a^q."""
        return self ** self.ctx.conj_exponent()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.ctx == other.ctx
        if isinstance(other, int):
            return self.coeffs == self.ctx(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __int__(self) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.ctx.p + c
        return v

    __index__ = __int__

    def __repr__(self) -> str:
        return f"{self.ctx!r}{list(self.coeffs)}"

    def multiplicative_order(self) -> int:
        if not self:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.ctx.order - 1
        order = n
        for r, e in factorint(n).items():
            for _ in range(e):
                if (self ** (order // r)) == self.ctx.one:
                    order //= r
                else:
                    break
        return order


@lru_cache(maxsize=None)
def _build(p: int, l: int, k: int) -> FieldCtx:
    pp = PrimePower(p, l)
    if k == 1:
        return FieldCtx(pp, 1, (0, 1))
    if k == 2 * l:
        prime = _build(p, l, 1)
        for v in range(p**k):
            coeffs = _digits(v, p, k) + (1,)
            if is_irreducible(Polynomial(prime, [prime(c) for c in coeffs])):
                return FieldCtx(pp, k, coeffs)
        raise RuntimeError(f"no irreducible polynomial of degree {k} over GF({p})")
    if k == 4 * l:
        sub = _build(p, l, 2 * l)
        big = sub.order
        for v in range(big * big):
            c0, c1 = sub.from_int(v % big), sub.from_int(v // big)
            if is_irreducible(Polynomial(sub, [c0, c1, sub.one])):
                return TowerCtx(sub, c0, c1)
        raise RuntimeError(f"no irreducible quadratic over {sub}")
    raise ValueError(f"extension degree {k} is not one of 1, 2l, 4l for l={l}")


def build_field(pp: PrimePower | int, k: int) -> FieldCtx:
    """Field of order p^k for k in {1, 2l, 4l}, with a verified modulus.

    ``pp`` may be a :class:`PrimePower` or the integer q.  Results are cached,
    so repeated calls return the same context object.
    """
    if not isinstance(pp, PrimePower):
        pp = PrimePower.from_q(int(pp))
    return _build(pp.p, pp.l, k)


def field_tower(q: int) -> tuple[FieldCtx, TowerCtx]:
    """(GF(q^2), GF(q^4)) with GF(q^4) built as a quadratic extension."""
    pp = PrimePower.from_q(q)
    big = build_field(pp, 4 * pp.l)
    assert isinstance(big, TowerCtx)
    return big.subfield, big


def primitive_root_of_unity(ctx: FieldCtx, order: int) -> FieldElement:
    """generator^((|F|-1)/order), an element of exact multiplicative order ``order``."""
    if order < 1 or (ctx.order - 1) % order:
        raise ValueError(f"order {order} does not divide |{ctx}|-1 = {ctx.order - 1}")
    return ctx.generator ** ((ctx.order - 1) // order)


def subfield_project(a: FieldElement) -> FieldElement:
    if not isinstance(a.ctx, TowerCtx):
        raise ValueError(f"{a.ctx} has no tower subfield")
    return a.ctx.project(a)


def embed(b: FieldElement, big: TowerCtx) -> FieldElement:
    return big.embed(b)


class FieldTables:
    """Log/antilog fast path over integer encodings, vectorised with numpy.

    Addition works digit-wise in base p, multiplication through discrete logs
    of the canonical generator.  Intended for GF(q^2) sizes (up to ~10^5).
    """

    def __init__(self, ctx: FieldCtx) -> None:
        self.ctx = ctx
        self.p = ctx.p
        self.k = ctx.degree
        self.order = ctx.order
        n = ctx.order - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(ctx.order, dtype=np.int64)
        g = ctx.generator.coeffs
        x = ctx.one.coeffs
        for i in range(n):
            v = int(FieldElement(ctx, x))
            exp[i] = v
            log[v] = i
            x = ctx._mul(x, g)
        exp[n:] = exp[:n]
        self.exp = exp
        self.log = log
        self.powers = self.p ** np.arange(self.k, dtype=np.int64)
        values = np.arange(ctx.order, dtype=np.int64)
        self.neg_table = self.combine((-self.split(values)) % self.p)
        q = ctx.pp.q
        conj = np.zeros(ctx.order, dtype=np.int64)
        conj[1:] = exp[(log[1:] * q) % n]
        self.conj_table = conj
        inv = np.zeros(ctx.order, dtype=np.int64)
        inv[1:] = exp[(n - log[1:]) % n]
        self.inv_table = inv

    def split(self, x: np.ndarray) -> np.ndarray:
        """Base-p digits along a new trailing axis."""
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self.powers) % self.p

    def combine(self, digits: np.ndarray) -> np.ndarray:
        return (digits * self.powers).sum(axis=-1)

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.k == 1:
            return (np.asarray(x) + np.asarray(y)) % self.p
        return self.combine((self.split(x) + self.split(y)) % self.p)

    def sum(self, x: np.ndarray, axis: int) -> np.ndarray:
        """Field sum along ``axis``: digit-wise integer sum, reduced once."""
        x = np.asarray(x, dtype=np.int64)
        axis = axis % x.ndim
        return self.combine(self.split(x).sum(axis=axis) % self.p)

    def neg(self, x: np.ndarray) -> np.ndarray:
        return self.neg_table[x]

    def sub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.add(x, self.neg_table[y])

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = self.exp[self.log[x] + self.log[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def inv(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("division by zero in " + repr(self.ctx))
        return self.inv_table[x]

    def conj(self, x: np.ndarray) -> np.ndarray:
        return self.conj_table[x]
