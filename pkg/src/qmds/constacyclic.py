"""eta-constacyclic codes over GF(q^2) from defining sets.

omega is a primitive rn-th root of unity in GF(q^4) and eta = omega^n, so the
roots of x^n - eta are omega^j for j in Omega.  The generator polynomial is
prod_{j in T} (x - omega^j), computed over GF(q^4) and projected back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from qmds.cosets import CosetSpec, DefiningSet, defining_set
from qmds.field import FieldCtx, FieldElement, TowerCtx, field_tower, primitive_root_of_unity
from qmds.poly import Polynomial


@lru_cache(maxsize=None)
def choose_eta_omega(spec: CosetSpec) -> tuple[FieldElement, FieldElement]:
    """(eta in GF(q^2) of order r, omega in GF(q^4) of order rn) with omega^n = eta."""
    _, big = field_tower(spec.q)
    if (big.order - 1) % spec.rn:
        raise ValueError(f"rn={spec.rn} does not divide q^4-1={big.order - 1}")
    omega = primitive_root_of_unity(big, spec.rn)
    eta = big.project(omega**spec.n)
    if eta.multiplicative_order() != spec.r:
        raise RuntimeError(f"eta has order {eta.multiplicative_order()}, expected {spec.r}")
    return eta, omega


def max_centered_delta(spec: CosetSpec) -> int:
    return (spec.n - 1) // 2


def defining_set_centered(spec: CosetSpec, delta: int) -> DefiningSet:
    """Union of C_{s+(q+1)i} for 0 <= i <= delta; exactly 2*delta+1 residues."""
    s = spec.s
    if s is None:
        raise ValueError("centered defining sets need r = q+1 and q odd")
    if not 0 <= delta <= max_centered_delta(spec):
        raise ValueError(f"delta={delta} outside [0, {max_centered_delta(spec)}]")
    r, rn = spec.r, spec.rn
    T = defining_set(spec, ((s + r * i) % rn for i in range(delta + 1)))
    expected = {(s + sign * r * i) % rn for i in range(delta + 1) for sign in (1, -1)}
    if set(T.elements) != expected:
        raise ValueError(f"cosets of {spec} are not symmetric about s={s}")
    return T


def bch_bound(T: DefiningSet) -> int:
    """1 + longest cyclic run of consecutive root indices i, j = 1 + r*i.

    Returns 1 for the empty set and n+1 when T is all of Omega (zero code).
    """
    n = T.spec.n
    idx = {T.spec.index_of(j) for j in T.elements}
    if not idx:
        return 1
    if len(idx) == n:
        return n + 1
    best = 0
    for i in idx:
        if (i - 1) % n in idx:
            continue
        run = 1
        while (i + run) % n in idx:
            run += 1
        best = max(best, run)
    return best + 1


def generator_polynomial(T: DefiningSet, omega: FieldElement) -> Polynomial:
    """Monic prod_{j in T} (x - omega^j) with coefficients projected to GF(q^2)."""
    big = omega.ctx
    assert isinstance(big, TowerCtx)
    g_big = Polynomial.from_roots(big, (omega**j for j in T.elements))
    return g_big.map(big.project, big.subfield)


@dataclass(frozen=True)
class ConstacyclicCode:
    spec: CosetSpec
    eta: FieldElement
    omega: FieldElement
    T: DefiningSet
    gen: Polynomial
    d_bch: int
    delta: int | None = None

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.n - len(self.T)

    @property
    def field(self) -> FieldCtx:
        return self.eta.ctx

    @property
    def tower(self) -> TowerCtx:
        big = self.omega.ctx
        assert isinstance(big, TowerCtx)
        return big

    def modulus_polynomial(self) -> Polynomial:
        """x^n - eta over GF(q^2)."""
        F = self.field
        cs = [F.zero] * (self.n + 1)
        cs[0] = -self.eta
        cs[-1] = F.one
        return Polynomial(F, cs)


def constacyclic_code(T: DefiningSet, delta: int | None = None) -> ConstacyclicCode:
    eta, omega = choose_eta_omega(T.spec)
    gen = generator_polynomial(T, omega)
    return ConstacyclicCode(T.spec, eta, omega, T, gen, bch_bound(T), delta)


def build_code(spec: CosetSpec, delta: int) -> ConstacyclicCode:
    return constacyclic_code(defining_set_centered(spec, delta), delta)


def divides_modulus(code: ConstacyclicCode) -> bool:
    """g(x) | x^n - eta with zero remainder in GF(q^2)[x]."""
    quotient, rem = divmod(code.modulus_polynomial(), code.gen)
    return not rem and quotient * code.gen == code.modulus_polynomial()


def root_pattern_holds(code: ConstacyclicCode) -> bool:
    """g(omega^j) = 0 exactly for j in T, over all of Omega."""
    big = code.tower
    g = code.gen.map(big.embed, big)
    step = code.omega**code.spec.r
    point = code.omega
    for j in code.spec.omega:
        if (not g(point)) != (j in code.T):
            return False
        point = point * step
    return True


def code_checks(code: ConstacyclicCode) -> dict[str, bool]:
    """Structural invariants of a built code, keyed by name."""
    return {
        "monic": code.gen.is_monic(),
        "degree": code.gen.degree == len(code.T),
        "dimension": code.gen.degree + code.k == code.n,
        "divides": divides_modulus(code),
        "roots": root_pattern_holds(code),
        "eta_power": code.omega**code.n == code.tower.embed(code.eta),
    }


def element_json(a: FieldElement) -> list[int]:
    return list(a.coeffs)


def code_to_json(code: ConstacyclicCode) -> dict[str, Any]:
    """Canonical JSON form; field elements as little-endian GF(p) residue lists."""
    F, big = code.field, code.tower
    c0, c1, _ = big.tower_modulus
    return {
        "q": code.spec.q,
        "p": F.p,
        "r": code.spec.r,
        "n": code.n,
        "k": code.k,
        "delta": code.delta,
        "field_modulus": list(F.modulus),
        "tower_modulus": [element_json(c0), element_json(c1), element_json(F.one)],
        "eta": element_json(code.eta),
        "defining_set": list(code.T.elements),
        "generator": [element_json(c) for c in code.gen.coeffs],
        "d_bch": code.d_bch,
    }


def code_from_json(data: dict[str, Any]) -> tuple[CosetSpec, Polynomial, FieldElement]:
    """Spec, generator polynomial and eta decoded from :func:`code_to_json` output."""
    spec = CosetSpec(data["q"], data["r"], data["n"])
    F, _ = field_tower(spec.q)
    if list(F.modulus) != data["field_modulus"]:
        raise ValueError("field modulus differs from this build's GF(q^2)")
    gen = Polynomial(F, [F(c) for c in data["generator"]])
    return spec, gen, F(data["eta"])
