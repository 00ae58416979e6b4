"""Quantum code parameters from Hermitian dual-containing constacyclic codes.

Six length families n = (q^2+1)/a, each split by q mod 2a into two residues t,
with q = 2am + t.  A family's codes use the centered defining sets of half
width delta = 0..delta_max and have parameters [[n, n-2d+2, d]] for d = 2*delta+2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from qmds.constacyclic import ConstacyclicCode, build_code, max_centered_delta
from qmds.cosets import CosetSpec, DualCheck, dual_containing, skew_image
from qmds.field import PrimePower

log = logging.getLogger(__name__)

# (a, t) -> (slope, intercept) of the largest admissible delta in m
FAMILY_DELTA: dict[tuple[int, int], tuple[int, int]] = {
    (13, 5): (5, 0),
    (13, 21): (5, 3),
    (17, 13): (5, 1),
    (17, 21): (5, 2),
    (25, 7): (7, 0),
    (25, 43): (7, 5),
    (29, 17): (7, 1),
    (29, 41): (7, 4),
    (37, 31): (7, 2),
    (37, 43): (7, 3),
    (41, 9): (9, 0),
    (41, 73): (9, 7),
}


class NotDualContaining(ValueError):
    """Hermitian construction refused: the code does not contain its dual."""


@dataclass(frozen=True)
class QuantumCodeParams:
    q: int
    n: int
    k: int
    d: int
    mds: bool
    a: int | None = None
    t: int | None = None
    m: int | None = None
    delta: int | None = None
    defining_set: tuple[int, ...] = field(default=(), repr=False)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def to_json(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "a": self.a,
            "t": self.t,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "mds": self.mds,
            "delta": self.delta,
            "defining_set": list(self.defining_set),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> QuantumCodeParams:
        return cls(
            q=data["q"],
            n=data["n"],
            k=data["k"],
            d=data["d"],
            mds=data["mds"],
            a=data.get("a"),
            t=data.get("t"),
            m=data.get("m"),
            delta=data.get("delta"),
            defining_set=tuple(data.get("defining_set", ())),
        )


def is_quantum_mds(n: int, k: int, d: int) -> bool:
    """Equality in the quantum Singleton bound 2d <= n - k + 2."""
    return 2 * d == n - k + 2


def hermitian_construct(
    q: int, n: int, k: int, d: int, verdict: DualCheck | bool, **provenance: Any
) -> QuantumCodeParams:
    """[[n, 2k-n, >= d]]_q from a dual-containing [n, k, d] code over GF(q^2)."""
    if not verdict:
        witness = getattr(verdict, "witness", None)
        raise NotDualContaining(
            f"[{n},{k},{d}] over GF({q}^2) does not contain its Hermitian dual"
            + (f" (witness {witness})" if witness is not None else "")
        )
    kq = 2 * k - n
    return QuantumCodeParams(q, n, kq, d, is_quantum_mds(n, kq, d), **provenance)


def quantum_from_code(code: ConstacyclicCode, **provenance: Any) -> QuantumCodeParams:
    verdict = dual_containing(code.T)
    return hermitian_construct(
        code.spec.q,
        code.n,
        code.k,
        code.d_bch,
        verdict,
        delta=code.delta,
        defining_set=code.T.elements,
        **provenance,
    )


@dataclass(frozen=True)
class FamilySpec:
    a: int
    t: int
    m: int

    def __post_init__(self) -> None:
        if (self.a, self.t) not in FAMILY_DELTA:
            raise ValueError(f"(a, t) = ({self.a}, {self.t}) is not one of the twelve families")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")

    @property
    def q(self) -> int:
        return 2 * self.a * self.m + self.t

    @property
    def n(self) -> int:
        return (self.q * self.q + 1) // self.a

    @property
    def form(self) -> str:
        return f"{2 * self.a}m+{self.t}"

    @property
    def delta_max(self) -> int:
        slope, intercept = FAMILY_DELTA[(self.a, self.t)]
        return slope * self.m + intercept

    @property
    def d_max(self) -> int:
        return 2 * self.delta_max + 2

    def spec(self) -> CosetSpec:
        return CosetSpec.from_divisor(self.q, self.a)


def _odd_prime_power(q: int) -> None:
    PrimePower.from_q(q)
    if q % 2 == 0:
        raise ValueError(f"q={q} is not odd")


def classify_q(q: int) -> list[FamilySpec]:
    """Every family (a, t, m) with q = 2am + t, m >= 0, ordered by (a, t)."""
    _odd_prime_power(q)
    out = []
    for a, t in sorted(FAMILY_DELTA):
        if q >= t and (q - t) % (2 * a) == 0:
            out.append(FamilySpec(a, t, (q - t) // (2 * a)))
    return out


def family_for(q: int, a: int) -> FamilySpec:
    for fs in classify_q(q):
        if fs.a == a:
            return fs
    raise ValueError(f"q={q} is not in any family with a={a}")


def enumerate_family(fs: FamilySpec) -> list[QuantumCodeParams]:
    """Build every code of the family, d = 2, 4, ..., d_max.

    Each entry comes from an actual code build and dual-containment check.
    Entries beyond the largest centered set for this n are dropped with a
    warning.
    """
    spec = fs.spec()
    top = fs.delta_max
    limit = max_centered_delta(spec)
    if top > limit:
        log.warning("family %s at q=%d: delta_max=%d truncated to %d", fs.form, fs.q, top, limit)
        top = limit
    out = []
    for delta in range(top + 1):
        code = build_code(spec, delta)
        out.append(quantum_from_code(code, a=fs.a, t=fs.t, m=fs.m))
    return out


def max_delta_search(spec: CosetSpec) -> int | None:
    """Largest delta whose centered defining set is dual-containing.

    Grows T one coset at a time and only checks the interactions of the new
    residues.  Returns None when even C_s fails.
    """
    s = spec.s
    if s is None:
        raise ValueError("centered search needs r = q+1 and q odd")
    members: set[int] = set()
    images: set[int] = set()
    best = None
    for delta in range(max_centered_delta(spec) + 1):
        c = spec.coset_containing((s + spec.r * delta) % spec.rn)
        new = set(c.members) - members
        new_images = {skew_image(spec, j) for j in new}
        if new & images or new_images & members or new & new_images:
            break
        members |= new
        images |= new_images
        best = delta
    return best


def lemma_delta_bound(q: int, a: int) -> int | None:
    """Family delta bound for (q, a), or None if q is not in a family with a."""
    try:
        return family_for(q, a).delta_max
    except ValueError:
        return None
