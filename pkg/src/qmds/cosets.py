"""q^2-cyclotomic cosets modulo rn and Hermitian dual containment.

Residues are always normalised to [0, rn).  The roots of x^n - eta are the
powers omega^j for j in Omega = {1 + i*r : 0 <= i < n}, and a defining set is a
union of cosets inside Omega.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

from qmds.field import PrimePower


@dataclass(frozen=True)
class CosetSpec:
    """Arithmetic frame (q, r, n) for cosets of Omega modulo rn."""

    q: int
    r: int
    n: int

    def __post_init__(self) -> None:
        PrimePower.from_q(self.q)
        if self.n < 1 or self.r < 1:
            raise ValueError(f"n and r must be positive, got n={self.n}, r={self.r}")
        if gcd(self.n, self.q) != 1:
            raise ValueError(f"gcd(n, q) = gcd({self.n}, {self.q}) != 1")
        if (self.q + 1) % self.r:
            raise ValueError(f"r={self.r} does not divide q+1={self.q + 1}")
        omega = self.omega_set
        for j in self.omega:
            if j * self.q2 % self.rn not in omega:
                raise ValueError(f"Omega not closed under q^2: {j} leaves it")

    @classmethod
    def from_divisor(cls, q: int, a: int, r: int | None = None) -> CosetSpec:
        """Spec with n = (q^2+1)/a and r = q+1 unless given."""
        if a < 1 or (q * q + 1) % a:
            raise ValueError(f"a={a} does not divide q^2+1={q * q + 1}")
        return cls(q, q + 1 if r is None else r, (q * q + 1) // a)

    @property
    def rn(self) -> int:
        return self.r * self.n

    @property
    def q2(self) -> int:
        return self.q * self.q % self.rn

    @property
    def s(self) -> int | None:
        """(q^2+1)/2 when r = q+1 and q is odd, else None."""
        if self.r == self.q + 1 and self.q % 2:
            return (self.q * self.q + 1) // 2
        return None

    @cached_property
    def omega(self) -> tuple[int, ...]:
        return tuple((1 + i * self.r) % self.rn for i in range(self.n))

    @cached_property
    def omega_set(self) -> frozenset[int]:
        return frozenset(self.omega)

    def index_of(self, j: int) -> int:
        """i with j = 1 + i*r (mod rn), for j in Omega."""
        if j not in self.omega_set:
            raise ValueError(f"{j} is not in Omega")
        return ((j - 1) % self.rn) // self.r

    @cached_property
    def cosets(self) -> tuple[CyclotomicCoset, ...]:
        """Partition of Omega into cosets, ordered by representative."""
        seen: set[int] = set()
        out = []
        for j in sorted(self.omega):
            if j not in seen:
                c = coset_of(self, j)
                seen.update(c.members)
                out.append(c)
        return tuple(out)

    @cached_property
    def _coset_index(self) -> dict[int, CyclotomicCoset]:
        return {j: c for c in self.cosets for j in c.members}

    def coset_containing(self, j: int) -> CyclotomicCoset:
        j %= self.rn
        if j in self._coset_index:
            return self._coset_index[j]
        return coset_of(self, j)


@dataclass(frozen=True)
class CyclotomicCoset:
    rep: int
    members: tuple[int, ...]

    def __contains__(self, j: object) -> bool:
        return j in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def coset_of(spec: CosetSpec, j: int) -> CyclotomicCoset:
    """Orbit of j under multiplication by q^2 modulo rn."""
    if not 0 <= j < spec.rn:
        raise ValueError(f"residue {j} outside [0, {spec.rn})")
    orbit = [j]
    x = j * spec.q2 % spec.rn
    while x != j:
        orbit.append(x)
        x = x * spec.q2 % spec.rn
    members = tuple(sorted(orbit))
    return CyclotomicCoset(members[0], members)


def skew_image(spec: CosetSpec, j: int) -> int:
    """-q*j mod rn."""
    return -spec.q * j % spec.rn


def is_skew_symmetric(spec: CosetSpec, coset: CyclotomicCoset) -> bool:
    return skew_image(spec, coset.rep) in coset


def is_skew_asymmetric_pair(
    spec: CosetSpec, c1: CyclotomicCoset, c2: CyclotomicCoset
) -> bool:
    """Whether -q*C1 = C2 for two distinct cosets."""
    if c1.members == c2.members:
        raise ValueError("identical cosets; use is_skew_symmetric")
    return skew_image(spec, c1.rep) in c2


@dataclass(frozen=True)
class DefiningSet:
    spec: CosetSpec
    cosets: tuple[CyclotomicCoset, ...]
    elements: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        elems: list[int] = []
        for c in self.cosets:
            elems.extend(c.members)
        if len(set(elems)) != len(elems):
            raise ValueError("cosets of a defining set must be disjoint")
        outside = [j for j in elems if j not in self.spec.omega_set]
        if outside:
            raise ValueError(f"defining set leaves Omega at {outside[0]}")
        object.__setattr__(self, "elements", tuple(sorted(elems)))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, j: object) -> bool:
        return j in self._element_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    @cached_property
    def _element_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def defining_set(spec: CosetSpec, reps: Iterable[int]) -> DefiningSet:
    """Union of the cosets containing each of ``reps`` (duplicates merged)."""
    by_rep: dict[int, CyclotomicCoset] = {}
    for j in reps:
        c = spec.coset_containing(j)
        by_rep[c.rep] = c
    return DefiningSet(spec, tuple(by_rep[k] for k in sorted(by_rep)))


@dataclass(frozen=True)
class DualCheck:
    """Verdict of T cap T^{-q} = {} with a witness in the intersection when it fails."""

    contains: bool
    witness: int | None = None

    def __bool__(self) -> bool:
        return self.contains


def coset_criterion(T: DefiningSet) -> bool:
    """No skew-symmetric coset and no skew-asymmetric pair inside T."""
    spec = T.spec
    for i, c in enumerate(T.cosets):
        if is_skew_symmetric(spec, c):
            return False
        for c2 in T.cosets[i + 1 :]:
            if is_skew_asymmetric_pair(spec, c, c2):
                return False
    return True


def dual_containing(T: DefiningSet) -> DualCheck:
    """Hermitian dual containment of the constacyclic code with defining set T.

    The set-intersection answer is cross-checked against the coset
    classification unless Python runs with -O.
    """
    image = {skew_image(T.spec, z) for z in T.elements}
    common = sorted(image.intersection(T.elements))
    result = DualCheck(not common, common[0] if common else None)
    if __debug__:
        assert result.contains == coset_criterion(T), "coset criteria disagree"
    return result


@dataclass(frozen=True)
class CosetStructureReport:
    lemma: str
    passed: bool
    singletons: tuple[int, ...]
    pairs: int
    counterexample: int | None = None


def _half_divisor(spec: CosetSpec) -> int:
    q2p1 = spec.q * spec.q + 1
    if q2p1 % spec.n:
        raise ValueError(f"n={spec.n} does not divide q^2+1={q2p1}")
    a = q2p1 // spec.n
    if a % 2 == 0 or spec.q % 2 == 0:
        raise ValueError("structure lemmas need q odd and (q^2+1)/n odd")
    return a


def verify_coset_structure(spec: CosetSpec) -> CosetStructureReport:
    """Check the singleton/pair pattern of every coset in Omega.

    For r = q+1: C_s and C_{s+n(q+1)/2} are singletons and every other coset is
    {s-(q+1)i, s+(q+1)i}.  For r = 1: C_i = {i, n-i}, with 0 and n/2 fixed.
    """
    _half_divisor(spec)
    rn, r, n = spec.rn, spec.r, spec.n
    if r == spec.q + 1:
        lemma = "centered"
        s = spec.s
        assert s is not None

        def expected(j: int) -> set[int]:
            i = (j - s) % rn // r
            i = min(i, n - i)
            return {(s - r * i) % rn, (s + r * i) % rn}

    elif r == 1:
        lemma = "mirror"

        def expected(j: int) -> set[int]:
            return {j % n, -j % n}

    else:
        raise ValueError(f"no structure lemma for r={r}")

    singletons = []
    pairs = 0
    for c in spec.cosets:
        for j in c.members:
            if set(c.members) != expected(j):
                return CosetStructureReport(lemma, False, tuple(singletons), pairs, j)
        if len(c) == 1:
            singletons.append(c.rep)
        else:
            pairs += 1
    return CosetStructureReport(lemma, True, tuple(singletons), pairs)
