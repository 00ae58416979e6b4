"""Brute-force checks of codes over GF(q^2) by exact linear algebra.

Vectors and matrices hold integer encodings of GF(q^2) elements and use the
log-table fast path of the field module.  Everything here is independent of
the coset machinery it is meant to check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from qmds.constacyclic import ConstacyclicCode
from qmds.field import FieldTables

DEFAULT_BUDGET = 10**7


class BudgetExceeded(ValueError):
    """Codeword enumeration would exceed the configured budget."""


def rref(t: FieldTables, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with first-nonzero pivoting."""
    A = np.array(A, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    m, n = A.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            A[[row, piv]] = A[[piv, row]]
        A[row] = t.mul(A[row], t.inv_table[A[row, col]])
        factors = A[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = t.sub(A[hit], t.mul(factors[hit, None], A[row][None, :]))
        pivots.append(col)
        row += 1
    return A, pivots


def rank(t: FieldTables, A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(t, A)[1])


def null_space(t: FieldTables, A: np.ndarray, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : A x^T = 0}."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        size = A.shape[1] if A.ndim == 2 and A.shape[1] else n
        return np.eye(size, dtype=np.int64)
    R, piv = rref(t, A)
    n = A.shape[1]
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    basis[np.arange(len(free)), free] = 1
    if piv and free:
        basis[:, piv] = t.neg(R[: len(piv)][:, free].T)
    return basis


def matmul(t: FieldTables, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    return t.sum(t.mul(A[:, :, None], B[None, :, :]), axis=1)


def hermitian_product(t: FieldTables, x: np.ndarray, y: np.ndarray) -> int:
    """(x, y)_h = sum conj(x_i) * y_i."""
    return int(t.sum(t.mul(t.conj(np.asarray(x)), np.asarray(y)), axis=-1))


@dataclass(frozen=True)
class GeneratorMatrix:
    """Rows are x^i g(x) mod (x^n - eta), i = 0..k-1, as integer encodings."""

    tables: FieldTables
    rows: np.ndarray
    eta: int

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]


def constacyclic_shift(t: FieldTables, eta: int, v: np.ndarray) -> np.ndarray:
    """(c_0, ..., c_{n-1}) -> (eta*c_{n-1}, c_0, ..., c_{n-2}), row-wise."""
    v = np.asarray(v, dtype=np.int64)
    out = np.roll(v, 1, axis=-1)
    out[..., 0] = t.mul(out[..., 0], eta)
    return out


def generator_matrix(code: ConstacyclicCode) -> GeneratorMatrix:
    t = code.field.tables
    n, k = code.n, code.k
    eta = int(code.eta)
    if k == 0:
        return GeneratorMatrix(t, np.zeros((0, n), dtype=np.int64), eta)
    row = np.zeros(n, dtype=np.int64)
    row[: code.gen.degree + 1] = [int(c) for c in code.gen.coeffs]
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i] = row
        row = constacyclic_shift(t, eta, row)
    return GeneratorMatrix(t, rows, eta)


def hermitian_dual_basis(G: GeneratorMatrix) -> np.ndarray:
    """Basis of the Hermitian dual: null space of conj(G)."""
    t = G.tables
    if G.k == 0:
        return np.eye(G.n, dtype=np.int64)
    return null_space(t, t.conj(G.rows))


def dual_containment_matrix_check(code: ConstacyclicCode) -> bool:
    """Whether every Hermitian-dual basis vector lies in the row space of G."""
    G = generator_matrix(code)
    t = G.tables
    base = rank(t, G.rows)
    if base != G.k:
        raise RuntimeError(f"generator matrix has rank {base}, expected {G.k}")
    dual = hermitian_dual_basis(G)
    if dual.shape[0] != G.n - G.k:
        raise RuntimeError("Hermitian dual has the wrong dimension")
    if dual.shape[0] == 0:
        return True
    if G.k == 0:
        return False
    return rank(t, np.vstack([G.rows, dual])) == base


def shift_closed(code: ConstacyclicCode) -> bool:
    """Shifted generator rows stay in the row space."""
    G = generator_matrix(code)
    if G.k == 0:
        return True
    shifted = constacyclic_shift(G.tables, G.eta, G.rows)
    return rank(G.tables, np.vstack([G.rows, shifted])) == G.k


def brute_force_min_distance(code: ConstacyclicCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum weight over all nonzero m(x) g(x), deg m < k."""
    G = generator_matrix(code)
    t = G.tables
    Q, k, n = t.order, G.k, G.n
    if k == 0:
        raise ValueError("code has no nonzero codewords")
    if Q**k > budget:
        raise BudgetExceeded(f"{Q}^{k} codewords exceed budget {budget}")
    # inner block: every combination of the last b rows, vectorised
    b = 1
    while b < k and Q ** (b + 1) <= 1 << 18:
        b += 1
    scalars = np.arange(Q, dtype=np.int64)
    block = np.zeros((1, n), dtype=np.int64)
    for row in G.rows[k - b :]:
        terms = t.mul(scalars[:, None], row[None, :])
        block = t.add(block[:, None, :], terms[None, :, :]).reshape(-1, n)
    best = n + 1
    prefix_rows = G.rows[: k - b]
    for msg in itertools.product(range(Q), repeat=k - b):
        if prefix_rows.shape[0]:
            offset = t.sum(t.mul(np.array(msg)[:, None], prefix_rows), axis=0)
        else:
            offset = np.zeros(n, dtype=np.int64)
        words = t.add(block, offset[None, :])
        weights = np.count_nonzero(words, axis=1)
        if not any(msg):
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def batch_rank(t: FieldTables, M: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices with shape (batch, rows, cols)."""
    M = np.array(M, dtype=np.int64, copy=True)
    B, m, w = M.shape
    ranks = np.zeros(B, dtype=np.int64)
    row_ids = np.arange(m)[None, :]
    for c in range(w):
        cand = (M[:, :, c] != 0) & (row_ids >= ranks[:, None])
        has = np.flatnonzero(cand.any(axis=1))
        if has.size == 0:
            continue
        piv = np.argmax(cand[has], axis=1)
        rr = ranks[has]
        top = M[has, rr].copy()
        M[has, rr] = M[has, piv]
        M[has, piv] = top
        prow = t.mul(M[has, rr], t.inv_table[M[has, rr, c]][:, None])
        M[has, rr] = prow
        f = M[has, :, c].copy()
        f[np.arange(has.size), rr] = 0
        M[has] = t.sub(M[has], t.mul(f[:, :, None], prow[:, None, :]))
        ranks[has] += 1
    return ranks


def min_distance_by_supports(code: ConstacyclicCode) -> int:
    """Smallest w such that some w columns of a parity-check matrix are dependent.

    Exhaustive over supports, so usable when message enumeration is too big.
    """
    G = generator_matrix(code)
    t = G.tables
    n, k = G.n, G.k
    if k == 0:
        raise ValueError("code has no nonzero codewords")
    if k == n:
        return 1
    H = null_space(t, G.rows)
    for w in range(1, n - k + 2):
        combos = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64)
        for chunk in np.array_split(combos, max(1, len(combos) // 20000)):
            sub = np.transpose(H[:, chunk], (1, 0, 2))
            if np.any(batch_rank(t, sub) < w):
                return w
    raise RuntimeError("no dependent column set found; Singleton bound violated")
