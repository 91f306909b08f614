"""Linear codes, their duals and hulls, and the constructive procedures on them.

A code is stored by its canonical generator: the RREF basis of its row space.
Two codes are equal exactly when these generators coincide.  For symplectic
work the ambient length is ``2n`` and the form is ``x Omega y^T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .field import FieldSpec
from .matrix import (
    Matrix,
    MatrixError,
    check_inner,
    conj_transpose,
    field_matmul,
    gram,
    hermitian_unitarize,
    inverse,
    nullspace,
    omega,
    rank,
    rref,
    row_basis,
    skew_reduce,
    vstack,
)

ENUMERATION_CAP = 2**20


class CodeError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An exhaustive scan would exceed the configured enumeration budget."""


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldSpec
    length: int
    generator: Matrix

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, length: int | None = None) -> LinearCode:
        M = rows if isinstance(rows, Matrix) else Matrix.from_rows(field, rows, cols=length)
        if M.field != field:
            raise CodeError(f"rows are over {M.field!r}, not {field!r}")
        if length is not None and M.rows and M.cols != length:
            raise CodeError(f"rows have length {M.cols}, expected {length}")
        n = M.cols if M.rows else (length or M.cols)
        if not M.rows:
            M = Matrix.zeros(field, 0, n)
        return cls(field, n, row_basis(M))

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def half_length(self) -> int:
        if self.length % 2:
            raise CodeError(f"length {self.length} is odd; no symplectic structure")
        return self.length // 2

    def key(self) -> tuple:
        return (self.length, self.generator.key())

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        return f"LinearCode[{self.length},{self.k}]_{self.field.order}({self.generator.tolist()})"

    def __contains__(self, vector) -> bool:
        v = Matrix.from_rows(self.field, [list(vector)])
        return rank(vstack(self.generator, v)) == self.k

    def __matmul__(self, Q: Matrix) -> LinearCode:
        """The image code C Q."""
        return LinearCode.from_rows(self.field, self.generator @ Q, self.length)

    def permute(self, perm) -> LinearCode:
        return LinearCode.from_rows(self.field, self.generator.permute_columns(perm), self.length)

    def codewords(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        """All ``q^k`` codewords as rows of an integer array."""
        total = self.field.order**self.k
        if total > cap:
            raise BudgetExceeded(f"{total} codewords exceed the budget {cap}; use the formulas module")
        coeffs = np.array(list(itertools.product(range(self.field.order), repeat=self.k)), dtype=np.int64)
        if self.k == 0:
            return np.zeros((1, self.length), dtype=np.int64)
        return field_matmul(self.field, coeffs, self.generator.data)


def _check_form(C: LinearCode, inner: str):
    check_inner(inner)
    if inner == "hermitian" and not C.field.is_quadratic:
        raise CodeError(f"Hermitian form needs a field of square order, got {C.field!r}")
    if inner == "symplectic" and C.length % 2:
        raise CodeError(f"symplectic form needs even length, got {C.length}")


def dual(C: LinearCode, inner: str) -> LinearCode:
    _check_form(C, inner)
    G = C.generator
    if inner == "hermitian":
        # y with G conj(y)^T = 0  <=>  conj(y) in ker(G)
        basis = nullspace(G).conj()
    else:
        basis = nullspace(G @ omega(C.field, C.length // 2))
    return LinearCode.from_rows(C.field, basis, C.length)


def intersect(A: LinearCode, B: LinearCode) -> LinearCode:
    """Row-space intersection through the left kernel of the stacked generators."""
    S = vstack(A.generator, B.generator)
    K = nullspace(S.T)  # rows (a, b) with a G_A + b G_B = 0
    if K.rows == 0:
        return LinearCode.from_rows(A.field, [], A.length)
    a = Matrix(A.field, K.data[:, : A.k])
    return LinearCode.from_rows(A.field, a @ A.generator, A.length)


def hull_dimension(C: LinearCode, inner: str) -> int:
    _check_form(C, inner)
    return C.k - rank(gram(C.generator, inner))


@dataclass(frozen=True)
class HullReport:
    hull_dimension: int
    hull_basis: Matrix
    lcd_complement: LinearCode


def hull(C: LinearCode, inner: str) -> HullReport:
    ell = hull_dimension(C, inner)
    H = intersect(C, dual(C, inner))
    if H.k != ell:
        raise ArithmeticError(f"hull intersection has dimension {H.k}, Gram rank gives {ell}")
    # extend the hull basis by rows of the canonical generator, first fit
    chosen = []
    basis = H.generator
    for row in C.generator.data:
        trial = vstack(basis, Matrix(C.field, row[None, :]))
        if rank(trial) > basis.rows:
            basis = trial
            chosen.append(row)
    complement = LinearCode.from_rows(C.field, chosen, C.length)
    return HullReport(ell, H.generator, complement)


def is_lcd(C: LinearCode, inner: str) -> bool:
    return hull_dimension(C, inner) == 0


def is_self_orthogonal(C: LinearCode, inner: str) -> bool:
    return hull_dimension(C, inner) == C.k


def hermitian_normal_form(C: LinearCode) -> Matrix:
    """Generator G of C with G conj(G)^T = diag(1, ..., 1, 0, ..., 0) (k - ell ones)."""
    rep = hull(C, "hermitian")
    comp = rep.lcd_complement.generator
    if comp.rows:
        Q = hermitian_unitarize(gram(comp, "hermitian"))
        comp = Q @ comp
    return vstack(comp, rep.hull_basis) if C.k else Matrix.zeros(C.field, 0, C.length)


def symplectic_basis(C: LinearCode) -> Matrix:
    """Generator c1, c1', c2, c2', ... of a symplectic LCD code with Gram diag(J2, ...)."""
    _check_form(C, "symplectic")
    if C.k == 0:
        return C.generator
    Q, t = skew_reduce(gram(C.generator, "symplectic"))
    if t != C.k:
        raise CodeError(
            f"code has symplectic hull of dimension {C.k - t}; only LCD codes have a symplectic basis"
        )
    return Q @ C.generator


def canonical_lcd(field: FieldSpec, inner: str, n: int, k: int) -> LinearCode:
    """<e_1..e_k> in GF(q^2)^n, or the [2n, 2k] code spanned by (e_i|0), (0|e_i)."""
    check_inner(inner)
    if not 0 <= k <= n:
        raise CodeError(f"need 0 <= k <= n, got n={n}, k={k}")
    if inner == "hermitian":
        return LinearCode.from_rows(field, np.eye(n, dtype=np.int64)[:k], n)
    return LinearCode.from_rows(field, canonical_lcd_generator(field, n, k), 2 * n)


def canonical_lcd_generator(field: FieldSpec, n: int, k: int) -> Matrix:
    """Rows (e_1|0), (0|e_1), ..., (e_k|0), (0|e_k) in that order."""
    rows = np.zeros((2 * k, 2 * n), dtype=np.int64)
    for i in range(k):
        rows[2 * i, i] = 1
        rows[2 * i + 1, n + i] = 1
    return Matrix(field, rows)


def _frame(C: LinearCode, inner: str) -> Matrix:
    """Normalized generators of C stacked on normalized generators of its dual."""
    D = dual(C, inner)
    if inner == "hermitian":
        return vstack(hermitian_normal_form(C), hermitian_normal_form(D))
    return vstack(symplectic_basis(C), symplectic_basis(D))


def transporter(C1: LinearCode, C2: LinearCode, inner: str) -> Matrix:
    """A form-preserving Q (unitary or symplectic) with C1 Q = C2, for LCD C1, C2."""
    _check_form(C1, inner)
    if C1.field != C2.field or C1.length != C2.length or C1.k != C2.k:
        raise CodeError("transporter needs codes with equal field, length and dimension")
    for C in (C1, C2):
        if not is_lcd(C, inner):
            raise CodeError(f"{C!r} is not {inner} LCD")
    return inverse(_frame(C1, inner)) @ _frame(C2, inner)


def is_unitary(Q: Matrix) -> bool:
    return (Q @ conj_transpose(Q)).is_identity()


def is_symplectic(Q: Matrix) -> bool:
    W = omega(Q.field, Q.rows // 2)
    return Q.rows % 2 == 0 and Q @ W @ Q.T == W


def self_pairings(C: LinearCode, vectors: np.ndarray, inner: str) -> np.ndarray:
    """<x, x> for each row x (always 0 for the symplectic form)."""
    f = C.field
    if inner == "symplectic":
        return np.zeros(len(vectors), dtype=np.int64)
    norms = f.norm_table[vectors]
    out = np.zeros(len(vectors), dtype=np.int64)
    for j in range(norms.shape[1]):
        out = f.add_table[out, norms[:, j]]
    return out


def so_codeword_count(C: LinearCode, inner: str = "hermitian", cap: int = ENUMERATION_CAP) -> int:
    """Number of codewords c with <c, c>_H = 0, by direct enumeration."""
    _check_form(C, inner)
    if inner != "hermitian":
        raise CodeError("every vector is symplectic self-orthogonal; count is q^k")
    words = C.codewords(cap)
    return int(np.count_nonzero(self_pairings(C, words, inner) == 0))


def extension_vectors(C: LinearCode, inner: str, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Vectors x of dual(C) minus hull(C) that are self-orthogonal.

    Adding any of them to C raises the hull dimension by exactly one.
    """
    D = dual(C, inner)
    H = LinearCode.from_rows(C.field, hull(C, inner).hull_basis, C.length)
    words = D.codewords(cap)
    iso = self_pairings(D, words, inner) == 0
    outside = np.array([rank(vstack(H.generator, Matrix(C.field, w[None, :]))) > H.k for w in words], dtype=bool)
    return words[iso & outside]


def hull_extensions(C: LinearCode, inner: str, cap: int = ENUMERATION_CAP) -> list[LinearCode]:
    """All distinct codes C + <x> obtained from :func:`extension_vectors`."""
    seen = {}
    for x in extension_vectors(C, inner, cap):
        E = LinearCode.from_rows(C.field, vstack(C.generator, Matrix(C.field, x[None, :])), C.length)
        seen.setdefault(E.key(), E)
    return list(seen.values())


def subcodes(C: LinearCode, dim: int):
    """Every subcode of C of the given dimension, each once."""
    # subspaces of the coefficient space GF(q)^k map bijectively onto subcodes
    from .census import enumerate_codes

    for A in enumerate_codes(C.field, C.k, dim):
        yield LinearCode.from_rows(C.field, A.generator @ C.generator if dim else [], C.length)


def extension_multiplicity(C: LinearCode, inner: str, cap: int = ENUMERATION_CAP) -> int:
    """Count pairs (D, x) that rebuild C by one hull-raising extension.

    D runs over codimension-1 subcodes with hull dimension ell - 1 and x over
    extension vectors of D lying in C (so that D + <x> = C).
    """
    ell = hull_dimension(C, inner)
    total = 0
    for D in subcodes(C, C.k - 1):
        if hull_dimension(D, inner) != ell - 1:
            continue
        for x in extension_vectors(D, inner, cap):
            if tuple(x) in C and rank(vstack(D.generator, Matrix(C.field, x[None, :]))) == C.k:
                total += 1
    return total


def random_code(field: FieldSpec, length: int, k: int, rng: np.random.Generator) -> LinearCode:
    """A uniformly random k-dimensional code (rejection on full rank)."""
    while True:
        M = Matrix(field, rng.integers(0, field.order, size=(k, length)))
        if rank(M) == k:
            return LinearCode.from_rows(field, M, length)


def random_lcd(field: FieldSpec, inner: str, length: int, k: int, rng: np.random.Generator) -> LinearCode:
    while True:
        C = random_code(field, length, k, rng)
        if is_lcd(C, inner):
            return C


__all__ = [
    "BudgetExceeded",
    "CodeError",
    "HullReport",
    "LinearCode",
    "MatrixError",
    "canonical_lcd",
    "canonical_lcd_generator",
    "dual",
    "extension_multiplicity",
    "extension_vectors",
    "hermitian_normal_form",
    "hull",
    "hull_dimension",
    "hull_extensions",
    "intersect",
    "is_lcd",
    "is_self_orthogonal",
    "is_symplectic",
    "is_unitary",
    "so_codeword_count",
    "symplectic_basis",
    "transporter",
]
