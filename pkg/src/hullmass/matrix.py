"""Dense matrices over a finite field, with exact echelon forms and form reductions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .field import FieldError, FieldSpec


def field_matmul(field: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over ``field``; leading axes of ``a`` and ``b`` broadcast."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if field.e == 1 or a.shape[-1] == 0:
        return np.matmul(a, b) % field.p
    prods = field.mul_table[a[..., :, :, None], b[..., None, :, :]]
    out = prods[..., 0, :]
    for t in range(1, a.shape[-1]):
        out = field.add_table[out, prods[..., t, :]]
    return out


class MatrixError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Matrix:
    """An immutable ``rows x cols`` matrix with entries encoded in ``field``."""

    field: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        d = np.array(self.data, dtype=np.int64, copy=True)
        if d.ndim != 2:
            d = d.reshape(len(d), -1) if d.size else np.zeros((len(d), 0), dtype=np.int64)
        if d.size and (d.min() < 0 or d.max() >= self.field.order):
            raise FieldError(f"matrix entries outside {self.field!r}")
        d.setflags(write=False)
        object.__setattr__(self, "data", d)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, cols or 0)
        return cls(field, np.array(rows, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, idx):
        return self.data[idx]

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def key(self) -> tuple:
        return (self.shape, self.data.tobytes())

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.field, self.key()))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data.tolist())
        return f"Matrix[{self.field!r}]({body})"

    # -- arithmetic -------------------------------------------------------

    def _same(self, other: Matrix):
        if self.field != other.field:
            raise FieldError(f"cannot combine {self.field!r} and {other.field!r}")

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.cols != other.rows:
            raise MatrixError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, field_matmul(self.field, self.data, other.data))

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        return Matrix(self.field, self.field.add_table[self.data, other.data])

    def __neg__(self) -> Matrix:
        return Matrix(self.field, self.field.neg_table[self.data])

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c: int) -> Matrix:
        return Matrix(self.field, self.field.mul_table[c, self.data])

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.data.T)

    def conj(self) -> Matrix:
        return Matrix(self.field, self.field.conj_table[self.data])

    def is_zero(self) -> bool:
        return not self.data.any()

    def hstack(self, other: Matrix) -> Matrix:
        self._same(other)
        return Matrix(self.field, np.hstack([self.data, other.data]))

    def permute_columns(self, perm) -> Matrix:
        return Matrix(self.field, self.data[:, list(perm)])

    def is_identity(self) -> bool:
        return self.rows == self.cols and bool(np.array_equal(self.data, np.eye(self.rows, dtype=np.int64)))


def vstack(*mats: Matrix) -> Matrix:
    field = mats[0].field
    cols = max(m.cols for m in mats)
    parts = [m.data if m.rows else np.zeros((0, cols), np.int64) for m in mats]
    for m in mats:
        if m.field != field:
            raise FieldError("cannot stack matrices over different fields")
    return Matrix(field, np.vstack(parts))


class RREF(NamedTuple):
    R: Matrix
    rank: int
    pivots: tuple[int, ...]
    transform: Matrix


def rref(M: Matrix) -> RREF:
    """Reduced row echelon form with leftmost/topmost pivoting.

    ``transform`` is invertible and ``transform @ M == R``.
    """
    f = M.field
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    m, n = M.shape
    A = np.hstack([M.data, np.eye(m, dtype=np.int64)])
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = mul[f.inv(int(A[r, c])), A[r]]
        for i in np.flatnonzero(A[:, c]):
            if i != r:
                A[i] = add[A[i], mul[neg[A[i, c]], A[r]]]
        pivots.append(c)
        r += 1
    return RREF(Matrix(f, A[:, :n]), r, tuple(pivots), Matrix(f, A[:, n:]))


def rank(M: Matrix) -> int:
    return rref(M).rank


def row_basis(M: Matrix) -> Matrix:
    """The nonzero rows of the RREF of M: the canonical basis of its row space."""
    res = rref(M)
    return Matrix(M.field, res.R.data[: res.rank])


def inverse(M: Matrix) -> Matrix:
    if M.rows != M.cols:
        raise MatrixError("inverse of a non-square matrix")
    res = rref(M)
    if res.rank != M.rows:
        raise MatrixError("matrix is singular")
    return res.transform


def nullspace(M: Matrix) -> Matrix:
    """Basis (as rows) of the right kernel ``{x : M x^T = 0}``."""
    f = M.field
    res = rref(M)
    n = M.cols
    free = [c for c in range(n) if c not in res.pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, c in enumerate(free):
        basis[t, c] = 1
        for i, pc in enumerate(res.pivots):
            basis[t, pc] = f.neg(int(res.R.data[i, c]))
    return Matrix(f, basis)


def conj_transpose(M: Matrix, base_field=None) -> Matrix:
    """Entrywise Frobenius x -> x^q followed by transpose (field must be GF(q^2))."""
    if base_field is not None:
        M.field.check_base(base_field)
    elif not M.field.is_quadratic:
        raise FieldError(f"{M.field!r} is not a quadratic extension")
    return M.conj().T


def omega(field: FieldSpec, n: int) -> Matrix:
    """The standard alternating form [[O, I_n], [-I_n, O]]."""
    d = np.zeros((2 * n, 2 * n), dtype=np.int64)
    d[:n, n:] = np.eye(n, dtype=np.int64)
    d[n:, :n] = field.neg(1) * np.eye(n, dtype=np.int64)
    return Matrix(field, d)


def j2_blocks(field: FieldSpec, pairs: int, size: int | None = None) -> Matrix:
    """diag(J2, ..., J2, 0, ..., 0) with ``pairs`` copies of J2 = [[0, 1], [-1, 0]]."""
    size = 2 * pairs if size is None else size
    d = np.zeros((size, size), dtype=np.int64)
    for i in range(pairs):
        d[2 * i, 2 * i + 1] = 1
        d[2 * i + 1, 2 * i] = field.neg(1)
    return Matrix(field, d)


def diag_ones(field: FieldSpec, ones: int, size: int) -> Matrix:
    d = np.zeros((size, size), dtype=np.int64)
    d[range(ones), range(ones)] = 1
    return Matrix(field, d)


INNER_PRODUCTS = ("hermitian", "symplectic")


def check_inner(inner: str) -> str:
    if inner not in INNER_PRODUCTS:
        raise ValueError(f"inner product must be one of {INNER_PRODUCTS}, got {inner!r}")
    return inner


def gram(G: Matrix, inner: str) -> Matrix:
    """G conj(G)^T (hermitian) or G Omega G^T (symplectic)."""
    check_inner(inner)
    if inner == "hermitian":
        return G @ conj_transpose(G)
    if G.cols % 2:
        raise MatrixError(f"symplectic form needs an even number of columns, got {G.cols}")
    return G @ omega(G.field, G.cols // 2) @ G.T


def is_skew(M: Matrix) -> bool:
    return (
        M.rows == M.cols
        and not np.diagonal(M.data).any()
        and bool(np.array_equal(M.T.data, (-M).data))
    )


def is_hermitian(M: Matrix) -> bool:
    return M.rows == M.cols and M == conj_transpose(M)


def _pair(field: FieldSpec, u: np.ndarray, M: np.ndarray, v: np.ndarray) -> int:
    return int(field_matmul(field, field_matmul(field, u[None, :], M), v[:, None])[0, 0])


def _axpy(field: FieldSpec, c: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """y + c*x."""
    return field.add_table[y, field.mul_table[c, x]]


def skew_reduce(M: Matrix) -> tuple[Matrix, int]:
    """Congruence of a skew-symmetric zero-diagonal M to diag(J2, ..., J2, 0, ..., 0).

    Returns ``(Q, t)`` with ``Q @ M @ Q.T`` block diagonal holding ``t/2`` copies
    of J2; ``t`` is the rank of M and always even.
    """
    if not is_skew(M):
        raise MatrixError("matrix is not skew-symmetric with zero diagonal")
    f, A = M.field, M.data
    rem = [row for row in np.eye(M.rows, dtype=np.int64)]
    out = []
    while True:
        hit = None
        for i in range(len(rem)):
            for j in range(i + 1, len(rem)):
                s = _pair(f, rem[i], A, rem[j])
                if s:
                    hit = (i, j, s)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, s = hit
        u = rem[i]
        w = f.mul_table[f.inv(s), rem[j]]
        out += [u, w]
        rest = []
        for idx, z in enumerate(rem):
            if idx in (i, j):
                continue
            z = _axpy(f, f.neg(_pair(f, z, A, w)), u, z)
            z = _axpy(f, _pair(f, z, A, u), w, z)
            rest.append(z)
        rem = rest
    Q = np.array(out + rem, dtype=np.int64).reshape(M.rows, M.rows)
    return Matrix(f, Q), len(out)


def hermitian_unitarize(M: Matrix) -> Matrix:
    """Invertible Q with Q M conj(Q)^T = I for a nonsingular Hermitian M over GF(q^2)."""
    f = M.field
    if not is_hermitian(M):
        raise MatrixError("matrix is not Hermitian")
    A = M.data
    conj = f.conj_table

    def form(u, v):
        return _pair(f, u, A, conj[v])

    rem = [row for row in np.eye(M.rows, dtype=np.int64)]
    out = []
    while rem:
        i = next((i for i, v in enumerate(rem) if form(v, v)), None)
        if i is None:
            # every remaining vector is isotropic: combine an orthogonally paired couple
            pair = next(
                ((i, j) for i in range(len(rem)) for j in range(i + 1, len(rem)) if form(rem[i], rem[j])),
                None,
            )
            if pair is None:
                raise MatrixError("Hermitian matrix is singular")
            i, j = pair
            for c in range(1, f.order):
                v = _axpy(f, c, rem[j], rem[i])
                if form(v, v):
                    rem[i] = v
                    break
        v = rem[i]
        x = f.solve_norm(form(v, v))
        v = f.mul_table[f.inv(x), v]
        out.append(v)
        rem = [_axpy(f, f.neg(form(w, v)), v, w) for idx, w in enumerate(rem) if idx != i]
    Q = np.array(out, dtype=np.int64).reshape(M.rows, M.rows)
    return Matrix(f, Q)
