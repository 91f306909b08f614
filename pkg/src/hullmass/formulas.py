"""Closed-form counts for codes with prescribed Hermitian or symplectic hull dimension.

Conventions: ``q`` is always the base parameter.  Hermitian codes are
``[n, k]`` codes over GF(q^2); symplectic codes are ``[2n, k]`` codes over
GF(q) and ``n`` is the half-length.  Every count is an exact integer; products
run through :class:`fractions.Fraction` and must clear to integers.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .field import hermitian_field, prime_power


def _prod(factors) -> Fraction:
    out = Fraction(1)
    for f in factors:
        out *= f
    return out


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return int(x)


def gaussian_binomial(n: int, k: int, Q: int) -> int:
    """Number of k-dimensional subspaces of GF(Q)^n."""
    if k < 0 or n < 0:
        raise ValueError(f"negative argument: n={n}, k={k}")
    if k > n:
        return 0
    num = _prod(Q**n - Q**i for i in range(k))
    den = _prod(Q**k - Q**i for i in range(k))
    return _integral(num / den, f"[{n},{k}]_{Q}")


def group_order(kind: str, n: int, q: int) -> int:
    """|U_n(q^2)| or |Sp_2n(q)|."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "unitary":
        return q ** (n * (n - 1) // 2) * math.prod(q**i - (-1) ** i for i in range(1, n + 1))
    if kind == "symplectic":
        return q ** (n * n) * math.prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    raise ValueError(f"unknown group kind {kind!r}")


def diagonal_count(q: int, n: int, a_is_zero: bool) -> int:
    """Solutions of x_1^(q+1) + ... + x_n^(q+1) = a over GF(q^2)^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 if a_is_zero else 0
    odd = n % 2 == 1
    if a_is_zero:
        return q ** (n - 1) * (q**n - q + 1 if odd else q**n + q - 1)
    return q ** (n - 1) * (q**n + 1 if odd else q**n - 1)


def diagonal_count_recurrence(q: int, n: int) -> tuple[int, int]:
    """(N_0(n), N_1(n)) from the one-variable-at-a-time recurrence."""
    n0, n1 = 1, q + 1  # n = 1
    for _ in range(n - 1):
        n0, n1 = n0 + (q * q - 1) * n1, (q + 1) * n0 + (q * q - q - 1) * n1
    return n0, n1


# -- Hermitian -----------------------------------------------------------------


def hermitian_lcd_count(q: int, n: int, k: int) -> int:
    if not 0 <= k <= n:
        return 0
    m = n - k
    val = q ** (k * m) * _prod(
        Fraction(q ** (m + i) - (-1) ** (m + i), q**i - (-1) ** i) for i in range(1, k + 1)
    )
    return _integral(val, "Hermitian LCD count")


def hermitian_hull_factor(q: int, n: int, k0: int, i: int) -> Fraction:
    """A_{n,k0,i} or B_{n,k0,i}, chosen by the parity of n - k0."""
    m = n - k0
    if m % 2:
        num = (q ** (m - 2 * i + 2) + 1) * (q ** (m - 2 * i + 1) - 1)
    else:
        num = (q ** (m - 2 * i + 2) - 1) * (q ** (m - 2 * i + 1) + 1)
    return Fraction(num, q ** (2 * k0) * (q ** (2 * i) - 1))


def hermitian_hull_count(q: int, n: int, k: int, ell: int) -> int:
    if ell < 0 or k < 0 or ell > k or k + ell > n:
        return 0
    k0 = k - ell
    val = _prod(hermitian_hull_factor(q, n, k0, i) for i in range(1, ell + 1))
    return _integral(val * hermitian_lcd_count(q, n, k0), "Hermitian hull count")


def hermitian_so_count(q: int, n: int, k: int) -> int:
    """Hermitian self-orthogonal [n, k] codes over GF(q^2)."""
    if 2 * k > n:
        return 0
    sign = (-1) ** n
    val = _prod(
        Fraction(q ** (n - 2 * i + 1) * (q ** (n - 2 * i + 2) + sign * (q - 1)) - 1, q ** (2 * i) - 1)
        for i in range(1, k + 1)
    )
    return _integral(val, "Hermitian self-orthogonal count")


# -- symplectic ------------------------------------------------------------------


def symplectic_lcd_count(q: int, n: int, k_half: int) -> int:
    """Symplectic LCD [2n, 2*k_half] codes over GF(q)."""
    if not 0 <= k_half <= n:
        return 0
    return q ** (2 * k_half * (n - k_half)) * gaussian_binomial(n, k_half, q * q)


def symplectic_hull_factor(q: int, n: int, k0: int, i: int) -> Fraction:
    """One step of the hull-raising recurrence, unrolled (i = 1..ell)."""
    return Fraction(q ** (2 * n - 2 * k0 - 2 * i + 2) - 1, q ** (2 * k0 + i) - q ** (2 * k0))


def displayed_symplectic_hull_factor(q: int, n: int, k: int, k0: int, i: int) -> Fraction:
    """The factor as printed in the closed-form statement; kept only for auditing."""
    return Fraction(q ** (2 * n - k - i + 2) - 1, q**k - q ** (2 * k0))


def symplectic_hull_count(q: int, n: int, k: int, ell: int) -> int:
    if ell < 0 or k < 0 or ell > k or k > 2 * n or ell > 2 * n - k or (k - ell) % 2:
        return 0
    k0 = (k - ell) // 2
    val = _prod(symplectic_hull_factor(q, n, k0, i) for i in range(1, ell + 1))
    return _integral(val * symplectic_lcd_count(q, n, k0), "symplectic hull count")


def displayed_symplectic_hull_count(q: int, n: int, k: int, ell: int) -> Fraction:
    """The printed closed form, which is *not* always integral or correct."""
    k0 = (k - ell) // 2
    val = _prod(displayed_symplectic_hull_factor(q, n, k, k0, i) for i in range(1, ell + 1))
    return val * symplectic_lcd_count(q, n, k0)


def symplectic_so_count(q: int, n: int, k: int) -> int:
    """Symplectic self-orthogonal [2n, k] codes over GF(q)."""
    if k > n:
        return 0
    val = _prod(Fraction(q ** (2 * n - 2 * i + 2) - 1, q**i - 1) for i in range(1, k + 1))
    return _integral(val, "symplectic self-orthogonal count")


def sso_containing_count(q: int, n: int, k: int) -> int:
    """Symplectic self-orthogonal [2n, k] codes containing a fixed nonzero vector."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > n:
        return 0
    val = _prod(Fraction(q ** (2 * n - 2 * i) - 1, q**i - 1) for i in range(1, k))
    return _integral(val, "containing count")


# -- dispatch --------------------------------------------------------------------


@dataclass(frozen=True)
class CountQuery:
    inner: str
    q: int
    n: int
    k: int
    ell: int

    def __post_init__(self):
        if self.inner not in ("hermitian", "symplectic"):
            raise ValueError(f"unknown inner product {self.inner!r}")
        prime_power(self.q)
        if min(self.n, self.k, self.ell) < 0:
            raise ValueError(f"negative parameter in {self}")
        if self.k > self.length:
            raise ValueError(f"k={self.k} exceeds the code length {self.length}")

    @property
    def length(self) -> int:
        return self.n if self.inner == "hermitian" else 2 * self.n

    @property
    def field_order(self) -> int:
        return self.q * self.q if self.inner == "hermitian" else self.q


@dataclass(frozen=True)
class CountReport:
    query: CountQuery
    count: int
    formula_id: str


def hull_mass(query: CountQuery) -> CountReport:
    """Number of codes with exactly the requested hull dimension."""
    q, n, k, ell = query.q, query.n, query.k, query.ell
    if query.inner == "hermitian":
        if ell > k or ell > n - k:
            return CountReport(query, 0, "hermitian:infeasible")
        if ell == 0:
            return CountReport(query, hermitian_lcd_count(q, n, k), "hermitian:lcd")
        if ell == k:
            return CountReport(query, hermitian_so_count(q, n, k), "hermitian:self-orthogonal")
        return CountReport(query, hermitian_hull_count(q, n, k, ell), "hermitian:hull")
    if ell > k or ell > 2 * n - k:
        return CountReport(query, 0, "symplectic:infeasible")
    if (k - ell) % 2:
        return CountReport(query, 0, "symplectic:parity")
    if ell == 0:
        return CountReport(query, symplectic_lcd_count(q, n, k // 2), "symplectic:lcd")
    if ell == k:
        return CountReport(query, symplectic_so_count(q, n, k), "symplectic:self-orthogonal")
    return CountReport(query, symplectic_hull_count(q, n, k, ell), "symplectic:hull")


def mass(inner: str, q: int, n: int, k: int, ell: int) -> int:
    return hull_mass(CountQuery(inner, q, n, k, ell)).count


# -- asymptotics -------------------------------------------------------------------


def g_product(Q: int, n: int) -> Fraction:
    """prod_{i=1}^n (1 - Q^-i)."""
    return _prod(1 - Fraction(1, Q**i) for i in range(1, n + 1))


def h_product(Q: int, ell: int) -> int:
    """prod_{i=1}^ell (Q^i - 1)."""
    return math.prod(Q**i - 1 for i in range(1, ell + 1))


def g_terms_needed(Q: int, tolerance: float) -> int:
    """Smallest m whose tail bound Q^-(m+1) / (1 - 1/Q) is below ``tolerance``."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    m = 0
    while Fraction(1, Q ** (m + 1)) / (1 - Fraction(1, Q)) >= Fraction(tolerance):
        m += 1
    return m


def g_infinity(Q: int, tolerance: float = 1e-12) -> Decimal:
    """The infinite product prod (1 - Q^-i) to within ``tolerance``."""
    m = g_terms_needed(Q, tolerance)
    val = g_product(Q, m)
    with localcontext() as ctx:
        ctx.prec = 60
        return Decimal(val.numerator) / Decimal(val.denominator)


def q_series(q: int, n=None, kind: str = "g", tolerance: float = 1e-12):
    """g_{q,n} (exact) / g_{q,inf} (decimal) for kind 'g'; h_{q,n} for kind 'h'."""
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if kind == "h":
        return h_product(q, n)
    if kind != "g":
        raise ValueError(f"unknown series {kind!r}")
    if n is None or n == math.inf:
        return g_infinity(q, tolerance)
    return g_product(q, n)


def limit_density(inner: str, q: int, ell: int, tolerance: float = 1e-9) -> Decimal:
    """Limit of hull_mass / (number of all codes) with ell fixed and k, length - k -> inf."""
    tol = tolerance / 100
    with localcontext() as ctx:
        ctx.prec = 60
        lead = Decimal(q**ell)
        if inner == "hermitian":
            num = g_infinity(q, tol) * g_infinity(q**4, tol)
            den = Decimal(h_product(q * q, ell)) * g_infinity(q * q, tol) ** 2
        elif inner == "symplectic":
            num = g_infinity(q, tol)
            den = Decimal(h_product(q, ell)) * g_infinity(q * q, tol)
        else:
            raise ValueError(f"unknown inner product {inner!r}")
        return lead * num / den


def finite_density(inner: str, q: int, n: int, k: int, ell: int) -> Fraction:
    query = CountQuery(inner, q, n, k, ell)
    total = gaussian_binomial(query.length, k, query.field_order)
    return Fraction(hull_mass(query).count, total)


# -- character sums ---------------------------------------------------------------


def _cyclotomic(m: int) -> list[int]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divexact(num, _cyclotomic(d))
    return num


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


def _poly_rem(a: list[int], b: list[int]) -> list[int]:
    """Remainder modulo a monic integer polynomial b."""
    a = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1]
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    return a[: len(b) - 1]


def cyclotomic_to_int(coeffs: list[int]) -> int:
    """Exact value of sum coeffs[t] * zeta^t when it is a rational integer.

    ``zeta`` is a primitive ``len(coeffs)``-th root of unity.
    """
    m = len(coeffs)
    phi = _cyclotomic(m)
    r = _poly_rem(coeffs, phi)
    if any(r[1:]):
        raise ArithmeticError(f"character sum {coeffs} is not a rational integer")
    return r[0] if r else 0


def _jacobi_coeffs(q: int, exponents, a: int) -> list[int]:
    """J_a(lambda^j1, ..., lambda^jn) as coefficients over zeta_{q+1}.

    lambda(g^t) = zeta^t is a character of GF(q^2)* of order q+1, lambda(0) = 0.
    """
    F = hermitian_field(q)
    m = q + 1
    coeffs = [0] * m
    for cs in itertools.product(range(1, F.order), repeat=len(exponents)):
        s = 0
        for c in cs:
            s = F.add(s, c)
        if s != a:
            continue
        t = sum(j * F.dlog(c) for j, c in zip(exponents, cs))
        coeffs[t % m] += 1
    return coeffs


def jacobi_sum(q: int, exponents, a: int) -> complex:
    coeffs = _jacobi_coeffs(q, exponents, a)
    m = len(coeffs)
    return sum(c * cmath.exp(2j * cmath.pi * t / m) for t, c in enumerate(coeffs))


@dataclass(frozen=True)
class JacobiCheck:
    q: int
    n: int
    lhs_zero_sum: int
    lhs_one_sum: int
    rhs_zero: int
    rhs_one: int

    @property
    def holds(self) -> bool:
        return self.lhs_zero_sum == self.rhs_zero and self.lhs_one_sum == self.rhs_one


JACOBI_BUDGET = 10**7


def jacobi_sum_check(q: int, n: int, budget: int = JACOBI_BUDGET) -> JacobiCheck:
    """Both diagonal-equation character-sum identities by direct summation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    Q = q * q
    if Q > 256:
        raise ValueError(f"GF({Q}) too large for direct character sums")
    work = (Q - 1) ** n * q**n
    if work > budget:
        raise RuntimeError(f"character sums need {work} terms, budget {budget}")
    F = hermitian_field(q)
    m = q + 1
    # bucket every nonzero tuple by its coordinate sum once, keep the dlog vectors
    tuples = {0: [], 1: []}
    for cs in itertools.product(range(1, Q), repeat=n):
        s = 0
        for c in cs:
            s = F.add(s, c)
        if s in tuples:
            tuples[s].append([F.dlog(c) for c in cs])
    zero = [0] * m
    one = [0] * m
    for js in itertools.product(range(1, q + 1), repeat=n):
        for logs in tuples[1]:
            one[sum(j * t for j, t in zip(js, logs)) % m] += 1
        if sum(js) % m == 0:
            for logs in tuples[0]:
                zero[sum(j * t for j, t in zip(js, logs)) % m] += 1
    base = q ** (2 * n - 2)
    return JacobiCheck(
        q,
        n,
        base + cyclotomic_to_int(zero),
        base + cyclotomic_to_int(one),
        diagonal_count(q, n, True),
        diagonal_count(q, n, False),
    )
