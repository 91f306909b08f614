"""Exact arithmetic in small finite fields GF(p^e).

Elements are integers in ``[0, q)``: the element ``sum c_i a^i`` (polynomial
basis, ``a`` a root of the modulus) is encoded as ``sum c_i p^i``.  All
arithmetic goes through precomputed lookup tables, so a field is cheap to use
once built and immutable afterwards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

# Little-endian coefficient tuples, constant term first.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (2, 2, 1),  # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    25: (2, 4, 1),  # x^2 + 4x + 2
}

MAX_ORDER = 256

_registry: dict[int, tuple[int, ...]] = dict(DEFAULT_MODULI)


class FieldError(ValueError):
    """Raised for malformed fields or operations mixing fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, m = 0, q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p), little-endian tuples ----------------------------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> list[int]:
    r = _poly_trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(r) - 1 >= dm:
        c = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - dm
        for i, mc in enumerate(m):
            r[shift + i] = (r[shift + i] - c * mc) % p
        _poly_trim(r)
    return r


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(modulus, (*low, 1), p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The field GF(p^e) with an explicit monic irreducible modulus."""

    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        p, e, m = self.p, self.e, tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", m)
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1 or len(m) != e + 1:
            raise FieldError(f"modulus {m} does not have degree {e}")
        if m[-1] != 1 or any(not 0 <= c < p for c in m):
            raise FieldError(f"modulus {m} is not monic with coefficients in [0, {p})")
        if p**e > MAX_ORDER:
            raise FieldError(f"GF({p}^{e}) exceeds the supported order {MAX_ORDER}")
        if e > 1 and not is_irreducible(m, p):
            raise FieldError(f"modulus {m} is reducible over GF({p})")
        self._build_tables()

    # identity is (p, e, modulus); elements of different specs never mix
    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.e, self.modulus) == (
            other.p,
            other.e,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"

    @property
    def order(self) -> int:
        return self.p**self.e

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def _encode(self, coeffs) -> int:
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _build_tables(self):
        q, p = self.order, self.p
        digits = np.array([self._digits(a) for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(self.e, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * self.e - 1)
                for i, ca in enumerate(digits[a]):
                    if ca:
                        for j, cb in enumerate(digits[b]):
                            prod[i + j] += int(ca) * int(cb)
                r = _poly_mod(tuple(prod), self.modulus, p)
                mul[a, b] = mul[b, a] = self._encode(r)
        neg = ((-digits) % p) @ weights
        for name, arr in (("add_table", add), ("mul_table", mul), ("neg_table", neg)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

        # multiplicative structure: generator, exp and log tables
        gen = None
        for g in range(1, q):
            x, order = g, 1
            while x != 1:
                x = int(mul[x, g])
                order += 1
            if order == q - 1:
                gen = g
                break
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for t in range(q - 1):
            exp[t] = x
            log[x] = t
            x = int(mul[x, gen])
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        for name, arr in (("exp_table", exp), ("log_table", log), ("inv_table", inv)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "generator", gen)

    # -- scalar arithmetic on encodings ----------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise FieldError(f"{a} is not an element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[self._check(a), self.neg_table[self._check(b)]])

    def neg(self, a: int) -> int:
        return int(self.neg_table[self._check(a)])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self!r}")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def dlog(self, a: int) -> int:
        """Exponent t in [0, q-1) with generator**t == a."""
        if a == 0:
            raise ValueError("discrete log of 0")
        return int(self.log_table[a])

    def elements(self) -> range:
        return range(self.order)

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, self._check(value))

    # -- quadratic-extension structure (Hermitian forms) -------------------

    @property
    def is_quadratic(self) -> bool:
        return self.e % 2 == 0

    @property
    def base_order(self) -> int:
        """q for a field of order q^2."""
        if not self.is_quadratic:
            raise FieldError(f"{self!r} is not a quadratic extension")
        return self.p ** (self.e // 2)

    def check_base(self, base_field) -> int:
        q = base_field.order if isinstance(base_field, FieldSpec) else int(base_field)
        if not self.is_quadratic or q != self.base_order:
            raise FieldError(f"{self!r} is not a quadratic extension of GF({q})")
        return q

    @cached_property
    def conj_table(self) -> np.ndarray:
        q = self.base_order
        t = np.array([self.pow(a, q) for a in range(self.order)], dtype=np.int64)
        t.setflags(write=False)
        return t

    @cached_property
    def norm_table(self) -> np.ndarray:
        q = self.base_order
        t = np.array([self.pow(a, q + 1) for a in range(self.order)], dtype=np.int64)
        t.setflags(write=False)
        return t

    def conj(self, a: int) -> int:
        return int(self.conj_table[a])

    def frobenius(self, a: int, base_field) -> int:
        """a -> a^q, the nontrivial automorphism of GF(q^2) over GF(q)."""
        self.check_base(base_field)
        return int(self.conj_table[a])

    def norm(self, a: int) -> int:
        return int(self.norm_table[a])

    def in_subfield(self, a: int) -> bool:
        return self.conj(a) == a

    def subfield_elements(self) -> list[int]:
        return [a for a in range(self.order) if self.in_subfield(a)]

    def solve_norm(self, c: int) -> int:
        """Smallest x with x^(q+1) == c, for c in the subfield GF(q)."""
        if not self.in_subfield(c):
            raise FieldError(f"{c} is not in the subfield GF({self.base_order})")
        if c == 0:
            return 0
        return int(np.flatnonzero(self.norm_table == c)[0])

    def trace(self, a: int) -> int:
        return self.add(a, self.conj(a))


@dataclass(frozen=True)
class FieldElement:
    """A field value bound to its field, with operator arithmetic."""

    field: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot combine {self.field!r} and {other.field!r}")
            return other.value
        raise TypeError(f"unsupported operand {other!r}")

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.field, v)

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def frobenius(self, base_field) -> FieldElement:
        return self._wrap(self.field.frobenius(self.value, base_field))

    def norm(self) -> FieldElement:
        return self._wrap(self.field.norm(self.value))

    def dlog(self) -> int:
        return self.field.dlog(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


def arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch one of add, sub, mul, div, inv, pow (b is an int for pow)."""
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    ops = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](a, b)


def register_modulus(order: int, modulus) -> None:
    """Override the modulus used by :func:`gf` for fields of this order."""
    p, e = prime_power(order)
    FieldSpec(p, e, tuple(modulus))  # validates
    _registry[order] = tuple(int(c) for c in modulus)
    gf.cache_clear()


def reset_moduli() -> None:
    _registry.clear()
    _registry.update(DEFAULT_MODULI)
    gf.cache_clear()


@lru_cache(maxsize=None)
def gf(order: int) -> FieldSpec:
    """The field of the given order, using the modulus table for extensions."""
    p, e = prime_power(order)
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    if order not in _registry:
        raise FieldError(f"no modulus registered for GF({order})")
    return FieldSpec(p, e, _registry[order])


def hermitian_field(q: int) -> FieldSpec:
    """GF(q^2), the field Hermitian codes with base parameter q live over."""
    return gf(q * q)
