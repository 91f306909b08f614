"""Brute-force enumeration: every code, every group element, every permutation.

These routines are the independent oracle for the closed forms in
:mod:`hullmass.formulas`; they share no counting logic with them.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .code import LinearCode, canonical_lcd, hull_dimension, is_self_orthogonal
from .field import FieldSpec, gf, hermitian_field
from .formulas import CountQuery, gaussian_binomial, group_order, hull_mass
from .matrix import Matrix, check_inner, field_matmul, omega

CODE_CAP = 10**7
GROUP_CAP = 2**24
PERMUTATION_CAP = 10**6


class CapExceeded(RuntimeError):
    pass


def ambient(inner: str, q: int, n: int) -> tuple[FieldSpec, int]:
    """Field and code length for base parameter q and (half-)length n."""
    check_inner(inner)
    if inner == "hermitian":
        return hermitian_field(q), n
    return gf(q), 2 * n


def enumerate_codes(field: FieldSpec, length: int, k: int, cap: int = CODE_CAP) -> Iterator[LinearCode]:
    """Every [length, k] code exactly once, straight from its RREF generator."""
    total = gaussian_binomial(length, k, field.order)
    if total > cap:
        raise CapExceeded(f"enumeration of {total} codes requested, cap is {cap}")
    if k == 0:
        yield LinearCode(field, length, Matrix.zeros(field, 0, length))
        return
    for pivots in itertools.combinations(range(length), k):
        pivot_set = set(pivots)
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, length) if c not in pivot_set]
        base = np.zeros((k, length), dtype=np.int64)
        base[range(k), pivots] = 1
        for values in itertools.product(range(field.order), repeat=len(free)):
            G = base.copy()
            for (r, c), v in zip(free, values):
                G[r, c] = v
            yield LinearCode(field, length, Matrix(field, G))


@dataclass
class CensusReport:
    inner: str
    q: int
    length: int
    k: int
    counts_by_hull_dim: dict[int, int]
    formula: dict[int, int]
    formula_match: dict[int, bool] = dc_field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts_by_hull_dim.values())

    @property
    def all_match(self) -> bool:
        return all(self.formula_match.values())

    def rows(self) -> list[dict]:
        return [
            {
                "ell": ell,
                "enumerated": self.counts_by_hull_dim[ell],
                "formula": self.formula[ell],
                "match": self.formula_match[ell],
            }
            for ell in sorted(self.counts_by_hull_dim)
        ]


def hull_census(inner: str, q: int, length: int, k: int, cap: int = CODE_CAP) -> CensusReport:
    """Exhaustive hull-dimension histogram of all [length, k] codes vs the formulas.

    ``length`` is the actual code length (2n for the symplectic form).
    """
    check_inner(inner)
    if inner == "symplectic" and length % 2:
        raise ValueError("symplectic census needs even length")
    field = hermitian_field(q) if inner == "hermitian" else gf(q)
    n = length if inner == "hermitian" else length // 2
    counts = Counter(hull_dimension(C, inner) for C in enumerate_codes(field, length, k, cap))
    ells = range(0, min(k, length - k) + 1)
    report = CensusReport(inner, q, length, k, {}, {})
    for ell in ells:
        report.counts_by_hull_dim[ell] = counts.get(ell, 0)
        report.formula[ell] = hull_mass(CountQuery(inner, q, n, k, ell)).count
        report.formula_match[ell] = report.counts_by_hull_dim[ell] == report.formula[ell]
    stray = set(counts) - set(ells)
    if stray:
        raise ArithmeticError(f"hull dimensions {sorted(stray)} are impossible for [{length},{k}]")
    return report


def _group_candidates(kind: str, n: int, q: int):
    if kind == "unitary":
        return hermitian_field(q), n
    if kind == "symplectic":
        return gf(q), 2 * n
    raise ValueError(f"unknown group kind {kind!r}")


def enumerate_group(kind: str, n: int, q: int, cap: int = GROUP_CAP, chunk: int = 2**14) -> Iterator[Matrix]:
    """Every element of U_n(q^2) or Sp_2n(q), by filtering all square matrices."""
    field, dim = _group_candidates(kind, n, q)
    total = field.order ** (dim * dim)
    if total > cap:
        raise CapExceeded(f"{total} candidate matrices exceed the cap {cap}")
    if dim == 0:
        yield Matrix.zeros(field, 0, 0)
        return
    if kind == "unitary":
        target = np.eye(dim, dtype=np.int64)
    else:
        target = omega(field, n).data
    Q = field.order
    cells = dim * dim
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // Q ** np.arange(cells - 1, -1, -1, dtype=np.int64)) % Q
        mats = digits.reshape(-1, dim, dim)
        trans = np.swapaxes(mats, 1, 2)
        if kind == "unitary":
            prod = field_matmul(field, mats, field.conj_table[trans])
        else:
            prod = field_matmul(field, field_matmul(field, mats, target), trans)
        ok = np.all(prod == target, axis=(1, 2))
        for M in mats[ok]:
            yield Matrix(field, M)


@dataclass(frozen=True)
class StabilizerCheck:
    inner: str
    q: int
    n: int
    k: int
    orbit_size: int
    stabilizer_size: int
    group_order: int
    lcd_count: int
    subgroup_product: int

    @property
    def product_equals_group_order(self) -> bool:
        return self.orbit_size * self.stabilizer_size == self.group_order

    @property
    def orbit_equals_lcd_count(self) -> bool:
        return self.orbit_size == self.lcd_count

    @property
    def stabilizer_is_block_product(self) -> bool:
        return self.stabilizer_size == self.subgroup_product

    @property
    def passed(self) -> bool:
        return self.product_equals_group_order and self.orbit_equals_lcd_count and self.stabilizer_is_block_product


def stabilizer_check(inner: str, q: int, n: int, k: int, cap: int = GROUP_CAP) -> StabilizerCheck:
    """Orbit and stabilizer of the canonical LCD code under the full form group.

    For the symplectic form ``k`` is the half-dimension: the code is [2n, 2k].
    """
    kind = "unitary" if inner == "hermitian" else "symplectic"
    field, length = ambient(inner, q, n)
    C = canonical_lcd(field, inner, n, k)
    images = set()
    stab = 0
    size = 0
    for Q in enumerate_group(kind, n, q, cap):
        size += 1
        image = C @ Q
        images.add(image.key())
        if image == C:
            stab += 1
    lcd = hull_census(inner, q, length, C.k).counts_by_hull_dim[0]
    sub = group_order(kind, k, q) * group_order(kind, n - k, q)
    return StabilizerCheck(inner, q, n, k, len(images), stab, size, lcd, sub)


# -- permutation classification -------------------------------------------------


def coordinate_permutations(inner: str, length: int) -> list[tuple[int, ...]]:
    """Coordinate permutations that preserve the form.

    Every permutation is unitary.  For the symplectic form the n coordinate
    pairs (i, n + i) are permuted together.
    """
    if inner == "hermitian":
        return list(itertools.permutations(range(length)))
    n = length // 2
    return [tuple(p) + tuple(n + i for i in p) for p in itertools.permutations(range(n))]


@dataclass(frozen=True)
class CodeClass:
    representative: LinearCode
    class_size: int
    aut_order: int


@dataclass
class ClassificationReport:
    inner: str
    q: int
    length: int
    k: int
    ell: int
    group_size: int
    classes: list[CodeClass]
    mass_identity_lhs: Fraction
    mass_identity_rhs: int

    @property
    def mass_identity_holds(self) -> bool:
        return self.mass_identity_lhs == self.mass_identity_rhs

    @property
    def census_count(self) -> int:
        return sum(c.class_size for c in self.classes)

    def aut_orders(self) -> list[int]:
        return sorted(c.aut_order for c in self.classes)


def classify(inner: str, q: int, length: int, k: int, ell: int, cap: int = CODE_CAP) -> ClassificationReport:
    """Partition all [length, k] codes with hull dimension ell into permutation classes.

    The class canonical form is the lexicographically least canonical generator
    over all permutations; the automorphism order counts permutations fixing the code.
    """
    check_inner(inner)
    if math.factorial(length) > PERMUTATION_CAP:
        raise CapExceeded(f"{length}! permutations exceed the cap {PERMUTATION_CAP}")
    field = hermitian_field(q) if inner == "hermitian" else gf(q)
    n = length if inner == "hermitian" else length // 2
    perms = coordinate_permutations(inner, length)
    classes: dict[tuple, list] = {}
    for C in enumerate_codes(field, length, k, cap):
        if hull_dimension(C, inner) != ell:
            continue
        images = [C.permute(p) for p in perms]
        canon = min(images, key=lambda D: D.generator.data.tolist())
        key = canon.key()
        if key not in classes:
            aut = sum(1 for D in images if D == C)
            classes[key] = [canon, 0, aut]
        classes[key][1] += 1
    out = [CodeClass(rep, size, aut) for rep, size, aut in classes.values()]
    for c in out:
        if c.class_size * c.aut_order != len(perms):
            raise ArithmeticError(f"orbit-stabilizer fails for {c.representative!r}")
    lhs = sum((Fraction(len(perms), c.aut_order) for c in out), Fraction(0))
    rhs = hull_mass(CountQuery(inner, q, n, k, ell)).count
    return ClassificationReport(inner, q, length, k, ell, len(perms), out, lhs, rhs)


# -- codes containing a vector -------------------------------------------------------


def symplectic_so_codes(q: int, n: int, k: int, cap: int = CODE_CAP) -> list[LinearCode]:
    field = gf(q)
    return [C for C in enumerate_codes(field, 2 * n, k, cap) if is_self_orthogonal(C, "symplectic")]


def sso_containing_census(q: int, n: int, k: int, u, cap: int = CODE_CAP, codes=None) -> int:
    """Symplectic self-orthogonal [2n, k] codes over GF(q) containing the vector u."""
    u = tuple(int(x) for x in u)
    if len(u) != 2 * n:
        raise ValueError(f"u must have length {2 * n}")
    if not any(u):
        raise ValueError("u must be nonzero")
    codes = symplectic_so_codes(q, n, k, cap) if codes is None else codes
    return sum(1 for C in codes if u in C)


def sso_containing_all(q: int, n: int, k: int, cap: int = CODE_CAP) -> dict[tuple, int]:
    """The containing count for every nonzero u (one census, many lookups)."""
    codes = symplectic_so_codes(q, n, k, cap)
    return {
        u: sso_containing_census(q, n, k, u, codes=codes)
        for u in itertools.product(range(q), repeat=2 * n)
        if any(u)
    }
