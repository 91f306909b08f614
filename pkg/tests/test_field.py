import itertools

import pytest
from hypothesis import given, strategies as st

from hullmass.field import (
    DEFAULT_MODULI,
    FieldError,
    FieldSpec,
    gf,
    hermitian_field,
    is_irreducible,
    prime_power,
    register_modulus,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25]


@pytest.mark.parametrize("order", ORDERS)
def test_field_axioms(order):
    F = gf(order)
    els = list(F.elements())
    for a, b in itertools.product(els, els):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a in els[1:]:
        assert F.mul(a, F.inv(a)) == 1
    # distributivity on a sample
    for a, b, c in itertools.islice(itertools.product(els, els, els), 2000):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("order", ORDERS)
def test_generator_is_primitive_and_smallest(order):
    F = gf(order)
    powers = {F.pow(F.generator, t) for t in range(order - 1)}
    assert powers == set(range(1, order))
    for g in range(1, F.generator):
        assert len({F.pow(g, t) for t in range(order - 1)}) < order - 1


def test_gf9_frobenius_example():
    F = gf(9)
    assert F.frobenius(3, gf(3)) == 7
    assert F.conj(3) == 7


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_norm_is_onto_subfield_with_equal_fibers(q):
    F = hermitian_field(q)
    fibers = {}
    for a in range(1, F.order):
        fibers.setdefault(F.norm(a), []).append(a)
    assert set(fibers) == set(F.subfield_elements()) - {0}
    assert {len(v) for v in fibers.values()} == {q + 1}


def test_norm_fiber_sizes_gf16_gf9():
    F = gf(16)
    sizes = {}
    for a in range(1, 16):
        sizes[F.norm(a)] = sizes.get(F.norm(a), 0) + 1
    assert set(sizes.values()) == {5}
    F = gf(9)
    assert sorted(F.norm(a) for a in range(1, 9)).count(1) == 4


@pytest.mark.parametrize("q", [2, 3, 4])
def test_solve_norm(q):
    F = hermitian_field(q)
    assert F.solve_norm(0) == 0
    for c in F.subfield_elements():
        assert F.norm(F.solve_norm(c)) == c
    outside = next(a for a in range(F.order) if not F.in_subfield(a))
    with pytest.raises(FieldError):
        F.solve_norm(outside)


def test_conjugation_is_involutive_automorphism():
    F = gf(25)
    for a in range(25):
        assert F.conj(F.conj(a)) == a
        for b in range(25):
            assert F.conj(F.mul(a, b)) == F.mul(F.conj(a), F.conj(b))


def test_errors():
    with pytest.raises(FieldError):
        gf(6)
    with pytest.raises(FieldError):
        gf(1)
    F = gf(4)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ValueError):
        F.dlog(0)
    with pytest.raises(FieldError):
        F.add(4, 0)
    with pytest.raises(FieldError):
        gf(4).frobenius(1, gf(3))


def test_element_wrapper(gf4):
    w = gf4(2)
    assert int(w * w) == 3
    assert int(w**3) == 1
    assert int(w + w) == 0
    assert int(w / w) == 1
    assert int(w.inverse()) == 3
    with pytest.raises(FieldError):
        w + gf(8)(1)


def test_default_moduli_irreducible():
    for order, mod in DEFAULT_MODULI.items():
        p, e = prime_power(order)
        assert len(mod) == e + 1
        assert is_irreducible(tuple(mod), p)


def test_register_modulus_changes_encoding_only():
    register_modulus(8, (1, 0, 1, 1))
    F = gf(8)
    assert F.modulus == (1, 0, 1, 1)
    assert F != FieldSpec(2, 3, (1, 1, 0, 1))
    with pytest.raises(FieldError):
        register_modulus(8, (1, 1, 1, 1))


@given(st.sampled_from(ORDERS), st.data())
def test_pow_and_dlog_agree(order, data):
    F = gf(order)
    a = data.draw(st.integers(1, order - 1))
    k = data.draw(st.integers(-50, 50))
    assert F.pow(F.generator, F.dlog(a)) == a
    assert F.mul(F.pow(a, k), F.pow(a, -k)) == 1


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_trace_and_norm_land_in_subfield(q, data):
    F = hermitian_field(q)
    a = data.draw(st.integers(0, F.order - 1))
    assert F.in_subfield(F.norm(a))
    assert F.in_subfield(F.trace(a))
