import itertools

import pytest

from pointedq.freealg import exponent_vectors, nichols_dims, serre_element
from pointedq.scalars import ONE, S
from pointedq.uqd.datum import a1xa1_datum, a2_datum, b2_datum, uqsl2_datum
from pointedq.uqd.hopf import (
    coassociativity_defect,
    counit_left,
    counit_right,
    filtration_slice_dims,
    gk_dimension,
    group_window,
    is_skew_primitive,
    is_skew_primitive_awords,
    skew_primitive_dims,
    skew_primitive_space,
    tensor_mul,
)
from pointedq.uqd.pbw import PBWElement, build_rewrite_system

SYSTEMS = {
    "uqsl2": build_rewrite_system(uqsl2_datum()),
    "a2": build_rewrite_system(a2_datum()),
    "b2": build_rewrite_system(b2_datum()),
}


def basis_up_to(system, N, radius=1):
    out = []
    for n in range(N + 1):
        for c in exponent_vectors(system.heights, n):
            for g in group_window(system.s, radius):
                out.append(PBWElement.basis(c, g))
    return out


@pytest.mark.parametrize("name", ["uqsl2", "a2"])
def test_coassociativity_up_to_degree_3(name):
    s = SYSTEMS[name]
    for x in basis_up_to(s, 3, radius=0):
        assert not coassociativity_defect(s, x), x


@pytest.mark.parametrize("name", ["uqsl2", "a2"])
def test_counit(name):
    s = SYSTEMS[name]
    for x in basis_up_to(s, 3):
        assert counit_left(s, x) == x
        assert counit_right(s, x) == x


def test_counit_values():
    s = SYSTEMS["a2"]
    assert s.counit(s.group((2, -1))) == ONE
    assert s.counit(s.generator(0)).is_zero()


@pytest.mark.parametrize("name", ["uqsl2", "a2"])
def test_delta_multiplicative(name):
    s = SYSTEMS[name]
    elems = basis_up_to(s, 2, radius=0)[:8]
    for x, y in itertools.product(elems, repeat=2):
        assert s.coproduct(s.mul(x, y)) == tensor_mul(s, s.coproduct(x), s.coproduct(y))


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
def test_generators_skew_primitive(name):
    s = SYSTEMS[name]
    zero = (0,) * s.s
    for i in range(s.theta):
        assert is_skew_primitive(s, s.generator(i), s.datum.g[i], zero)
        assert not is_skew_primitive(s, s.generator(i), zero, zero)


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
def test_serre_elements_skew_primitive(name):
    s = SYSTEMS[name]
    d = s.datum
    zero = (0,) * s.s
    for i in range(d.theta):
        for j in range(d.theta):
            if i == j:
                continue
            el = serre_element(i, j, s.q, d.cartan[i][j])
            r = 1 - d.cartan[i][j]
            left = tuple(r * a + b for a, b in zip(d.g[i], d.g[j]))
            work = {(w, zero): c for w, c in el.terms.items()}
            assert is_skew_primitive_awords(s, work, left, zero)


def test_linking_relation_skew_primitive():
    s = SYSTEMS["uqsl2"]
    q = s.q
    work = {((0, 1), (0,)): ONE, ((1, 0), (0,)): -S(q[0, 1])}
    assert is_skew_primitive_awords(s, work, (2,), (0,))
    assert not s.nf_awords(work).is_zero()


@pytest.mark.parametrize("name", ["uqsl2", "a2"])
def test_skew_primitive_dims(name):
    s = SYSTEMS[name]
    assert skew_primitive_dims(s) == {i: 1 for i in range(s.theta)}


def test_skew_primitive_space_without_character():
    s = SYSTEMS["a2"]
    sp = skew_primitive_space(s, (1, 0), (0, 0))
    # a1 and the trivial skew-primitive y1 - 1
    assert sp.dimension == 2
    assert sp.trivial and sp.nontrivial_dimension == 1


def test_filtration_degree_b2():
    s = SYSTEMS["a2"]
    assert s.filtration_degree(s.root_vector(1)) == 2


@pytest.mark.parametrize(
    "name,braiding_system",
    [("a2", "a2"), ("uqsl2", "uqsl2")],
)
def test_filtration_slices_match_nichols(name, braiding_system):
    s = SYSTEMS[name]
    assert filtration_slice_dims(s, 3) == nichols_dims(s.q, 3)


def test_filtration_slices_a1xa1():
    s = build_rewrite_system(a1xa1_datum())
    assert filtration_slice_dims(s, 3) == [1, 2, 3, 4]


@pytest.mark.parametrize(
    "factory,expect",
    [(a2_datum, (3, 5)), (b2_datum, (4, 6)), (uqsl2_datum, (2, 3))],
)
def test_gk(factory, expect):
    out = gk_dimension(factory())
    assert (out["nichols"], out["uqd"]) == expect
    assert out["uqd_status"] == "derived"
