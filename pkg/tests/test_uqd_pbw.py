import pytest
from hypothesis import given, settings, strategies as st

from pointedq import config
from pointedq.config import ResourceLimitError
from pointedq.freealg import serre_element
from pointedq.scalars import ONE, S, parse_scalar
from pointedq.uqd.datum import GenericDatum, a1_datum, a1xa1_datum, a2_datum, b2_datum, uqsl2_datum
from pointedq.uqd.expr import ExprError, parse_expression, to_awords
from pointedq.uqd.pbw import PBWElement, UnsupportedType, build_rewrite_system, format_pbw

SYSTEMS = {
    "uqsl2": build_rewrite_system(uqsl2_datum()),
    "a2": build_rewrite_system(a2_datum()),
    "b2": build_rewrite_system(b2_datum()),
    "a1xa1": build_rewrite_system(a1xa1_datum()),
    "a1": build_rewrite_system(a1_datum()),
}
ALL = sorted(SYSTEMS)


def nf(system, text, strategy="leftmost"):
    d = system.datum
    return system.nf_awords(to_awords(parse_expression(text, d.theta, d.s, d.names), d), strategy)


def show(system, text, strategy="leftmost"):
    return format_pbw(nf(system, text, strategy), system)


# ---------------------------------------------------------------------------
# fixed examples


@pytest.mark.parametrize("strategy", ["leftmost", "rightmost", "phase"])
def test_uqsl2_nf(strategy):
    assert show(SYSTEMS["uqsl2"], "a2*a1", strategy) == "q*a1*a2 - q + q*y1^2"


def test_uqsl2_linking_relation_holds():
    # a1 a2 - chi_2(g_1) a2 a1 = lambda_12 (1 - g_1 g_2)
    assert nf(SYSTEMS["uqsl2"], "a1*a2 - q^-1*a2*a1 - 1 + y1^2").is_zero()


def test_uqsl2_substitution_back():
    s = SYSTEMS["uqsl2"]
    lhs = nf(s, "a2*a1")
    rhs = nf(s, "q*a1*a2 - q + q*y1^2")
    assert lhs == rhs


def test_a2_rules():
    rules = {r["lhs"]: r["rhs"] for r in SYSTEMS["a2"].rules_json()}
    assert rules == {"b2*a1": "a1*b2", "a2*a1": "q^-1*a1*a2 + b2", "a2*b2": "b2*a2"}


def test_a2_root_vector_expansion():
    s = SYSTEMS["a2"]
    exp = s.expand(s.root_vector(1))
    assert nf(s, "a2*a1 - q^-1*a1*a2") == s.root_vector(1)
    assert s.nf_awords(exp) == s.root_vector(1)


def test_b2_rule_with_square_tail():
    rules = {r["lhs"]: r["rhs"] for r in SYSTEMS["b2"].rules_json()}
    assert rules["a2*b2"] == "q^-2*b2*a2 + (1 - q^-1)*b3^2"
    assert rules["a2*a1"] == "q^-2*a1*a2 + b3"
    assert rules["b3*a1"] == "q^-1*a1*b3 + b2"


@pytest.mark.parametrize("name", ALL)
def test_diamond_count(name):
    s = SYSTEMS[name]
    P = s.P
    assert s.diamond_check() == P * (P - 1) * (P - 2) // 6


@pytest.mark.parametrize("name", ["a2", "b2"])
@pytest.mark.parametrize("ij", [(0, 1), (1, 0)])
def test_serre_relations_vanish(name, ij):
    s = SYSTEMS[name]
    i, j = ij
    el = serre_element(i, j, s.q, s.datum.cartan[i][j])
    work = {(w, (0,) * s.s): c for w, c in el.terms.items()}
    for strategy in ("leftmost", "rightmost", "phase"):
        assert s.nf_awords(work, strategy).is_zero()


@pytest.mark.parametrize("name", ALL)
def test_group_conjugation(name):
    s = SYSTEMS[name]
    d = s.datum
    for i in range(d.theta):
        for h in range(d.s):
            got = nf(s, f"y{h + 1}*a{i + 1}*y{h + 1}^-1")
            expect = s.generator(i).scale(S(d.chi[i][h]))
            assert got == expect


@pytest.mark.parametrize("name", ALL)
def test_rule_shape(name):
    s = SYSTEMS[name]
    for (k, l), rule in s.rules.items():
        assert k > l
        top = s.heights[k] + s.heights[l]
        lead_c = tuple(int(m in (k, l)) for m in range(s.P))
        for c, gamma in rule.tail.terms:
            deg = sum(x * h for x, h in zip(c, s.heights))
            assert deg <= top
            if s.root_block[k] == s.root_block[l]:
                assert not any(gamma)
                assert all(c[m] == 0 for m in range(s.P) if not l < m < k)
                assert deg == top
            if deg == top:
                assert c < lead_c or (c, gamma) < (lead_c, (0,) * s.s)


def test_filtration_degree_of_b2():
    s = SYSTEMS["a2"]
    assert s.filtration_degree(s.root_vector(1)) == 2


def test_unsupported_rank3():
    a3 = GenericDatum(
        3,
        ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
        ((0, 1, 2),),
        a2_datum().qI,
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
        tuple(
            tuple(a2_datum().qI[0] ** a for a in row)
            for row in ((1, 0, 0), (-1, 1, 0), (0, -1, 1))
        ),
        (),
        ("q",),
    )
    # chi_j(Y_h) transposed: q_ii = q, q_i,i+1 = q^-1, 1 below the diagonal
    from pointedq.uqd.datum import validate_datum

    assert validate_datum(a3).finite_type == "A3"
    with pytest.raises(UnsupportedType):
        build_rewrite_system(a3)


def test_b2_gate():
    with pytest.raises(UnsupportedType):
        build_rewrite_system(b2_datum(), limits=config.LIMITS.with_(allow_b2=False))


def test_term_limit():
    s = build_rewrite_system(a2_datum(), limits=config.LIMITS.with_(term_limit=5))
    with pytest.raises(ResourceLimitError):
        nf(s, "a2*a2*a2*a1*a1*a1")


def test_unknown_strategy():
    with pytest.raises(ValueError):
        SYSTEMS["a2"].reduce_bwords({}, "random")


@pytest.mark.parametrize("text", ["a3", "y2", "a1^-1", "a1 +", "(a1", "a1 $ a2", ""])
def test_expression_errors(text):
    d = a2_datum()
    with pytest.raises(ExprError):
        parse_expression(text, 2, 1, d.names)


# ---------------------------------------------------------------------------
# property suites


def aword_strategy(name):
    s = SYSTEMS[name]
    return st.tuples(
        st.lists(st.integers(0, s.theta - 1), min_size=0, max_size=5).map(tuple),
        st.lists(st.integers(-2, 2), min_size=s.s, max_size=s.s).map(tuple),
        st.sampled_from(["1", "2", "-1", "q", "q^-1", "1/3"]),
    )


def element_strategy(name, max_terms=3):
    return st.lists(aword_strategy(name), min_size=1, max_size=max_terms)


def to_work(name, terms):
    s = SYSTEMS[name]
    names = list(s.datum.names)
    work = {}
    for w, g, c in terms:
        v = parse_scalar(c, names)
        work[(w, g)] = work.get((w, g), S(0)) + v
    return {k: v for k, v in work.items() if not v.is_zero()}


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
@settings(max_examples=100)
@given(data=st.data())
def test_confluence(name, data):
    s = SYSTEMS[name]
    work = to_work(name, data.draw(element_strategy(name)))
    left = s.nf_awords(work, "leftmost")
    assert s.nf_awords(work, "rightmost") == left
    assert s.nf_awords(work, "phase") == left


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
@settings(max_examples=100)
@given(data=st.data())
def test_associativity(name, data):
    s = SYSTEMS[name]
    x, y, z = (s.nf_awords(to_work(name, data.draw(element_strategy(name, 2)))) for _ in range(3))
    assert s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z))


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
@settings(max_examples=50)
@given(data=st.data())
def test_multiplication_matches_concatenation(name, data):
    s = SYSTEMS[name]
    t1 = data.draw(element_strategy(name, 2))
    t2 = data.draw(element_strategy(name, 2))
    w1, w2 = to_work(name, t1), to_work(name, t2)
    prod = {}
    for (u, g), a in w1.items():
        for (v, h), b in w2.items():
            # y^g v = chi_v(y^g) v y^g
            f = a * b * s._chi_aword(v, g)
            key = (u + v, tuple(x + y for x, y in zip(g, h)))
            prod[key] = prod.get(key, S(0)) + f
    assert s.nf_awords(prod) == s.mul(s.nf_awords(w1), s.nf_awords(w2))


@pytest.mark.parametrize("name", ["a2", "b2", "a1xa1"])
@settings(max_examples=50)
@given(data=st.data())
def test_filtration_multiplicative(name, data):
    s = SYSTEMS[name]
    c1 = tuple(data.draw(st.lists(st.integers(0, 2), min_size=s.P, max_size=s.P)))
    c2 = tuple(data.draw(st.lists(st.integers(0, 2), min_size=s.P, max_size=s.P)))
    zero = (0,) * s.s
    x, y = PBWElement.basis(c1, zero), PBWElement.basis(c2, zero)
    assert s.filtration_degree(s.mul(x, y)) == s.filtration_degree(x) + s.filtration_degree(y)


@pytest.mark.parametrize("name", ["uqsl2"])
@settings(max_examples=50)
@given(data=st.data())
def test_filtration_subadditive_with_linking(name, data):
    s = SYSTEMS[name]
    c1 = tuple(data.draw(st.lists(st.integers(0, 2), min_size=s.P, max_size=s.P)))
    c2 = tuple(data.draw(st.lists(st.integers(0, 2), min_size=s.P, max_size=s.P)))
    x, y = PBWElement.basis(c1, (0,)), PBWElement.basis(c2, (0,))
    assert s.filtration_degree(s.mul(x, y)) <= s.filtration_degree(x) + s.filtration_degree(y)


@pytest.mark.parametrize("name", ["uqsl2", "a2", "b2"])
@settings(max_examples=40)
@given(data=st.data())
def test_expand_then_normalise_is_identity(name, data):
    s = SYSTEMS[name]
    c = tuple(data.draw(st.lists(st.integers(0, 2), min_size=s.P, max_size=s.P)))
    g = tuple(data.draw(st.lists(st.integers(-1, 1), min_size=s.s, max_size=s.s)))
    x = PBWElement.basis(c, g)
    assert s.nf_awords(s.expand(x)) == x
