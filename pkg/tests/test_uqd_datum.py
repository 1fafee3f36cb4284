import json

import pytest

from pointedq.scalars import ONE, parse_scalar
from pointedq.uqd.datum import (
    GenericDatum,
    InvalidDatum,
    a1xa1_datum,
    a2_datum,
    b2_datum,
    linkable,
    normalize_linking,
    permute_datum,
    require_valid,
    uqsl2_datum,
    validate_datum,
)

DATUM_FILES = ["a2_datum.json", "a2_datum_swapped.json", "a2_datum_q2.json", "b2_datum.json", "uqsl2.json", "bad-link.json"]


def datum(**kw):
    base = {
        "params": ["q"],
        "s": 1,
        "cartan": [[2, 0], [0, 2]],
        "components": [{"vertices": [1], "qI": "q"}, {"vertices": [2], "qI": "q^-1"}],
        "g": [[1], [1]],
        "chi": [["q"], ["q^-1"]],
        "lambda": [{"i": 1, "j": 2, "value": "1"}],
    }
    base.update(kw)
    return GenericDatum.from_json(base)


@pytest.mark.parametrize("name", DATUM_FILES)
def test_json_roundtrip(corpus, name):
    obj = json.loads((corpus / name).read_text())
    d = GenericDatum.from_json(obj)
    again = GenericDatum.from_json(d.to_json())
    assert again == d
    assert d.to_json() == again.to_json()


@pytest.mark.parametrize("factory", [uqsl2_datum, a2_datum, b2_datum, a1xa1_datum])
def test_examples_valid(factory):
    rep = validate_datum(factory())
    assert rep.valid, rep.violations
    assert rep.positive


def test_example_types():
    assert validate_datum(a2_datum()).finite_type == "A2"
    assert validate_datum(b2_datum()).finite_type == "B2"
    assert validate_datum(uqsl2_datum()).finite_type == "A1xA1"


def test_braiding_convention():
    q = a2_datum().braiding()
    # q_ij = chi_j(g_i)
    assert str(q[0, 1]) == "1" and str(q[1, 0]) == "t1^-1"


def test_bad_link(corpus):
    d = GenericDatum.from_json(json.loads((corpus / "bad-link.json").read_text()))
    rep = validate_datum(d)
    assert not rep.valid
    assert "link1" in rep.codes()
    with pytest.raises(InvalidDatum):
        require_valid(d)


@pytest.mark.parametrize(
    "kw,code",
    [
        ({"cartan": [[2, -2], [-2, 2]], "components": [{"vertices": [1, 2], "qI": "q"}], "lambda": []}, "cartan"),
        ({"components": [{"vertices": [1], "qI": "-1"}, {"vertices": [2], "qI": "q^-1"}]}, "generic"),
        ({"chi": [["q^2"], ["q^-1"]]}, "cartantype"),
        ({"chi": [["q"], ["q"]], "components": [{"vertices": [1], "qI": "q"}, {"vertices": [2], "qI": "q"}]}, "noniso"),
        ({"chi": [["q"], ["q"]], "g": [[1], [-1]], "components": [{"vertices": [1], "qI": "q"}, {"vertices": [2], "qI": "q^-1"}]}, "link2"),
        ({"g": [[1], [2]], "components": [{"vertices": [1], "qI": "q"}, {"vertices": [2], "qI": "q^-2"}]}, "link4"),
    ],
)
def test_violation_codes(kw, code):
    assert code in validate_datum(datum(**kw)).codes()


def test_link0_same_component():
    obj = a2_datum().to_json()
    obj["lambda"] = [{"i": 1, "j": 2, "value": "1"}]
    assert "link0" in validate_datum(GenericDatum.from_json(obj)).codes()


def test_link6_vertex_linked_twice():
    obj = {
        "params": ["q"],
        "s": 1,
        "cartan": [[2, 0, 0], [0, 2, 0], [0, 0, 2]],
        "components": [{"vertices": [k], "qI": v} for k, v in ((1, "q"), (2, "q^-1"), (3, "q^-1"))],
        "g": [[1], [1], [1]],
        "chi": [["q"], ["q^-1"], ["q^-1"]],
        "lambda": [{"i": 1, "j": 2, "value": "1"}, {"i": 1, "j": 3, "value": "1"}],
    }
    codes = validate_datum(GenericDatum.from_json(obj)).codes()
    assert "link6" in codes


def test_linkable_flags():
    d = uqsl2_datum()
    assert linkable(d, 0, 1) == (True, True, True)


@pytest.mark.parametrize(
    "obj",
    [
        {"s": 1},
        {"s": 1, "cartan": [[2, 0], [0]], "components": [], "g": [], "chi": []},
    ],
)
def test_malformed(obj):
    with pytest.raises(ValueError):
        GenericDatum.from_json(obj)


def test_component_mismatch():
    with pytest.raises(ValueError):
        datum(components=[{"vertices": [1, 2], "qI": "q"}])


def test_linking_order_enforced():
    with pytest.raises(ValueError):
        datum(**{"lambda": [{"i": 2, "j": 1, "value": "1"}]})


def test_zero_linking_dropped():
    d = datum(**{"lambda": [{"i": 1, "j": 2, "value": "0"}]})
    assert d.lam == ()


def test_normalize_linking():
    d = datum(**{"lambda": [{"i": 1, "j": 2, "value": "3*q"}]})
    rep = validate_datum(d)
    assert rep.valid and rep.notes
    nd, alpha = normalize_linking(d)
    assert nd.lam_of(0, 1) == ONE
    assert alpha == (ONE, parse_scalar("3*q", ["q"]))


def test_permute_datum_valid():
    d = a2_datum()
    e = permute_datum(d, (1, 0))
    assert validate_datum(e).valid
    assert e.braiding()[1, 0] == d.braiding()[0, 1]


def test_permute_flips_linking():
    d = uqsl2_datum()
    e = permute_datum(d, (1, 0))
    assert validate_datum(e).valid
    # lambda'_12 = -lambda_12 / chi_2(g_1)
    assert e.lam_of(0, 1) == -parse_scalar("q", ["q"])
