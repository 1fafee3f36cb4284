import json

import pytest

from pointedq.config import ConsistencyError
from pointedq.scalars import ONE, parse_scalar
from pointedq.uqd.datum import GenericDatum, a2_datum, b2_datum, permute_datum, uqsl2_datum
from pointedq.uqd.isom import (
    DatumIsomorphism,
    datum_isomorphisms,
    diagram_isomorphisms,
    relations,
    transports_relations,
)
from pointedq.uqd.pbw import build_rewrite_system


def load(corpus, name):
    return GenericDatum.from_json(json.loads((corpus / name).read_text()))


def test_diagram_isomorphisms():
    assert diagram_isomorphisms([[2, -1], [-1, 2]], [[2, -1], [-1, 2]]) == [(0, 1), (1, 0)]
    assert diagram_isomorphisms([[2, -2], [-1, 2]], [[2, -1], [-2, 2]]) == [(1, 0)]
    assert diagram_isomorphisms([[2, 0], [0, 2]], [[2]]) == []


def test_self_isomorphism():
    d = a2_datum()
    res = datum_isomorphisms(d, d)
    assert res.status == "found"
    ident = DatumIsomorphism(((1, 0), (0, 1)), (0, 1), (ONE, ONE))
    assert any(x.phi == ident.phi and x.sigma == ident.sigma for x in res.isomorphisms)


def test_swapped_copy(corpus):
    d = load(corpus, "a2_datum.json")
    e = load(corpus, "a2_datum_swapped.json")
    res = datum_isomorphisms(d, e)
    assert res.status == "found"
    assert len(res.isomorphisms) == 1
    iso = res.isomorphisms[0]
    assert iso.sigma == (1, 0)
    # phi(g_i) = g'_sigma(i): g_1 = Y_1 -> g'_2 = Y_1, g_2 = Y_2 -> g'_1 = Y_2
    assert iso.phi == ((1, 0), (0, 1))
    assert iso.alpha == (ONE, ONE)
    assert transports_relations(d, build_rewrite_system(e), iso)


def test_qI_mismatch(corpus):
    d = load(corpus, "a2_datum.json")
    e = load(corpus, "a2_datum_q2.json")
    res = datum_isomorphisms(d, e)
    assert res.status == "none"
    assert res.complete
    assert res.isomorphisms == []


def test_different_types():
    assert datum_isomorphisms(a2_datum(), b2_datum()).status == "none"


def test_linking_rescaled():
    d = uqsl2_datum()
    obj = d.to_json()
    obj["lambda"] = [{"i": 1, "j": 2, "value": "3"}]
    e = GenericDatum.from_json(obj)
    res = datum_isomorphisms(d, e)
    assert res.status == "found"
    alphas = {x.alpha for x in res.isomorphisms if x.sigma == (0, 1)}
    assert (ONE, parse_scalar("1/3")) in alphas


def test_linking_permuted():
    d = uqsl2_datum()
    e = permute_datum(d, (1, 0))
    res = datum_isomorphisms(d, e)
    assert res.status == "found"
    assert all(transports_relations(d, build_rewrite_system(e), x) for x in res.isomorphisms)


def test_linked_vs_unlinked():
    d = uqsl2_datum()
    obj = d.to_json()
    obj["lambda"] = []
    e = GenericDatum.from_json(obj)
    assert datum_isomorphisms(d, e).status == "none"


def test_partial_search_when_kernel_nonzero():
    # s = 2 but only Y_1 is seen by the single vertex: phi(Y_2) is not determined
    d = GenericDatum(
        2,
        ((2,),),
        ((0,),),
        (parse_scalar("q", ["q"]).as_monomial(),),
        ((1, 0),),
        ((parse_scalar("q", ["q"]).as_monomial(), parse_scalar("1").as_monomial()),),
        (),
        ("q",),
    )
    res = datum_isomorphisms(d, d, bound=2)
    assert not res.complete
    assert res.status == "found-partial"
    assert res.notes
    phis = {x.phi for x in res.isomorphisms}
    assert ((1, 0), (0, 1)) in phis and ((1, 0), (0, -1)) in phis


def test_relations_count():
    # two Serre relations and one group relation per (vertex, Y_h)
    assert len(relations(a2_datum())) == 2 + 4
    assert len(relations(uqsl2_datum())) == 2 + 1


def test_bad_isomorphism_fails_transport():
    d = a2_datum()
    wrong = DatumIsomorphism(((1, 0), (0, 1)), (0, 1), (ONE, parse_scalar("2")))
    assert transports_relations(d, build_rewrite_system(d), wrong)
    swapped = DatumIsomorphism(((1, 0), (0, 1)), (1, 0), (ONE, ONE))
    assert not transports_relations(d, build_rewrite_system(d), swapped)


def test_json_report():
    res = datum_isomorphisms(a2_datum(), a2_datum())
    js = res.to_json(["q"])
    assert js["status"] == "found"
    assert js["isomorphisms"][0]["sigma"] == [1, 2]
