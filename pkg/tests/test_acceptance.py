"""End-to-end acceptance suite.

Each test prints one ``PASS``/``FAIL`` line (visible with ``pytest -v`` or
``python tests/test_acceptance.py``) and then asserts the outcome.
"""

import json
import random
import sys
import time

import pytest

from cartan_types import FINITE_TYPES, type_a
from pointedq.braiding import BraidingMatrix, classify, classification_report, detect_cartan, dj_matrix, finite_type
from pointedq.freealg import (
    ad_power,
    exponent_vectors,
    in_radical,
    nichols_dims,
    pbw_hilbert_coefficients,
    serre_element,
    serre_in_radical,
    serre_vanishing,
    pbw_independence,
)
from pointedq.rootsys import root_data
from pointedq.scalars import Monomial, S, parse_scalar
from pointedq.uqd.datum import GenericDatum, a2_datum, uqsl2_datum
from pointedq.uqd.expr import parse_expression, to_awords
from pointedq.uqd.hopf import (
    coassociativity_defect,
    counit_left,
    counit_right,
    filtration_slice_dims,
    group_window,
    is_skew_primitive_awords,
    skew_primitive_dims,
)
from pointedq.uqd.isom import datum_isomorphisms, transports_relations
from pointedq.uqd.pbw import PBWElement, build_rewrite_system, format_pbw

t = Monomial.var(0)


def bq(rows):
    return BraidingMatrix.parse(rows, ["q"])


A2_SYM = bq([["q", "q^-1/2"], ["q^-1/2", "q"]])
A2 = bq([["q", "1"], ["q^-1", "q"]])
B2 = bq([["q^2", "q^-4"], ["1", "q^4"]])
A1XA1 = bq([["q", "1"], ["1", "q"]])


@pytest.fixture
def report(capsys):
    def emit(number, ok, elapsed, limit=None, detail=""):
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {elapsed:.2f} s{budget} {detail}".rstrip())
        assert ok, detail
        assert within, f"took {elapsed:.2f} s, limit {limit} s"

    return emit


def load(corpus, name):
    return GenericDatum.from_json(json.loads((corpus / name).read_text()))


def test_criterion_01_cartan_roundtrip(report):
    start = time.perf_counter()
    bad = []
    for name, a, d, _ in FINITE_TYPES:
        c = detect_cartan(dj_matrix(a, d, [t]))
        if [list(r) for r in c.a] != a or tuple(c.d) != tuple(d) or finite_type(c.a, c.d) != name:
            bad.append(name)
    report(1, not bad, time.perf_counter() - start, 5, f"{len(FINITE_TYPES)} types, mismatches {bad}")


def test_criterion_02_dichotomy(report):
    start = time.perf_counter()
    a2 = classify(dj_matrix(type_a(2), (1, 1), [t]))
    non_cartan = classify(bq([["q", "q"], ["1", "q"]]))
    remark = classify(bq([["q", "q^-1"], ["q^-1", "-q"]]))
    rep = classification_report(remark, ["q"])
    ok = (
        a2.verdict == "FiniteGK"
        and a2.gk == 3 == len(root_data(type_a(2)).beta)
        and non_cartan.verdict == "InfiniteGK"
        and remark.cartan is not None
        and not remark.positive
        and rep["dj"] is None
    )
    detail = f"A2 gk={a2.gk}, non-Cartan {non_cartan.verdict}, remark {remark.verdict}"
    report(2, ok, time.perf_counter() - start, 1, detail)


def test_criterion_03_nichols_dims(report):
    start = time.perf_counter()
    heights = [sum(b) for b in root_data(type_a(2)).beta]
    a2 = nichols_dims(A2_SYM, 4)
    a1a1 = nichols_dims(A1XA1, 4)
    ok = a2 == [1, 2, 4, 6, 9] == pbw_hilbert_coefficients(heights, 4) and a1a1 == [1, 2, 3, 4, 5]
    report(3, ok, time.perf_counter() - start, 60, f"A2 {a2}, A1xA1 {a1a1}")


def test_criterion_04_serre_in_radical(report):
    start = time.perf_counter()
    ok = all(serre_in_radical(i, j, q) for q in (A2, B2) for i, j in ((0, 1), (1, 0)))
    sub = not in_radical(ad_power(0, 1, 1, A2), A2)
    report(4, ok and sub, time.perf_counter() - start, 30, f"serre {ok}, subthreshold nonzero {sub}")


def test_criterion_05_vanishing_criterion(report):
    start = time.perf_counter()
    mismatches = [
        (name, i, j, r)
        for name, q in (("A2", A2), ("B2", B2))
        for i, j in ((0, 1), (1, 0))
        for r in range(1, 4)
        if serre_vanishing(r, i, j, q) != serre_in_radical(i, j, q, r)
    ]
    report(5, not mismatches, time.perf_counter() - start, None, f"mismatches {mismatches}")


def test_criterion_06_pbw_independence(report):
    start = time.perf_counter()
    rank, count = pbw_independence(A2, root_data(type_a(2)).beta, 4)
    report(6, rank == count == 22, time.perf_counter() - start, 60, f"rank {rank} of {count}")


def _random_work(rng, system, names, max_terms):
    coeffs = ["1", "2", "-1", "q", "q^-1", "1/3"]
    work = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.randrange(system.theta) for _ in range(rng.randint(0, 5)))
        g = tuple(rng.randint(-2, 2) for _ in range(system.s))
        work[(w, g)] = work.get((w, g), S(0)) + parse_scalar(rng.choice(coeffs), names)
    return {k: v for k, v in work.items() if not v.is_zero()}


def test_criterion_07_normal_form(report):
    start = time.perf_counter()
    s = build_rewrite_system(uqsl2_datum())
    d = s.datum
    names = list(d.names)

    def nf(text):
        return s.nf_awords(to_awords(parse_expression(text, d.theta, d.s, names), d))

    shown = format_pbw(nf("a2*a1"), s)
    relation = nf("a1*a2 - q^-1*a2*a1 - 1 + y1^2").is_zero()
    back = nf("a2*a1") == nf("q*a1*a2 - q + q*y1^2")
    rng = random.Random(20261019)
    confluent = associative = 0
    for _ in range(100):
        work = _random_work(rng, s, names, 3)
        left = s.nf_awords(work, "leftmost")
        confluent += s.nf_awords(work, "rightmost") == left == s.nf_awords(work, "phase")
    for _ in range(100):
        x, y, z = (s.nf_awords(_random_work(rng, s, names, 2)) for _ in range(3))
        associative += s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z))
    ok = shown == "q*a1*a2 - q + q*y1^2" and relation and back and confluent == 100 and associative == 100
    detail = f"nf {shown!r}, confluent {confluent}/100, associative {associative}/100"
    report(7, ok, time.perf_counter() - start, 30, detail)


def test_criterion_08_hopf_structure(report):
    start = time.perf_counter()
    failures = []
    for name, datum in (("A2", a2_datum()), ("uqsl2", uqsl2_datum())):
        s = build_rewrite_system(datum)
        zero = (0,) * s.s
        for n in range(4):
            for c in exponent_vectors(s.heights, n):
                for g in group_window(s.s, 1):
                    x = PBWElement.basis(c, g)
                    if coassociativity_defect(s, x):
                        failures.append((name, "coassoc", c, g))
                    if counit_left(s, x) != x or counit_right(s, x) != x:
                        failures.append((name, "counit", c, g))
        for i in range(s.theta):
            for j in range(s.theta):
                if i == j:
                    continue
                aij = datum.cartan[i][j]
                el = serre_element(i, j, s.q, aij)
                left = tuple((1 - aij) * u + v for u, v in zip(datum.g[i], datum.g[j]))
                work = {(w, zero): v for w, v in el.terms.items()}
                if not is_skew_primitive_awords(s, work, left, zero):
                    failures.append((name, "serre", i, j))
    report(8, not failures, time.perf_counter() - start, None, f"failures {failures[:3]}")


def test_criterion_09_coradical_filtration(report):
    start = time.perf_counter()
    a2 = build_rewrite_system(a2_datum())
    degree = a2.filtration_degree(a2.root_vector(1))
    slices = {}
    expected = {}
    for name, datum in (("A2", a2_datum()), ("uqsl2", uqsl2_datum())):
        s = a2 if name == "A2" else build_rewrite_system(datum)
        slices[name] = filtration_slice_dims(s, 3)
        expected[name] = nichols_dims(s.q, 3)
    ok = degree == 2 and slices == expected
    report(9, ok, time.perf_counter() - start, None, f"deg b2 {degree}, slices {slices}")


def test_criterion_10_skew_primitives(report):
    start = time.perf_counter()
    dims = {name: skew_primitive_dims(build_rewrite_system(f())) for name, f in (("A2", a2_datum), ("uqsl2", uqsl2_datum))}
    ok = all(v == {0: 1, 1: 1} for v in dims.values())
    report(10, ok, time.perf_counter() - start, None, f"dims {dims}")


def test_criterion_11_isomorphism(corpus, report):
    start = time.perf_counter()
    d = load(corpus, "a2_datum.json")
    swapped = load(corpus, "a2_datum_swapped.json")
    mismatched = load(corpus, "a2_datum_q2.json")
    own = datum_isomorphisms(d, d)
    perm = datum_isomorphisms(d, swapped)
    none = datum_isomorphisms(d, mismatched)
    sound = all(
        transports_relations(d, build_rewrite_system(target), iso)
        for res, target in ((own, d), (perm, swapped))
        for iso in res.isomorphisms
    )
    iso = perm.isomorphisms[0] if perm.isomorphisms else None
    ok = (
        own.status == "found"
        and perm.status == "found"
        and iso is not None
        and iso.sigma == (1, 0)
        and iso.phi == ((1, 0), (0, 1))
        and iso.alpha == (S(1), S(1))
        and none.status == "none"
        and not none.isomorphisms
        and sound
    )
    detail = f"self {own.status}, permuted {perm.status}, mismatched {none.status}, sound {sound}"
    report(11, ok, time.perf_counter() - start, 30, detail)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
