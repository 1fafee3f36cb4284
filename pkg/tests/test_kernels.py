import os
import subprocess
import sys
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from pointedq import kernels
from pointedq.kernels import _pykernels

BACKENDS = kernels.backends()


def brute_pairing(u, w, theta):
    out = {}
    n = len(u)
    for pi in permutations(range(n)):
        if any(u[a] != w[pi[a]] for a in range(n)):
            continue
        table = [0] * (theta * theta)
        for a in range(n):
            for b in range(a + 1, n):
                if pi[a] > pi[b]:
                    table[u[b] * theta + u[a]] += 1
        key = tuple(table)
        out[key] = out.get(key, 0) + 1
    return out


def brute_splits(w, m, theta):
    out = []
    n = len(w)
    for S in combinations(range(n), m):
        table = [0] * (theta * theta)
        for k in range(n):
            for l in range(k + 1, n):
                if k not in S and l in S:
                    table[w[k] * theta + w[l]] += 1
        rest = [p for p in range(n) if p not in S]
        out.append((tuple(w[p] for p in S), tuple(w[p] for p in rest), tuple(table)))
    return sorted(out)


words = st.integers(1, 3).flatmap(
    lambda theta: st.tuples(st.just(theta), st.lists(st.integers(0, theta - 1), min_size=0, max_size=6))
)


@pytest.mark.parametrize("name", sorted(BACKENDS))
@given(data=words, seed=st.randoms())
def test_pairing_table_matches_permutation_sum(name, data, seed):
    theta, w = data
    u = list(w)
    seed.shuffle(u)
    got = BACKENDS[name].pairing_table(tuple(u), tuple(w), theta)
    assert got == brute_pairing(tuple(u), tuple(w), theta)


@pytest.mark.parametrize("name", sorted(BACKENDS))
@given(data=words, m=st.integers(0, 6))
def test_shuffle_splits_match_subsets(name, data, m):
    theta, w = data
    m = min(m, len(w))
    got = sorted(BACKENDS[name].shuffle_splits(tuple(w), m, theta))
    assert got == brute_splits(tuple(w), m, theta)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_pairing_of_distinct_letter_multisets_is_empty(name):
    assert BACKENDS[name].pairing_table((0, 1), (0, 0), 2) == {}
    assert BACKENDS[name].pairing_table((0,), (0, 0), 2) == {}


def test_fallback_selected_by_environment():
    env = dict(os.environ, POINTEDQ_PURE_PYTHON="1")
    code = "from pointedq import kernels; print(kernels.BACKEND)"
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "python"


def test_backend_reported():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS
    assert kernels.pairing_table is BACKENDS[kernels.BACKEND].pairing_table


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
def test_compiled_and_python_agree_on_long_words():
    w = (0, 1, 0, 2, 1, 0, 2, 1)
    u = (1, 0, 0, 2, 1, 2, 0, 1)
    assert BACKENDS["cython"].pairing_table(u, w, 3) == _pykernels.pairing_table(u, w, 3)
    for m in range(len(w) + 1):
        assert sorted(BACKENDS["cython"].shuffle_splits(w, m, 3)) == sorted(_pykernels.shuffle_splits(w, m, 3))
