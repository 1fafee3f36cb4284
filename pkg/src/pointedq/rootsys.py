"""Positive roots, a reduced word for the longest Weyl element, and the root numeration.

Roots are coefficient vectors over the simple roots.  ``s_i(beta) = beta - <beta, alpha_i^v> alpha_i``
with ``<beta, alpha_i^v> = sum_j a_ij beta_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braiding import NotFinite, cartan_partition, finite_type, symmetrize
from .config import ConsistencyError


@dataclass(frozen=True)
class RootData:
    cartan: tuple
    d: tuple
    blocks: tuple
    positive_roots: tuple
    w0_word: tuple  # 0-based simple indices
    beta: tuple
    heights: tuple

    @property
    def P(self) -> int:
        return len(self.beta)

    @property
    def theta(self) -> int:
        return len(self.cartan)

    def simple_position(self, i: int) -> int:
        """Index ``j`` with ``beta[j] == alpha_i``."""
        e = tuple(int(k == i) for k in range(self.theta))
        return self.beta.index(e)

    def block_of_root(self, j: int) -> int:
        support = {k for k, c in enumerate(self.beta[j]) if c}
        for b, block in enumerate(self.blocks):
            if support <= set(block):
                return b
        raise ConsistencyError(f"root {self.beta[j]} spans several components")

    def to_json(self) -> dict:
        return {
            "positive_roots": [list(r) for r in self.positive_roots],
            "w0_word": [i + 1 for i in self.w0_word],
            "beta": [list(b) for b in self.beta],
            "heights": list(self.heights),
        }


def reflect(a: Sequence[Sequence[int]], i: int, beta: Sequence[int]) -> tuple:
    pairing = sum(a[i][j] * beta[j] for j in range(len(beta)))
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def _check_finite(a):
    try:
        finite_type(a)
    except NotFinite as exc:
        raise ValueError(f"Cartan matrix is not of finite type: {exc}") from exc


def positive_roots(a: Sequence[Sequence[int]]) -> list:
    """Closure of the simple roots under simple reflections, positive part, sorted by height."""
    _check_finite(a)
    n = len(a)
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                g = reflect(a, i, beta)
                if all(c >= 0 for c in g) and g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return sorted(seen, key=lambda r: (sum(r), tuple(-c for c in r)))


def _apply_word(a, word, beta):
    for i in reversed(word):
        beta = reflect(a, i, beta)
    return beta


def longest_word(a: Sequence[Sequence[int]], blocks=None) -> list:
    """Reduced word for ``w0``: per component, greedily append the smallest ``i`` with
    ``w(alpha_i) > 0``; components concatenated in order."""
    _check_finite(a)
    n = len(a)
    if blocks is None:
        blocks = cartan_partition(a).blocks
    word = []
    for block in blocks:
        w = []
        while True:
            for i in block:
                e = tuple(int(k == i) for k in range(n))
                if all(c >= 0 for c in _apply_word(a, w, e)):
                    w.append(i)
                    break
            else:
                break
        word.extend(w)
    return word


def beta_sequence(a: Sequence[Sequence[int]], word: Sequence[int]):
    """``beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})`` and their heights."""
    n = len(a)
    beta = []
    for j, i in enumerate(word):
        e = tuple(int(k == i) for k in range(n))
        b = _apply_word(a, word[:j], e)
        if any(c < 0 for c in b) or b in beta:
            raise ConsistencyError(f"word {list(word)} is not reduced (beta_{j + 1} = {b})")
        beta.append(b)
    return beta, [sum(b) for b in beta]


def root_data(a: Sequence[Sequence[int]]) -> RootData:
    a = tuple(tuple(r) for r in a)
    part = cartan_partition(a)
    d = symmetrize(a, part)
    roots = positive_roots(a)
    word = longest_word(a, part.blocks)
    beta, heights = beta_sequence(a, word)
    if len(word) != len(roots) or set(beta) != set(roots):
        raise ConsistencyError("beta numeration does not enumerate the positive roots")
    return RootData(a, d, part.blocks, tuple(roots), tuple(word), tuple(beta), tuple(heights))
