"""The tensor algebra T(V) of a diagonal braiding and its Nichols quotient.

Words are tuples of 0-based generator indices.  For a homogeneous ``u`` (word
degree ``g_u``, character ``chi_u``) the braiding is ``c(u (x) v) = chi_v(g_u) v (x) u``
with ``chi_v(g_u) = prod q[a][b]`` over letters ``a`` of ``u`` and ``b`` of ``v``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from . import kernels
from .braiding import BraidingMatrix, solve_power
from .linalg import rank
from .scalars import ONE, ZERO, Monomial, ScalarFraction, S, q_factorial, q_binomial

# ---------------------------------------------------------------------------
# elements


class FreeElement:
    """Finite linear combination of words with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = S(c)
            if not c.is_zero():
                clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def word(cls, *letters, coeff=1) -> "FreeElement":
        return cls({tuple(letters): coeff})

    @classmethod
    def gen(cls, i: int) -> "FreeElement":
        return cls({(i,): ONE})

    @classmethod
    def scalar(cls, c) -> "FreeElement":
        return cls({(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (self - other).is_zero()

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            out[w] = c if v is None else v + c
        return FreeElement(out)

    def __neg__(self):
        return FreeElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    v = out.get(w)
                    out[w] = c1 * c2 if v is None else v + c1 * c2
            return FreeElement(out)
        c = S(other)
        return FreeElement({w: v * c for w, v in self.terms.items()})

    def __rmul__(self, other):
        c = S(other)
        return FreeElement({w: c * v for w, v in self.terms.items()})

    def __pow__(self, n: int):
        out = FreeElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def multidegrees(self) -> set:
        return {multidegree(w, None) for w in self.terms}

    def homogeneous_parts(self, theta: int) -> dict:
        parts: dict = {}
        for w, c in self.terms.items():
            parts.setdefault(multidegree(w, theta), {})[w] = c
        return {md: FreeElement(t) for md, t in parts.items()}

    def __repr__(self):
        return f"FreeElement({format_free(self)})"

    def __str__(self):
        return format_free(self)


def format_free(x: FreeElement, names=None, letter="x") -> str:
    if x.is_zero():
        return "0"
    from .scalars import format_scalar

    parts = []
    for w in sorted(x.terms, key=lambda w: (len(w), w)):
        c = x.terms[w]
        mono = "*".join(f"{letter}{i + 1}" for i in w)
        cs = format_scalar(c, names)
        if not mono:
            parts.append(cs)
        elif c == ONE:
            parts.append(mono)
        elif c == -ONE:
            parts.append("-" + mono)
        else:
            parts.append(f"({cs})*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def multidegree(word: Sequence[int], theta: int | None) -> tuple:
    cnt = Counter(word)
    n = theta if theta is not None else (max(word) + 1 if word else 0)
    return tuple(cnt.get(i, 0) for i in range(n))


def words_of_multidegree(md: Sequence[int]) -> list:
    """All words with the given letter counts, in lexicographic order."""
    out = []
    counts = list(md)
    n = sum(counts)
    cur = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                cur.append(i)
                rec()
                cur.pop()
                counts[i] += 1

    rec()
    return out


def multidegrees_of_total(theta: int, n: int) -> list:
    out = []

    def rec(prefix, left):
        if len(prefix) == theta - 1:
            out.append(tuple(prefix + [left]))
            return
        for k in range(left, -1, -1):
            rec(prefix + [k], left - k)

    if theta == 0:
        return [()] if n == 0 else []
    rec([], n)
    return out


# ---------------------------------------------------------------------------
# braiding scalars


def chi(q: BraidingMatrix, u: Sequence[int], v: Sequence[int]) -> Monomial:
    """``chi_v(g_u) = prod_{a in u, b in v} q[a][b]``."""
    m = Monomial(1)
    for a in u:
        for b in v:
            m = m * q[a, b]
    return m


def _table_monomial(q: BraidingMatrix, table: tuple) -> Monomial:
    theta = q.theta
    m = Monomial(1)
    for k, n in enumerate(table):
        if n:
            m = m * q[k // theta, k % theta] ** n
    return m


# ---------------------------------------------------------------------------
# operations


def braided_commutator(u: FreeElement, v: FreeElement, q: BraidingMatrix) -> FreeElement:
    """``[u, v]_c = u v - chi_v(g_u) v u`` on homogeneous parts, extended bilinearly."""
    out = FreeElement()
    theta = q.theta
    for mu, pu in u.homogeneous_parts(theta).items():
        wu = _word_of(mu)
        for mv, pv in v.homogeneous_parts(theta).items():
            c = chi(q, wu, _word_of(mv))
            out = out + pu * pv - (pv * pu) * c
    return out


def _word_of(md: Sequence[int]) -> tuple:
    return tuple(i for i, c in enumerate(md) for _ in range(c))


def ad_power(i: int, j: int, r: int, q: BraidingMatrix) -> FreeElement:
    """``ad_c(x_i)^r (x_j)`` by iterated commutators."""
    x = FreeElement.gen(j)
    xi = FreeElement.gen(i)
    for _ in range(r):
        x = braided_commutator(xi, x, q)
    return x


def cartan_exponent(i: int, j: int, q: BraidingMatrix) -> int:
    a = solve_power(q[i, i], q[i, j] * q[j, i])
    if a is None or a > 0:
        raise ValueError(f"pair ({i + 1}, {j + 1}) is not of Cartan type")
    return a


def serre_element(i: int, j: int, q: BraidingMatrix, a_ij: int | None = None) -> FreeElement:
    """``sum_l (-1)^l binom(r, l)_{q_ii} q_ii^(l(l-1)/2) q_ij^l x_i^(r-l) x_j x_i^l``, ``r = 1 - a_ij``."""
    if i == j:
        raise ValueError("serre_element needs i != j")
    if a_ij is None:
        a_ij = cartan_exponent(i, j, q)
    r = 1 - a_ij
    qii, qij = q[i, i], q[i, j]
    terms = {}
    for l in range(r + 1):
        c = S(q_binomial(r, l, qii)) * (qii ** (l * (l - 1) // 2)) * (qij ** l)
        if l % 2:
            c = -c
        terms[(i,) * (r - l) + (j,) + (i,) * l] = c
    return FreeElement(terms)


def serre_scalar(r: int, i: int, j: int, q: BraidingMatrix) -> ScalarFraction:
    """``(r)!_{q_ii} prod_{0<=k<r} (1 - q_ii^k q_ij q_ji)``."""
    qii = q[i, i]
    val = S(q_factorial(r, qii))
    for k in range(r):
        val = val * (ONE - S(qii ** k * q[i, j] * q[j, i]))
    return val


def serre_vanishing(r: int, i: int, j: int, q: BraidingMatrix) -> bool:
    """Whether ``ad_c(x_i)^r (x_j) = 0`` in the Nichols algebra."""
    if i == j:
        raise ValueError("serre_vanishing needs i != j")
    if r < 1:
        raise ValueError("serre_vanishing needs r >= 1")
    return serre_scalar(r, i, j, q).is_zero()


def shuffle_coproduct(u: FreeElement, m: int, n: int, q: BraidingMatrix) -> dict:
    """The ``(m, n)`` component of the braided coproduct of T(V).

    Returns ``{(left_word, right_word): coefficient}``; each split contributes the
    product of ``q[w_k][w_l]`` over pairs ``k < l`` with ``k`` sent right and ``l`` left.
    """
    out: dict = {}
    theta = q.theta
    for w, c in u.terms.items():
        if len(w) != m + n:
            raise ValueError(f"word of length {len(w)} cannot split as ({m}, {n})")
        for left, right, table in kernels.shuffle_splits(w, m, theta):
            coeff = c * _table_monomial(q, table)
            key = (left, right)
            v = out.get(key)
            out[key] = coeff if v is None else v + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def coproduct_pairs(u: FreeElement, m: int, n: int, q: BraidingMatrix) -> list:
    """``shuffle_coproduct`` as a list of ``(FreeElement, FreeElement)`` pairs."""
    return [
        (FreeElement({l: c}), FreeElement.word(*r))
        for (l, r), c in sorted(shuffle_coproduct(u, m, n, q).items())
    ]


def word_pairing(u: Sequence[int], w: Sequence[int], q: BraidingMatrix) -> ScalarFraction:
    """Coefficient of ``u`` in the iterated coproduct ``Delta_{1,...,1}(w)``."""
    total = ZERO
    for table, mult in kernels.pairing_table(tuple(u), tuple(w), q.theta).items():
        total = total + S(_table_monomial(q, table)) * mult
    return total


def _b_factor(word, B) -> ScalarFraction:
    out = ONE
    if B is None:
        return out
    for a in word:
        out = out * S(B[a])
    return out


def pairing(x: FreeElement, y: FreeElement, q: BraidingMatrix, B=None) -> ScalarFraction:
    """Bilinear extension of :func:`word_pairing` (with weights ``B``); no symmetry assumed."""
    total = ZERO
    for u, cu in x.terms.items():
        for w, cw in y.terms.items():
            if len(u) != len(w):
                continue
            p = word_pairing(u, w, q)
            if not p.is_zero():
                total = total + cu * cw * p * _b_factor(u, B)
    return total


class RequiresSymmetricBraiding(ValueError):
    pass


def canonical_form(x: FreeElement, y: FreeElement, q: BraidingMatrix, B=None) -> ScalarFraction:
    """The canonical symmetric form with ``(x_i | x_j) = delta_ij B_i``; needs ``q_ij = q_ji``."""
    if not q.is_symmetric():
        raise RequiresSymmetricBraiding("canonical_form needs a symmetric braiding; twist first")
    if B is not None and any(S(b).is_zero() for b in B):
        raise ValueError("the scalars B_i must be nonzero")
    return pairing(x, y, q, B)


@dataclass
class GradedComponent:
    degree: tuple
    basis: list
    gram: list

    @property
    def rank(self) -> int:
        return rank(self.gram)


def graded_component(md: Sequence[int], q: BraidingMatrix, B=None) -> GradedComponent:
    words = words_of_multidegree(md)
    gram = [[word_pairing(u, w, q) * _b_factor(u, B) for w in words] for u in words]
    return GradedComponent(tuple(md), words, gram)


def _component_rank(args):
    md, q, B = args
    return graded_component(md, q, B).rank


def nichols_dims(q: BraidingMatrix, N: int, B=None, jobs: int = 1) -> list:
    """``dim B(V)(n)`` for ``n = 0..N`` as ranks of the pairing matrices.

    The pairing matrix of a multidegree is the matrix of the quantum symmetrizer;
    for a symmetric braiding it is the Gram matrix of the canonical form.
    """
    tasks = [(md, q, B) for n in range(1, N + 1) for md in multidegrees_of_total(q.theta, n)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            ranks = list(ex.map(_component_rank, tasks))
    else:
        ranks = [_component_rank(t) for t in tasks]
    dims = [1] + [0] * N
    for (md, _, _), r in zip(tasks, ranks):
        dims[sum(md)] += r
    return dims


def in_radical(x: FreeElement, q: BraidingMatrix) -> bool:
    """Whether ``x`` maps to zero in the Nichols algebra."""
    for md, part in x.homogeneous_parts(q.theta).items():
        for u in words_of_multidegree(md):
            if not pairing(FreeElement.word(*u), part, q).is_zero():
                return False
    return True


def serre_in_radical(i: int, j: int, q: BraidingMatrix, r: int | None = None) -> bool:
    """Whether ``ad_c(x_i)^r (x_j)`` (default ``r = 1 - a_ij``) pairs to zero with all words."""
    if r is None:
        return in_radical(serre_element(i, j, q), q)
    return in_radical(ad_power(i, j, r, q), q)


def skew_primitivity_check(u: FreeElement, q: BraidingMatrix) -> bool:
    """Whether every ``Delta_{m,n}(u)`` with ``m, n >= 1`` vanishes."""
    for md, part in u.homogeneous_parts(q.theta).items():
        n = sum(md)
        for m in range(1, n):
            if shuffle_coproduct(part, m, n - m, q):
                return False
    return True


def pbw_hilbert_coefficients(heights: Iterable[int], N: int) -> list:
    """Coefficients of ``prod_beta (1 - t^ht(beta))^-1`` up to ``t^N``."""
    coeffs = [1] + [0] * N
    for h in heights:
        for n in range(h, N + 1):
            coeffs[n] += coeffs[n - h]
    return coeffs


def brute_symmetrizer_entry(u: Sequence[int], w: Sequence[int], q: BraidingMatrix) -> ScalarFraction:
    """Direct permutation sum for :func:`word_pairing` (independent check, small words only)."""
    n = len(u)
    total = ZERO
    for pi in permutations(range(n)):
        if any(u[a] != w[pi[a]] for a in range(n)):
            continue
        m = Monomial(1)
        for a in range(n):
            for b in range(a + 1, n):
                if pi[a] > pi[b]:
                    m = m * q[u[b], u[a]]
        total = total + S(m)
    return total


# ---------------------------------------------------------------------------
# root vectors and PBW monomials


def root_vector_pairs(beta: Sequence[Sequence[int]]) -> dict:
    """For each non-simple ``beta_j`` the pair ``(k, l)``, ``l < j < k``, ``beta_j = beta_k + beta_l``,
    with the smallest such ``l``; the bracket is ``b_j = [b_k, b_l]_c``."""
    index = {tuple(b): j for j, b in enumerate(beta)}
    pairs = {}
    for j, b in enumerate(beta):
        if sum(b) == 1:
            continue
        for l in range(j):
            rest = tuple(x - y for x, y in zip(b, beta[l]))
            k = index.get(rest)
            if k is not None and k > j:
                pairs[j] = (k, l)
                break
        else:
            raise ValueError(f"no convex splitting for root {tuple(b)}")
    return pairs


def root_vectors(q: BraidingMatrix, beta: Sequence[Sequence[int]]) -> list:
    """Root vectors ``b_1..b_P`` in T(V) as iterated braided commutators."""
    pairs = root_vector_pairs(beta)
    out: list = [None] * len(beta)
    for j in sorted(range(len(beta)), key=lambda j: sum(beta[j])):
        b = beta[j]
        if j not in pairs:
            out[j] = FreeElement.gen(b.index(1))
        else:
            k, l = pairs[j]
            c = chi(q, _word_of(beta[k]), _word_of(beta[l]))
            out[j] = out[k] * out[l] - (out[l] * out[k]) * c
    return out


def exponent_vectors(heights: Sequence[int], n: int) -> list:
    """All ``c`` with ``sum c_j heights_j == n``."""
    out = []
    P = len(heights)

    def rec(j, left, cur):
        if j == P:
            if left == 0:
                out.append(tuple(cur))
            return
        for k in range(left // heights[j] + 1):
            rec(j + 1, left - k * heights[j], cur + [k])

    rec(0, n, [])
    return out


def pbw_monomial(vectors: Sequence[FreeElement], c: Sequence[int]) -> FreeElement:
    out = FreeElement.scalar(1)
    for v, k in zip(vectors, c):
        for _ in range(k):
            out = out * v
    return out


def pbw_independence(q: BraidingMatrix, beta, N: int) -> tuple:
    """``(rank, count)`` of the images of PBW monomials of total degree ``<= N``.

    Per multidegree, the rank of the pairing of all words against the PBW monomials
    is the dimension of their span modulo the radical.
    """
    vecs = root_vectors(q, beta)
    heights = [sum(b) for b in beta]
    total_rank = count = 0
    for n in range(N + 1):
        by_md: dict = {}
        for c in exponent_vectors(heights, n):
            md = tuple(sum(c[j] * beta[j][i] for j in range(len(beta))) for i in range(q.theta))
            by_md.setdefault(md, []).append(pbw_monomial(vecs, c))
        for md, monos in by_md.items():
            words = words_of_multidegree(md)
            mat = [[pairing(FreeElement.word(*w), m, q) for m in monos] for w in words]
            total_rank += rank(mat)
            count += len(monos)
    return total_rank, count
