"""PBW normal form in U(D) by rewriting.

Basis monomials are ``b_1^c_1 ... b_P^c_P y^gamma``; a key is ``(c, gamma)``.  Words in the
root vectors ("b-words") are rewritten with straightening rules

    b_k b_l  ->  chi_{beta_l}(g_{beta_k}) b_l b_k + tail        (k > l)

Rules inside a connected component are solved exactly modulo the quantum Serre
relations; rules across components come from the linking relations.  Every triple
``k > l > m`` is checked for a resolvable overlap when the system is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .. import config, kernels
from ..config import ConsistencyError, ResourceLimitError
from ..freealg import (
    FreeElement,
    exponent_vectors,
    multidegree,
    pbw_monomial,
    root_vector_pairs,
    root_vectors,
    serre_element,
    words_of_multidegree,
)
from ..linalg import solve
from ..rootsys import root_data
from ..scalars import ONE, ZERO, Monomial, ScalarFraction, S, format_scalar
from .datum import GenericDatum, require_valid


class CompletionDiverged(ConsistencyError):
    def __init__(self, overlap, detail):
        super().__init__(f"completion failed at overlap {overlap}: {detail}")
        self.overlap = overlap
        self.detail = detail


class UnsupportedType(ValueError):
    pass


_RANK2_GATED = {"B2", "C2"}
_RANK3_GATED = {"A3", "B3", "C3", "G2"}


def check_supported(type_names, limits) -> None:
    for name in type_names:
        if name == "A1" or name == "A2":
            continue
        if name in _RANK2_GATED and limits.allow_b2:
            continue
        if name in _RANK3_GATED and limits.allow_rank3:
            continue
        raise UnsupportedType(f"component type {name} is not enabled for rewriting")


# ---------------------------------------------------------------------------
# elements


def _addto(d: dict, key, val) -> None:
    v = d.get(key)
    d[key] = val if v is None else v + val


def _gadd(g, h) -> tuple:
    return tuple(a + b for a, b in zip(g, h)) if any(h) else g


def _memo_reduce(cache: dict, root, expand, leaf, zero: tuple, limit: int) -> None:
    """Fill ``cache[root]`` with ``{(leaf_key, gamma): coeff}``.

    ``expand(u)`` returns ``None`` for an irreducible word, otherwise the list of
    ``(child, factor, gamma_shift)`` of one rewriting step.  Each word is reduced once;
    an explicit stack replaces recursion.
    """
    if root in cache:
        return
    stack = [root]
    pending: dict = {}
    computed = 0
    while stack:
        u = stack[-1]
        if u in cache:
            stack.pop()
            continue
        children = pending.get(u)
        if children is None:
            children = expand(u)
            if children is None:
                cache[u] = {(leaf(u), zero): ONE}
                stack.pop()
                continue
            pending[u] = children
            missing = [v for v, _, _ in children if v not in cache]
            if missing:
                stack.extend(missing)
                if len(stack) > limit:
                    raise ResourceLimitError(f"rewriting exceeded the term limit {limit}")
                continue
        elif any(v not in cache for v, _, _ in children):
            raise ConsistencyError(f"rewriting revisits the word {u}")
        res: dict = {}
        for v, f, shift in children:
            for (k, g), x in cache[v].items():
                if shift is not None:
                    g = _gadd(g, shift)
                _addto(res, (k, g), f * x)
        cache[u] = {k: x for k, x in res.items() if not x.is_zero()}
        del pending[u]
        stack.pop()
        computed += 1
        if computed > limit:
            raise ResourceLimitError(f"rewriting exceeded the term limit {limit}")


class PBWElement:
    """Finite combination of PBW basis monomials ``(c, gamma)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: S(v) for k, v in (terms or {}).items() if not S(v).is_zero()}

    @classmethod
    def basis(cls, c, gamma, coeff=1) -> "PBWElement":
        return cls({(tuple(c), tuple(gamma)): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _addto(out, k, v)
        return PBWElement(out)

    def __neg__(self):
        return PBWElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = S(c)
        return PBWElement({k: c * v for k, v in self.terms.items()})

    def scale(self, c) -> "PBWElement":
        return S(c) * self

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):  # pragma: no cover - mutable-looking value type
        raise TypeError("PBWElement is not hashable")

    def coefficient(self, c, gamma) -> ScalarFraction:
        return self.terms.get((tuple(c), tuple(gamma)), ZERO)

    def shift(self, gamma) -> "PBWElement":
        """Right multiplication by ``y^gamma``."""
        return PBWElement(
            {(c, tuple(a + b for a, b in zip(g, gamma))): v for (c, g), v in self.terms.items()}
        )

    def __repr__(self):
        return f"PBWElement({self.terms!r})"


# ---------------------------------------------------------------------------
# rewriting system


@dataclass(frozen=True)
class Rule:
    k: int
    l: int
    lead: ScalarFraction
    tail: PBWElement


class RewriteSystem:
    """Straightening rules for ``U(D)`` and the normal-form engine built on them."""

    def __init__(self, datum: GenericDatum, *, limits=None, check: bool = True):
        self.limits = limits or config.LIMITS
        rep = require_valid(datum)
        check_supported(rep.finite_type.split("x"), self.limits)
        self.datum = datum
        self.theta = datum.theta
        self.s = datum.s
        self.roots = root_data(datum.cartan)
        self.beta = self.roots.beta
        self.P = len(self.beta)
        self.heights = self.roots.heights
        self.q = datum.braiding()
        self.simple_pos = tuple(self.roots.simple_position(i) for i in range(self.theta))
        self.root_block = tuple(
            datum.block_of(next(i for i, x in enumerate(b) if x)) for b in self.beta
        )
        self.vectors = root_vectors(self.q, self.beta)
        self.brackets = root_vector_pairs(self.beta)
        self._zero_gamma = (0,) * self.s
        # chi_{beta_j}(Y_h)
        self._chi_root = tuple(
            tuple(datum.chi_weight(b, tuple(int(h == k) for k in range(self.s))) for h in range(self.s))
            for b in self.beta
        )
        self._chi_simple = tuple(
            tuple(datum.chi[i][h] for h in range(self.s)) for i in range(self.theta)
        )
        self._bword_cache: dict = {}
        self._nf_cache: dict = {}
        self._expand_cache: dict = {}
        self._delta_cache: dict = {}
        self._reduce_cache: dict = {}
        self.rules: dict = {}
        self._build_block_rules()
        self._build_cross_rules()
        if check:
            self.diamond_check()

    # -- small helpers ------------------------------------------------------

    def unit(self, k: int) -> tuple:
        return tuple(int(j == k) for j in range(self.P))

    def lead(self, k: int, l: int) -> Monomial:
        """``chi_{beta_l}(g_{beta_k})``."""
        return self.datum.chi_weight(self.beta[l], self.datum.g_weight(self.beta[k]))

    def _gamma_char(self, table, gamma) -> Monomial:
        m = Monomial(1)
        for h, e in enumerate(gamma):
            if e:
                m = m * table[h] ** e
        return m

    def chi_root(self, j: int, gamma) -> Monomial:
        return self._gamma_char(self._chi_root[j], gamma)

    def _chi_bword(self, word, gamma) -> ScalarFraction:
        m = Monomial(1)
        for j in word:
            m = m * self.chi_root(j, gamma)
        return S(m)

    def _chi_aword(self, word, gamma) -> ScalarFraction:
        m = Monomial(1)
        for i in word:
            m = m * self._gamma_char(self._chi_simple[i], gamma)
        return S(m)

    def bword(self, c) -> tuple:
        w = self._bword_cache.get(c)
        if w is None:
            w = tuple(j for j, k in enumerate(c) for _ in range(k))
            self._bword_cache[c] = w
        return w

    def _counts(self, w) -> tuple:
        c = [0] * self.P
        for j in w:
            c[j] += 1
        return tuple(c)

    def filtration_degree(self, x: PBWElement) -> int:
        if x.is_zero():
            return 0
        return max(sum(k * h for k, h in zip(c, self.heights)) for c, _ in x.terms)

    def order_key(self, key) -> tuple:
        """Monomial order: filtration degree, then ``c`` lexicographically with ``b_1`` most significant."""
        c, gamma = key
        return (sum(k * h for k, h in zip(c, self.heights)), c, gamma)

    # -- rule construction --------------------------------------------------

    def _serre_rows(self, md) -> list:
        rows = []
        for blk in self.datum.blocks:
            for i in blk:
                for j in blk:
                    if i == j:
                        continue
                    s = serre_element(i, j, self.q, self.datum.cartan[i][j])
                    ms = multidegree(next(iter(s.terms)), self.theta)
                    rem = tuple(a - b for a, b in zip(md, ms))
                    if any(x < 0 for x in rem):
                        continue
                    for left in iproduct(*(range(x + 1) for x in rem)):
                        right = tuple(a - b for a, b in zip(rem, left))
                        for wl in words_of_multidegree(left):
                            for wr in words_of_multidegree(right):
                                rows.append(FreeElement.word(*wl) * s * FreeElement.word(*wr))
        return rows

    def _pbw_of_multidegree(self, md) -> list:
        n = sum(md)
        out = []
        for c in exponent_vectors(self.heights, n):
            w = tuple(sum(c[j] * self.beta[j][i] for j in range(self.P)) for i in range(self.theta))
            if w == tuple(md):
                out.append(c)
        return out

    def _solve_block_rule(self, k: int, l: int) -> Rule:
        vk, vl = self.vectors[k], self.vectors[l]
        lead = self.lead(k, l)
        x = vk * vl - (vl * vk) * lead
        md = tuple(a + b for a, b in zip(self.beta[k], self.beta[l]))
        ideal = self._serre_rows(md)
        cands = self._pbw_of_multidegree(md)
        monos = {c: pbw_monomial(self.vectors, c) for c in cands}
        unknowns = [("mu", r) for r in range(len(ideal))] + [("rho", c) for c in cands]
        words = words_of_multidegree(md)
        matrix = []
        rhs = []
        for w in words:
            row = {}
            for r, el in enumerate(ideal):
                v = el.terms.get(w)
                if v is not None:
                    row[("mu", r)] = v
            for c, el in monos.items():
                v = el.terms.get(w)
                if v is not None:
                    row[("rho", c)] = v
            matrix.append(row)
            rhs.append(x.terms.get(w, ZERO))
        res = solve(matrix, rhs, unknowns)
        if res is None:
            raise CompletionDiverged((k + 1, l + 1), "no straightening modulo the Serre relations")
        sol, free = res
        if any(u[0] == "rho" for u in free):
            raise ConsistencyError(f"PBW monomials of degree {md} are dependent modulo the Serre relations")
        tail = PBWElement({(c, self._zero_gamma): sol[("rho", c)] for c in cands})
        return Rule(k, l, S(lead), tail)

    def _build_block_rules(self) -> None:
        pairs = [
            (k, l)
            for k in range(self.P)
            for l in range(k)
            if self.root_block[k] == self.root_block[l]
        ]
        for k, l in pairs:
            rule = self._solve_block_rule(k, l)
            self._check_shape(rule)
            self.rules[(k, l)] = rule

    def _build_cross_rules(self) -> None:
        for k in range(self.P):
            for l in range(k):
                if self.root_block[k] == self.root_block[l]:
                    continue
                x = self.vectors[k] * self.vectors[l]
                nf = self._nf_phase({(w, self._zero_gamma): c for w, c in x.terms.items()})
                lead = S(self.lead(k, l))
                key = (tuple(a + b for a, b in zip(self.unit(k), self.unit(l))), self._zero_gamma)
                got = nf.coefficient(*key)
                if got != lead:
                    raise CompletionDiverged((k + 1, l + 1), "leading coefficient differs from chi_{beta_l}(g_{beta_k})")
                tail = nf - PBWElement({key: lead})
                rule = Rule(k, l, lead, tail)
                self._check_shape(rule)
                self.rules[(k, l)] = rule

    def _check_shape(self, rule: Rule) -> None:
        k, l = rule.k, rule.l
        top = self.heights[k] + self.heights[l]
        same = self.root_block[k] == self.root_block[l]
        lead_key = (tuple(a + b for a, b in zip(self.unit(k), self.unit(l))), self._zero_gamma)
        for key in rule.tail.terms:
            c, gamma = key
            deg = sum(x * h for x, h in zip(c, self.heights))
            if deg > top:
                raise CompletionDiverged((k + 1, l + 1), f"tail term {key} has larger filtration degree")
            if same and (any(gamma) or any(c[m] for m in range(self.P) if not l < m < k)):
                raise CompletionDiverged((k + 1, l + 1), f"tail term {key} is not between b_{l + 1} and b_{k + 1}")
            if deg == top and not self.order_key(key) < self.order_key(lead_key):
                raise CompletionDiverged((k + 1, l + 1), f"tail term {key} is not smaller than b_{l + 1} b_{k + 1}")

    # -- engines ------------------------------------------------------------

    def _inversion(self, w, strategy):
        if strategy == "rightmost":
            for p in range(len(w) - 2, -1, -1):
                if w[p] > w[p + 1]:
                    return p
            return None
        for p in range(len(w) - 1):
            if w[p] > w[p + 1]:
                return p
        return None

    def _expand_bword(self, w, strategy):
        """One rewriting step on a b-word: ``None`` if sorted, else ``[(word, factor, shift)]``."""
        p = self._inversion(w, strategy)
        if p is None:
            return None
        k, l = w[p], w[p + 1]
        rule = self.rules.get((k, l))
        if rule is None:
            raise ConsistencyError(f"no rule for b_{k + 1} b_{l + 1}")
        prefix, suffix = w[:p], w[p + 2 :]
        out = [(prefix + (l, k) + suffix, rule.lead, None)]
        for (c2, d2), r in rule.tail.terms.items():
            f = r
            if any(d2):
                f = f * self._chi_bword(suffix, d2)
                out.append((prefix + self.bword(c2) + suffix, f, d2))
            else:
                out.append((prefix + self.bword(c2) + suffix, f, None))
        return out

    def reduce_bwords(self, work: dict, strategy: str = "leftmost") -> PBWElement:
        """Normal form of ``{(b_word, gamma): coeff}`` using the straightening rules."""
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown strategy {strategy!r}")
        cache = self._reduce_cache.setdefault(strategy, {})
        out: dict = {}
        for (w, gamma), c in work.items():
            c = S(c)
            if c.is_zero():
                continue
            _memo_reduce(
                cache, w, lambda u: self._expand_bword(u, strategy), lambda u: self._counts(u), self._zero_gamma, self.limits.term_limit
            )
            for (k, g), v in cache[w].items():
                _addto(out, (k, _gadd(g, gamma)), c * v)
        return PBWElement(out)

    def _expand_phase(self, w, blk):
        """One linking-relation step moving a letter of a smaller component to the left."""
        p = next((p for p in range(len(w) - 1) if blk[w[p]] > blk[w[p + 1]]), None)
        if p is None:
            return None
        j, i = w[p], w[p + 1]
        prefix, suffix = w[:p], w[p + 2 :]
        swapped = prefix + (i, j) + suffix
        short = prefix + suffix
        gg = tuple(a + b for a, b in zip(self.datum.g[i], self.datum.g[j]))
        out = []
        if i < j:
            # a_j a_i = chi_j(g_i)^-1 (a_i a_j - lambda_ij (1 - g_i g_j))
            inv = S(self.q[i, j]).inverse()
            out.append((swapped, inv, None))
            lam = self.datum.lam_of(i, j)
            if not lam.is_zero():
                f = inv * lam
                out.append((short, -f, None))
                out.append((short, f * self._chi_aword(suffix, gg), gg))
        else:
            # a_j a_i = chi_i(g_j) a_i a_j + lambda_ji (1 - g_j g_i)
            out.append((swapped, S(self.q[j, i]), None))
            lam = self.datum.lam_of(j, i)
            if not lam.is_zero():
                out.append((short, lam, None))
                out.append((short, -lam * self._chi_aword(suffix, gg), gg))
        return out

    def _phase_sort(self, work: dict) -> dict:
        """Sort a-words by component using the linking relations."""
        blk = [self.datum.block_of(i) for i in range(self.theta)]
        cache = self._reduce_cache.setdefault("phase", {})
        out: dict = {}
        for (w, gamma), c in work.items():
            if c.is_zero():
                continue
            _memo_reduce(cache, w, lambda u: self._expand_phase(u, blk), lambda u: u, self._zero_gamma, self.limits.term_limit)
            for (k, g), v in cache[w].items():
                _addto(out, (k, _gadd(g, gamma)), c * v)
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _to_bwords(self, awork: dict) -> dict:
        out: dict = {}
        for (w, gamma), c in awork.items():
            _addto(out, (tuple(self.simple_pos[i] for i in w), gamma), c)
        return out

    def _nf_phase(self, awork: dict) -> PBWElement:
        """Sort by component, then straighten inside each component."""
        return self.reduce_bwords(self._to_bwords(self._phase_sort(awork)), "leftmost")

    def nf_awords(self, awork: dict, strategy: str = "leftmost") -> PBWElement:
        """Normal form of ``{(a_word, gamma): coeff}`` (group element to the right of the word)."""
        awork = {k: S(v) for k, v in awork.items()}
        if strategy == "phase":
            return self._nf_phase(awork)
        return self.reduce_bwords(self._to_bwords(awork), strategy)

    def nf_aword(self, word) -> PBWElement:
        """Cached normal form of a single a-word."""
        word = tuple(word)
        r = self._nf_cache.get(word)
        if r is None:
            r = self.nf_awords({(word, self._zero_gamma): ONE})
            self._nf_cache[word] = r
        return r

    # -- algebra ------------------------------------------------------------

    def mul(self, x: PBWElement, y: PBWElement) -> PBWElement:
        work: dict = {}
        for (c1, g1), v1 in x.terms.items():
            for (c2, g2), v2 in y.terms.items():
                f = v1 * v2
                if any(g1):
                    f = f * self._chi_bword(self.bword(c2), g1)
                _addto(work, (self.bword(c1) + self.bword(c2), tuple(a + b for a, b in zip(g1, g2))), f)
        return self.reduce_bwords(work)

    def generator(self, i: int) -> PBWElement:
        return PBWElement.basis(self.unit(self.simple_pos[i]), self._zero_gamma)

    def group(self, gamma) -> PBWElement:
        return PBWElement.basis((0,) * self.P, gamma)

    def root_vector(self, j: int) -> PBWElement:
        return PBWElement.basis(self.unit(j), self._zero_gamma)

    def expand(self, x: PBWElement) -> dict:
        """``{(a_word, gamma): coeff}`` obtained by writing each ``b_j`` as a bracket of ``a``'s."""
        out: dict = {}
        for (c, gamma), v in x.terms.items():
            fe = self._expand_cache.get(c)
            if fe is None:
                fe = pbw_monomial(self.vectors, c)
                self._expand_cache[c] = fe
            for w, cw in fe.terms.items():
                _addto(out, (w, gamma), v * cw)
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- coalgebra ----------------------------------------------------------

    def _table_monomial(self, table) -> Monomial:
        m = Monomial(1)
        n = self.theta
        for idx, e in enumerate(table):
            if e:
                m = m * self.q[idx // n, idx % n] ** e
        return m

    def delta_aword(self, w) -> dict:
        """``Delta`` of an a-word as ``{(key, key): coeff}`` with both legs in normal form."""
        w = tuple(w)
        r = self._delta_cache.get(w)
        if r is not None:
            return r
        out: dict = {}
        n = len(w)
        for m in range(n + 1):
            for left, right, table in kernels.shuffle_splits(w, m, self.theta):
                coeff = S(self._table_monomial(table))
                # letters not in the left leg contribute their g to the left leg
                gl = list(self._zero_gamma)
                cnt_left = list(multidegree(left, self.theta))
                for i in w:
                    if cnt_left[i]:
                        cnt_left[i] -= 1
                    else:
                        for h in range(self.s):
                            gl[h] += self.datum.g[i][h]
                lnf = self.nf_aword(left).shift(tuple(gl))
                rnf = self.nf_aword(right)
                for k1, v1 in lnf.terms.items():
                    for k2, v2 in rnf.terms.items():
                        _addto(out, (k1, k2), coeff * v1 * v2)
        r = {k: v for k, v in out.items() if not v.is_zero()}
        self._delta_cache[w] = r
        return r

    def coproduct_awords(self, awork: dict) -> dict:
        out: dict = {}
        for (w, gamma), v in awork.items():
            for ((c1, g1), (c2, g2)), cv in self.delta_aword(w).items():
                k1 = (c1, tuple(a + b for a, b in zip(g1, gamma)))
                k2 = (c2, tuple(a + b for a, b in zip(g2, gamma)))
                _addto(out, (k1, k2), S(v) * cv)
        return {k: v for k, v in out.items() if not v.is_zero()}

    def coproduct(self, x: PBWElement) -> dict:
        """``Delta(x)`` as ``{(key, key): coeff}``."""
        return self.coproduct_awords(self.expand(x))

    def counit(self, x: PBWElement) -> ScalarFraction:
        total = ZERO
        for (c, _), v in x.terms.items():
            if not any(c):
                total = total + v
        return total

    # -- reporting ----------------------------------------------------------

    def root_name(self, j: int) -> str:
        b = self.beta[j]
        if sum(b) == 1:
            return f"a{b.index(1) + 1}"
        return f"b{j + 1}"

    def rules_json(self) -> list:
        names = self.param_names
        out = []
        for (k, l), rule in sorted(self.rules.items()):
            out.append(
                {
                    "lhs": f"{self.root_name(k)}*{self.root_name(l)}",
                    "lead": format_scalar(rule.lead, names),
                    "rhs": format_pbw(
                        PBWElement({(tuple(a + b for a, b in zip(self.unit(k), self.unit(l))), self._zero_gamma): rule.lead})
                        + rule.tail,
                        self,
                    ),
                }
            )
        return out

    @property
    def param_names(self):
        return list(self.datum.names) if self.datum.names else None

    def order_descriptor(self) -> str:
        return (
            "root vectors b_j ordered by the beta numeration; straightening b_k b_l -> b_l b_k for k > l; "
            "tails ordered by filtration degree, then exponent vectors lexicographically with b_1 most significant; "
            "b_j = [b_k, b_l]_c with beta_j = beta_k + beta_l, l < j < k, smallest l"
        )


def build_rewrite_system(datum: GenericDatum, *, limits=None, check: bool = True) -> RewriteSystem:
    return RewriteSystem(datum, limits=limits, check=check)


def diamond_check(system: RewriteSystem) -> int:
    """Resolve every overlap ``b_k b_l b_m`` (``k > l > m``) both ways; return the count."""
    n = 0
    z = system._zero_gamma
    for k in range(system.P):
        for l in range(k):
            for m in range(l):
                w = ((k, l, m), z)
                left = system.reduce_bwords({w: ONE}, "leftmost")
                right = system.reduce_bwords({w: ONE}, "rightmost")
                if left != right:
                    raise CompletionDiverged(
                        (k + 1, l + 1, m + 1), f"{format_pbw(left, system)} != {format_pbw(right, system)}"
                    )
                n += 1
    return n


RewriteSystem.diamond_check = diamond_check


# ---------------------------------------------------------------------------
# printing


def format_key(key, system: RewriteSystem) -> str:
    c, gamma = key
    parts = []
    for j, k in enumerate(c):
        if k:
            name = system.root_name(j)
            parts.append(name if k == 1 else f"{name}^{k}")
    for h, e in enumerate(gamma):
        if e:
            parts.append(f"y{h + 1}" if e == 1 else f"y{h + 1}^{e}")
    return "*".join(parts)


def _sort_keys(keys, system):
    return sorted(
        keys,
        key=lambda k: (-sum(x * h for x, h in zip(k[0], system.heights)), tuple(-x for x in k[0]), k[1]),
    )


def format_pbw(x: PBWElement, system: RewriteSystem) -> str:
    if x.is_zero():
        return "0"
    names = system.param_names
    out = []
    for key in _sort_keys(x.terms, system):
        v = x.terms[key]
        mono = format_key(key, system)
        neg = False
        mono_coeff = v.as_monomial()
        if mono_coeff is not None and mono_coeff.coeff < 0:
            neg = True
            v = -v
            mono_coeff = -mono_coeff
        if not mono:
            body = format_scalar(v, names)
        elif v.is_one():
            body = mono
        elif mono_coeff is not None:
            body = f"{format_scalar(v, names)}*{mono}"
        else:
            body = f"({format_scalar(v, names)})*{mono}"
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_tensor(t: dict, system: RewriteSystem) -> list:
    names = system.param_names
    out = []
    order = sorted(t, key=lambda kk: (-system.filtration_degree(PBWElement({kk[0]: 1})), kk))
    for k1, k2 in order:
        out.append(
            {
                "coeff": format_scalar(t[(k1, k2)], names),
                "left": format_key(k1, system) or "1",
                "right": format_key(k2, system) or "1",
            }
        )
    return out
