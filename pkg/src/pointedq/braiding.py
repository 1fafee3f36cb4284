"""Diagonal braidings: components, Cartan type, symmetrizers, finite type, twisting, DJ form.

Vertices are 0-based internally; JSON reports and CLI output are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import int_det
from .scalars import Monomial, NeedsFieldExtension, parse_monomial

# ---------------------------------------------------------------------------
# errors


class NotCartan(ValueError):
    def __init__(self, pair, reason):
        super().__init__(f"not of Cartan type at {pair}: {reason}")
        self.pair = pair
        self.reason = reason


class NotSymmetrizable(ValueError):
    def __init__(self, cycle):
        super().__init__(f"Cartan matrix is not symmetrizable; witness cycle {cycle}")
        self.cycle = cycle


class NotFinite(ValueError):
    def __init__(self, index, minor):
        super().__init__(f"not of finite type: leading principal minor {index} is {minor}")
        self.index = index
        self.minor = minor


class NotDJ(ValueError):
    def __init__(self, reason, component=None):
        super().__init__(f"not of DJ type: {reason}")
        self.reason = reason
        self.component = component


class NonGeneric(ValueError):
    """A diagonal entry is a root of unity; outside the generic theory."""


# ---------------------------------------------------------------------------
# data


@dataclass(frozen=True)
class BraidingMatrix:
    q: tuple  # tuple of tuples of Monomial

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.q)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("braiding matrix must be square")
        for r in rows:
            for x in r:
                if not isinstance(x, Monomial):
                    raise TypeError("braiding entries must be unit monomials")
        object.__setattr__(self, "q", rows)

    @classmethod
    def parse(cls, rows: Sequence[Sequence], names=None) -> "BraidingMatrix":
        return cls(
            tuple(
                tuple(x if isinstance(x, Monomial) else parse_monomial(str(x), names) for x in r)
                for r in rows
            )
        )

    @property
    def theta(self) -> int:
        return len(self.q)

    def __getitem__(self, ij):
        i, j = ij
        return self.q[i][j]

    def permuted(self, perm: Sequence[int]) -> "BraidingMatrix":
        """Matrix ``p`` with ``p[perm[i]][perm[j]] = q[i][j]``."""
        n = self.theta
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        return BraidingMatrix(tuple(tuple(self.q[inv[a]][inv[b]] for b in range(n)) for a in range(n)))

    def is_symmetric(self) -> bool:
        n = self.theta
        return all(self.q[i][j] == self.q[j][i] for i in range(n) for j in range(i + 1, n))

    def to_json(self, names=None) -> list:
        from .scalars import format_monomial

        return [[format_monomial(x, names) for x in r] for r in self.q]


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple  # tuple of tuples of vertices, ordered by smallest vertex
    edges: frozenset

    def block_of(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise KeyError(i)

    def same(self, i: int, j: int) -> bool:
        return self.block_of(i) == self.block_of(j)


@dataclass(frozen=True)
class CartanData:
    a: tuple
    d: tuple
    partition: ComponentPartition

    @property
    def theta(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class DJPresentation:
    d: tuple
    qI: tuple  # one Monomial per block: q_ii = qI^d_i
    qhat: BraidingMatrix | None  # symmetric twist qhat_ij = qI^(d_i a_ij / 2), if representable
    sigma: tuple | None


@dataclass
class Classification:
    verdict: str  # "FiniteGK" | "InfiniteGK" | "Unknown"
    reason: str
    partition: ComponentPartition
    positive: bool
    cartan: CartanData | None = None
    finite_type: str | None = None
    dj: DJPresentation | None = None
    gk: int | None = None
    notes: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# components


def _partition(n: int, edges) -> ComponentPartition:
    adj = {i: set() for i in range(n)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen, blocks = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        blocks.append(tuple(sorted(comp)))
    return ComponentPartition(tuple(blocks), frozenset(edges))


def components(q: BraidingMatrix) -> ComponentPartition:
    n = q.theta
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not (q[i, j] * q[j, i]).is_one()
    ]
    return _partition(n, edges)


def cartan_partition(a: Sequence[Sequence[int]]) -> ComponentPartition:
    n = len(a)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] or a[j][i]]
    return _partition(n, edges)


# ---------------------------------------------------------------------------
# Cartan detection


def solve_power(base: Monomial, target: Monomial) -> int | None:
    """The integer ``a`` with ``base^a == target``; ``base`` must have infinite order."""
    if base.is_root_of_unity():
        raise ValueError("base has finite order")
    if base.exps2:
        k = next(i for i, x in enumerate(base.exps2) if x)
        tk = target.exps2[k] if k < len(target.exps2) else 0
        if tk % base.exps2[k]:
            return None
        a = tk // base.exps2[k]
        return a if base ** a == target else None
    if target.exps2:
        return None
    c, t = abs(base.coeff), abs(target.coeff)
    if c == 1:  # base is -1 excluded above; c == 1 with sign -1 impossible here
        return None
    est = (math.log(t.numerator) - math.log(t.denominator)) / (
        math.log(c.numerator) - math.log(c.denominator)
    )
    for a in {math.floor(est), math.ceil(est), round(est)}:
        if base ** a == target:
            return a
    return None


def detect_cartan(q: BraidingMatrix) -> CartanData:
    """Generalized Cartan matrix with ``q_ij q_ji = q_ii^a_ij``; raises :class:`NotCartan`."""
    n = q.theta
    for i in range(n):
        qii = q[i, i]
        if qii.is_one():
            raise NotCartan((i, i), "q_ii = 1")
        if qii.is_root_of_unity():
            raise NotCartan((i, i), "q_ii is a root of unity")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x = solve_power(q[i, i], q[i, j] * q[j, i])
            if x is None:
                raise NotCartan((i, j), "no integer exponent")
            if x > 0:
                raise NotCartan((i, j), "positive off-diagonal exponent")
            a[i][j] = x
    for i in range(n):
        for j in range(n):
            if i != j and (a[i][j] == 0) != (a[j][i] == 0):  # pragma: no cover - follows from the equations
                raise NotCartan((i, j), "a_ij = 0 but a_ji != 0")
    a = tuple(tuple(r) for r in a)
    part = cartan_partition(a)
    d = symmetrize(a, part)
    return CartanData(a, d, part)


def symmetrize(a: Sequence[Sequence[int]], partition: ComponentPartition | None = None) -> tuple:
    """Minimal positive ``d`` with ``d_i a_ij = d_j a_ji`` (gcd 1 on each component)."""
    n = len(a)
    if partition is None:
        partition = cartan_partition(a)
    d = [None] * n
    parent = [None] * n
    for block in partition.blocks:
        root = block[0]
        d[root] = Fraction(1)
        order = [root]
        for v in order:
            for w in block:
                if w != v and a[v][w] and d[w] is None:
                    d[w] = d[v] * a[v][w] / a[w][v]
                    parent[w] = v
                    order.append(w)
        for i in block:
            for j in block:
                if i < j and a[i][j] and d[i] * a[i][j] != d[j] * a[j][i]:
                    raise NotSymmetrizable(_cycle(parent, i, j))
        lcm = 1
        for i in block:
            lcm = lcm * d[i].denominator // math.gcd(lcm, d[i].denominator)
        ints = [int(d[i] * lcm) for i in block]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        for i, x in zip(block, ints):
            d[i] = x // g
    return tuple(int(x) for x in d)


def _cycle(parent, i, j):
    def path(v):
        out = [v]
        while parent[v] is not None:
            v = parent[v]
            out.append(v)
        return out

    pi, pj = path(i), path(j)
    common = next(v for v in pi if v in pj)
    return pi[: pi.index(common) + 1] + list(reversed(pj[: pj.index(common)]))


# ---------------------------------------------------------------------------
# finite type


def finite_type(a: Sequence[Sequence[int]], d: Sequence[int] | None = None) -> str:
    """Type name such as ``"A2"`` or ``"B2xA1"``; raises :class:`NotFinite`."""
    n = len(a)
    part = cartan_partition(a)
    if d is None:
        d = symmetrize(a, part)
    sym = [[d[i] * a[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        m = int_det([row[:k] for row in sym[:k]])
        if m <= 0:
            raise NotFinite(k, m)
    return "x".join(_dynkin_name(a, d, block) for block in part.blocks)


def _dynkin_name(a, d, block) -> str:
    n = len(block)
    if n == 1:
        return "A1"
    adj = {v: [] for v in block}
    mult = {}
    for x in block:
        for y in block:
            if x < y and a[x][y]:
                adj[x].append(y)
                adj[y].append(x)
                mult[(x, y)] = a[x][y] * a[y][x]
    m = sorted(mult.values())
    if 3 in m:
        return "G2"
    if 2 in m:
        if n == 2:
            return "B2"
        (x, y), = [e for e, v in mult.items() if v == 2]
        leaves = [v for v in block if len(adj[v]) == 1]
        if x in leaves or y in leaves:
            end, other = (x, y) if x in leaves else (y, x)
            return f"B{n}" if d[end] < d[other] else f"C{n}"
        return "F4"
    degrees = {v: len(adj[v]) for v in block}
    if max(degrees.values()) <= 2:
        return f"A{n}"
    center = next(v for v in block if degrees[v] == 3)
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while degrees[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)]


# ---------------------------------------------------------------------------
# twisting and DJ form


def twist_to_symmetric(q: BraidingMatrix):
    """Symmetric ``qhat`` with the same ``q_ii`` and ``q_ij q_ji``, plus the cocycle table.

    ``sigma[i][j] = qhat_ij / q_ij`` for ``i <= j`` and 1 otherwise.  Raises
    :class:`NeedsFieldExtension` when some ``q_ij q_ji`` has no square root here.
    """
    n = q.theta
    qh = [[q[i, j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = (q[i, j] * q[j, i]).sqrt()
            qh[i][j] = qh[j][i] = r
    sigma = tuple(
        tuple(qh[i][j] / q[i, j] if i <= j else Monomial(1) for j in range(n)) for i in range(n)
    )
    return BraidingMatrix(tuple(tuple(r) for r in qh)), sigma


def _bezout(ds: Sequence[int]) -> list:
    """Integers ``u`` with ``sum u_i d_i = gcd(d)``."""
    coeffs = [0] * len(ds)
    g = 0
    for k, x in enumerate(ds):
        if k == 0:
            g, coeffs[0] = x, 1
            continue
        g2, s, t = _ext_gcd(g, x)
        coeffs = [c * s for c in coeffs]
        coeffs[k] = t
        g = g2
    return coeffs


def _ext_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def dj_normal_form(
    q: BraidingMatrix, cartan: CartanData | None = None, require_positive: bool = True
) -> DJPresentation:
    """Per-component ``q_I`` with ``q_ii = q_I^d_i`` (hence ``q_ij q_ji = q_I^(d_i a_ij)``)."""
    if cartan is None:
        cartan = detect_cartan(q)
    n = q.theta
    if require_positive:
        for i in range(n):
            if not q[i, i].is_positive():
                raise NotDJ(f"q_{i + 1}{i + 1} = {q[i, i]} is not positive")
    d, a = cartan.d, cartan.a
    qIs = []
    for k, block in enumerate(cartan.partition.blocks):
        for i in block:
            for j in block:
                if i < j and q[i, i] ** d[j] != q[j, j] ** d[i]:
                    raise NotDJ(
                        f"q_{i + 1}{i + 1}^{d[j]} != q_{j + 1}{j + 1}^{d[i]}", component=k
                    )
        u = _bezout([d[i] for i in block])
        qI = Monomial(1)
        for i, ui in zip(block, u):
            qI = qI * q[i, i] ** ui
        for i in block:
            if qI ** d[i] != q[i, i]:  # pragma: no cover - guaranteed by the check above over R_>0
                raise NotDJ(f"no common q_I on component {k + 1}", component=k)
        qIs.append(qI)
    qhat = [[Monomial(1)] * n for _ in range(n)]
    try:
        for k, block in enumerate(cartan.partition.blocks):
            for i in block:
                for j in block:
                    e = Fraction(d[i] * a[i][j], 2) if i != j else d[i]
                    qhat[i][j] = qIs[k] ** e
    except NeedsFieldExtension:
        # DJ type holds; only the symmetric representative leaves Q(t^(1/2))
        return DJPresentation(tuple(d), tuple(qIs), None, None)
    qh = BraidingMatrix(tuple(tuple(r) for r in qhat))
    sigma = tuple(
        tuple(qh[i, j] / q[i, j] if i <= j else Monomial(1) for j in range(n)) for i in range(n)
    )
    return DJPresentation(tuple(d), tuple(qIs), qh, sigma)


def dj_matrix(a: Sequence[Sequence[int]], d: Sequence[int], qI: Sequence[Monomial]) -> BraidingMatrix:
    """The DJ braiding ``q_ij = q_I^(d_i a_ij)`` on each component, 1 across components.

    Here ``q_ii = q_I^(2 d_i)``, so :func:`dj_normal_form` (which normalises
    ``q_ii = q_I^d_i``) returns ``q_I^2`` for this matrix.
    """
    n = len(a)
    part = cartan_partition(a)
    q = [[Monomial(1)] * n for _ in range(n)]
    for k, block in enumerate(part.blocks):
        for i in block:
            for j in block:
                q[i][j] = qI[k] ** (d[i] * a[i][j])
    return BraidingMatrix(tuple(tuple(r) for r in q))


# ---------------------------------------------------------------------------
# classification


def classify(q: BraidingMatrix) -> Classification:
    """Finite/infinite GK verdict for a generic diagonal braiding."""
    from .rootsys import positive_roots

    n = q.theta
    for i in range(n):
        if q[i, i].is_root_of_unity():
            raise NonGeneric(f"q_{i + 1}{i + 1} = {q[i, i]} is a root of unity")
    part = components(q)
    positive = all(q[i, i].is_positive() for i in range(n))
    try:
        cartan = detect_cartan(q)
    except NotCartan as exc:
        return Classification(
            "InfiniteGK", f"not of Cartan type ({exc.reason} at {_pair(exc.pair)})", part, positive
        )
    except NotSymmetrizable as exc:  # pragma: no cover - generic Cartan matrices are symmetrizable
        raise AssertionError(str(exc))
    try:
        dj = dj_normal_form(q, cartan, require_positive=False)
    except NotDJ as exc:
        dj = None
        dj_reason = exc.reason
    try:
        name = finite_type(cartan.a, cartan.d)
    except NotFinite:
        if dj is not None:
            return Classification(
                "InfiniteGK", "Cartan matrix not of finite type", part, positive, cartan, dj=dj
            )
        return Classification(
            "Unknown",
            "Cartan type but not DJ type and not of finite type; no criterion applies",
            part,
            positive,
            cartan,
            notes=[dj_reason],
        )
    if dj is None:
        return Classification(
            "Unknown",
            "finite Cartan type but not twist-equivalent to DJ type; the positive-case "
            "criterion does not extend to non-positive braidings",
            part,
            positive,
            cartan,
            finite_type=name,
            notes=[dj_reason],
        )
    gk = len(positive_roots(cartan.a))
    return Classification(
        "FiniteGK", "twist-equivalent to DJ type of finite type", part, positive, cartan, name, dj, gk
    )


def _pair(p):
    return (p[0] + 1, p[1] + 1)


def classification_report(c: Classification, names=None) -> dict:
    from .scalars import format_monomial

    out = {
        "components": [[v + 1 for v in b] for b in c.partition.blocks],
        "positive": c.positive,
        "verdict": c.verdict,
        "reason": c.reason,
        "cartan": [list(r) for r in c.cartan.a] if c.cartan else None,
        "d": list(c.cartan.d) if c.cartan else None,
        "finite_type": c.finite_type,
        "dj": None,
        "gk": c.gk,
    }
    if c.dj is not None:
        out["dj"] = {
            "qI": [format_monomial(x, names) for x in c.dj.qI],
            "qhat": c.dj.qhat.to_json(names) if c.dj.qhat is not None else None,
        }
    if c.notes:
        out["notes"] = list(c.notes)
    return out
