"""Generic data of finite Cartan type and their validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..braiding import BraidingMatrix, NotFinite, NotSymmetrizable, cartan_partition, finite_type, symmetrize
from ..scalars import ONE, Monomial, ScalarFraction, S, format_monomial, format_scalar, parse_monomial, parse_scalar


class InvalidDatum(ValueError):
    def __init__(self, violations):
        msg = "; ".join(f"{v['code']}: {v['message']}" for v in violations)
        super().__init__(f"invalid datum: {msg}")
        self.violations = violations


def _mono_pow(m: Monomial, k: int) -> Monomial:
    return m ** k


@dataclass(frozen=True)
class GenericDatum:
    """``(a_ij)``, ``q_I`` per component, ``g_i`` in ``Z^s``, ``chi_i(Y_h)`` and linking scalars.

    Vertices are 0-based.  ``lam`` maps ``(i, j)`` with ``i < j`` to a nonzero scalar.
    """

    s: int
    cartan: tuple
    blocks: tuple
    qI: tuple
    g: tuple
    chi: tuple
    lam: tuple = ()  # sorted ((i, j), ScalarFraction)
    names: tuple | None = None

    @property
    def theta(self) -> int:
        return len(self.cartan)

    @property
    def d(self) -> tuple:
        return symmetrize(self.cartan, cartan_partition(self.cartan))

    def block_of(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise KeyError(i)

    def same_component(self, i: int, j: int) -> bool:
        return self.block_of(i) == self.block_of(j)

    def lam_of(self, i: int, j: int) -> ScalarFraction:
        for key, v in self.lam:
            if key == (i, j):
                return v
        return S(0)

    def linked_pairs(self) -> list:
        return [key for key, v in self.lam if not v.is_zero()]

    def chi_on(self, i: int, gamma: Sequence[int]) -> Monomial:
        """``chi_i(y^gamma)``."""
        m = Monomial(1)
        for h, e in enumerate(gamma):
            if e:
                m = m * self.chi[i][h] ** e
        return m

    def chi_weight(self, weight: Sequence[int], gamma: Sequence[int]) -> Monomial:
        """``chi_beta(y^gamma)`` for ``chi_beta = prod chi_i^beta_i``."""
        m = Monomial(1)
        for i, b in enumerate(weight):
            if b:
                m = m * self.chi_on(i, gamma) ** b
        return m

    def g_weight(self, weight: Sequence[int]) -> tuple:
        return tuple(sum(b * self.g[i][h] for i, b in enumerate(weight)) for h in range(self.s))

    def braiding(self) -> BraidingMatrix:
        """``q_ij = chi_j(g_i)``."""
        n = self.theta
        return BraidingMatrix(tuple(tuple(self.chi_on(j, self.g[i]) for j in range(n)) for i in range(n)))

    # JSON ------------------------------------------------------------------

    @classmethod
    def from_json(cls, obj: dict) -> "GenericDatum":
        try:
            names = tuple(obj["params"]) if obj.get("params") else None
            s = int(obj["s"])
            a = tuple(tuple(int(x) for x in r) for r in obj["cartan"])
            n = len(a)
            if s < 1 or n < 1 or any(len(r) != n for r in a):
                raise ValueError("cartan must be square and s >= 1")
            g = tuple(tuple(int(x) for x in r) for r in obj["g"])
            chi = tuple(tuple(parse_monomial(str(x), names) for x in r) for r in obj["chi"])
            if len(g) != n or len(chi) != n:
                raise ValueError("g and chi need one row per vertex")
            if any(len(r) != s for r in g) or any(len(r) != s for r in chi):
                raise ValueError("rows of g and chi need s entries")
            part = cartan_partition(a)
            comps = obj.get("components")
            if comps is None:
                raise ValueError("missing components")
            qI = [None] * len(part.blocks)
            for comp in comps:
                verts = tuple(sorted(int(v) - 1 for v in comp["vertices"]))
                if verts not in part.blocks:
                    raise ValueError(f"component {[v + 1 for v in verts]} does not match the Cartan matrix")
                qI[part.blocks.index(verts)] = parse_monomial(str(comp["qI"]), names)
            if any(x is None for x in qI):
                raise ValueError("every connected component needs a qI")
            lam = {}
            for entry in obj.get("lambda", []):
                i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
                if not (0 <= i < n and 0 <= j < n) or i == j:
                    raise ValueError(f"bad linking index ({i + 1}, {j + 1})")
                v = parse_scalar(str(entry["value"]), names)
                if i > j:
                    raise ValueError("linking entries need i < j")
                if not v.is_zero():
                    lam[(i, j)] = v
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed datum: {exc!r}") from exc
        return cls(s, a, part.blocks, tuple(qI), g, chi, tuple(sorted(lam.items())), names)

    def to_json(self) -> dict:
        names = list(self.names) if self.names else None
        out = {
            "s": self.s,
            "cartan": [list(r) for r in self.cartan],
            "components": [
                {"vertices": [v + 1 for v in b], "qI": format_monomial(q, names)}
                for b, q in zip(self.blocks, self.qI)
            ],
            "g": [list(r) for r in self.g],
            "chi": [[format_monomial(x, names) for x in r] for r in self.chi],
            "lambda": [
                {"i": i + 1, "j": j + 1, "value": format_scalar(v, names)} for (i, j), v in self.lam
            ],
        }
        if names:
            out["params"] = names
        return out


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    finite_type: str | None = None
    positive: bool | None = None

    @property
    def valid(self) -> bool:
        return not self.violations

    def add(self, code: str, message: str):
        self.violations.append({"code": code, "message": message})

    def codes(self) -> set:
        return {v["code"] for v in self.violations}

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": self.violations,
            "notes": self.notes,
            "finite_type": self.finite_type,
            "positive": self.positive,
        }


def linkable(d: GenericDatum, i: int, j: int) -> tuple:
    """``(link0, link1, link2)`` for the pair."""
    c0 = not d.same_component(i, j)
    c1 = any(x + y for x, y in zip(d.g[i], d.g[j]))
    c2 = all((d.chi[i][h] * d.chi[j][h]).is_one() for h in range(d.s))
    return c0, c1, c2


def validate_datum(d: GenericDatum) -> ValidationReport:
    rep = ValidationReport()
    n = d.theta
    names = list(d.names) if d.names else None
    try:
        dvec = d.d
        rep.finite_type = finite_type(d.cartan, dvec)
    except (NotFinite, NotSymmetrizable) as exc:
        rep.add("cartan", str(exc))
        return rep
    for b, qI in zip(d.blocks, d.qI):
        if qI.is_root_of_unity():
            rep.add("generic", f"qI = {format_monomial(qI, names)} of component {[v + 1 for v in b]} is a root of unity")
    if rep.violations:
        return rep
    rep.positive = all(q.is_positive() for q in d.qI)
    q = d.braiding()
    for i in range(n):
        qI = d.qI[d.block_of(i)]
        if q[i, i] != qI ** dvec[i]:
            rep.add("cartantype", f"chi_{i + 1}(g_{i + 1}) = {format_monomial(q[i, i], names)} != qI^{dvec[i]}")
        for j in range(n):
            if j != i and q[i, j] * q[j, i] != qI ** (dvec[i] * d.cartan[i][j]):
                rep.add(
                    "cartantype",
                    f"chi_{j + 1}(g_{i + 1}) chi_{i + 1}(g_{j + 1}) != qI^{dvec[i] * d.cartan[i][j]}",
                )
    for i in range(n):
        for j in range(i + 1, n):
            if d.g[i] == d.g[j] and d.chi[i] == d.chi[j]:
                rep.add("noniso", f"(g_{i + 1}, chi_{i + 1}) = (g_{j + 1}, chi_{j + 1})")
    linked = d.linked_pairs()
    partner: dict = {}
    for i, j in linked:
        c0, c1, c2 = linkable(d, i, j)
        tag = f"lambda_{i + 1}{j + 1} != 0"
        if not c0:
            rep.add("link0", f"{tag} but {i + 1} and {j + 1} lie in the same component")
        if not c1:
            rep.add("link1", f"{tag} but g_{i + 1} g_{j + 1} = 1")
        if not c2:
            rep.add("link2", f"{tag} but chi_{i + 1} chi_{j + 1} != epsilon")
        if c0 and c1 and c2:
            vals = [q[j, i], q[i, j].inverse(), q[i, i], q[j, j].inverse()]
            if any(v != vals[0] for v in vals):
                rep.add("link4", f"chi_{i + 1}(g_{j + 1}), chi_{j + 1}(g_{i + 1})^-1, q_{i + 1}{i + 1}, q_{j + 1}{j + 1}^-1 differ")
        if not d.lam_of(i, j).is_one():
            rep.notes.append(f"lambda_{i + 1}{j + 1} is not 1; normalize_linking rescales it")
        partner.setdefault(i, []).append(j)
        partner.setdefault(j, []).append(i)
    for v, ps in sorted(partner.items()):
        if len(ps) > 1:
            rep.add("link6", f"vertex {v + 1} is linked to {sorted(p + 1 for p in ps)}")
    for i, k in linked:
        for j, l in linked:
            for (x, y), (u, w) in (((i, k), (j, l)), ((k, i), (l, j)), ((i, k), (l, j)), ((k, i), (j, l))):
                if d.cartan[x][u] != d.cartan[y][w] or d.cartan[u][x] != d.cartan[w][y]:
                    rep.add("link5", f"linked pairs ({x + 1},{y + 1}), ({u + 1},{w + 1}) have different Cartan entries")
    # deduplicate while keeping order
    seen = set()
    uniq = []
    for v in rep.violations:
        key = (v["code"], v["message"])
        if key not in seen:
            seen.add(key)
            uniq.append(v)
    rep.violations = uniq
    return rep


def require_valid(d: GenericDatum) -> ValidationReport:
    rep = validate_datum(d)
    if not rep.valid:
        raise InvalidDatum(rep.violations)
    return rep


def normalize_linking(d: GenericDatum):
    """Rescale generators so every nonzero linking scalar is 1.

    Returns ``(datum, alpha)`` where ``a_i -> alpha_i a_i`` realises the rescaling.
    Links with ``g_i g_j = 1`` are dropped.
    """
    alpha = [ONE] * d.theta
    lam = []
    for (i, j), v in d.lam:
        if not any(x + y for x, y in zip(d.g[i], d.g[j])):
            continue
        alpha[j] = alpha[j] * v
        lam.append(((i, j), ONE))
    nd = GenericDatum(d.s, d.cartan, d.blocks, d.qI, d.g, d.chi, tuple(lam), d.names)
    return nd, tuple(alpha)


def permute_datum(d: GenericDatum, sigma: Sequence[int]) -> GenericDatum:
    """The datum with vertex ``i`` renamed ``sigma(i)``; ``sigma`` must preserve the Cartan matrix.

    A linking pair whose order flips picks up the factor ``-chi_j(g_i)`` so that the
    identity on the group and ``alpha = 1`` is an isomorphism.
    """
    n = d.theta
    inv = [0] * n
    for i, t in enumerate(sigma):
        inv[t] = i
    a = tuple(tuple(d.cartan[inv[x]][inv[y]] for y in range(n)) for x in range(n))
    part = cartan_partition(a)
    g = tuple(d.g[inv[x]] for x in range(n))
    chi = tuple(d.chi[inv[x]] for x in range(n))
    qI = []
    for b in part.blocks:
        old = tuple(sorted(inv[x] for x in b))
        qI.append(d.qI[d.blocks.index(old)])
    lam = []
    q = d.braiding()
    for (i, j), v in d.lam:
        si, sj = sigma[i], sigma[j]
        if si < sj:
            lam.append(((si, sj), v))
        else:
            # lambda_ij = -chi_j(g_i) lambda'_{sj si}
            lam.append(((sj, si), -v / S(q[i, j])))
    return GenericDatum(d.s, a, part.blocks, tuple(qI), g, chi, tuple(sorted(lam)), d.names)


# ---------------------------------------------------------------------------
# examples


def _m(text, names=("q",)):
    return parse_monomial(text, list(names))


def uqsl2_datum() -> GenericDatum:
    """``s = 1``, ``A1 x A1``, ``g_1 = g_2 = Y``, ``chi_1(Y) = q``, ``chi_2(Y) = q^-1``, ``lambda_12 = 1``."""
    return GenericDatum(
        1,
        ((2, 0), (0, 2)),
        ((0,), (1,)),
        (_m("q"), _m("q^-1")),
        ((1,), (1,)),
        ((_m("q"),), (_m("q^-1"),)),
        (((0, 1), ONE),),
        ("q",),
    )


def a1_datum() -> GenericDatum:
    return GenericDatum(1, ((2,),), ((0,),), (_m("q"),), ((1,),), ((_m("q"),),), (), ("q",))


def a2_datum() -> GenericDatum:
    """``s = 2``, ``g_i = Y_i``, braiding ``[[q, 1], [q^-1, q]]``."""
    return GenericDatum(
        2,
        ((2, -1), (-1, 2)),
        ((0, 1),),
        (_m("q"),),
        ((1, 0), (0, 1)),
        ((_m("q"), _m("q^-1")), (_m("1"), _m("q"))),
        (),
        ("q",),
    )


def b2_datum() -> GenericDatum:
    """``s = 2``, ``d = (1, 2)``, braiding ``[[q, 1], [q^-2, q^2]]``."""
    return GenericDatum(
        2,
        ((2, -2), (-1, 2)),
        ((0, 1),),
        (_m("q"),),
        ((1, 0), (0, 1)),
        ((_m("q"), _m("q^-2")), (_m("1"), _m("q^2"))),
        (),
        ("q",),
    )


def a1xa1_datum(linked: bool = False) -> GenericDatum:
    """Two commuting copies of A1 over ``Z^2``; with ``linked`` the second generator is
    paired with the first as in the quantum double."""
    if linked:
        return uqsl2_datum()
    return GenericDatum(
        2,
        ((2, 0), (0, 2)),
        ((0,), (1,)),
        (_m("q"), _m("q")),
        ((1, 0), (0, 1)),
        ((_m("q"), _m("1")), (_m("1"), _m("q"))),
        (),
        ("q",),
    )
