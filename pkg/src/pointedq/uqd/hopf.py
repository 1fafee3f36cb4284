"""Coalgebra checks on U(D): coassociativity, counit, skew-primitives, coradical slices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..freealg import words_of_multidegree, multidegrees_of_total
from ..linalg import nullspace, rref
from ..rootsys import root_data
from ..scalars import ONE, S
from .datum import GenericDatum, require_valid
from .pbw import PBWElement, RewriteSystem, _addto


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if not v.is_zero()}


def tensor_sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        _addto(out, k, -v)
    return _clean(out)


def delta_left(system: RewriteSystem, t: dict) -> dict:
    """``(Delta (x) id)`` on a 2-tensor of keys."""
    out: dict = {}
    for (k1, k2), v in t.items():
        for (a, b), w in system.coproduct(PBWElement({k1: ONE})).items():
            _addto(out, (a, b, k2), v * w)
    return _clean(out)


def delta_right(system: RewriteSystem, t: dict) -> dict:
    """``(id (x) Delta)`` on a 2-tensor of keys."""
    out: dict = {}
    for (k1, k2), v in t.items():
        for (a, b), w in system.coproduct(PBWElement({k2: ONE})).items():
            _addto(out, (k1, a, b), v * w)
    return _clean(out)


def coassociativity_defect(system: RewriteSystem, x: PBWElement) -> dict:
    t = system.coproduct(x)
    return tensor_sub(delta_left(system, t), delta_right(system, t))


def counit_left(system: RewriteSystem, x: PBWElement) -> PBWElement:
    """``(epsilon (x) id) Delta(x)``."""
    out: dict = {}
    for ((c1, _), k2), v in system.coproduct(x).items():
        if not any(c1):
            _addto(out, k2, v)
    return PBWElement(out)


def counit_right(system: RewriteSystem, x: PBWElement) -> PBWElement:
    out: dict = {}
    for (k1, (c2, _)), v in system.coproduct(x).items():
        if not any(c2):
            _addto(out, k1, v)
    return PBWElement(out)


def tensor_of(x: PBWElement, y: PBWElement) -> dict:
    out: dict = {}
    for k1, v1 in x.terms.items():
        for k2, v2 in y.terms.items():
            _addto(out, (k1, k2), v1 * v2)
    return _clean(out)


def tensor_mul(system: RewriteSystem, s: dict, t: dict) -> dict:
    """Product in ``U (x) U`` (componentwise, no braiding)."""
    out: dict = {}
    for (a1, a2), v in s.items():
        for (b1, b2), w in t.items():
            l = system.mul(PBWElement({a1: ONE}), PBWElement({b1: ONE}))
            r = system.mul(PBWElement({a2: ONE}), PBWElement({b2: ONE}))
            for k1, x in l.terms.items():
                for k2, y in r.terms.items():
                    _addto(out, (k1, k2), v * w * x * y)
    return _clean(out)


def is_skew_primitive(system: RewriteSystem, x: PBWElement, left_gamma, right_gamma) -> bool:
    """``Delta(x) = y^left (x) x + x (x) y^right``."""
    gl = system.group(left_gamma)
    gr = system.group(right_gamma)
    expect = tensor_of(gl, x)
    for k, v in tensor_of(x, gr).items():
        _addto(expect, k, v)
    return not tensor_sub(system.coproduct(x), _clean(expect))


def is_skew_primitive_awords(system: RewriteSystem, awork: dict, left_gamma, right_gamma) -> bool:
    """Skew-primitivity of an expression, with ``Delta`` applied before normalising."""
    x = system.nf_awords(awork)
    gl = system.group(left_gamma)
    gr = system.group(right_gamma)
    expect = tensor_of(gl, x)
    for k, v in tensor_of(x, gr).items():
        _addto(expect, k, v)
    return not tensor_sub(system.coproduct_awords(awork), _clean(expect))


# ---------------------------------------------------------------------------
# skew-primitive spaces


def group_window(s: int, radius: int) -> list:
    return [tuple(g) for g in iproduct(range(-radius, radius + 1), repeat=s)]


@dataclass
class SkewPrimitiveSpace:
    left: tuple
    right: tuple
    character: int | None
    dimension: int
    basis: list
    trivial: bool  # whether y^left - y^right lies in the space

    @property
    def nontrivial_dimension(self) -> int:
        return self.dimension - int(self.trivial)


def skew_primitive_space(
    system: RewriteSystem, left_gamma, right_gamma, character: int | None = None, radius: int | None = None
) -> SkewPrimitiveSpace:
    """``{x : Delta x = y^left (x) x + x (x) y^right}`` inside filtration degree <= 1 over the window.

    With ``character = i`` only the ``chi_i``-isotypic part (for the adjoint action
    of the group) is computed.
    """
    if radius is None:
        radius = system.limits.group_window
    d = system.datum
    left_gamma, right_gamma = tuple(left_gamma), tuple(right_gamma)
    zero_c = (0,) * system.P
    keys = []
    for gamma in group_window(system.s, radius):
        keys.append((zero_c, gamma))
        for i in range(system.theta):
            keys.append((system.unit(system.simple_pos[i]), gamma))

    def char_of(key):
        c, _ = key
        if not any(c):
            return None
        return system.simple_pos.index(c.index(1))

    if character is not None:
        target = d.chi[character]
        keys = [
            k
            for k in keys
            if (char_of(k) is not None and d.chi[char_of(k)] == target)
            or (char_of(k) is None and all(x.is_one() for x in target))
        ]
    cols: dict = {}
    for k in keys:
        x = PBWElement({k: ONE})
        t = system.coproduct(x)
        expect = tensor_of(system.group(left_gamma), x)
        for kk, v in tensor_of(x, system.group(right_gamma)).items():
            _addto(expect, kk, v)
        cols[k] = tensor_sub(t, _clean(expect))
    rows: dict = {}
    for k, col in cols.items():
        for tk, v in col.items():
            rows.setdefault(tk, {})[k] = v
    basis = nullspace(list(rows.values()), keys)
    elems = [PBWElement(b) for b in basis]
    triv = PBWElement({(zero_c, left_gamma): ONE}) - PBWElement({(zero_c, right_gamma): ONE})
    trivial = False
    if not triv.is_zero() and all(k in keys for k in triv.terms) and elems:
        span = rref([dict(e.terms) for e in elems])[0]
        trivial = len(rref([dict(e.terms) for e in elems] + [dict(triv.terms)])[0]) == len(span)
    return SkewPrimitiveSpace(left_gamma, right_gamma, character, len(elems), elems, trivial)


def skew_primitive_dims(system: RewriteSystem, g=None) -> dict:
    """``dim P_{g g_i, g}^{chi_i}`` for each vertex ``i``."""
    g = tuple(g) if g is not None else (0,) * system.s
    out = {}
    for i in range(system.theta):
        left = tuple(a + b for a, b in zip(g, system.datum.g[i]))
        out[i] = skew_primitive_space(system, left, g, character=i).dimension
    return out


# ---------------------------------------------------------------------------
# coradical filtration


def filtration_slice_dims(system: RewriteSystem, N: int) -> list:
    """Rank of the degree-n symbols of ``nf(w)`` over all a-words ``w`` of length n.

    This is ``dim gr_n U(D)`` per group element, to be compared with ``dim B(V)(n)``.
    """
    dims = []
    for n in range(N + 1):
        rows = []
        for md in multidegrees_of_total(system.theta, n):
            for w in words_of_multidegree(md):
                x = system.nf_aword(w)
                top = {k: v for k, v in x.terms.items() if system.filtration_degree(PBWElement({k: v})) == n}
                if top:
                    rows.append(top)
        dims.append(len(rref(rows)[0]) if rows else (1 if n == 0 else 0))
    return dims


def pbw_count(system: RewriteSystem, n: int) -> int:
    from ..freealg import exponent_vectors

    return len(exponent_vectors(system.heights, n))


def gk_dimension(d: GenericDatum) -> dict:
    require_valid(d)
    P = len(root_data(d.cartan).beta)
    return {"nichols": P, "uqd": P + d.s, "uqd_status": "derived"}
