"""Isomorphisms between generic data: ``(phi, sigma, alpha)``.

``phi`` is an integer matrix acting on exponent vectors of the group, ``sigma`` a
Dynkin diagram isomorphism and ``alpha`` the rescaling of the generators.  The
equations ``phi(g_i) = g'_sigma(i)`` and ``chi_i = chi'_sigma(i) o phi`` are linear over
Z in the entries of ``phi`` once monomials are split into parameter exponents and
prime valuations of their coefficients; signs are checked afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from ..config import ConsistencyError
from ..freealg import serre_element
from ..linalg import int_det, solve_integer
from ..scalars import ONE, Monomial, S, ScalarFraction, format_scalar
from .datum import GenericDatum, require_valid
from .pbw import RewriteSystem, build_rewrite_system


@dataclass
class DatumIsomorphism:
    phi: tuple  # s x s, column h is the image of Y_h
    sigma: tuple
    alpha: tuple

    def to_json(self, names=None) -> dict:
        return {
            "phi": [list(r) for r in self.phi],
            "sigma": [x + 1 for x in self.sigma],
            "alpha": [format_scalar(a, names) for a in self.alpha],
        }


@dataclass
class IsomorphismSearch:
    isomorphisms: list = field(default_factory=list)
    complete: bool = True
    bound: int = 3
    notes: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.isomorphisms:
            return "found" if self.complete else "found-partial"
        return "none" if self.complete else "undecided"

    def to_json(self, names=None) -> dict:
        return {
            "status": self.status,
            "complete": self.complete,
            "bound": self.bound,
            "isomorphisms": [x.to_json(names) for x in self.isomorphisms],
            "notes": self.notes,
        }


def diagram_isomorphisms(a, b) -> list:
    """Permutations ``sigma`` with ``b[sigma i][sigma j] == a[i][j]``."""
    n = len(a)
    if len(b) != n:
        return []
    out = []
    cur = [None] * n
    used = [False] * n

    def rec(i):
        if i == n:
            out.append(tuple(cur))
            return
        for t in range(n):
            if used[t] or b[t][t] != a[i][i]:
                continue
            if all(b[t][cur[j]] == a[i][j] and b[cur[j]][t] == a[j][i] for j in range(i)):
                cur[i] = t
                used[t] = True
                rec(i + 1)
                used[t] = False
        cur[i] = None

    rec(0)
    return out


def _factor(n: int) -> dict:
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _valuations(c: Fraction) -> dict:
    v = dict(_factor(abs(c.numerator)))
    for p, e in _factor(c.denominator).items():
        v[p] = v.get(p, 0) - e
    return v


def _coords(m: Monomial, nvars: int, primes) -> list:
    e = list(m.exps2) + [0] * (nvars - len(m.exps2))
    v = _valuations(m.coeff)
    return e + [v.get(p, 0) for p in primes]


def _phi_apply(phi, gamma) -> tuple:
    s = len(phi)
    return tuple(sum(phi[k][h] * gamma[h] for h in range(s)) for k in range(s))


def _char_after(chi_row, phi, h) -> Monomial:
    """``chi'(phi(Y_h))`` for a character row ``chi'``."""
    m = Monomial(1)
    for k, e in enumerate(phi[k][h] for k in range(len(phi))):
        if e:
            m = m * chi_row[k] ** e
    return m


def _phi_candidates(d: GenericDatum, e: GenericDatum, sigma, bound: int):
    """Integer solutions for ``phi`` (within the bound on kernel coordinates) and a completeness flag."""
    s = d.s
    monos = [m for r in d.chi for m in r] + [m for r in e.chi for m in r]
    nvars = max((len(m.exps2) for m in monos), default=0)
    primes = sorted({p for m in monos for p in _valuations(m.coeff)})
    ncoord = nvars + len(primes)
    rows, rhs = [], []

    def var(k, h):
        return k * s + h

    for i in range(d.theta):
        for k in range(s):
            row = [0] * (s * s)
            for h in range(s):
                row[var(k, h)] = d.g[i][h]
            rows.append(row)
            rhs.append(e.g[sigma[i]][k])
        for h in range(s):
            target = _coords(d.chi[i][h], nvars, primes)
            src = [_coords(e.chi[sigma[i]][k], nvars, primes) for k in range(s)]
            for t in range(ncoord):
                row = [0] * (s * s)
                for k in range(s):
                    row[var(k, h)] = src[k][t]
                rows.append(row)
                rhs.append(target[t])
    sol = solve_integer(rows, rhs)
    if sol is None:
        return [], True
    x0, kernel = sol
    complete = not kernel
    out = []
    for coeffs in iproduct(range(-bound, bound + 1), repeat=len(kernel)):
        x = list(x0)
        for c, v in zip(coeffs, kernel):
            if c:
                x = [a + c * b for a, b in zip(x, v)]
        phi = tuple(tuple(x[var(k, h)] for h in range(s)) for k in range(s))
        if abs(int_det(phi)) != 1:
            continue
        if all(_phi_apply(phi, d.g[i]) == tuple(e.g[sigma[i]]) for i in range(d.theta)) and all(
            _char_after(e.chi[sigma[i]], phi, h) == d.chi[i][h] for i in range(d.theta) for h in range(s)
        ):
            out.append(phi)
    return out, complete


def _solve_alpha(d: GenericDatum, e: GenericDatum, sigma):
    n = d.theta
    qd = d.braiding()
    alpha = [ONE] * n
    for i in range(n):
        for j in range(i + 1, n):
            if d.same_component(i, j):
                continue
            lam = d.lam_of(i, j)
            si, sj = sigma[i], sigma[j]
            if si < sj:
                other, factor = e.lam_of(si, sj), ONE
            else:
                other, factor = e.lam_of(sj, si), -S(qd[i, j])
            if lam.is_zero() != other.is_zero():
                return None
            if lam.is_zero():
                continue
            # each vertex lies in at most one link, so alpha_i = 1 is free
            alpha[j] = lam / (factor * other)
    return tuple(alpha)


def datum_isomorphisms(d: GenericDatum, e: GenericDatum, bound: int | None = None, *, verify: bool = True) -> IsomorphismSearch:
    from .. import config

    if bound is None:
        bound = config.LIMITS.isom_bound
    require_valid(d)
    require_valid(e)
    res = IsomorphismSearch(bound=bound)
    if d.theta != e.theta or d.s != e.s:
        res.notes.append("rank of the group or number of vertices differ")
        return res
    target = build_rewrite_system(e) if verify else None
    for sigma in diagram_isomorphisms(d.cartan, e.cartan):
        phis, complete = _phi_candidates(d, e, sigma, bound)
        if not complete:
            res.complete = False
            res.notes.append(f"sigma {[x + 1 for x in sigma]}: solution lattice enumerated within [-{bound}, {bound}]")
        for phi in phis:
            alpha = _solve_alpha(d, e, sigma)
            if alpha is None:
                continue
            iso = DatumIsomorphism(phi, sigma, alpha)
            if target is not None and not transports_relations(d, target, iso):
                raise ConsistencyError(f"isomorphism {iso} fails the relation transport check")
            res.isomorphisms.append(iso)
    return res


def relations(d: GenericDatum) -> list:
    """Defining relations of U(D) as ``{token_tuple: coeff}`` expressions."""
    q = d.braiding()
    out = []
    s = d.s
    for h in range(s):
        y = ("y", tuple(int(k == h) for k in range(s)))
        for j in range(d.theta):
            out.append({(y, ("a", j)): ONE, (("a", j), y): -S(d.chi[j][h])})
    for i in range(d.theta):
        for j in range(d.theta):
            if i != j and d.same_component(i, j):
                ser = serre_element(i, j, q, d.cartan[i][j])
                out.append({tuple(("a", x) for x in w): c for w, c in ser.terms.items()})
    for i in range(d.theta):
        for j in range(i + 1, d.theta):
            if d.same_component(i, j):
                continue
            lam = d.lam_of(i, j)
            rel = {(("a", i), ("a", j)): ONE, (("a", j), ("a", i)): -S(q[i, j])}
            if not lam.is_zero():
                gg = tuple(a + b for a, b in zip(d.g[i], d.g[j]))
                rel[()] = -lam
                rel[(("y", gg),)] = lam
            out.append(rel)
    return out


def transport(expr: dict, iso: DatumIsomorphism) -> dict:
    out = {}
    for toks, c in expr.items():
        new = []
        f = S(c)
        for kind, val in toks:
            if kind == "a":
                new.append(("a", iso.sigma[val]))
                f = f * iso.alpha[val]
            else:
                new.append(("y", _phi_apply(iso.phi, val)))
        out[tuple(new)] = f
    return out


def transports_relations(d: GenericDatum, target: RewriteSystem, iso: DatumIsomorphism) -> bool:
    """Every defining relation of ``U(d)`` maps to zero in the target algebra."""
    from .expr import to_awords

    for rel in relations(d):
        image = to_awords(transport(rel, iso), target.datum)
        if not target.nf_awords(image).is_zero():
            return False
    return True
