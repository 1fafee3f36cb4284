"""Exact linear algebra over the scalar field and over the integers."""

from __future__ import annotations

from typing import Sequence

from .config import ConsistencyError
from .scalars import ONE, LaurentPoly, ScalarFraction, S

# ---------------------------------------------------------------------------
# rank by fraction-free elimination


def _clear_row(row: Sequence[ScalarFraction]) -> list:
    """Scale a row of fractions to Laurent polynomials (same row space)."""
    dens = []
    for x in row:
        if not x.den.is_one() and all(x.den != d for d in dens):
            dens.append(x.den)
    if not dens:
        return [x.num for x in row]
    D = LaurentPoly.one()
    for d in dens:
        D = D * d
    out = []
    for x in row:
        if x.den.is_one():
            out.append(x.num * D)
        else:
            q = D.exact_div(x.den)
            if q is None:  # pragma: no cover - the product is a multiple of each factor
                raise ConsistencyError("denominator clearing failed")
            out.append(x.num * q)
    return out


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over the fraction field (Bareiss elimination, fewest-term pivots)."""
    rows = [_clear_row([S(x) for x in r]) for r in matrix]
    rows = [r for r in rows if any(not x.is_zero() for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    prev = LaurentPoly.one()
    r = 0
    for col in range(ncols):
        cand = [i for i in range(r, len(rows)) if not rows[i][col].is_zero()]
        if not cand:
            continue
        piv = min(cand, key=lambda i: len(rows[i][col]))
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            a = rows[i][col]
            row_i = rows[i]
            new = [LaurentPoly.zero()] * ncols
            for j in range(col + 1, ncols):
                v = p * row_i[j]
                if not a.is_zero():
                    v = v - a * rows[r][j]
                if not v.is_zero() and not prev.is_one():
                    q = v.exact_div(prev)
                    if q is None:
                        raise ConsistencyError("Bareiss step is not exact")
                    v = q
                new[j] = v
            rows[i] = new
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


# ---------------------------------------------------------------------------
# Gauss-Jordan over the fraction field on sparse rows


def rref(rows: Sequence[dict]) -> tuple[list[dict], list]:
    """Reduced row echelon form of sparse rows ``{col: scalar}``.

    Columns are processed in sorted order.  Returns ``(rows, pivot_columns)``.
    """
    work = [{c: S(v) for c, v in r.items() if not S(v).is_zero()} for r in rows]
    work = [r for r in work if r]
    cols = sorted({c for r in work for c in r})
    done: list[dict] = []
    pivots = []
    for col in cols:
        cand = [i for i, r in enumerate(work) if col in r]
        if not cand:
            continue
        i = min(cand, key=lambda k: (work[k][col].nterms(), len(work[k])))
        prow = work.pop(i)
        inv = prow[col].inverse()
        prow = {c: v * inv for c, v in prow.items()}
        prow[col] = ONE
        for k, r in enumerate(work):
            if col in r:
                work[k] = _axpy(r, prow, r[col])
        for k, r in enumerate(done):
            if col in r:
                done[k] = _axpy(r, prow, r[col])
        done.append(prow)
        pivots.append(col)
        work = [r for r in work if r]
    return done, pivots


def _axpy(r: dict, p: dict, f) -> dict:
    """``r - f * p`` on sparse rows."""
    out = dict(r)
    for c, v in p.items():
        w = out.get(c)
        w = -(f * v) if w is None else w - f * v
        if w.is_zero():
            out.pop(c, None)
        else:
            out[c] = w
    return out


def solve(matrix: Sequence[dict], rhs: Sequence, unknowns: Sequence):
    """Solve ``sum_c matrix[i][c] x_c = rhs[i]``.

    Returns ``(solution, free)`` where ``solution`` maps every unknown to a scalar
    (free unknowns set to zero) and ``free`` lists the free unknowns, or ``None``
    when the system is inconsistent.
    """
    marker = object()
    rows = []
    for r, b in zip(matrix, rhs):
        row = dict(r)
        if not S(b).is_zero():
            row[marker] = S(b)
        rows.append(row)
    order = {u: k for k, u in enumerate(unknowns)}
    order[marker] = len(order)
    index_rows = [{order[c]: v for c, v in r.items()} for r in rows]
    red, piv = rref(index_rows)
    m = order[marker]
    if m in piv:
        return None
    sol = {u: S(0) for u in unknowns}
    for r, p in zip(red, piv):
        sol[unknowns[p]] = r.get(m, S(0))
    free = [u for u in unknowns if order[u] not in piv]
    return sol, free


def nullspace(matrix: Sequence[dict], unknowns: Sequence) -> list[dict]:
    """Basis of ``{x : matrix x = 0}`` as dicts over ``unknowns``."""
    order = {u: k for k, u in enumerate(unknowns)}
    red, piv = rref([{order[c]: v for c, v in r.items()} for r in matrix])
    pivset = set(piv)
    basis = []
    for f in range(len(unknowns)):
        if f in pivset:
            continue
        vec = {unknowns[f]: ONE}
        for r, p in zip(red, piv):
            v = r.get(f)
            if v is not None:
                vec[unknowns[p]] = -v
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# integers


def smith_normal_form(A: Sequence[Sequence[int]]):
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` diagonal and ``U, V`` unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]

    def add_row(M, src, dst, f):  # row_dst += f * row_src
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]

    def add_col(M, src, dst, f):
        for row in M:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(D, t, i)
        swap_rows(U, t, i)
        swap_cols(D, t, j)
        swap_cols(V, t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    f = D[i][t] // D[t][t]
                    add_row(D, t, i, -f)
                    add_row(U, t, i, -f)
                    if D[i][t]:
                        swap_rows(D, t, i)
                        swap_rows(U, t, i)
                        changed = True
            for j in range(t + 1, n):
                if D[t][j]:
                    f = D[t][j] // D[t][t]
                    add_col(D, t, j, -f)
                    add_col(V, t, j, -f)
                    if D[t][j]:
                        swap_cols(D, t, j)
                        swap_cols(V, t, j)
                        changed = True
            if changed:
                continue
            bad = [
                (i, j)
                for i in range(t + 1, m)
                for j in range(t + 1, n)
                if D[i][j] % D[t][t]
            ]
            if bad:
                i, _ = bad[0]
                add_row(D, i, t, 1)
                add_row(U, i, t, 1)
                continue
            break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return D, U, V


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]):
    """All integer solutions of ``A x = b`` as ``(particular, kernel_basis)`` or ``None``."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [0] * n, [[int(i == j) for i in range(n)] for j in range(n)]
    D, U, V = smith_normal_form(A)
    Ub = [sum(U[i][k] * b[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    r = 0
    for i in range(min(m, n)):
        if D[i][i] == 0:
            break
        if Ub[i] % D[i][i]:
            return None
        y[i] = Ub[i] // D[i][i]
        r += 1
    if any(Ub[i] for i in range(r, m)):
        return None
    x = [sum(V[i][k] * y[k] for k in range(n)) for i in range(n)]
    kernel = [[V[i][k] for i in range(n)] for k in range(r, n)]
    return x, kernel


def int_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    A = [list(map(int, r)) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]
