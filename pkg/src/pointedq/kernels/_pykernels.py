"""Pure-Python word kernels (reference implementation and fallback).

Both kernels describe braiding scalars by *inversion tables*: a flat tuple ``N``
of length ``theta*theta`` where ``N[x*theta + y]`` counts how often a letter
``x`` crosses a letter ``y``.  The caller turns a table into the monomial
``prod q[x][y]^N[x,y]``.
"""

from itertools import combinations


def pairing_table(u, w, theta):
    """Inversion tables of all label-preserving bijections ``u -> w``.

    Returns ``{table: multiplicity}``.  A bijection ``pi`` (``u[a] == w[pi(a)]``)
    contributes ``q[u_b][u_a]`` for every pair ``a < b`` with ``pi(a) > pi(b)``;
    the sum over bijections is the coefficient of ``u`` in the iterated braided
    coproduct of ``w``.
    """
    n = len(u)
    if n != len(w):
        return {}
    if sorted(u) != sorted(w):
        return {}
    size = theta * theta
    memo = {}

    def complete(mask, a):
        if a == n:
            return {(0,) * size: 1}
        hit = memo.get(mask)
        if hit is not None:
            return hit
        out = {}
        label = u[a]
        for p in range(n):
            if mask >> p & 1 or w[p] != label:
                continue
            bump = [0] * size
            for r in range(p + 1, n):
                if mask >> r & 1:
                    bump[label * theta + w[r]] += 1
            for tab, mult in complete(mask | (1 << p), a + 1).items():
                key = tuple(x + y for x, y in zip(tab, bump))
                out[key] = out.get(key, 0) + mult
        memo[mask] = out
        return out

    return complete(0, 0)


def shuffle_splits(w, m, theta):
    """All ``(left, right, table)`` for the ``(m, n-m)`` quantum-shuffle splits of ``w``.

    ``left`` is the subword on a chosen position set ``S``; every pair
    ``k < l`` with ``k`` outside ``S`` and ``l`` inside contributes ``q[w_k][w_l]``.
    """
    n = len(w)
    size = theta * theta
    out = []
    for S in combinations(range(n), m):
        inside = [False] * n
        for p in S:
            inside[p] = True
        tab = [0] * size
        outside_seen = []
        for k in range(n):
            if inside[k]:
                lk = w[k]
                for x in outside_seen:
                    tab[x * theta + lk] += 1
            else:
                outside_seen.append(w[k])
        left = tuple(w[p] for p in S)
        right = tuple(w[p] for p in range(n) if not inside[p])
        out.append((left, right, tuple(tab)))
    return out
