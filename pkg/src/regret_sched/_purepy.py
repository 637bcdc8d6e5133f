"""Pure-Python backend for the hot kernels.

Three entry points, mirrored exactly by the compiled extension in _core.pyx:

* min_assignment     -- minimum-cost assignment of jobs to position slots
* profile_regrets    -- batch max-regret values for multiplier profiles
* oracle_best        -- exhaustive scan of the 2^n extreme scenarios

The assignment instance is always the same shape: n jobs, positions
k = 1..n each with capacity min(m, n) (a position can be occupied on every
machine), and slot cost

    cost(i, k) = k*lo[i] + width[i]*min(mult[i], k).

Positions are replicated into plain columns and the rectangular problem is
solved with the shortest-augmenting-path (Hungarian with potentials)
algorithm. Python integers keep everything exact at any magnitude.
"""

from __future__ import annotations

NAME = "purepy"

_INF = float("inf")


def _lap(n: int, ncols: int, cost) -> tuple[int, list[int]]:
    """Rectangular min-cost assignment; cost(i, j) on 0-based indices.

    Requires n <= ncols. Returns (total, cols) with cols[i] the column
    assigned to row i.
    """
    u = [0] * (n + 1)
    v = [0] * (ncols + 1)
    p = [0] * (ncols + 1)  # p[j] = row matched to column j (1-based, 0 = free)
    way = [0] * (ncols + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [_INF] * (ncols + 1)
        used = [False] * (ncols + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = _INF
            j1 = 0
            for j in range(1, ncols + 1):
                if used[j]:
                    continue
                cur = cost(i0 - 1, j - 1) - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(ncols + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    cols = [0] * n
    total = 0
    for j in range(1, ncols + 1):
        if p[j]:
            cols[p[j] - 1] = j - 1
            total += cost(p[j] - 1, j - 1)
    return total, cols


def _slot_cost(lo, width, mult, mrep):
    def cost(i: int, col: int) -> int:
        k = col // mrep + 1
        return k * lo[i] + width[i] * min(mult[i], k)

    return cost


def min_assignment(lo, width, mult, m: int) -> tuple[int, list[int]]:
    """Minimum slot-assignment cost and the chosen position per job.

    Returns (total, ks) with ks[i] the 1-based position of job i.
    """
    n = len(lo)
    mrep = min(m, n)
    total, cols = _lap(n, n * mrep, _slot_cost(lo, width, mult, mrep))
    return total, [c // mrep + 1 for c in cols]


def profile_regrets(lo, width, hi, m: int, profiles) -> list[int]:
    """Max regret for each multiplier profile in the batch.

    Z(profile) = sum_i mult[i]*hi[i] - A*, with A* the minimum assignment
    cost above.
    """
    n = len(lo)
    mrep = min(m, n)
    ncols = n * mrep
    out = []
    for mult in profiles:
        a_star, _ = _lap(n, ncols, _slot_cost(lo, width, mult, mrep))
        out.append(sum(mu * h for mu, h in zip(mult, hi)) - a_star)
    return out


def oracle_best(lo, hi, m: int, mult) -> tuple[int, list[int]]:
    """Maximum of F(s, S) - F*(S) over all 2^n extreme scenarios.

    Returns (best regret, scenario); ties are broken by the
    lexicographically smallest scenario vector.
    """
    n = len(lo)
    best = None
    best_sc: list[int] = []
    for mask in range(1 << n):
        sc = [hi[i] if mask >> i & 1 else lo[i] for i in range(n)]
        f_s = sum(mu * p for mu, p in zip(mult, sc))
        desc = sorted(sc, reverse=True)
        f_opt = sum((r // m + 1) * p for r, p in enumerate(desc))
        z = f_s - f_opt
        if best is None or z > best or (z == best and sc < best_sc):
            best = z
            best_sc = sc
    return best, best_sc
