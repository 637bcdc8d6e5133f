"""Structural transforms on schedules.

* rebalance: displacement sequence that equalizes machine loads without
  ever increasing flow time under any scenario.
* column_swap: exchanging two jobs within a column of a balanced schedule
  leaves the maximum regret unchanged.
* canonicalize: align a balanced schedule with its worst-case alternative
  so both use identical per-machine job sets, via repeated perfect
  matchings on the position-conflict matrix.
"""

from __future__ import annotations

from .model import Schedule, ValidationError, validate_schedule


def rebalance(s: Schedule) -> Schedule:
    """Equalize machine loads by the first-position displacement rule.

    Repeatedly removes the first job of the machine with the most jobs and
    inserts it at the first position of the machine with the fewest (ties:
    lowest machine index). Requires m | n.
    """
    validate_schedule(s)
    n, m = s.n, s.m
    if n % m != 0:
        raise ValidationError(f"job count {n} not divisible by machine count {m}")
    rows = [list(row) for row in s.machines]
    while True:
        lengths = [len(row) for row in rows]
        longest = lengths.index(max(lengths))
        shortest = lengths.index(min(lengths))
        if lengths[longest] == lengths[shortest]:
            break
        job = rows[longest].pop(0)
        rows[shortest].insert(0, job)
    return Schedule(tuple(tuple(row) for row in rows))


def _check_balanced(s: Schedule) -> int:
    n0 = len(s.machines[0])
    if any(len(row) != n0 for row in s.machines):
        raise ValidationError("schedule is not balanced")
    return n0


def column_swap(s: Schedule, column: int, j1: int, j2: int) -> Schedule:
    """Exchange the jobs in `column` (0-based) of machines j1 and j2."""
    validate_schedule(s)
    n0 = _check_balanced(s)
    if not 0 <= column < n0:
        raise ValidationError(f"column {column} out of range 0..{n0 - 1}")
    for j in (j1, j2):
        if not 0 <= j < s.m:
            raise ValidationError(f"machine {j} out of range 0..{s.m - 1}")
    rows = [list(row) for row in s.machines]
    rows[j1][column], rows[j2][column] = rows[j2][column], rows[j1][column]
    return Schedule(tuple(tuple(row) for row in rows))


def conflict_matrix(pi: Schedule, sigma: Schedule) -> list[list[list[int]]]:
    """n0 x n0 grid; cell (x, y) holds the jobs at column x of pi and
    column y of sigma. Every row and column holds exactly m jobs in total."""
    n0 = _check_balanced(pi)
    if _check_balanced(sigma) != n0 or sigma.m != pi.m:
        raise ValidationError("schedules have different shapes")
    pos_sigma: dict[int, int] = {}
    for row in sigma.machines:
        for y, job in enumerate(row):
            pos_sigma[job] = y
    cells: list[list[list[int]]] = [[[] for _ in range(n0)] for _ in range(n0)]
    for row in pi.machines:
        for x, job in enumerate(row):
            if job not in pos_sigma:
                raise ValidationError("schedules are over different job sets")
            cells[x][pos_sigma[job]].append(job)
    for grid_row in cells:
        for cell in grid_row:
            cell.sort()
    return cells


def _perfect_matching(adj: list[list[int]], n0: int) -> list[int]:
    """Maximum bipartite matching by augmenting paths (rows to columns,
    visited in ascending order). Returns match[x] = y; raises if not
    perfect, which Hall's condition rules out for our m-regular grids."""
    match_col = [-1] * n0  # column -> row

    def try_row(x: int, seen: list[bool]) -> bool:
        for y in adj[x]:
            if seen[y]:
                continue
            seen[y] = True
            if match_col[y] == -1 or try_row(match_col[y], seen):
                match_col[y] = x
                return True
        return False

    for x in range(n0):
        if not try_row(x, [False] * n0):
            raise RuntimeError("no perfect matching in conflict matrix")
    match_row = [-1] * n0
    for y, x in enumerate(match_col):
        match_row[x] = y
    return match_row


def canonicalize(pi: Schedule, sigma: Schedule) -> tuple[Schedule, Schedule]:
    """Permute jobs within columns of pi and sigma so that every machine
    carries the same job set in both schedules.

    Repeatedly extracts a system of distinct representatives (one job per
    row and per column of the conflict matrix); each extracted set becomes
    one machine. Output is deterministic: machines are filled in ascending
    index and multi-job cells are consumed in ascending job index.
    """
    validate_schedule(pi)
    validate_schedule(sigma, pi.n)
    cells = conflict_matrix(pi, sigma)
    n0 = len(cells)
    m = pi.m
    pi_rows = [[-1] * n0 for _ in range(m)]
    sigma_rows = [[-1] * n0 for _ in range(m)]
    for color in range(m):
        adj = [
            [y for y in range(n0) if cells[x][y]] for x in range(n0)
        ]
        match_row = _perfect_matching(adj, n0)
        for x in range(n0):
            y = match_row[x]
            job = cells[x][y].pop(0)
            pi_rows[color][x] = job
            sigma_rows[color][y] = job
    return (
        Schedule(tuple(tuple(row) for row in pi_rows)),
        Schedule(tuple(tuple(row) for row in sigma_rows)),
    )
