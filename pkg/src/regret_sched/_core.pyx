# Compiled twin of _purepy: same three kernels on int64 arithmetic.
#
# Callers (backend.py) guarantee that all intermediate values fit in 64-bit
# signed integers; anything larger is routed to the exact pure-Python path.

from libc.stdlib cimport malloc, free

NAME = "compiled"

cdef long long INF = <long long>1 << 62


cdef inline long long slot_cost(long long lo, long long w, long long mu,
                                long long k) nogil:
    cdef long long mn = mu if mu < k else k
    return k * lo + w * mn


cdef long long lap(int n, int mrep,
                   long long* lo, long long* w, long long* mult,
                   long long* u, long long* v, int* p, int* way,
                   long long* minv, unsigned char* used,
                   int* ks) nogil:
    """Shortest-augmenting-path assignment on the replicated-column matrix.

    Column j (0-based) encodes position k = j // mrep + 1; there are
    ncols = n * mrep columns. Fills ks[i] with the 1-based position of job i
    when ks is non-NULL and returns the total cost.
    """
    cdef int ncols = n * mrep
    cdef int i, j, j0, j1, i0, row
    cdef long long cur, delta, total
    for j in range(ncols + 1):
        v[j] = 0
        p[j] = 0
        way[j] = 0
    for i in range(n + 1):
        u[i] = 0
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        for j in range(ncols + 1):
            minv[j] = INF
            used[j] = 0
        while True:
            used[j0] = 1
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, ncols + 1):
                if used[j]:
                    continue
                cur = slot_cost(lo[i0 - 1], w[i0 - 1], mult[i0 - 1],
                                (j - 1) / mrep + 1) - u[i0] - v[j]
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
    total = 0
    for j in range(1, ncols + 1):
        row = p[j]
        if row:
            total += slot_cost(lo[row - 1], w[row - 1], mult[row - 1],
                               (j - 1) / mrep + 1)
            if ks != NULL:
                ks[row - 1] = (j - 1) / mrep + 1
    return total


cdef struct Work:
    long long* u
    long long* v
    int* p
    int* way
    long long* minv
    unsigned char* used


cdef int work_alloc(Work* wk, int n, int ncols) except -1:
    wk.u = <long long*>malloc((n + 1) * sizeof(long long))
    wk.v = <long long*>malloc((ncols + 1) * sizeof(long long))
    wk.p = <int*>malloc((ncols + 1) * sizeof(int))
    wk.way = <int*>malloc((ncols + 1) * sizeof(int))
    wk.minv = <long long*>malloc((ncols + 1) * sizeof(long long))
    wk.used = <unsigned char*>malloc((ncols + 1) * sizeof(unsigned char))
    if (wk.u == NULL or wk.v == NULL or wk.p == NULL or wk.way == NULL
            or wk.minv == NULL or wk.used == NULL):
        work_free(wk)
        raise MemoryError()
    return 0


cdef void work_free(Work* wk) nogil:
    free(wk.u)
    free(wk.v)
    free(wk.p)
    free(wk.way)
    free(wk.minv)
    free(wk.used)


def min_assignment(long long[:] lo, long long[:] width, long long[:] mult,
                   int m):
    cdef int n = lo.shape[0]
    cdef int mrep = m if m < n else n
    cdef Work wk
    cdef int* ks = <int*>malloc(n * sizeof(int))
    if ks == NULL:
        raise MemoryError()
    work_alloc(&wk, n, n * mrep)
    cdef long long total
    try:
        total = lap(n, mrep, &lo[0], &width[0], &mult[0],
                    wk.u, wk.v, wk.p, wk.way, wk.minv, wk.used, ks)
        return total, [ks[i] for i in range(n)]
    finally:
        work_free(&wk)
        free(ks)


def profile_regrets(long long[:] lo, long long[:] width, long long[:] hi,
                    int m, long long[:] profiles_flat, long long[:] out):
    """Z for each profile; profiles_flat is nprof rows of n multipliers."""
    cdef int n = lo.shape[0]
    cdef int nprof = profiles_flat.shape[0] // n
    cdef int mrep = m if m < n else n
    cdef Work wk
    work_alloc(&wk, n, n * mrep)
    cdef int t, i
    cdef long long a_star, zmax
    cdef long long* mult
    try:
        with nogil:
            for t in range(nprof):
                mult = &profiles_flat[t * n]
                a_star = lap(n, mrep, &lo[0], &width[0], mult,
                             wk.u, wk.v, wk.p, wk.way, wk.minv, wk.used, NULL)
                zmax = 0
                for i in range(n):
                    zmax += mult[i] * hi[i]
                out[t] = zmax - a_star
    finally:
        work_free(&wk)


def oracle_best(long long[:] lo, long long[:] hi, int m, long long[:] mult):
    """Scan all 2^n extreme scenarios; ties prefer the lexicographically
    smallest scenario vector."""
    cdef int n = lo.shape[0]
    if n > 30:
        raise ValueError("oracle scan limited to n <= 30")
    cdef long long* sc = <long long*>malloc(n * sizeof(long long))
    cdef long long* best_sc = <long long*>malloc(n * sizeof(long long))
    cdef long long* desc = <long long*>malloc(n * sizeof(long long))
    if sc == NULL or best_sc == NULL or desc == NULL:
        free(sc)
        free(best_sc)
        free(desc)
        raise MemoryError()
    cdef unsigned long long mask, total = <unsigned long long>1 << n
    cdef long long z, f_s, f_opt, key, best = 0
    cdef int i, j, have_best = 0, take
    try:
        with nogil:
            for mask in range(total):
                f_s = 0
                for i in range(n):
                    sc[i] = hi[i] if mask >> i & 1 else lo[i]
                    f_s += mult[i] * sc[i]
                # insertion sort, descending
                for i in range(n):
                    desc[i] = sc[i]
                for i in range(1, n):
                    key = desc[i]
                    j = i - 1
                    while j >= 0 and desc[j] < key:
                        desc[j + 1] = desc[j]
                        j -= 1
                    desc[j + 1] = key
                f_opt = 0
                for i in range(n):
                    f_opt += (i / m + 1) * desc[i]
                z = f_s - f_opt
                take = 0
                if not have_best or z > best:
                    take = 1
                elif z == best:
                    for i in range(n):
                        if sc[i] != best_sc[i]:
                            take = sc[i] < best_sc[i]
                            break
                if take:
                    best = z
                    have_best = 1
                    for i in range(n):
                        best_sc[i] = sc[i]
        return best, [best_sc[i] for i in range(n)]
    finally:
        free(sc)
        free(best_sc)
        free(desc)
