# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled counting and canonicalization kernels.

Function-for-function mirror of homcount.kernels.pure.  The dispatcher in
homcount.kernels enforces the size limits below before calling in here, in
particular that every count fits in an unsigned 64-bit integer.
"""

DEF MAXG = 64          # max source vertices
DEF MAXH = 30          # max target vertices
DEF MAXGE = 2016       # max source edges, MAXG*(MAXG-1)/2
DEF MAXCAN = 10        # max vertices for the canonical search

MODE_HOM = 0
MODE_VSURJ = 1
MODE_VESURJ = 2


def count_maps(
    int n_g,
    g_loop,
    g_prev_off,
    g_prev_flat,
    g_edge_u,
    g_edge_v,
    int n_h,
    unsigned long long h_loops,
    h_adj,
    h_edge_id,
    int n_h_edges,
    int mode,
):
    cdef int loop_c[MAXG]
    cdef int off_c[MAXG + 1]
    cdef int prev_c[MAXGE]
    cdef int eu_c[MAXGE]
    cdef int ev_c[MAXGE]
    cdef unsigned long long adj_c[MAXH]
    cdef int eid_c[MAXH * MAXH]
    cdef int img[MAXG]
    cdef int choice[MAXG]
    cdef int i, v, c, k, d, a, b
    cdef int n_prev = len(g_prev_flat)
    cdef int n_ge = len(g_edge_u)
    cdef bint placed, ok
    cdef unsigned long long count = 0
    cdef unsigned long long one = 1
    cdef unsigned long long vm, em
    cdef unsigned long long full_v = (one << n_h) - 1
    cdef unsigned long long full_e = (one << n_h_edges) - 1

    if n_g > MAXG or n_h > MAXH or n_prev > MAXGE or n_ge > MAXGE:
        raise ValueError("input exceeds compiled kernel limits")
    for i in range(n_g):
        loop_c[i] = g_loop[i]
    for i in range(n_g + 1):
        off_c[i] = g_prev_off[i]
    for i in range(n_prev):
        prev_c[i] = g_prev_flat[i]
    for i in range(n_ge):
        eu_c[i] = g_edge_u[i]
        ev_c[i] = g_edge_v[i]
    for i in range(n_h):
        adj_c[i] = h_adj[i]
    if mode == 2:
        for i in range(n_h * n_h):
            eid_c[i] = h_edge_id[i]

    for i in range(n_g):
        choice[i] = -1
    v = 0
    while v >= 0:
        c = choice[v] + 1
        placed = False
        while c < n_h:
            ok = (not loop_c[v]) or ((h_loops >> c) & 1)
            if ok:
                for k in range(off_c[v], off_c[v + 1]):
                    d = img[prev_c[k]]
                    if d == c:
                        if not ((h_loops >> c) & 1):
                            ok = False
                            break
                    elif not ((adj_c[c] >> d) & 1):
                        ok = False
                        break
            if ok:
                placed = True
                break
            c += 1
        if not placed:
            choice[v] = -1
            v -= 1
            continue
        choice[v] = c
        img[v] = c
        if v + 1 == n_g:
            if mode == 0:
                count += 1
            else:
                vm = 0
                for k in range(n_g):
                    vm |= one << img[k]
                if vm == full_v:
                    if mode == 1:
                        count += 1
                    else:
                        em = 0
                        for k in range(n_ge):
                            a = img[eu_c[k]]
                            b = img[ev_c[k]]
                            if a != b:
                                em |= one << eid_c[a * n_h + b]
                        if em == full_e:
                            count += 1
        else:
            v += 1
    return count


def count_autos(int n, unsigned long long loops, adj):
    cdef unsigned long long adj_c[MAXH]
    cdef int img[MAXH]
    cdef int choice[MAXH]
    cdef unsigned long long used = 0
    cdef unsigned long long count = 0
    cdef unsigned long long one = 1
    cdef unsigned long long av, ac
    cdef int i, v, c, u
    cdef bint placed, ok

    if n > MAXH:
        raise ValueError("input exceeds compiled kernel limits")
    for i in range(n):
        adj_c[i] = adj[i]
        choice[i] = -1
    v = 0
    while v >= 0:
        if choice[v] >= 0:
            used &= ~(one << img[v])
        c = choice[v] + 1
        placed = False
        while c < n:
            if (not ((used >> c) & 1)) and ((loops >> v) & 1) == ((loops >> c) & 1):
                ok = True
                av = adj_c[v]
                ac = adj_c[c]
                for u in range(v):
                    if ((av >> u) & 1) != ((ac >> img[u]) & 1):
                        ok = False
                        break
                if ok:
                    placed = True
                    break
            c += 1
        if not placed:
            choice[v] = -1
            v -= 1
            continue
        choice[v] = c
        img[v] = c
        used |= one << c
        if v + 1 == n:
            count += 1
        else:
            v += 1
    return count


cdef unsigned long long _encode(int n, int* loop_c, unsigned long long* adj_c, int* perm):
    cdef unsigned long long enc = 0
    cdef unsigned long long ai
    cdef int i, j
    for i in range(n):
        enc = (enc << 1) | loop_c[perm[i]]
    for i in range(n):
        ai = adj_c[perm[i]]
        for j in range(i + 1, n):
            enc = (enc << 1) | ((ai >> perm[j]) & 1)
    return enc


def min_encoding(int n, loop_flags, adj):
    """Smallest encoding over vertex orders with the loopless block first;
    see the pure twin for why the restriction is safe."""
    cdef int loop_c[MAXCAN]
    cdef unsigned long long adj_c[MAXCAN]
    cdef int cand[MAXCAN]      # loopless vertices, then looped ones
    cdef int perm[MAXCAN]
    cdef int choice[MAXCAN]
    cdef int block_lo[MAXCAN]  # candidate range for each position
    cdef int block_hi[MAXCAN]
    cdef int i, p, idx, n_free
    cdef unsigned long long used = 0
    cdef unsigned long long one = 1
    cdef unsigned long long best, enc
    cdef bint placed, have

    if n > MAXCAN:
        raise ValueError("input exceeds compiled kernel limits")
    if n == 0:
        return 0
    for i in range(n):
        loop_c[i] = loop_flags[i]
        adj_c[i] = adj[i]
    n_free = 0
    for i in range(n):
        if not loop_c[i]:
            cand[n_free] = i
            n_free += 1
    idx = n_free
    for i in range(n):
        if loop_c[i]:
            cand[idx] = i
            idx += 1
    for p in range(n):
        if p < n_free:
            block_lo[p] = 0
            block_hi[p] = n_free
        else:
            block_lo[p] = n_free
            block_hi[p] = n
        choice[p] = block_lo[p] - 1

    best = 0
    have = False
    p = 0
    while p >= 0:
        if choice[p] >= block_lo[p]:
            used &= ~(one << cand[choice[p]])
        idx = choice[p] + 1
        placed = False
        while idx < block_hi[p]:
            if not ((used >> cand[idx]) & 1):
                placed = True
                break
            idx += 1
        if not placed:
            choice[p] = block_lo[p] - 1
            p -= 1
            continue
        choice[p] = idx
        perm[p] = cand[idx]
        used |= one << cand[idx]
        if p + 1 == n:
            enc = _encode(n, loop_c, adj_c, perm)
            if (not have) or enc < best:
                best = enc
                have = True
        else:
            p += 1
    return best
