# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same call contracts, traversal order, pruning rules and node counts as
gf2matroid._kernels_py; point sets live in uint64 word arrays instead
of Python big ints.  The pure module is the reference; keep the two in
lockstep when changing either.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy, memset

from time import monotonic

ctypedef unsigned long long u64
ctypedef unsigned int u32
ctypedef unsigned short u16

cdef extern from *:
    """
    #include <stdint.h>
    static inline int popcnt64(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    static inline int msb64(unsigned long long x) { return 63 - __builtin_clzll(x); }
    """
    int popcnt64(u64 x) noexcept nogil
    int ctz64(u64 x) noexcept nogil
    int msb64(u64 x) noexcept nogil

__all__ = [
    "BACKEND_NAME",
    "KERNEL_RANK_MAX",
    "complement_search",
    "forward_search",
    "has_subspace_mask",
    "min_odd_zero_subset",
]

BACKEND_NAME = "c"
KERNEL_RANK_MAX = 12

cdef long long CHECK_INTERVAL = 4096

cdef u64 LOWPAT[6]
LOWPAT[0] = 0x5555555555555555ULL
LOWPAT[1] = 0x3333333333333333ULL
LOWPAT[2] = 0x0F0F0F0F0F0F0F0FULL
LOWPAT[3] = 0x00FF00FF00FF00FFULL
LOWPAT[4] = 0x0000FFFF0000FFFFULL
LOWPAT[5] = 0x00000000FFFFFFFFULL


# ---------------------------------------------------------------- bitsets

cdef inline void bs_translate(u64 *dst, u64 *src, int s, int nw) noexcept nogil:
    """dst = src with every element XOR-translated by s."""
    cdef int j, i, sh, stride
    cdef u64 w, pat
    memcpy(dst, src, nw * sizeof(u64))
    for j in range(6):
        if (s >> j) & 1:
            sh = 1 << j
            pat = LOWPAT[j]
            for i in range(nw):
                w = dst[i]
                dst[i] = ((w & pat) << sh) | ((w >> sh) & pat)
    j = 6
    while (s >> j) != 0:
        if (s >> j) & 1:
            stride = 1 << (j - 6)
            for i in range(nw):
                if (i & stride) == 0:
                    w = dst[i]
                    dst[i] = dst[i | stride]
                    dst[i | stride] = w
        j += 1


cdef inline int bs_popcount(u64 *a, int nw) noexcept nogil:
    cdef int i, c = 0
    for i in range(nw):
        c += popcnt64(a[i])
    return c


cdef inline bint bs_isempty(u64 *a, int nw) noexcept nogil:
    cdef int i
    for i in range(nw):
        if a[i]:
            return False
    return True


cdef inline bint bs_get(u64 *a, int v) noexcept nogil:
    return (a[v >> 6] >> (v & 63)) & 1ULL


cdef inline void bs_set(u64 *a, int v) noexcept nogil:
    a[v >> 6] |= 1ULL << (v & 63)


cdef inline void bs_clear_through(u64 *a, int v) noexcept nogil:
    """Clear bits 0..v inclusive."""
    cdef int w = v >> 6, i
    for i in range(w):
        a[i] = 0
    a[w] &= ~(((1ULL << (v & 63)) << 1) - 1)


# ------------------------------------------------------- subspace testing

cdef bint c_has_subspace(u64 *mask, int d, int r, int nw, u64 *scratch) noexcept nogil:
    """scratch needs 2*nw words per remaining level, d levels."""
    cdef int v, i, wi
    cdef u64 m
    cdef u64 *rest = scratch
    cdef u64 *tmp = scratch + nw
    if d <= 0:
        return True
    if bs_popcount(mask, nw) < (1 << d) - 1:
        return False
    if d == 1:
        return not bs_isempty(mask, nw)
    for wi in range(nw):
        m = mask[wi]
        while m:
            v = (wi << 6) + ctz64(m)
            m &= m - 1
            bs_translate(tmp, mask, v, nw)
            for i in range(nw):
                rest[i] = mask[i] & tmp[i]
            bs_clear_through(rest, v)
            if c_has_subspace(rest, d - 1, r, nw, scratch + 2 * nw):
                return True
    return False


cdef void int_to_words(obj, u64 *dst, int nw):
    cdef int i
    for i in range(nw):
        dst[i] = <u64> ((obj >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)


cdef object words_to_int(u64 *src, int nw):
    cdef int i
    out = 0
    for i in range(nw - 1, -1, -1):
        out = (out << 64) | int(src[i])
    return out


def has_subspace_mask(mask, int d, int r):
    """True iff some d-dimensional subspace has all nonzero vectors in mask."""
    if r > KERNEL_RANK_MAX:
        raise ValueError(f"subspace test supports ambient rank <= {KERNEL_RANK_MAX}")
    cdef int nw = max(1, (1 << r) >> 6)
    cdef int levels = d if d > 0 else 1
    cdef u64 *buf = <u64 *> malloc((nw + 2 * nw * levels) * sizeof(u64))
    if buf == NULL:
        raise MemoryError
    cdef bint out
    try:
        int_to_words(mask, buf, nw)
        out = c_has_subspace(buf, d, r, nw, buf + nw)
    finally:
        free(buf)
    return bool(out)


# --------------------------------------------------- smallest odd circuit

def min_odd_zero_subset(points):
    """Smallest odd t >= 3 with a t-subset of points XOR-ing to zero, else 0.

    Straight from the definition: one point at a time, grow the table
    of every (XOR value, exact subset size) pair over genuine subsets,
    then read the smallest odd size landing on zero.  No span
    reduction and no walk shortcut.  Supports up to 63 points.
    """
    pts_list = sorted(points)
    cdef int m = len(pts_list)
    if m > 63:
        raise ValueError(f"subset oracle supports at most 63 points, got {m}")
    if m < 3:
        return 0
    cdef u64 nv = 1
    while nv <= <u64> pts_list[m - 1]:
        nv <<= 1
    cdef u32 pts[63]
    cdef int i
    for i in range(m):
        pts[i] = <u32> pts_list[i]
    cdef u64 *table = <u64 *> calloc(nv, sizeof(u64))
    cdef u64 *snap = <u64 *> malloc(nv * sizeof(u64))
    if table == NULL or snap == NULL:
        free(table)
        free(snap)
        raise MemoryError
    cdef u64 x, sizes
    cdef int s
    try:
        with nogil:
            table[0] = 1  # xor value -> bitmask of achievable subset sizes
            for i in range(m):
                memcpy(snap, table, nv * sizeof(u64))
                for x in range(nv):
                    if snap[x]:
                        table[x ^ pts[i]] |= snap[x] << 1
            sizes = table[0]
        s = 3
        while s <= m:
            if (sizes >> s) & 1:
                return s
            s += 2
        return 0
    finally:
        free(table)
        free(snap)


# --------------------------------------------------------- forward search

cdef struct FwdCtx:
    int r, n_all, nw, T, pg_n, min_critical
    bint full_rank, prune, use_deadline, timed_out
    double deadline
    long long nodes
    int best
    u64 *best_mask       # nw
    u64 *hit             # n_all * nw
    u64 *nonzero         # nw
    u64 *slab_chosen     # maxd * nw
    u64 *slab_sums       # maxd * (T+1) * nw
    u64 *slab_covers     # maxd * nw
    u16 *slab_piv        # maxd * r
    u16 *slab_feas       # maxd * n_all
    u64 *scratch         # 3 * nw + 2 * nw * (r + 1)


cdef bint fwd_check_deadline(FwdCtx *c) noexcept:
    if c.use_deadline and c.nodes % CHECK_INTERVAL == 0:
        if monotonic() > c.deadline:
            c.timed_out = True
            return True
    return False


cdef bint fwd_feasible(FwdCtx *c, int v, u64 *chosen, u64 *sums) noexcept nogil:
    cdef int t = 2, i
    cdef u64 *tmp = c.scratch
    cdef u64 *rest = c.scratch + c.nw
    while t <= c.T:
        if bs_get(sums + t * c.nw, v):
            return False
        t += 2
    if c.pg_n == 1:
        return False
    if c.pg_n >= 3:
        bs_translate(tmp, chosen, v, c.nw)
        for i in range(c.nw):
            rest[i] = chosen[i] & tmp[i]
        if c_has_subspace(rest, c.pg_n - 1, c.r, c.nw, c.scratch + 3 * c.nw):
            return False
    return True


cdef bint fwd_passes_extra(FwdCtx *c, u64 *chosen, u64 *covers, int rank) noexcept nogil:
    cdef int i
    cdef u64 *freebuf = c.scratch + 2 * c.nw
    if c.min_critical >= 2 and not bs_isempty(covers, c.nw):
        return False
    if c.min_critical >= 3:
        for i in range(c.nw):
            freebuf[i] = c.nonzero[i] & ~chosen[i]
        if c_has_subspace(freebuf, c.r - c.min_critical + 1, c.r, c.nw,
                          c.scratch + 3 * c.nw):
            return False
    if c.full_rank and rank != c.r:
        return False
    return True


cdef int fwd_include(FwdCtx *c, int v, int depth,
                     u64 *chosen, u64 *sums, u64 *covers, u16 *piv,
                     int rank) noexcept nogil:
    """Write the state with v added into slab slot depth+1; return new rank."""
    cdef int nw = c.nw, t, i, p
    cdef u64 w
    cdef u64 *nc = c.slab_chosen + (depth + 1) * nw
    cdef u64 *ns = c.slab_sums + (depth + 1) * (c.T + 1) * nw
    cdef u64 *ncov = c.slab_covers + (depth + 1) * nw
    cdef u16 *npiv = c.slab_piv + (depth + 1) * c.r
    cdef u64 *tmp = c.scratch
    memcpy(nc, chosen, nw * sizeof(u64))
    bs_set(nc, v)
    memcpy(ns, sums, (c.T + 1) * nw * sizeof(u64))
    t = c.T
    while t >= 2:
        bs_translate(tmp, ns + (t - 1) * nw, v, nw)
        for i in range(nw):
            ns[t * nw + i] |= tmp[i]
        t -= 1
    if c.T >= 1:
        bs_set(ns + nw, v)
    for i in range(nw):
        ncov[i] = covers[i] & (c.hit + v * nw)[i]
    memcpy(npiv, piv, c.r * sizeof(u16))
    w = <u64> v
    while w:
        p = msb64(w)
        if npiv[p] == 0:
            npiv[p] = <u16> w
            return rank + 1
        w ^= npiv[p]
    return rank


cdef void fwd_dfs(FwdCtx *c, int depth, u16 *feas, int nf,
                  u64 *chosen, u64 *sums, u64 *covers, u16 *piv,
                  int rank, int size) noexcept:
    cdef int i, v, w, nrank, cnf
    cdef bint nonempty
    cdef u64 *reach
    cdef u16 *cfeas
    c.nodes += 1
    if fwd_check_deadline(c):
        return
    if size > c.best and fwd_passes_extra(c, chosen, covers, rank):
        c.best = size
        memcpy(c.best_mask, chosen, c.nw * sizeof(u64))
    if nf == 0:
        return
    if c.prune and size + nf <= c.best:
        return
    if c.prune and c.min_critical >= 2:
        reach = c.scratch + 2 * c.nw
        memcpy(reach, covers, c.nw * sizeof(u64))
        nonempty = not bs_isempty(reach, c.nw)
        for i in range(nf):
            if not nonempty:
                break
            w = feas[i]
            nonempty = False
            for v in range(c.nw):
                reach[v] &= (c.hit + w * c.nw)[v]
                if reach[v]:
                    nonempty = True
        if nonempty:
            return  # every completion stays affine
    v = feas[0]
    nrank = fwd_include(c, v, depth, chosen, sums, covers, piv, rank)
    cfeas = c.slab_feas + (depth + 1) * c.n_all
    cnf = 0
    for i in range(1, nf):
        if fwd_feasible(c, feas[i],
                        c.slab_chosen + (depth + 1) * c.nw,
                        c.slab_sums + (depth + 1) * (c.T + 1) * c.nw):
            cfeas[cnf] = feas[i]
            cnf += 1
    fwd_dfs(c, depth + 1, cfeas, cnf,
            c.slab_chosen + (depth + 1) * c.nw,
            c.slab_sums + (depth + 1) * (c.T + 1) * c.nw,
            c.slab_covers + (depth + 1) * c.nw,
            c.slab_piv + (depth + 1) * c.r,
            nrank, size + 1)
    if c.timed_out:
        return
    fwd_dfs(c, depth + 1, feas + 1, nf - 1, chosen, sums, covers, piv, rank, size)


cdef void _fwd_free(FwdCtx *c) noexcept:
    free(c.best_mask)
    free(c.hit)
    free(c.nonzero)
    free(c.slab_chosen)
    free(c.slab_sums)
    free(c.slab_covers)
    free(c.slab_piv)
    free(c.slab_feas)
    free(c.scratch)


def forward_search(int r, int min_odd_girth, int pg_free_order, int min_critical,
                   bint full_rank, forced_in, forced_out_mask, budget,
                   bint prune=True):
    """Maximum point set under the given constraints, include-first DFS.

    Returns (best_size or -1, witness_mask, nodes, completed); see the
    pure twin for the contract details.
    """
    if r > KERNEL_RANK_MAX:
        raise ValueError(f"forward search supports ambient rank <= {KERNEL_RANK_MAX}")
    cdef FwdCtx c
    cdef int n_all = 1 << r
    cdef int nw = max(1, n_all >> 6)
    cdef int T = min_odd_girth - 3 if min_odd_girth >= 5 else 0
    cdef int maxd = n_all + len(forced_in) + 4
    cdef int v, x, size, rank, depth, nf
    cdef bint dead = False
    cdef u16 *feas
    cdef u64 *chosen
    cdef u64 *sums
    cdef u64 *covers
    cdef u16 *piv

    c.r = r
    c.n_all = n_all
    c.nw = nw
    c.T = T
    c.pg_n = pg_free_order
    c.min_critical = min_critical
    c.full_rank = full_rank
    c.prune = prune
    c.use_deadline = budget is not None
    c.deadline = (monotonic() + budget) if budget is not None else 0.0
    c.timed_out = False
    c.nodes = 0
    c.best = -1

    c.best_mask = <u64 *> calloc(nw, sizeof(u64))
    c.hit = <u64 *> calloc(<size_t> n_all * nw, sizeof(u64))
    c.nonzero = <u64 *> calloc(nw, sizeof(u64))
    c.slab_chosen = <u64 *> calloc(<size_t> maxd * nw, sizeof(u64))
    c.slab_sums = <u64 *> calloc(<size_t> maxd * (T + 1) * nw, sizeof(u64))
    c.slab_covers = <u64 *> calloc(<size_t> maxd * nw, sizeof(u64))
    c.slab_piv = <u16 *> calloc(<size_t> maxd * r, sizeof(u16))
    c.slab_feas = <u16 *> calloc(<size_t> maxd * n_all, sizeof(u16))
    c.scratch = <u64 *> calloc(3 * nw + 2 * nw * (r + 1), sizeof(u64))
    if (c.best_mask == NULL or c.hit == NULL or c.nonzero == NULL
            or c.slab_chosen == NULL or c.slab_sums == NULL
            or c.slab_covers == NULL or c.slab_piv == NULL
            or c.slab_feas == NULL or c.scratch == NULL):
        _fwd_free(&c)
        raise MemoryError

    try:
        for v in range(1, n_all):
            for x in range(1, n_all):
                if popcnt64(<u64> (v & x)) & 1:
                    bs_set(c.hit + v * nw, x)
            bs_set(c.nonzero, v)

        # root state in slab slot 0
        chosen = c.slab_chosen
        sums = c.slab_sums
        covers = c.slab_covers
        piv = c.slab_piv
        bs_set(sums, 0)  # the empty subset sums to zero
        memcpy(covers, c.nonzero, nw * sizeof(u64))
        size = 0
        rank = 0
        depth = 0
        for vv in forced_in:
            v = vv
            if not fwd_feasible(&c, v, chosen, sums):
                dead = True
                break
            rank = fwd_include(&c, v, depth, chosen, sums, covers, piv, rank)
            depth += 1
            chosen = c.slab_chosen + depth * nw
            sums = c.slab_sums + depth * (T + 1) * nw
            covers = c.slab_covers + depth * nw
            piv = c.slab_piv + depth * r
            size += 1
        if not dead:
            feas = c.slab_feas + depth * n_all
            nf = 0
            for v in range(n_all - 1, 0, -1):
                if bs_get(chosen, v):
                    continue
                if (forced_out_mask >> v) & 1:
                    continue
                if fwd_feasible(&c, v, chosen, sums):
                    feas[nf] = <u16> v
                    nf += 1
            fwd_dfs(&c, depth, feas, nf, chosen, sums, covers, piv, rank, size)
        best_mask = words_to_int(c.best_mask, nw) if c.best >= 0 else 0
        return c.best, best_mask, int(c.nodes), not c.timed_out
    finally:
        _fwd_free(&c)


# ------------------------------------------------------ complement search

cdef struct CmpCtx:
    int r, n_all, nw, n_subs, tw, forbidden_dim, max_blocker, maxcov
    bint full_rank, symmetry, use_deadline, timed_out
    double deadline
    long long nodes
    int best
    u64 *best_mask       # nw
    u64 *subs            # n_subs * nw
    u64 *through         # n_all * tw
    u64 *nonzero         # nw
    u64 *slab_b          # maxd * nw
    u64 *slab_uncov      # maxd * tw
    u64 *slab_avail      # maxd * nw
    u64 *slab_removed    # maxd * nw
    u64 *taken           # nw
    u64 *scratch         # 2 * nw + 2 * nw * (r + 1)


cdef bint cmp_check_deadline(CmpCtx *c) noexcept:
    if c.use_deadline and c.nodes % CHECK_INTERVAL == 0:
        if monotonic() > c.deadline:
            c.timed_out = True
            return True
    return False


cdef int cmp_lower_bound(CmpCtx *c, u64 *uncov) noexcept nogil:
    cdef int u = bs_popcount(uncov, c.tw)
    cdef int bound, packed, wi, i, k
    cdef u64 m
    cdef bint disjoint
    if u == 0:
        return 0
    bound = (u + c.maxcov - 1) // c.maxcov
    packed = 0
    memset(c.taken, 0, c.nw * sizeof(u64))
    for wi in range(c.tw):
        m = uncov[wi]
        while m:
            i = (wi << 6) + ctz64(m)
            m &= m - 1
            disjoint = True
            for k in range(c.nw):
                if (c.subs + i * c.nw)[k] & c.taken[k]:
                    disjoint = False
                    break
            if disjoint:
                for k in range(c.nw):
                    c.taken[k] |= (c.subs + i * c.nw)[k]
                packed += 1
    return bound if bound > packed else packed


cdef bint cmp_closes_forbidden(CmpCtx *c, u64 *b_mask, int p) noexcept nogil:
    cdef int i
    cdef u64 *tmp = c.scratch
    cdef u64 *rest = c.scratch + c.nw
    bs_translate(tmp, b_mask, p, c.nw)
    for i in range(c.nw):
        rest[i] = b_mask[i] & tmp[i]
    return c_has_subspace(rest, c.forbidden_dim - 1, c.r, c.nw, c.scratch + 2 * c.nw)


cdef void cmp_dfs(CmpCtx *c, int depth, u64 *b_mask, int b_size,
                  u64 *uncov, u64 *avail, bint at_root) noexcept:
    cdef int i, k, wi, p, window, sel, sel_count, cnt, rank, pp
    cdef u64 m, mm, w
    cdef u64 *pts
    cdef u64 *removed
    cdef u64 *cb
    cdef u64 *cu
    cdef u64 *ca
    cdef u16 piv[16]
    c.nodes += 1
    if cmp_check_deadline(c):
        return
    if bs_isempty(uncov, c.tw):
        if c.full_rank:
            memset(piv, 0, sizeof(piv))
            rank = 0
            for wi in range(c.nw):
                m = c.nonzero[wi] & ~b_mask[wi]
                while m:
                    w = <u64> ((wi << 6) + ctz64(m))
                    m &= m - 1
                    while w:
                        pp = msb64(w)
                        if piv[pp] == 0:
                            piv[pp] = <u16> w
                            rank += 1
                            break
                        w ^= piv[pp]
            if rank != c.r:
                return
        c.best = b_size
        memcpy(c.best_mask, b_mask, c.nw * sizeof(u64))
        return
    window = c.max_blocker if c.best < 0 else min(c.max_blocker, c.best - 1)
    if b_size + cmp_lower_bound(c, uncov) > window:
        return
    # fail-first: uncovered subspace with fewest available points
    sel = -1
    sel_count = 1 << 30
    for wi in range(c.tw):
        m = uncov[wi]
        while m:
            i = (wi << 6) + ctz64(m)
            m &= m - 1
            cnt = 0
            for k in range(c.nw):
                cnt += popcnt64((c.subs + i * c.nw)[k] & avail[k])
            if cnt == 0:
                return  # unhittable in this branch
            if cnt < sel_count:
                sel = i
                sel_count = cnt
    removed = c.slab_removed + depth * c.nw
    memset(removed, 0, c.nw * sizeof(u64))
    pts = c.subs + sel * c.nw
    cb = c.slab_b + (depth + 1) * c.nw
    cu = c.slab_uncov + (depth + 1) * c.tw
    ca = c.slab_avail + (depth + 1) * c.nw
    for wi in range(c.nw):
        mm = pts[wi] & avail[wi]
        while mm:
            p = (wi << 6) + ctz64(mm)
            mm &= mm - 1
            bs_set(removed, p)
            if c.forbidden_dim and cmp_closes_forbidden(c, b_mask, p):
                continue
            memcpy(cb, b_mask, c.nw * sizeof(u64))
            bs_set(cb, p)
            for k in range(c.tw):
                cu[k] = uncov[k] & ~(c.through + p * c.tw)[k]
            for k in range(c.nw):
                ca[k] = avail[k] & ~removed[k]
            cmp_dfs(c, depth + 1, cb, b_size + 1, cu, ca, False)
            if c.timed_out:
                return
            if at_root and c.symmetry:
                return  # remaining root branches are images under a flat stabilizer


cdef void _cmp_free(CmpCtx *c) noexcept:
    free(c.best_mask)
    free(c.subs)
    free(c.through)
    free(c.nonzero)
    free(c.slab_b)
    free(c.slab_uncov)
    free(c.slab_avail)
    free(c.slab_removed)
    free(c.taken)
    free(c.scratch)


def complement_search(int r, subspace_masks, int forbidden_dim, bint full_rank,
                      int max_blocker, budget, bint symmetry):
    """Smallest blocker hitting every given subspace, branch and bound.

    Returns (best_size or -1, blocker_mask, nodes, completed); see the
    pure twin for the contract details.
    """
    if r > KERNEL_RANK_MAX:
        raise ValueError(f"complement search supports ambient rank <= {KERNEL_RANK_MAX}")
    cdef CmpCtx c
    cdef int n_all = 1 << r
    cdef int nw = max(1, n_all >> 6)
    cdef int n_subs = len(subspace_masks)
    cdef int tw = max(1, (n_subs + 63) >> 6)
    cdef int maxd = max_blocker + 2 if max_blocker + 2 < n_all + 2 else n_all + 2
    cdef int i, v, mc, wi
    cdef u64 mask_word

    c.r = r
    c.n_all = n_all
    c.nw = nw
    c.n_subs = n_subs
    c.tw = tw
    c.forbidden_dim = forbidden_dim
    c.max_blocker = max_blocker
    c.full_rank = full_rank
    c.symmetry = symmetry
    c.use_deadline = budget is not None
    c.deadline = (monotonic() + budget) if budget is not None else 0.0
    c.timed_out = False
    c.nodes = 0
    c.best = -1

    c.best_mask = <u64 *> calloc(nw, sizeof(u64))
    c.subs = <u64 *> calloc(<size_t> max(1, n_subs) * nw, sizeof(u64))
    c.through = <u64 *> calloc(<size_t> n_all * tw, sizeof(u64))
    c.nonzero = <u64 *> calloc(nw, sizeof(u64))
    c.slab_b = <u64 *> calloc(<size_t> maxd * nw, sizeof(u64))
    c.slab_uncov = <u64 *> calloc(<size_t> maxd * tw, sizeof(u64))
    c.slab_avail = <u64 *> calloc(<size_t> maxd * nw, sizeof(u64))
    c.slab_removed = <u64 *> calloc(<size_t> maxd * nw, sizeof(u64))
    c.taken = <u64 *> calloc(nw, sizeof(u64))
    c.scratch = <u64 *> calloc(2 * nw + 2 * nw * (r + 1), sizeof(u64))
    if (c.best_mask == NULL or c.subs == NULL or c.through == NULL
            or c.nonzero == NULL or c.slab_b == NULL or c.slab_uncov == NULL
            or c.slab_avail == NULL or c.slab_removed == NULL
            or c.taken == NULL or c.scratch == NULL):
        _cmp_free(&c)
        raise MemoryError

    try:
        for i, mask_obj in enumerate(subspace_masks):
            int_to_words(mask_obj, c.subs + i * nw, nw)
            for wi in range(nw):
                mask_word = (c.subs + i * nw)[wi]
                while mask_word:
                    v = (wi << 6) + ctz64(mask_word)
                    mask_word &= mask_word - 1
                    bs_set(c.through + v * tw, i)
        for v in range(1, n_all):
            bs_set(c.nonzero, v)
        c.maxcov = 1
        for v in range(1, n_all):
            mc = bs_popcount(c.through + v * tw, tw)
            if mc > c.maxcov:
                c.maxcov = mc
        # root: everything uncovered, every point available
        for i in range(n_subs):
            bs_set(c.slab_uncov, i)
        memcpy(c.slab_avail, c.nonzero, nw * sizeof(u64))
        cmp_dfs(&c, 0, c.slab_b, 0, c.slab_uncov, c.slab_avail, True)
        best_mask = words_to_int(c.best_mask, nw) if c.best >= 0 else 0
        return c.best, best_mask, int(c.nodes), not c.timed_out
    finally:
        _cmp_free(&c)
