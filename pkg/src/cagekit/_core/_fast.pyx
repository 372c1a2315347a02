# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Cython twins of the pure-Python kernels, for graphs on at most 64 vertices.

Same algorithms, same iteration orders (lowest set bit first), same byte
encodings; the suite asserts byte-for-byte agreement with cagekit._core.pure
on canonical forms and search output.  Backend selection happens in
cagekit._core based on graph order.
"""

from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memcpy, memcmp

from cagekit._core.pure import DedupCapacityError, g6_header

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

cdef enum:
    MAXN = 64
    MAXBODY = 352          # >= ceil(64*63/2 / 6)
    BIGC = 1048576


cdef inline u64 _lowbit(u64 m) nogil:
    return m & (0 - m)


cdef inline u64 _fullmask(int n) nogil:
    if n <= 0:
        return 0
    return (<u64>0xFFFFFFFFFFFFFFFF) >> (64 - n)


cdef void _load(list adj, int n, u64 *out):
    cdef int i
    for i in range(n):
        out[i] = <u64>adj[i]


# ---------------------------------------------------------------------------
# traversal primitives

cdef void _bfs(int n, u64 *adj, int src, u64 allowed, int *dist) nogil:
    cdef int i, d
    cdef u64 seen, frontier, nxt, m, b
    for i in range(n):
        dist[i] = -1
    dist[src] = 0
    seen = (<u64>1) << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        m = frontier
        while m:
            b = _lowbit(m)
            m ^= b
            nxt |= adj[__builtin_ctzll(b)]
        nxt &= allowed
        nxt &= ~seen
        seen |= nxt
        m = nxt
        while m:
            b = _lowbit(m)
            m ^= b
            dist[__builtin_ctzll(b)] = d
        frontier = nxt


def bfs_dists(int n, list adj, int src, allowed=None):
    """Distances from src (-1 where unreachable), optionally restricted to an
    allowed vertex mask (src must be allowed)."""
    cdef u64 A[MAXN]
    cdef int dist[MAXN]
    cdef u64 allow = _fullmask(n)
    cdef int i
    _load(adj, n, A)
    if allowed is not None:
        allow = <u64>allowed
    _bfs(n, A, src, allow, dist)
    return [dist[i] for i in range(n)]


cdef int _girth(int n, u64 *adj) nogil:
    cdef int best = 0
    cdef int dist[MAXN]
    cdef int par[MAXN]
    cdef int queue[MAXN]
    cdef int qi, qn, s, x, dx, y, cand
    cdef u64 m, b
    for s in range(n):
        for x in range(n):
            dist[x] = -1
            par[x] = -1
        dist[s] = 0
        queue[0] = s
        qn = 1
        qi = 0
        while qi < qn:
            x = queue[qi]
            qi += 1
            dx = dist[x]
            if best != 0 and 2 * dx >= best:
                break
            m = adj[x]
            while m:
                b = _lowbit(m)
                m ^= b
                y = __builtin_ctzll(b)
                if dist[y] < 0:
                    dist[y] = dx + 1
                    par[y] = x
                    queue[qn] = y
                    qn += 1
                elif par[x] != y and par[y] != x:
                    cand = dx + dist[y] + 1
                    if best == 0 or cand < best:
                        best = cand
    return best


def girth_of(int n, list adj):
    """Length of a shortest cycle, 0 if the graph is acyclic."""
    cdef u64 A[MAXN]
    _load(adj, n, A)
    return _girth(n, A)


cdef bint _dfs_cycle(u64 *adj, int s, int x, int left, u64 visited, int *dist) nogil:
    cdef u64 m, b
    cdef int y, dy
    if left == 1:
        return (adj[x] >> s) & 1 == 1
    m = adj[x] & ~visited
    while m:
        b = _lowbit(m)
        m ^= b
        y = __builtin_ctzll(b)
        dy = dist[y]
        if 0 <= dy < left:
            if _dfs_cycle(adj, s, y, left - 1, visited | b, dist):
                return 1
    return 0


cdef bint _has_cycle(int n, u64 *adj, int length) nogil:
    cdef u64 full, hi
    cdef u64 sub[MAXN]
    cdef int dist[MAXN]
    cdef int s, v
    if length < 3 or length > n:
        return 0
    full = _fullmask(n)
    for s in range(n):
        hi = full ^ (((<u64>1) << s) - 1)
        if __builtin_popcountll(adj[s] & hi) < 2:
            continue
        for v in range(n):
            sub[v] = adj[v] & hi
        _bfs(n, sub, s, hi, dist)
        if _dfs_cycle(sub, s, s, length, (<u64>1) << s, dist):
            return 1
    return 0


def has_cycle_len(int n, list adj, int length):
    """Whether some cycle of exactly `length` edges exists (length >= 3)."""
    cdef u64 A[MAXN]
    _load(adj, n, A)
    return _has_cycle(n, A, length) != 0


cdef bint _dfs_path(u64 *adj, int dst, int x, int left, u64 visited, int *dist) nogil:
    cdef u64 m, b
    cdef int y, dy
    if left == 1:
        return (adj[x] >> dst) & 1 == 1
    m = adj[x] & ~visited & ~((<u64>1) << dst)
    while m:
        b = _lowbit(m)
        m ^= b
        y = __builtin_ctzll(b)
        dy = dist[y]
        if 0 <= dy < left:
            if _dfs_path(adj, dst, y, left - 1, visited | b, dist):
                return 1
    return 0


cdef bint _path_exact(int n, u64 *adj, int src, int dst, int length, int *dist_from_dst) nogil:
    cdef int d
    if src == dst or length <= 0:
        return 0
    d = dist_from_dst[src]
    if d < 0 or d > length:
        return 0
    return _dfs_path(adj, dst, src, length, (<u64>1) << src, dist_from_dst)


def exists_path_exact(int n, list adj, int src, int dst, int length, list dist_from_dst):
    """Whether a simple path of exactly `length` edges joins src and dst.

    dist_from_dst must be a BFS distance array rooted at dst.
    """
    cdef u64 A[MAXN]
    cdef int dist[MAXN]
    cdef int i
    _load(adj, n, A)
    for i in range(n):
        dist[i] = <int>dist_from_dst[i]
    return _path_exact(n, A, src, dst, length, dist) != 0


# ---------------------------------------------------------------------------
# graph6 body encoding

cdef int _encode_body(int n, u64 *adj, unsigned char *out) nogil:
    cdef int j, i, nb = 0, acc = 0, ln = 0
    cdef u64 col
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | <int>((col >> i) & 1)
            nb += 1
            if nb == 6:
                out[ln] = <unsigned char>(acc + 63)
                ln += 1
                acc = 0
                nb = 0
    if nb:
        out[ln] = <unsigned char>((acc << (6 - nb)) + 63)
        ln += 1
    return ln


# ---------------------------------------------------------------------------
# canonical form: same refinement / individualization / orbit pruning as the
# pure kernel, working on C arrays.  A CanonCtx holds the per-call state.

cdef struct CanonCtx:
    int n
    u64 *adj
    unsigned char best_body[MAXBODY]
    int body_len
    int has_best
    int best_perm[MAXN]
    int perm[MAXN]
    int inv[MAXN]
    u64 radj[MAXN]
    unsigned char body[MAXBODY]
    unsigned char *auts        # naut permutations of n bytes each
    int naut
    int acap
    int base[MAXN]
    int nbase


cdef void _ctx_init(CanonCtx *ctx, int n, u64 *adj):
    ctx.n = n
    ctx.adj = adj
    ctx.has_best = 0
    ctx.body_len = 0
    ctx.naut = 0
    ctx.acap = 16
    ctx.auts = <unsigned char *>malloc(ctx.acap * n)
    ctx.nbase = 0


cdef void _ctx_free(CanonCtx *ctx):
    if ctx.auts != NULL:
        free(ctx.auts)
        ctx.auts = NULL


cdef void _leaf(CanonCtx *ctx, int *order):
    cdef int n = ctx.n
    cdef int pos, v, ln, ident
    cdef u64 m, b, rm
    cdef unsigned char *sig
    for pos in range(n):
        ctx.perm[order[pos]] = pos
    for v in range(n):
        ctx.radj[v] = 0
    for v in range(n):
        m = ctx.adj[v]
        rm = 0
        while m:
            b = _lowbit(m)
            m ^= b
            rm |= (<u64>1) << ctx.perm[__builtin_ctzll(b)]
        ctx.radj[ctx.perm[v]] = rm
    ln = _encode_body(n, ctx.radj, ctx.body)
    if not ctx.has_best or memcmp(ctx.body, ctx.best_body, ln) < 0:
        memcpy(ctx.best_body, ctx.body, ln)
        ctx.body_len = ln
        memcpy(ctx.best_perm, ctx.perm, n * sizeof(int))
        ctx.has_best = 1
    elif memcmp(ctx.body, ctx.best_body, ln) == 0:
        for v in range(n):
            ctx.inv[ctx.best_perm[v]] = v
        if ctx.naut == ctx.acap:
            ctx.acap *= 2
            ctx.auts = <unsigned char *>realloc(ctx.auts, ctx.acap * n)
        sig = ctx.auts + ctx.naut * n
        ident = 1
        for v in range(n):
            sig[v] = <unsigned char>ctx.inv[ctx.perm[v]]
            if sig[v] != v:
                ident = 0
        if not ident:
            ctx.naut += 1


cdef int _uf_find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _orbit_equiv(CanonCtx *ctx, int v, int *explored, int nexp) nogil:
    cdef int parent[MAXN]
    cdef int n = ctx.n
    cdef int a, b, u, used, ok, ru, rs, rv, i
    cdef unsigned char *sig
    for u in range(n):
        parent[u] = u
    used = 0
    for a in range(ctx.naut):
        sig = ctx.auts + a * n
        ok = 1
        for b in range(ctx.nbase):
            if sig[ctx.base[b]] != ctx.base[b]:
                ok = 0
                break
        if not ok:
            continue
        used = 1
        for u in range(n):
            ru = _uf_find(parent, u)
            rs = _uf_find(parent, sig[u])
            if ru != rs:
                parent[ru] = rs
    if not used:
        return 0
    rv = _uf_find(parent, v)
    for i in range(nexp):
        if _uf_find(parent, explored[i]) == rv:
            return 1
    return 0


cdef void _refine_c(CanonCtx *ctx, int *order, int *cstart, int *clen, int *pncells) nogil:
    cdef int n = ctx.n
    cdef u64 cmask[MAXN]
    cdef int sig[MAXN][MAXN]
    cdef int done[MAXN]
    cdef int norder[MAXN]
    cdef int nstart[MAXN]
    cdef int nlen[MAXN]
    cdef int ncells, nn, npos, changed
    cdef int c, L, s0, idx, cc, v, best, i, j, cmp_, groups, gstart
    while True:
        ncells = pncells[0]
        for c in range(ncells):
            cmask[c] = 0
            for idx in range(clen[c]):
                cmask[c] |= (<u64>1) << order[cstart[c] + idx]
        nn = 0
        npos = 0
        changed = 0
        for c in range(ncells):
            L = clen[c]
            s0 = cstart[c]
            if L == 1:
                nstart[nn] = npos
                nlen[nn] = 1
                norder[npos] = order[s0]
                nn += 1
                npos += 1
                continue
            for idx in range(L):
                v = order[s0 + idx]
                for cc in range(ncells):
                    sig[idx][cc] = __builtin_popcountll(ctx.adj[v] & cmask[cc])
                done[idx] = 0
            groups = 0
            i = 0
            while i < L:
                if done[i]:
                    i += 1
                    continue
                # find the lexicographically least remaining signature
                best = i
                j = i + 1
                while j < L:
                    if not done[j]:
                        cmp_ = 0
                        for cc in range(ncells):
                            if sig[j][cc] != sig[best][cc]:
                                cmp_ = sig[j][cc] - sig[best][cc]
                                break
                        if cmp_ < 0:
                            best = j
                    j += 1
                # emit every vertex matching it, in cell order
                gstart = npos
                for j in range(L):
                    if done[j]:
                        continue
                    cmp_ = 0
                    for cc in range(ncells):
                        if sig[j][cc] != sig[best][cc]:
                            cmp_ = 1
                            break
                    if cmp_ == 0:
                        norder[npos] = order[s0 + j]
                        npos += 1
                        done[j] = 1
                nstart[nn] = gstart
                nlen[nn] = npos - gstart
                nn += 1
                groups += 1
                # i only advances once done[i] is set; the loop head skips it
            if groups > 1:
                changed = 1
        for i in range(npos):
            order[i] = norder[i]
        for c in range(nn):
            cstart[c] = nstart[c]
            clen[c] = nlen[c]
        pncells[0] = nn
        if not changed:
            return


cdef void _canon_rec(CanonCtx *ctx, int *order, int *cstart, int *clen, int ncells):
    cdef int ns = -1
    cdef int c, idx, v, i, pos
    cdef int explored[MAXN]
    cdef int nexp
    cdef int corder[MAXN]
    cdef int ccstart[MAXN]
    cdef int cclen[MAXN]
    cdef int cn
    for c in range(ncells):
        if clen[c] > 1:
            ns = c
            break
    if ns < 0:
        _leaf(ctx, order)
        return
    nexp = 0
    for idx in range(clen[ns]):
        v = order[cstart[ns] + idx]
        if nexp > 0 and _orbit_equiv(ctx, v, explored, nexp):
            continue
        explored[nexp] = v
        nexp += 1
        ctx.base[ctx.nbase] = v
        ctx.nbase += 1
        # child partition: cells before ns, [v], cell ns minus v, cells after
        pos = 0
        cn = 0
        for c in range(ns):
            ccstart[cn] = pos
            cclen[cn] = clen[c]
            for i in range(clen[c]):
                corder[pos] = order[cstart[c] + i]
                pos += 1
            cn += 1
        ccstart[cn] = pos
        cclen[cn] = 1
        corder[pos] = v
        pos += 1
        cn += 1
        ccstart[cn] = pos
        cclen[cn] = clen[ns] - 1
        for i in range(clen[ns]):
            if order[cstart[ns] + i] != v:
                corder[pos] = order[cstart[ns] + i]
                pos += 1
        cn += 1
        for c in range(ns + 1, ncells):
            ccstart[cn] = pos
            cclen[cn] = clen[c]
            for i in range(clen[c]):
                corder[pos] = order[cstart[c] + i]
                pos += 1
            cn += 1
        _refine_c(ctx, corder, ccstart, cclen, &cn)
        _canon_rec(ctx, corder, ccstart, cclen, cn)
        ctx.nbase -= 1


cdef bytes _canon_with_cells(int n, u64 *adj, int *order, int *cstart, int *clen, int ncells):
    """Canonical graph6 bytes of (n, adj) starting from the given partition."""
    cdef CanonCtx ctx
    cdef unsigned char *bb
    _ctx_init(&ctx, n, adj)
    try:
        _refine_c(&ctx, order, cstart, clen, &ncells)
        _canon_rec(&ctx, order, cstart, clen, ncells)
        bb = ctx.best_body
        return g6_header(n) + <bytes>bb[:ctx.body_len]
    finally:
        _ctx_free(&ctx)


cdef bytes _canon_default(int n, u64 *adj):
    """cells=None semantics: isolated vertices stripped and appended last."""
    cdef u64 cadj[MAXN]
    cdef int core[MAXN]
    cdef int remap[MAXN]
    cdef int order[MAXN]
    cdef int cstart[MAXN]
    cdef int clen[MAXN]
    cdef int m = 0
    cdef int v, i, ln
    cdef u64 mm, b, rm
    cdef CanonCtx ctx
    cdef unsigned char buf[MAXBODY]
    cdef unsigned char *bp = buf
    cdef u64 zero[MAXN]
    for v in range(n):
        if adj[v] != 0:
            remap[v] = m
            core[m] = v
            m += 1
    if m < n:
        if m == 0:
            for v in range(n):
                zero[v] = 0
            ln = _encode_body(n, zero, buf)
            return g6_header(n) + <bytes>bp[:ln]
        for i in range(m):
            v = core[i]
            mm = adj[v]
            rm = 0
            while mm:
                b = _lowbit(mm)
                mm ^= b
                rm |= (<u64>1) << remap[__builtin_ctzll(b)]
            cadj[i] = rm
        for i in range(m):
            order[i] = i
        cstart[0] = 0
        clen[0] = m
        _ctx_init(&ctx, m, cadj)
        try:
            i = 1
            _refine_c(&ctx, order, cstart, clen, &i)
            _canon_rec(&ctx, order, cstart, clen, i)
            # relabel the core by the winning permutation, pad zeros, encode
            for v in range(n):
                zero[v] = 0
            for i in range(m):
                mm = cadj[i]
                rm = 0
                while mm:
                    b = _lowbit(mm)
                    mm ^= b
                    rm |= (<u64>1) << ctx.best_perm[__builtin_ctzll(b)]
                zero[ctx.best_perm[i]] = rm
            ln = _encode_body(n, zero, buf)
            return g6_header(n) + <bytes>bp[:ln]
        finally:
            _ctx_free(&ctx)
    for i in range(n):
        order[i] = i
    cstart[0] = 0
    clen[0] = n
    return _canon_with_cells(n, adj, order, cstart, clen, 1)


def canonical_form(int n, list adj, cells=None):
    """graph6 line (no newline) of a canonical relabelling of the graph.

    Equal bytes iff isomorphic (respecting the initial partition when given).
    With no initial partition, degree-0 vertices are placed last; the core is
    canonized on its own, which keeps partial search states cheap.
    """
    cdef u64 A[MAXN]
    cdef int order[MAXN]
    cdef int cstart[MAXN]
    cdef int clen[MAXN]
    cdef int ncells = 0
    cdef int pos = 0
    if n == 0:
        return g6_header(0)
    _load(adj, n, A)
    if cells is None:
        return _canon_default(n, A)
    for cell in cells:
        cell = sorted(cell)
        cstart[ncells] = pos
        clen[ncells] = len(cell)
        for v in cell:
            order[pos] = <int>v
            pos += 1
        ncells += 1
    return _canon_with_cells(n, A, order, cstart, clen, ncells)


# ---------------------------------------------------------------------------
# eligibility

cdef void _eligible_raw(int n, int k, int g, u64 *adj, u64 *elig) nogil:
    cdef int deg[MAXN]
    cdef int dist_u[MAXN]
    cdef int u, w, dw
    cdef u64 full = _fullmask(n)
    for u in range(n):
        deg[u] = __builtin_popcountll(adj[u])
        elig[u] = 0
    for u in range(n):
        if deg[u] >= k:
            continue
        _bfs(n, adj, u, full, dist_u)
        for w in range(u + 1, n):
            if deg[w] >= k or ((adj[u] >> w) & 1):
                continue
            dw = dist_u[w]
            if 0 <= dw < g - 1:
                continue
            if _path_exact(n, adj, w, u, g, dist_u):
                continue
            elig[u] |= (<u64>1) << w
            elig[w] |= (<u64>1) << u


def compute_eligible_raw(int n, int k, int g, list adj):
    """Per-vertex masks of partners w such that the edge vw can be added
    without creating a cycle shorter than g or of length exactly g+1."""
    cdef u64 A[MAXN]
    cdef u64 E[MAXN]
    cdef int i
    _load(adj, n, A)
    _eligible_raw(n, k, g, A, E)
    return [E[i] for i in range(n)]


cdef void _update_eligible(int n, int k, int g, u64 *adj, int *deg,
                           u64 *elig_old, int a, int b, u64 *elig) nogil:
    cdef int da[MAXN]
    cdef int db[MAXN]
    cdef int dist_v[MAXN]
    cdef int x, v, w, dva, dvb, dwa, dwb, dw, have_dv, s1, s2
    cdef u64 full = _fullmask(n)
    cdef u64 mx, bb, wm
    for x in range(n):
        elig[x] = elig_old[x]
    elig[a] &= ~((<u64>1) << b)
    elig[b] &= ~((<u64>1) << a)
    for x in range(2):
        v = a if x == 0 else b
        if deg[v] >= k and elig[v]:
            mx = elig[v]
            elig[v] = 0
            while mx:
                bb = _lowbit(mx)
                mx ^= bb
                elig[__builtin_ctzll(bb)] &= ~((<u64>1) << v)
    _bfs(n, adj, a, full, da)
    _bfs(n, adj, b, full, db)
    for v in range(n):
        wm = (elig[v] >> (v + 1)) << (v + 1)
        if not wm:
            continue
        dva = da[v] if da[v] >= 0 else BIGC
        dvb = db[v] if db[v] >= 0 else BIGC
        have_dv = 0
        while wm:
            bb = _lowbit(wm)
            wm ^= bb
            w = __builtin_ctzll(bb)
            dwa = da[w] if da[w] >= 0 else BIGC
            dwb = db[w] if db[w] >= 0 else BIGC
            s1 = dva + dwb
            s2 = dvb + dwa
            if (s1 if s1 < s2 else s2) + 1 > g:
                continue
            if not have_dv:
                _bfs(n, adj, v, full, dist_v)
                have_dv = 1
            dw = dist_v[w]
            if (0 <= dw < g - 1) or _path_exact(n, adj, w, v, g, dist_v):
                elig[v] &= ~((<u64>1) << w)
                elig[w] &= ~((<u64>1) << v)


def update_eligible(int n, int k, int g, list adj, list deg, list elig_old, int a, int b):
    """Filter eligibility after edge ab was added (adj/deg are post-add)."""
    cdef u64 A[MAXN]
    cdef u64 EO[MAXN]
    cdef u64 E[MAXN]
    cdef int D[MAXN]
    cdef int i
    _load(adj, n, A)
    _load(elig_old, n, EO)
    for i in range(n):
        D[i] = <int>deg[i]
    _update_eligible(n, k, g, A, D, EO, a, b, E)
    return [E[i] for i in range(n)]


# ---------------------------------------------------------------------------
# exhaustive generation core

cdef struct GenState:
    int n, k, g, target
    u64 full
    u64 *adjP          # (maxdepth+1) rows of n
    u64 *eligP
    int *degP
    int maxdepth
    int frontier_depth     # -1 when unused
    long nodes
    int dedup_on


cdef int _gen_rec(GenState *st, object store, object collect, object frontier,
                  object warn, int row, int m, int depth, int check_dedup) except -1:
    cdef int n = st.n
    cdef u64 *adj = st.adjP + row * n
    cdef u64 *elig = st.eligP + row * n
    cdef int *deg = st.degP + row * n
    cdef u64 *adj2
    cdef u64 *elig2
    cdef int *deg2
    cdef int v, u, w, a, b, dv, c, best_v, best_c, was_iso, i
    cdef u64 iso, m1b, m2b, noniso, rest, cand, ev, vb, best_cand, bb
    cdef bytes form
    st.nodes += 1
    for v in range(n):
        dv = deg[v]
        if dv < st.k and dv + __builtin_popcountll(elig[v]) < st.k:
            return 0
    if check_dedup and st.dedup_on:
        form = _canon_default(n, adj)
        try:
            if not store.insert_if_new(form):
                return 0
        except DedupCapacityError:
            st.dedup_on = 0
            if warn is not None:
                warn("dedup store is full; continuing without isomorphism pruning")
    if m == st.target:
        if _girth(n, adj) == st.g and not _has_cycle(n, adj, st.g + 1):
            collect(_canon_default(n, adj))
        return 0
    if st.frontier_depth >= 0 and depth >= st.frontier_depth:
        frontier.append(([adj[i] for i in range(n)], [elig[i] for i in range(n)], m))
        return 0
    iso = 0
    for v in range(n):
        if deg[v] == 0:
            iso |= (<u64>1) << v
    m1b = 0
    m2b = 0
    noniso = 0
    if iso:
        m1b = _lowbit(iso)
        rest = iso ^ m1b
        m2b = _lowbit(rest)
        noniso = st.full ^ iso
    best_v = -1
    best_c = BIGC
    best_cand = 0
    for v in range(n):
        if deg[v] >= st.k:
            continue
        ev = elig[v]
        if not ev:
            continue
        if iso:
            vb = (<u64>1) << v
            if not (vb & iso):
                cand = ev & (noniso | m1b)
            elif vb == m1b:
                cand = ev & (noniso | m2b)
            elif vb == m2b:
                cand = ev & m1b
            else:
                cand = 0
        else:
            cand = ev
        if cand:
            c = __builtin_popcountll(cand)
            if c < best_c:
                best_c = c
                best_v = v
                best_cand = cand
    if best_v < 0:
        return 0
    u = best_v
    w = __builtin_ctzll(_lowbit(best_cand))
    if u < w:
        a = u
        b = w
    else:
        a = w
        b = u
    was_iso = deg[u] == 0 or deg[w] == 0
    adj2 = st.adjP + (row + 1) * n
    deg2 = st.degP + (row + 1) * n
    elig2 = st.eligP + (row + 1) * n
    for i in range(n):
        adj2[i] = adj[i]
        deg2[i] = deg[i]
    adj2[a] |= (<u64>1) << b
    adj2[b] |= (<u64>1) << a
    deg2[a] += 1
    deg2[b] += 1
    _update_eligible(n, st.k, st.g, adj2, deg2, elig, a, b, elig2)
    _gen_rec(st, store, collect, frontier, warn, row + 1, m + 1, depth + 1, not was_iso)
    # skip branch: same graph, the chosen pair ruled out
    adj2 = st.adjP + (row + 1) * n
    deg2 = st.degP + (row + 1) * n
    elig2 = st.eligP + (row + 1) * n
    for i in range(n):
        adj2[i] = adj[i]
        deg2[i] = deg[i]
        elig2[i] = elig[i]
    elig2[a] &= ~((<u64>1) << b)
    elig2[b] &= ~((<u64>1) << a)
    _gen_rec(st, store, collect, frontier, warn, row + 1, m, depth + 1, 0)
    return 0


def generate_core(int n, int k, int g, list adj0, list elig0, int m0,
                  store, collect, frontier_depth=None, warn=None):
    """Recursive branch-and-prune search over one-pair decisions.

    Same contract as the pure kernel: emits canonical forms of completed
    valid graphs via collect, returns (frontier, stats)."""
    cdef GenState st
    cdef int i, maxdepth
    cdef list frontier = [] if frontier_depth is not None else None
    st.n = n
    st.k = k
    st.g = g
    st.target = n * k // 2
    st.full = _fullmask(n)
    st.nodes = 0
    st.dedup_on = 1 if store is not None else 0
    st.frontier_depth = <int>frontier_depth if frontier_depth is not None else -1
    maxdepth = st.target - m0 + n * (n - 1) // 2 + 4
    st.maxdepth = maxdepth
    st.adjP = <u64 *>malloc((maxdepth + 2) * n * sizeof(u64))
    st.eligP = <u64 *>malloc((maxdepth + 2) * n * sizeof(u64))
    st.degP = <int *>malloc((maxdepth + 2) * n * sizeof(int))
    if st.adjP == NULL or st.eligP == NULL or st.degP == NULL:
        if st.adjP != NULL:
            free(st.adjP)
        if st.eligP != NULL:
            free(st.eligP)
        if st.degP != NULL:
            free(st.degP)
        raise MemoryError()
    try:
        for i in range(n):
            st.adjP[i] = <u64>adj0[i]
            st.eligP[i] = <u64>elig0[i]
            st.degP[i] = __builtin_popcountll(st.adjP[i])
        _gen_rec(&st, store, collect, frontier, warn, 0, m0, 0, 0)
    finally:
        free(st.adjP)
        free(st.eligP)
        free(st.degP)
    return frontier, {"nodes": st.nodes}


# ---------------------------------------------------------------------------
# dumb exhaustive enumeration of k-regular graphs (test oracle)

cdef struct RegState:
    int n, k, target, np
    int gfloor            # 0 when unused
    int req_girth         # -1 when unused
    int forbid_len        # -1 when unused
    int *pu
    int *pv
    int *rem              # (np+1) rows of n
    long terminals


cdef int _reg_rec(RegState *st, object collect, u64 *adj, int *deg, int idx, int m) except -1:
    cdef int n = st.n
    cdef int u, v, v2, d, ok, i
    cdef int dist[MAXN]
    cdef int *ri
    if m == st.target:
        st.terminals += 1
        if st.req_girth >= 0 and _girth(n, adj) != st.req_girth:
            return 0
        if st.forbid_len >= 0 and _has_cycle(n, adj, st.forbid_len):
            return 0
        collect([adj[i] for i in range(n)])
        return 0
    if idx == st.np or st.np - idx < st.target - m:
        return 0
    ri = st.rem + idx * n
    for v2 in range(n):
        if deg[v2] + ri[v2] < st.k:
            return 0
    u = st.pu[idx]
    v = st.pv[idx]
    if deg[u] < st.k and deg[v] < st.k:
        ok = 1
        if st.gfloor > 3:
            _bfs(n, adj, u, _fullmask(n), dist)
            d = dist[v]
            if 0 <= d < st.gfloor - 1:
                ok = 0
        if ok:
            adj[u] |= (<u64>1) << v
            adj[v] |= (<u64>1) << u
            deg[u] += 1
            deg[v] += 1
            _reg_rec(st, collect, adj, deg, idx + 1, m + 1)
            adj[u] &= ~((<u64>1) << v)
            adj[v] &= ~((<u64>1) << u)
            deg[u] -= 1
            deg[v] -= 1
    _reg_rec(st, collect, adj, deg, idx + 1, m)
    return 0


def all_regular_core(int n, int k, collect, girth_floor=None,
                     require_girth=None, forbid_cycle_len=None):
    """Enumerate every labelled graph with all degrees exactly k; same
    contract and pruning as the pure kernel.  Returns the terminal count."""
    cdef RegState st
    cdef u64 adj[MAXN]
    cdef int deg[MAXN]
    cdef int u, v, idx, i
    st.n = n
    st.k = k
    st.target = n * k // 2
    st.np = n * (n - 1) // 2
    st.gfloor = <int>girth_floor if girth_floor is not None else 0
    st.req_girth = <int>require_girth if require_girth is not None else -1
    st.forbid_len = <int>forbid_cycle_len if forbid_cycle_len is not None else -1
    st.terminals = 0
    st.pu = <int *>malloc(st.np * sizeof(int))
    st.pv = <int *>malloc(st.np * sizeof(int))
    st.rem = <int *>malloc((st.np + 1) * n * sizeof(int))
    if st.pu == NULL or st.pv == NULL or st.rem == NULL:
        if st.pu != NULL:
            free(st.pu)
        if st.pv != NULL:
            free(st.pv)
        if st.rem != NULL:
            free(st.rem)
        raise MemoryError()
    try:
        idx = 0
        for u in range(n):
            for v in range(u + 1, n):
                st.pu[idx] = u
                st.pv[idx] = v
                idx += 1
        for i in range(n):
            st.rem[st.np * n + i] = 0
        for idx in range(st.np - 1, -1, -1):
            for i in range(n):
                st.rem[idx * n + i] = st.rem[(idx + 1) * n + i]
            st.rem[idx * n + st.pu[idx]] += 1
            st.rem[idx * n + st.pv[idx]] += 1
        for i in range(n):
            adj[i] = 0
            deg[i] = 0
        _reg_rec(&st, collect, adj, deg, 0, 0)
    finally:
        free(st.pu)
        free(st.pv)
        free(st.rem)
    return st.terminals
