# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, malloc, free
from libc.string cimport memset, memcpy

NAME = "cython"


cdef class KernelGraph:
    cdef public int n
    cdef int *off
    cdef int *tgt
    cdef unsigned char *mat
    cdef int *order
    cdef int *deg

    def __cinit__(self, int n, adjacency):
        cdef int v, k, total = 0
        self.n = n
        for a in adjacency:
            total += len(a)
        self.off = <int *> malloc((n + 1) * sizeof(int))
        self.tgt = <int *> malloc((total + 1) * sizeof(int))
        self.mat = <unsigned char *> malloc(n * n * sizeof(unsigned char))
        self.order = <int *> malloc(n * sizeof(int))
        self.deg = <int *> malloc(n * sizeof(int))
        if not (self.off and self.tgt and self.mat and self.order and self.deg):
            raise MemoryError()
        memset(self.mat, 0, n * n)
        k = 0
        for v in range(n):
            self.off[v] = k
            for w in adjacency[v]:
                self.tgt[k] = w
                self.mat[v * n + <int> w] = 1
                k += 1
            self.deg[v] = k - self.off[v]
        self.off[n] = k
        self._bfs()

    cdef void _bfs(self):
        cdef int n = self.n, head = 0, tail = 0, root, v, j, w
        cdef unsigned char *seen = <unsigned char *> malloc(n)
        memset(seen, 0, n)
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = 1
            self.order[tail] = root
            tail += 1
            while head < tail:
                v = self.order[head]
                head += 1
                for j in range(self.off[v], self.off[v + 1]):
                    w = self.tgt[j]
                    if not seen[w]:
                        seen[w] = 1
                        self.order[tail] = w
                        tail += 1
        free(seen)

    def __dealloc__(self):
        free(self.off)
        free(self.tgt)
        free(self.mat)
        free(self.order)
        free(self.deg)


# -- refinement ------------------------------------------------------------

cdef int _cmp_sig(int a, int b, int *c, int *off, int *buf) nogil:
    cdef int i, la, lb, m
    if c[a] != c[b]:
        return -1 if c[a] < c[b] else 1
    la = off[a + 1] - off[a]
    lb = off[b + 1] - off[b]
    m = la if la < lb else lb
    for i in range(m):
        if buf[off[a] + i] != buf[off[b] + i]:
            return -1 if buf[off[a] + i] < buf[off[b] + i] else 1
    if la != lb:
        return -1 if la < lb else 1
    return 0


cdef void _merge_sort(int *idx, int *tmp, int lo, int hi,
                      int *c, int *off, int *buf) nogil:
    cdef int mid, i, j, k
    if hi - lo < 2:
        return
    mid = (lo + hi) // 2
    _merge_sort(idx, tmp, lo, mid, c, off, buf)
    _merge_sort(idx, tmp, mid, hi, c, off, buf)
    i = lo
    j = mid
    k = lo
    while i < mid and j < hi:
        if _cmp_sig(idx[j], idx[i], c, off, buf) < 0:
            tmp[k] = idx[j]
            j += 1
        else:
            tmp[k] = idx[i]
            i += 1
        k += 1
    while i < mid:
        tmp[k] = idx[i]
        i += 1
        k += 1
    while j < hi:
        tmp[k] = idx[j]
        j += 1
        k += 1
    memcpy(idx + lo, tmp + lo, (hi - lo) * sizeof(int))


cdef int _rank(int n, int *c, int *off, int *buf, int *idx, int *tmp, int *out) nogil:
    """Rank vertices by signature into ``out``; returns the number of cells."""
    cdef int v, r = 0
    for v in range(n):
        idx[v] = v
    _merge_sort(idx, tmp, 0, n, c, off, buf)
    out[idx[0]] = 0
    for v in range(1, n):
        if _cmp_sig(idx[v - 1], idx[v], c, off, buf) != 0:
            r += 1
        out[idx[v]] = r
    return r + 1


def refine(KernelGraph kg, colors):
    cdef int n = kg.n, v, j, k, x, ncells, cells2
    cdef int *c = <int *> malloc(n * sizeof(int))
    cdef int *nc = <int *> malloc(n * sizeof(int))
    cdef int *buf = <int *> malloc((kg.off[n] + 1) * sizeof(int))
    cdef int *idx = <int *> malloc(n * sizeof(int))
    cdef int *tmp = <int *> malloc(n * sizeof(int))
    cdef int *zero = <int *> malloc((n + 1) * sizeof(int))
    cdef int *swap
    try:
        for v in range(n):
            nc[v] = colors[v]
            zero[v] = 0
        zero[n] = 0
        # normalize input colors to ranks; empty signature tails give pure color order
        ncells = _rank(n, nc, zero, buf, idx, tmp, c)
        while ncells < n:
            for v in range(n):
                k = kg.off[v]
                for j in range(kg.off[v], kg.off[v + 1]):
                    x = c[kg.tgt[j]]
                    # insertion sort of neighbor colors
                    k = j
                    while k > kg.off[v] and buf[k - 1] > x:
                        buf[k] = buf[k - 1]
                        k -= 1
                    buf[k] = x
            cells2 = _rank(n, c, kg.off, buf, idx, tmp, nc)
            if cells2 == ncells:
                break
            swap = c
            c = nc
            nc = swap
            ncells = cells2
        return [c[v] for v in range(n)]
    finally:
        free(c)
        free(nc)
        free(buf)
        free(idx)
        free(tmp)
        free(zero)


def is_automorphism(KernelGraph kg, perm):
    cdef int n = kg.n, v, j
    cdef int *p = <int *> malloc(n * sizeof(int))
    try:
        for v in range(n):
            p[v] = perm[v]
        for v in range(n):
            if kg.deg[v] != kg.deg[p[v]]:
                return False
            for j in range(kg.off[v], kg.off[v + 1]):
                if not kg.mat[p[v] * n + p[kg.tgt[j]]]:
                    return False
        return True
    finally:
        free(p)


# -- exhaustive automorphism enumeration ---------------------------------------

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef int _extend(int n, int W, int depth, uint64_t *doms, uint64_t *nbr,
                 unsigned char *mat, int *img, unsigned char *mapped,
                 list found, long long limit) except -1:
    cdef uint64_t *cur = doms + <size_t> depth * n * W
    cdef uint64_t *nxt = cur + <size_t> n * W
    cdef uint64_t bits, m, any_, lowmask
    cdef int u, v = -1, best = n + 1, cnt, i, j, w, ok
    if depth == n:
        found.append(tuple([img[u] for u in range(n)]))
        if len(found) > limit:
            raise OverflowError(f"more than {limit} automorphisms")
        return 0
    for u in range(n):
        if mapped[u]:
            continue
        cnt = 0
        for i in range(W):
            cnt += __builtin_popcountll(cur[u * W + i])
        if cnt < best:
            best = cnt
            v = u
    mapped[v] = 1
    for i in range(W):
        bits = cur[v * W + i]
        while bits:
            w = i * 64 + __builtin_ctzll(bits)
            bits &= bits - 1
            ok = 1
            for u in range(n):
                if mapped[u]:
                    continue
                any_ = 0
                for j in range(W):
                    if mat[u * n + v]:
                        m = cur[u * W + j] & nbr[w * W + j]
                    else:
                        m = cur[u * W + j] & ~nbr[w * W + j]
                    if j == (w >> 6):
                        lowmask = (<uint64_t> 1) << (w & 63)
                        m &= ~lowmask
                    nxt[u * W + j] = m
                    any_ |= m
                if not any_:
                    ok = 0
                    break
            if ok:
                img[v] = w
                _extend(n, W, depth + 1, doms, nbr, mat, img, mapped, found, limit)
    mapped[v] = 0
    img[v] = -1
    return 0


def enumerate_automorphisms(KernelGraph kg, colors, long long limit):
    cdef int n = kg.n, W = (kg.n + 63) // 64, v, w, j, i
    cdef uint64_t *doms = <uint64_t *> calloc(<size_t> (n + 1) * n * W + 1, sizeof(uint64_t))
    cdef uint64_t *nbr = <uint64_t *> calloc(<size_t> n * W + 1, sizeof(uint64_t))
    cdef int *img = <int *> malloc((n + 1) * sizeof(int))
    cdef unsigned char *mapped = <unsigned char *> calloc(n + 1, 1)
    cdef int *col = <int *> malloc((n + 1) * sizeof(int))
    cdef unsigned char *mat = kg.mat
    cdef int *deg = kg.deg
    cdef int empty
    found = []
    try:
        for v in range(n):
            col[v] = colors[v]
            img[v] = -1
        for v in range(n):
            empty = 1
            for w in range(n):
                if mat[v * n + w]:
                    nbr[v * W + (w >> 6)] |= (<uint64_t> 1) << (w & 63)
                if col[w] == col[v] and deg[w] == deg[v]:
                    doms[v * W + (w >> 6)] |= (<uint64_t> 1) << (w & 63)
                    empty = 0
            if empty:
                return []
        if n:
            _extend(n, W, 0, doms, nbr, mat, img, mapped, found, limit)
        else:
            found.append(())
        found.sort()
        return found
    finally:
        free(doms)
        free(nbr)
        free(img)
        free(mapped)
        free(col)


# -- oracle coloring scan ----------------------------------------------------------

def first_distinguishing(int n, perms, int t, max_colorings):
    cdef int np_ = len(perms), i, j, v, s, hit
    cdef long long tested = 0
    cdef long long cap = min(max_colorings, 2**62)
    cdef int *tab = <int *> malloc((np_ * n + 1) * sizeof(int))
    cdef int *sup = <int *> malloc((np_ * n + 1) * sizeof(int))
    cdef int *slen = <int *> malloc((np_ + 1) * sizeof(int))
    cdef int *col = <int *> malloc(n * sizeof(int))
    try:
        for i in range(np_):
            p = perms[i]
            s = 0
            for v in range(n):
                tab[i * n + v] = p[v]
                if p[v] != v:
                    sup[i * n + s] = v
                    s += 1
            slen[i] = s
        for v in range(n):
            col[v] = 1
        while True:
            tested += 1
            if tested > cap:
                raise OverflowError(f"scan tested more than {max_colorings} colorings")
            hit = 0
            for i in range(np_):
                hit = 1
                for j in range(slen[i]):
                    v = sup[i * n + j]
                    if col[tab[i * n + v]] != col[v]:
                        hit = 0
                        break
                if hit:
                    break
            if not hit:
                return tuple([col[v] for v in range(n)]), tested
            # odometer, last vertex fastest
            v = n - 1
            while v >= 0 and col[v] == t:
                col[v] = 1
                v -= 1
            if v < 0:
                return None, tested
            col[v] += 1
    finally:
        free(tab)
        free(sup)
        free(slen)
        free(col)
