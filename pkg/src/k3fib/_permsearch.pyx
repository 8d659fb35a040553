# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-first search; same contract as permsearch.search_py."""

cdef enum:
    MAXD = 16
    MAXLEVEL = 32


cdef int _cycles(const int* p, int d):
    cdef int seen[MAXD]
    cdef int i, j, count = 0
    for i in range(d):
        seen[i] = 0
    for i in range(d):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
    return count


cdef void _cycle_type(const int* p, int d, int* out):
    # descending cycle lengths, zero padded
    cdef int seen[MAXD]
    cdef int i, j, n, k, count = 0
    for i in range(d):
        seen[i] = 0
        out[i] = 0
    for i in range(d):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
                n += 1
            k = count
            while k > 0 and out[k - 1] < n:
                out[k] = out[k - 1]
                k -= 1
            out[k] = n
            count += 1


cdef int _find(int* parent, int x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int _merge(int* parent, const int* p, int d):
    # unions the cycles of p into parent; returns the number of classes
    cdef int i, a, b, count = 0
    for i in range(d):
        a = _find(parent, i)
        b = _find(parent, p[i])
        if a != b:
            parent[a] = b
    for i in range(d):
        if _find(parent, i) == i:
            count += 1
    return count


cdef class _Search:
    cdef int d, depth, r, has_last
    cdef int last_type[MAXD]
    cdef int chosen[MAXLEVEL]
    cdef int sizes[MAXLEVEL]
    cdef const unsigned char* blocks[MAXLEVEL]
    cdef list keep

    cdef bint finish(self, const int* prod, int* parent, int comps):
        cdef int inv[MAXD]
        cdef int ct[MAXD]
        cdef int i, ell
        if self.has_last:
            for i in range(self.d):
                inv[prod[i]] = i
            _cycle_type(inv, self.d, ct)
            for i in range(self.d):
                if ct[i] != self.last_type[i]:
                    return False
            return _merge(parent, inv, self.d) == 1
        ell = self.d - _cycles(prod, self.d)
        return self.r >= ell + 2 * (comps - 1) and (self.r - ell) % 2 == 0

    cdef bint rec(self, int level, const int* prod, const int* parent, int comps):
        cdef int nxt[MAXD]
        cdef int par[MAXD]
        cdef int perm[MAXD]
        cdef int i, idx, c
        cdef const unsigned char* block
        if level == self.depth:
            for i in range(self.d):
                par[i] = parent[i]
            return self.finish(prod, par, comps)
        block = self.blocks[level]
        for idx in range(self.sizes[level]):
            for i in range(self.d):
                perm[i] = block[idx * self.d + i]
            for i in range(self.d):
                nxt[i] = perm[prod[i]]
            for i in range(self.d):
                par[i] = parent[i]
            c = _merge(par, perm, self.d)
            self.chosen[level] = idx
            if self.rec(level + 1, nxt, par, c):
                return True
        return False


def search(int d, bytes first, list levels, int r, last_type):
    """Compiled counterpart of ``search_py``."""
    cdef _Search s
    cdef int prod[MAXD]
    cdef int parent[MAXD]
    cdef int i, comps
    if d > MAXD or len(levels) > MAXLEVEL:
        raise ValueError("search instance exceeds compiled limits")
    s = _Search()
    s.d = d
    s.depth = len(levels)
    s.r = r
    s.has_last = last_type is not None
    s.keep = list(levels)
    for i in range(d):
        s.last_type[i] = 0
    if last_type is not None:
        for i, x in enumerate(last_type):
            s.last_type[i] = x
    for i in range(s.depth):
        s.blocks[i] = <const unsigned char*> (<bytes> s.keep[i])
        s.sizes[i] = len(s.keep[i]) // d
    for i in range(d):
        prod[i] = first[i]
        parent[i] = i
    comps = _merge(parent, prod, d)
    if s.rec(0, prod, parent, comps):
        return [s.chosen[i] for i in range(s.depth)]
    return None
