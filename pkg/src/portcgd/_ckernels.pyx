# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels`` (same signatures)."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef class _Tab:
    cdef int P, NP, M, s01, ident
    cdef int *comp
    cdef int *inv
    cdef int *img
    cdef int *maskimg

    def __cinit__(self, T):
        cdef Py_ssize_t i
        self.P = T.size
        self.NP = T.nperm
        self.M = 1 << T.size
        self.s01 = T.s01
        self.ident = T.ident
        self.comp = <int *> malloc(len(T.comp) * sizeof(int))
        self.inv = <int *> malloc(len(T.inv) * sizeof(int))
        self.img = <int *> malloc(len(T.img) * sizeof(int))
        self.maskimg = <int *> malloc(len(T.maskimg) * sizeof(int))
        for i in range(len(T.comp)):
            self.comp[i] = T.comp[i]
        for i in range(len(T.inv)):
            self.inv[i] = T.inv[i]
        for i in range(len(T.img)):
            self.img[i] = T.img[i]
        for i in range(len(T.maskimg)):
            self.maskimg[i] = T.maskimg[i]

    def __dealloc__(self):
        free(self.comp)
        free(self.inv)
        free(self.img)
        free(self.maskimg)


cdef dict _TABS = {}


cdef _Tab _tab(T):
    t = _TABS.get(T.size)
    if t is None:
        t = _Tab(T)
        _TABS[T.size] = t
    return <_Tab> t


cdef int *_carr(list xs) except NULL:
    cdef Py_ssize_t i, n = len(xs)
    cdef int *out = <int *> malloc((n + 1) * sizeof(int))
    for i in range(n):
        out[i] = xs[i]
    return out


def bfs_code(list nbr, list nq, list glu, list lab, int P, int nv, int root, int rootrot,
             bint rotmode, T, best):
    cdef _Tab tb = _tab(T)
    cdef int NP = tb.NP
    cdef int *cn = _carr(nbr)
    cdef int *cq = _carr(nq)
    cdef int *cg = _carr(glu)
    cdef int *pos = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *rho = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *order = <int *> malloc((nv + 1) * sizeof(int))
    cdef int *code = <int *> malloc((nv * (1 + 4 * P) + 1) * sizeof(int))
    cdef int *cb = NULL
    cdef int nbest = 0
    cdef int i, k = 0, norder = 1, ncode = 0, v, rv, rvinv, base, x, p, w, g, rw, ng, start
    cdef bint deciding = best is not None
    cdef bint worse = False
    if deciding:
        nbest = len(best)
        cb = _carr(best)
    try:
        for i in range(nv):
            pos[i] = -1
            rho[i] = tb.ident
        order[0] = root
        pos[root] = 0
        rho[root] = rootrot
        while k < norder:
            v = order[k]
            k += 1
            rv = rho[v]
            rvinv = tb.inv[rv]
            base = v * P
            start = ncode
            code[ncode] = lab[v]
            ncode += 1
            for x in range(P):
                p = tb.img[rvinv * P + x]
                w = cn[base + p]
                if w == -2:
                    code[ncode] = 0; code[ncode + 1] = 0; code[ncode + 2] = 0; code[ncode + 3] = 0
                elif w == -1:
                    code[ncode] = 1; code[ncode + 1] = 0; code[ncode + 2] = 0; code[ncode + 3] = 0
                else:
                    g = cg[base + p]
                    if pos[w] < 0:
                        pos[w] = norder
                        order[norder] = w
                        norder += 1
                        if rotmode:
                            rho[w] = tb.comp[tb.comp[tb.s01 * NP + rv] * NP + tb.inv[g]]
                    rw = rho[w]
                    ng = tb.comp[tb.comp[rw * NP + g] * NP + rvinv]
                    code[ncode] = 2
                    code[ncode + 1] = pos[w]
                    code[ncode + 2] = tb.img[rw * P + cq[base + p]]
                    code[ncode + 3] = ng
                ncode += 4
            if deciding:
                for i in range(start, ncode):
                    if i >= nbest:
                        deciding = False
                        break
                    if code[i] < cb[i]:
                        deciding = False
                        break
                    if code[i] > cb[i]:
                        worse = True
                        break
                if worse:
                    return None
        return ([code[i] for i in range(ncode)], [order[i] for i in range(norder)],
                [rho[i] for i in range(nv)])
    finally:
        free(cn); free(cq); free(cg); free(pos); free(rho); free(order); free(code)
        if cb != NULL:
            free(cb)


cdef int _find(int *parent, int a):
    cdef int root = a, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


def hinge_classes(list nbr, list nq, list glu, list pmask, int P, int nv, T):
    cdef _Tab tb = _tab(T)
    cdef int M = 1 << P
    cdef int *cn = _carr(nbr)
    cdef int *cg = _carr(glu)
    cdef int *pm = _carr(pmask)
    cdef int *parent = <int *> malloc((nv * M + 1) * sizeof(int))
    cdef int v, sub, p, w, g, fr, a, b, s
    try:
        for s in range(nv * M):
            parent[s] = -1
        for v in range(nv):
            sub = pm[v]
            while sub:
                parent[v * M + sub] = v * M + sub
                sub = (sub - 1) & pm[v]
        for v in range(nv):
            for p in range(P):
                w = cn[v * P + p]
                if w < 0:
                    continue
                g = cg[v * P + p]
                fr = pm[v] & ~(1 << p)
                sub = fr
                while sub:
                    a = _find(parent, v * M + sub)
                    b = _find(parent, w * M + tb.maskimg[g * M + sub])
                    if a != b:
                        if a < b:
                            parent[b] = a
                        else:
                            parent[a] = b
                    sub = (sub - 1) & fr
        for s in range(nv * M):
            if parent[s] >= 0:
                parent[s] = _find(parent, s)
        return [parent[s] for s in range(nv * M)]
    finally:
        free(cn); free(cg); free(pm); free(parent)


cdef struct _Search:
    int *cn
    int *cg
    int *maskimg
    char *onpath
    int *path
    int *best
    int best_len
    int cap
    int P
    int M


cdef bint _dfs(_Search *S, int v, int mask, int depth):
    cdef int p, w, nm, st, i
    if depth > S.best_len:
        S.best_len = depth
        for i in range(depth + 1):
            S.best[i] = S.path[i]
        if depth >= S.cap:
            return True
    if depth >= S.cap:
        return False
    for p in range(S.P):
        if (mask >> p) & 1:
            continue
        w = S.cn[v * S.P + p]
        if w < 0:
            continue
        nm = S.maskimg[S.cg[v * S.P + p] * S.M + mask]
        st = w * S.M + nm
        if S.onpath[st]:
            continue
        S.onpath[st] = 1
        S.path[depth + 1] = st
        if _dfs(S, w, nm, depth + 1):
            return True
        S.onpath[st] = 0
    return False


def longest_hinge(list nbr, list nq, list glu, list pmask, int P, int nv, T, int limit):
    cdef _Tab tb = _tab(T)
    cdef _Search S
    cdef int v, sub, st, pmv
    cdef int *pm = _carr(pmask)
    S.P = P
    S.M = 1 << P
    S.cn = _carr(nbr)
    S.cg = _carr(glu)
    S.maskimg = tb.maskimg
    S.onpath = <char *> malloc(nv * S.M + 1)
    memset(S.onpath, 0, nv * S.M + 1)
    S.path = <int *> malloc((limit + 3) * sizeof(int))
    S.best = <int *> malloc((limit + 3) * sizeof(int))
    S.best_len = 0
    S.cap = limit + 1
    try:
        for v in range(nv):
            pmv = pm[v]
            sub = pmv
            while sub:
                if sub != pmv:
                    st = v * S.M + sub
                    S.onpath[st] = 1
                    S.path[0] = st
                    if _dfs(&S, v, sub, 0):
                        break
                    S.onpath[st] = 0
                sub = (sub - 1) & pmv
            if S.best_len >= S.cap:
                break
        if S.best_len == 0:
            return 0, []
        return S.best_len, [S.best[i] for i in range(S.best_len + 1)]
    finally:
        free(pm); free(S.cn); free(S.cg); free(S.onpath); free(S.path); free(S.best)
