# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled minimum-weight perfect matching kernel.

Line-for-line twin of ``_blossom_py``; see that module for the algorithm
description.  The two kernels must stay in lockstep: same scan order, same
tie handling, identical matchings for identical input.  Hot state lives in
typed memoryviews; blossom child lists, which are touched only on shrink and
expand events, stay Python lists.
"""

import numpy as np


def solve_min_perfect(W):
    """mate list for the minimum-weight perfect matching of dense matrix W."""
    cdef int n = W.shape[0]
    if n == 0:
        return []
    Wa = np.ascontiguousarray(W, dtype=np.float64)
    wmax = float(Wa.max())
    w = np.full((n, n), wmax, dtype=np.float64) - Wa
    cdef _Blossom solver = _Blossom(n, w)
    solver.run()
    cdef int i
    return [solver.mate[i] for i in range(n)]


cdef class _Blossom:
    cdef int n
    cdef double[:, ::1] w
    cdef int[::1] mate, label, le_far, le_near, inblossom
    cdef int[::1] blossomparent, blossombase, be_far, be_near
    cdef double[::1] dualvar
    cdef unsigned char[::1] allowed
    cdef int[::1] scratch
    cdef list blossomchilds, blossomedges, unused, queue

    def __init__(self, int n, w):
        cdef int i
        self.n = n
        self.w = w
        cdef double maxweight = float(np.asarray(w).max())
        self.mate = np.full(n, -1, dtype=np.int32)
        self.label = np.zeros(2 * n, dtype=np.int32)
        self.le_far = np.full(2 * n, -1, dtype=np.int32)
        self.le_near = np.full(2 * n, -1, dtype=np.int32)
        self.inblossom = np.arange(n, dtype=np.int32)
        self.blossomparent = np.full(2 * n, -1, dtype=np.int32)
        base = np.full(2 * n, -1, dtype=np.int32)
        base[:n] = np.arange(n, dtype=np.int32)
        self.blossombase = base
        self.blossomchilds = [None] * (2 * n)
        self.blossomedges = [None] * (2 * n)
        self.be_far = np.full(2 * n, -1, dtype=np.int32)
        self.be_near = np.full(2 * n, -1, dtype=np.int32)
        dv = np.zeros(2 * n, dtype=np.float64)
        dv[:n] = maxweight / 2.0
        self.dualvar = dv
        self.allowed = np.zeros(n * n, dtype=np.uint8)
        self.scratch = np.zeros(n, dtype=np.int32)
        self.queue = []
        self.unused = list(range(2 * n - 1, n - 1, -1))

    cdef inline double slack(self, int i, int j):
        return self.dualvar[i] + self.dualvar[j] - self.w[i, j]

    cdef inline void set_allowed(self, int i, int j):
        self.allowed[i * self.n + j] = 1
        self.allowed[j * self.n + i] = 1

    cdef int leaves_into(self, int b, int pos):
        # DFS in child order, matching the pure-Python generator exactly.
        cdef int c
        if b < self.n:
            self.scratch[pos] = b
            return pos + 1
        for c in self.blossomchilds[b]:
            pos = self.leaves_into(c, pos)
        return pos

    cdef void assign_label(self, int v, int t, int far):
        cdef int b = self.inblossom[v]
        cdef int cnt, k, base
        self.label[v] = t
        self.label[b] = t
        self.le_far[v] = far
        self.le_far[b] = far
        if far != -1:
            self.le_near[v] = v
            self.le_near[b] = v
        else:
            self.le_near[v] = -1
            self.le_near[b] = -1
        self.be_far[v] = -1
        self.be_far[b] = -1
        if t == 1:
            cnt = self.leaves_into(b, 0)
            for k in range(cnt):
                self.queue.append(self.scratch[k])
        else:
            base = self.blossombase[b]
            self.assign_label(self.mate[base], 1, base)

    cdef int scan_blossom(self, int v, int u):
        cdef list path = []
        cdef int base = -1
        cdef int b, bt
        while v != -1 or u != -1:
            if v != -1:
                b = self.inblossom[v]
                if self.label[b] & 4:
                    base = self.blossombase[b]
                    break
                path.append(b)
                self.label[b] = 5
                if self.le_far[b] == -1:
                    v = -1
                else:
                    v = self.le_far[b]
                    bt = self.inblossom[v]
                    v = self.le_far[bt]
            if u != -1:
                v, u = u, v
        for b in path:
            self.label[b] = 1
        return base

    cdef void add_blossom(self, int base, int v, int u):
        cdef int bb = self.inblossom[base]
        cdef int bv = self.inblossom[v]
        cdef int bu = self.inblossom[u]
        cdef int b = self.unused.pop()
        cdef int leaf, cnt, k, c
        self.blossombase[b] = base
        self.blossomparent[b] = -1
        self.blossomparent[bb] = b
        path = []
        edgs = []
        while bv != bb:
            self.blossomparent[bv] = b
            path.append(bv)
            edgs.append((self.le_far[bv], self.le_near[bv]))
            bv = self.inblossom[self.le_far[bv]]
        path.append(bb)
        path.reverse()
        edgs.reverse()
        edgs.append((v, u))
        while bu != bb:
            self.blossomparent[bu] = b
            path.append(bu)
            edgs.append((self.le_near[bu], self.le_far[bu]))
            bu = self.inblossom[self.le_far[bu]]
        self.blossomchilds[b] = path
        self.blossomedges[b] = edgs
        self.label[b] = 1
        self.le_far[b] = self.le_far[bb]
        self.le_near[b] = self.le_near[bb]
        self.dualvar[b] = 0.0
        cnt = self.leaves_into(b, 0)
        for k in range(cnt):
            leaf = self.scratch[k]
            if self.label[self.inblossom[leaf]] == 2:
                self.queue.append(leaf)
            self.inblossom[leaf] = b
        for c in path:
            self.be_far[c] = -1
        self.rescan_best_edge(b, cnt)

    cdef void rescan_best_edge(self, int b, int cnt):
        # self.scratch[:cnt] still holds the leaves of b.
        cdef int best_f = -1, best_n = -1
        cdef double best_s = 0.0, s
        cdef int k, x, y, by
        for k in range(cnt):
            x = self.scratch[k]
            for y in range(self.n):
                by = self.inblossom[y]
                if by == b or self.label[by] != 1:
                    continue
                s = self.slack(x, y)
                if best_f == -1 or s < best_s:
                    best_f = x
                    best_n = y
                    best_s = s
        self.be_far[b] = best_f
        self.be_near[b] = best_n

    cdef void expand_blossom(self, int b, bint endstage):
        cdef list childs = self.blossomchilds[b]
        cdef list edgs = self.blossomedges[b]
        cdef int L = len(childs)
        cdef int s, k, cnt, j, jstep, idx
        cdef int pfar, pnear, mfar, mnear, partner, bv, reached, a, c
        for s in childs:
            self.blossomparent[s] = -1
            if s < self.n:
                self.inblossom[s] = s
            elif endstage and self.dualvar[s] == 0.0:
                self.expand_blossom(s, endstage)
            else:
                cnt = self.leaves_into(s, 0)
                for k in range(cnt):
                    self.inblossom[self.scratch[k]] = s
        if (not endstage) and self.label[b] == 2:
            entrychild = self.inblossom[self.le_near[b]]
            j = childs.index(entrychild)
            if j & 1:
                j -= L
                jstep = 1
            else:
                jstep = -1
            pfar = self.le_far[b]
            pnear = self.le_near[b]
            while j != 0:
                if jstep == 1:
                    idx = j if j >= 0 else j + L
                    mfar, mnear = edgs[idx]
                    partner = mnear
                else:
                    idx = j - 1 if j - 1 >= 0 else j - 1 + L
                    mfar, mnear = edgs[idx]
                    partner = mfar
                self.label[pnear] = 0
                self.label[partner] = 0
                self.assign_label(pnear, 2, pfar)
                self.set_allowed(mfar, mnear)
                j += jstep
                if jstep == 1:
                    idx = j if j >= 0 else j + L
                    pfar, pnear = edgs[idx]
                else:
                    idx = j - 1 if j - 1 >= 0 else j - 1 + L
                    a, c = edgs[idx]
                    pfar = c
                    pnear = a
                self.set_allowed(pfar, pnear)
                j += jstep
            bv = childs[0]
            self.label[pnear] = 2
            self.label[bv] = 2
            self.le_far[pnear] = pfar
            self.le_far[bv] = pfar
            self.le_near[pnear] = pnear
            self.le_near[bv] = pnear
            self.be_far[bv] = -1
            j = jstep
            idx = j if j >= 0 else j + L
            while childs[idx] != entrychild:
                bv = childs[idx]
                if self.label[bv] == 1:
                    j += jstep
                    idx = j if j >= 0 else j + L
                    continue
                reached = -1
                cnt = self.leaves_into(bv, 0)
                for k in range(cnt):
                    if self.label[self.scratch[k]] != 0:
                        reached = self.scratch[k]
                        break
                if reached != -1:
                    self.label[reached] = 0
                    self.label[self.mate[self.blossombase[bv]]] = 0
                    self.assign_label(reached, 2, self.le_far[reached])
                j += jstep
                idx = j if j >= 0 else j + L
        self.label[b] = 0
        self.le_far[b] = -1
        self.le_near[b] = -1
        self.blossomchilds[b] = None
        self.blossomedges[b] = None
        self.blossombase[b] = -1
        self.be_far[b] = -1
        self.unused.append(b)

    cdef void augment_blossom(self, int b, int v):
        cdef int t = v
        cdef int i, j, jstep, idx, q, r, a, c, t1, t2
        while self.blossomparent[t] != b:
            t = self.blossomparent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        cdef list childs = self.blossomchilds[b]
        cdef list edgs = self.blossomedges[b]
        cdef int L = len(childs)
        i = childs.index(t)
        if i & 1:
            j = i - L
            jstep = 1
        else:
            j = i
            jstep = -1
        while j != 0:
            j += jstep
            if jstep == 1:
                idx = j if j >= 0 else j + L
                q, r = edgs[idx]
            else:
                idx = j - 1 if j - 1 >= 0 else j - 1 + L
                a, c = edgs[idx]
                q = c
                r = a
            idx = j if j >= 0 else j + L
            t1 = childs[idx]
            if t1 >= self.n:
                self.augment_blossom(t1, q)
            j += jstep
            idx = j if j >= 0 else j + L
            t2 = childs[idx]
            if t2 >= self.n:
                self.augment_blossom(t2, r)
            self.mate[q] = r
            self.mate[r] = q
        self.blossomchilds[b] = childs[i:] + childs[:i]
        self.blossomedges[b] = edgs[i:] + edgs[:i]
        self.blossombase[b] = self.blossombase[t]

    cdef void augment_matching(self, int v, int u):
        cdef int s, p, bs, t, bt, s2, j
        cdef int side
        for side in range(2):
            if side == 0:
                s = v
                p = u
            else:
                s = u
                p = v
            while True:
                bs = self.inblossom[s]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if self.le_far[bs] == -1:
                    break
                t = self.le_far[bs]
                bt = self.inblossom[t]
                s2 = self.le_far[bt]
                j = self.le_near[bt]
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = s2
                s = s2
                p = j

    cdef bint scan_vertex(self, int v):
        cdef int n = self.n
        cdef int bv = self.inblossom[v]
        cdef int u, bu, lu, base
        cdef double kslack
        for u in range(n):
            if u == v:
                continue
            bu = self.inblossom[u]
            if bv == bu:
                continue
            kslack = 0.0
            if not self.allowed[v * n + u]:
                kslack = self.slack(v, u)
                if kslack <= 0.0:
                    self.set_allowed(v, u)
            if self.allowed[v * n + u]:
                lu = self.label[bu]
                if lu == 0:
                    self.assign_label(u, 2, v)
                elif lu == 1:
                    base = self.scan_blossom(v, u)
                    if base >= 0:
                        self.add_blossom(base, v, u)
                        bv = self.inblossom[v]
                    else:
                        self.augment_matching(v, u)
                        return True
                elif self.label[u] == 0:
                    self.label[u] = 2
                    self.le_far[u] = v
                    self.le_near[u] = u
            elif self.label[bu] == 1:
                if self.be_far[bv] == -1 or kslack < self.slack(
                        self.be_far[bv], self.be_near[bv]):
                    self.be_far[bv] = v
                    self.be_near[bv] = u
            elif self.label[u] == 0:
                if self.be_far[u] == -1 or kslack < self.slack(
                        self.be_far[u], self.be_near[u]):
                    self.be_far[u] = v
                    self.be_near[u] = u
        return False

    cpdef run(self):
        cdef int n = self.n
        cdef int stage, i, v, b, lab
        cdef bint augmented
        cdef int deltatype, de_far, de_near, deltablossom
        cdef double delta, d
        for stage in range(n):
            for i in range(2 * n):
                self.label[i] = 0
                self.be_far[i] = -1
            for i in range(n * n):
                self.allowed[i] = 0
            del self.queue[:]
            for v in range(n):
                if self.mate[v] == -1 and self.label[self.inblossom[v]] == 0:
                    self.assign_label(v, 1, -1)
            augmented = False
            while True:
                while self.queue and not augmented:
                    v = self.queue.pop()
                    if self.scan_vertex(v):
                        augmented = True
                if augmented:
                    break
                deltatype = -1
                delta = 0.0
                de_far = -1
                de_near = -1
                deltablossom = -1
                for v in range(n):
                    if (self.label[self.inblossom[v]] == 0
                            and self.be_far[v] != -1):
                        d = self.slack(self.be_far[v], self.be_near[v])
                        if deltatype == -1 or d < delta:
                            delta = d
                            deltatype = 2
                            de_far = self.be_far[v]
                            de_near = self.be_near[v]
                for b in range(2 * n):
                    if (self.blossomparent[b] == -1 and self.label[b] == 1
                            and self.be_far[b] != -1):
                        d = self.slack(self.be_far[b], self.be_near[b]) / 2.0
                        if deltatype == -1 or d < delta:
                            delta = d
                            deltatype = 3
                            de_far = self.be_far[b]
                            de_near = self.be_near[b]
                for b in range(n, 2 * n):
                    if (self.blossombase[b] >= 0
                            and self.blossomparent[b] == -1
                            and self.label[b] == 2):
                        d = self.dualvar[b]
                        if deltatype == -1 or d < delta:
                            delta = d
                            deltatype = 4
                            deltablossom = b
                if deltatype == -1:
                    deltatype = 1
                    delta = self.dualvar[0]
                    for v in range(1, n):
                        if self.dualvar[v] < delta:
                            delta = self.dualvar[v]
                    if delta < 0.0:
                        delta = 0.0
                for v in range(n):
                    lab = self.label[self.inblossom[v]]
                    if lab == 1:
                        self.dualvar[v] -= delta
                    elif lab == 2:
                        self.dualvar[v] += delta
                for b in range(n, 2 * n):
                    if (self.blossombase[b] >= 0
                            and self.blossomparent[b] == -1):
                        if self.label[b] == 1:
                            self.dualvar[b] += delta
                        elif self.label[b] == 2:
                            self.dualvar[b] -= delta
                if deltatype == 1:
                    break
                elif deltatype == 2:
                    self.set_allowed(de_far, de_near)
                    self.queue.append(de_far)
                elif deltatype == 3:
                    self.set_allowed(de_far, de_near)
                    self.queue.append(de_far)
                else:
                    self.expand_blossom(deltablossom, False)
            if not augmented:
                break
            for b in range(n, 2 * n):
                if (self.blossomparent[b] == -1 and self.blossombase[b] >= 0
                        and self.label[b] == 1 and self.dualvar[b] == 0.0):
                    self.expand_blossom(b, True)
        for v in range(n):
            if self.mate[v] == -1:
                raise RuntimeError("matching is not perfect")
