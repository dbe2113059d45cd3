"""Pure-Python minimum-weight perfect matching on dense complete graphs.

This is the fallback twin of the compiled kernel in ``_blossom_cy.pyx``; the
two implementations follow the same primal-dual blossom algorithm step for
step and must produce identical matchings for identical input.

The solver works in maximisation form internally: a minimum-weight perfect
matching of the cost matrix ``D`` is a maximum-weight maximum-cardinality
matching of the transformed weights ``w[i][j] = maxD - D[i][j]``, because on
a complete graph with an even node count every maximum-cardinality matching
is perfect and all perfect matchings contain exactly n/2 edges.

The algorithm is the classic O(n^3) primal-dual method for general graphs
(Galil's formulation): grow alternating trees from free vertices, shrink
odd cycles into blossoms, expand blossoms whose dual reaches zero, and drive
progress with the smallest dual adjustment that makes a new edge tight.
Dense graphs allow two simplifications over edge-list implementations: the
neighbourhood of a vertex is simply "every other vertex", and the least-slack
edge bookkeeping for a freshly shrunk blossom is rebuilt by a direct rescan
of its leaves instead of merging per-blossom candidate lists.

All arithmetic is plain float; no epsilon tolerances are used.  Ties between
equal-slack edges are broken by scan order, which is fixed, so the solver is
deterministic: identical input bytes give identical matchings.
"""

from __future__ import annotations


def solve_min_perfect(D) -> list[int]:
    """Return ``mate`` with ``mate[i] = j`` for the minimum-weight perfect
    matching of the dense symmetric cost matrix ``D`` (n x n, n even, finite
    entries, zero diagonal).  Preconditions are the caller's job.
    """
    n = len(D)
    if n == 0:
        return []
    rows = [list(map(float, row)) for row in D]
    maxd = max(max(row) for row in rows)
    w = [[maxd - x for x in row] for row in rows]
    return _Blossom(n, w).run()


class _Blossom:
    """State of one solver invocation (max-weight, max-cardinality mode)."""

    __slots__ = (
        "n", "w", "mate", "label", "le_far", "le_near", "inblossom",
        "blossomparent", "blossombase", "blossomchilds", "blossomedges",
        "be_far", "be_near", "dualvar", "allowed", "queue", "unused",
    )

    def __init__(self, n: int, w: list[list[float]]):
        self.n = n
        self.w = w
        maxweight = max(max(row) for row in w)
        # Vertices are 0..n-1; slots n..2n-1 hold nontrivial blossoms.
        self.mate = [-1] * n
        self.label = [0] * (2 * n)
        # Edge through which a vertex/blossom got its label, as a vertex
        # pair: far = tree-parent side, near = the labelled side.
        self.le_far = [-1] * (2 * n)
        self.le_near = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.blossomparent = [-1] * (2 * n)
        self.blossombase = list(range(n)) + [-1] * n
        self.blossomchilds: list = [None] * (2 * n)
        self.blossomedges: list = [None] * (2 * n)
        # Least-slack candidate edges: per free vertex (delta2) and per
        # top-level S-blossom (delta3), same (far, near) orientation with
        # far on the S side that recorded the edge.
        self.be_far = [-1] * (2 * n)
        self.be_near = [-1] * (2 * n)
        self.dualvar = [maxweight / 2.0] * n + [0.0] * n
        self.allowed = bytearray(n * n)
        self.queue: list[int] = []
        self.unused = list(range(2 * n - 1, n - 1, -1))

    # -- helpers ----------------------------------------------------------

    def slack(self, i: int, j: int) -> float:
        # Valid only for edges between different top-level blossoms, where
        # no blossom dual contributes.
        return self.dualvar[i] + self.dualvar[j] - self.w[i][j]

    def leaves(self, b: int):
        if b < self.n:
            yield b
        else:
            for c in self.blossomchilds[b]:
                yield from self.leaves(c)

    # -- labelling --------------------------------------------------------

    def assign_label(self, v: int, t: int, far: int) -> None:
        """Label vertex v's top blossom as S (t=1) or T (t=2), reached
        through the edge (far, v); far == -1 marks a tree root."""
        b = self.inblossom[v]
        assert self.label[v] == 0 and self.label[b] == 0
        self.label[v] = self.label[b] = t
        self.le_far[v] = self.le_far[b] = far
        self.le_near[v] = self.le_near[b] = v if far != -1 else -1
        self.be_far[v] = self.be_far[b] = -1
        if t == 1:
            # S-vertices are scanned; push every leaf.
            self.queue.extend(self.leaves(b))
        else:
            # T-blossom: its base is matched; the mate becomes an S-vertex.
            base = self.blossombase[b]
            assert self.mate[base] != -1
            self.assign_label(self.mate[base], 1, base)

    def scan_blossom(self, v: int, u: int) -> int:
        """Trace back from S-vertices v and u towards their tree roots.
        Return the base vertex of the first common ancestor blossom, or -1
        when the roots differ (the edge (v, u) then augments)."""
        path = []
        base = -1
        while v != -1 or u != -1:
            if v != -1:
                b = self.inblossom[v]
                if self.label[b] & 4:
                    base = self.blossombase[b]
                    break
                assert self.label[b] == 1
                path.append(b)
                self.label[b] = 5
                if self.le_far[b] == -1:
                    v = -1  # reached a root
                else:
                    v = self.le_far[b]          # into the T-parent
                    bt = self.inblossom[v]
                    assert self.label[bt] == 2
                    v = self.le_far[bt]         # up to the next S-blossom
            # Alternate between the two paths so the nearer ancestor wins.
            if u != -1:
                v, u = u, v
        for b in path:
            self.label[b] = 1
        return base

    # -- blossom construction / destruction -------------------------------

    def add_blossom(self, base: int, v: int, u: int) -> None:
        """Shrink the odd cycle through the tight edge (v, u) and the common
        ancestor with base vertex ``base`` into a new S-blossom."""
        bb = self.inblossom[base]
        bv = self.inblossom[v]
        bu = self.inblossom[u]
        b = self.unused.pop()
        self.blossombase[b] = base
        self.blossomparent[b] = -1
        self.blossomparent[bb] = b
        path = []
        edgs = []
        # Walk up from v's side; connecting edges keep far in the child
        # nearer the base so that edgs[i] runs childs[i] -> childs[i+1].
        while bv != bb:
            self.blossomparent[bv] = b
            path.append(bv)
            edgs.append((self.le_far[bv], self.le_near[bv]))
            assert self.label[bv] == 2 or (
                self.label[bv] == 1
                and self.le_far[bv] == self.mate[self.blossombase[bv]])
            bv = self.inblossom[self.le_far[bv]]
        path.append(bb)
        path.reverse()
        edgs.reverse()
        edgs.append((v, u))
        # Walk up from u's side; orientation flips.
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
        for leaf in list(self.leaves(b)):
            if self.label[self.inblossom[leaf]] == 2:
                # Former T-vertices become S-vertices; scan them.
                self.queue.append(leaf)
            self.inblossom[leaf] = b
        for c in path:
            self.be_far[c] = -1
        self.rescan_best_edge(b)

    def rescan_best_edge(self, b: int) -> None:
        """Rebuild the least-slack edge from S-blossom b to any other
        S-blossom by scanning all leaf-to-vertex pairs."""
        best_f = best_n = -1
        best_s = 0.0
        for x in self.leaves(b):
            for y in range(self.n):
                by = self.inblossom[y]
                if by == b or self.label[by] != 1:
                    continue
                s = self.slack(x, y)
                if best_f == -1 or s < best_s:
                    best_f, best_n, best_s = x, y, s
        self.be_far[b] = best_f
        self.be_near[b] = best_n

    def expand_blossom(self, b: int, endstage: bool) -> None:
        """Dissolve blossom b: promote its children to top level.  During a
        stage (T-blossom whose dual reached zero) the alternating structure
        through the blossom is restored label by label."""
        n = self.n
        childs = self.blossomchilds[b]
        edgs = self.blossomedges[b]
        L = len(childs)
        for s in childs:
            self.blossomparent[s] = -1
            if s < n:
                self.inblossom[s] = s
            elif endstage and self.dualvar[s] == 0.0:
                self.expand_blossom(s, endstage)
            else:
                for leaf in self.leaves(s):
                    self.inblossom[leaf] = s
        if not endstage and self.label[b] == 2:
            # Relabel along the even path from the entry child to the base;
            # remaining children become free unless an outside S-vertex
            # already reached one of their vertices.
            entrychild = self.inblossom[self.le_near[b]]
            j = childs.index(entrychild)
            if j & 1:
                j -= L
                jstep = 1
            else:
                jstep = -1
            pfar, pnear = self.le_far[b], self.le_near[b]
            while j != 0:
                # T-label the current child through (pfar, pnear); its base
                # mate sits in the adjacent child and will be S-labelled.
                if jstep == 1:
                    mfar, mnear = edgs[j]           # matched cycle edge
                    partner = mnear
                else:
                    mfar, mnear = edgs[j - 1]
                    partner = mfar
                self.label[pnear] = 0
                self.label[partner] = 0
                self.assign_label(pnear, 2, pfar)
                self.set_allowed(mfar, mnear)
                j += jstep
                # The next unmatched cycle edge enters the following child.
                if jstep == 1:
                    pfar, pnear = edgs[j]
                else:
                    a, c = edgs[j - 1]
                    pfar, pnear = c, a
                self.set_allowed(pfar, pnear)
                j += jstep
            # The base child keeps label T without propagating further: its
            # base vertex is matched outside the expanded blossom.
            bv = childs[0]
            self.label[pnear] = self.label[bv] = 2
            self.le_far[pnear] = self.le_far[bv] = pfar
            self.le_near[pnear] = self.le_near[bv] = pnear
            self.be_far[bv] = -1
            j = jstep
            while childs[j] != entrychild:
                # Off-path children stay free unless one of their vertices
                # was individually reached from outside; those pairs are
                # relabelled through the recorded vertex-level edge.
                bv = childs[j]
                if self.label[bv] == 1:
                    j += jstep
                    continue
                reached = -1
                for leaf in self.leaves(bv):
                    if self.label[leaf] != 0:
                        reached = leaf
                        break
                if reached != -1:
                    assert self.label[reached] == 2
                    assert self.inblossom[reached] == bv
                    self.label[reached] = 0
                    self.label[self.mate[self.blossombase[bv]]] = 0
                    self.assign_label(reached, 2, self.le_far[reached])
                j += jstep
        self.label[b] = 0
        self.le_far[b] = self.le_near[b] = -1
        self.blossomchilds[b] = None
        self.blossomedges[b] = None
        self.blossombase[b] = -1
        self.be_far[b] = -1
        self.unused.append(b)

    def set_allowed(self, i: int, j: int) -> None:
        self.allowed[i * self.n + j] = 1
        self.allowed[j * self.n + i] = 1

    # -- augmentation ------------------------------------------------------

    def augment_blossom(self, b: int, v: int) -> None:
        """Rematch inside blossom b so that vertex v becomes its base."""
        t = v
        while self.blossomparent[t] != b:
            t = self.blossomparent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        childs = self.blossomchilds[b]
        edgs = self.blossomedges[b]
        L = len(childs)
        i = childs.index(t)
        if i & 1:
            j = i - L
            jstep = 1
        else:
            j = i
            jstep = -1
        # Walk from t's position to the old base, flipping the matching on
        # the even path; children beyond the path keep their pairing.
        while j != 0:
            j += jstep
            if jstep == 1:
                q, r = edgs[j]          # q in childs[j], r in childs[j+1]
            else:
                a, c = edgs[j - 1]      # a in childs[j-1], c in childs[j]
                q, r = c, a
            t1 = childs[j]
            if t1 >= self.n:
                self.augment_blossom(t1, q)
            j += jstep
            t2 = childs[j]
            if t2 >= self.n:
                self.augment_blossom(t2, r)
            self.mate[q] = r
            self.mate[r] = q
        # Rotate the child list so t leads; its base is now v.
        self.blossomchilds[b] = childs[i:] + childs[:i]
        self.blossomedges[b] = edgs[i:] + edgs[:i]
        self.blossombase[b] = self.blossombase[t]
        assert self.blossombase[b] == v

    def augment_matching(self, v: int, u: int) -> None:
        """Flip matched/unmatched along the two tree paths joined by the
        tight edge (v, u), increasing the matching size by one."""
        for s, p in ((v, u), (u, v)):
            while True:
                bs = self.inblossom[s]
                assert self.label[bs] == 1
                assert self.le_far[bs] == self.mate[self.blossombase[bs]]
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if self.le_far[bs] == -1:
                    break  # tree root reached
                t = self.le_far[bs]
                bt = self.inblossom[t]
                assert self.label[bt] == 2
                assert self.blossombase[bt] == t
                s2 = self.le_far[bt]
                j = self.le_near[bt]
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = s2
                s, p = s2, j

    # -- main loop ---------------------------------------------------------

    def run(self) -> list[int]:
        n = self.n
        for _stage in range(n):
            # Each stage augments the matching by one edge or proves that
            # no augmenting path exists.
            for i in range(2 * n):
                self.label[i] = 0
                self.be_far[i] = -1
            self.allowed[:] = bytes(n * n)
            self.queue.clear()
            for v in range(n):
                if self.mate[v] == -1 and self.label[self.inblossom[v]] == 0:
                    self.assign_label(v, 1, -1)
            augmented = False
            while True:
                while self.queue and not augmented:
                    v = self.queue.pop()
                    assert self.label[self.inblossom[v]] == 1
                    if self.scan_vertex(v):
                        augmented = True
                if augmented:
                    break
                # No more tight edges: find the smallest useful dual change.
                # delta2 unlabels -> S edge, delta3 S -> S edge (halved
                # because both duals drop), delta4 dissolving T-blossom.
                deltatype = -1
                delta = 0.0
                de_far = de_near = -1
                deltablossom = -1
                for v in range(n):
                    if (self.label[self.inblossom[v]] == 0
                            and self.be_far[v] != -1):
                        d = self.slack(self.be_far[v], self.be_near[v])
                        if deltatype == -1 or d < delta:
                            delta = d
                            deltatype = 2
                            de_far, de_near = self.be_far[v], self.be_near[v]
                for b in range(2 * n):
                    if (self.blossomparent[b] == -1 and self.label[b] == 1
                            and self.be_far[b] != -1):
                        d = self.slack(self.be_far[b], self.be_near[b]) / 2.0
                        if deltatype == -1 or d < delta:
                            delta = d
                            deltatype = 3
                            de_far, de_near = self.be_far[b], self.be_near[b]
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
                    # Max-cardinality optimum reached; take a final step
                    # that keeps vertex duals nonnegative and stop.
                    deltatype = 1
                    delta = max(0.0, min(self.dualvar[:n]))
                for v in range(n):
                    lab = self.label[self.inblossom[v]]
                    if lab == 1:
                        self.dualvar[v] -= delta
                    elif lab == 2:
                        self.dualvar[v] += delta
                for b in range(n, 2 * n):
                    if self.blossombase[b] >= 0 and self.blossomparent[b] == -1:
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
            # Blossoms whose dual fell back to zero carry no constraint;
            # dissolving them between stages keeps the structure flat.
            for b in range(n, 2 * n):
                if (self.blossomparent[b] == -1 and self.blossombase[b] >= 0
                        and self.label[b] == 1 and self.dualvar[b] == 0.0):
                    self.expand_blossom(b, True)
        assert all(m != -1 for m in self.mate), "matching is not perfect"
        return self.mate

    def scan_vertex(self, v: int) -> bool:
        """Process S-vertex v: examine every incident edge.  Returns True
        when the matching was augmented (which ends the stage)."""
        n = self.n
        bv = self.inblossom[v]
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
                    # u sits in a T-blossom but was not yet reached itself;
                    # remember the edge for relabelling on expansion.
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
