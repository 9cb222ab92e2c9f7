"""Clause-learning backtracking over colouring constraints.

Two decision modes share one clause database.  ``vsids`` (activity
ordering, Luby restarts, index tie-breaks) decides satisfiability quickly.
``static`` follows a fixed vertex order, tries colours in ascending order
and never restarts; learned clauses are implied by the constraints, so
they only prune assignments without solutions and the first solution
reached is the lexicographically least one in that order.

Literals are encoded as ``2*var`` (true) and ``2*var + 1`` (false).
"""


import heapq


def luby(i):
    """``i``-th term (1-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while (1 << k) - 1 != i:
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1
    return 1 << (k - 1)


class SearchLimit(Exception):
    def __init__(self, conflicts):
        super().__init__(conflicts)
        self.conflicts = conflicts


class ColoringSolver:
    def __init__(self, vertex_count, edges, r, order):
        self.r = r
        self.order = list(order)
        index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order) * r
        self.nvars = n
        self.val = [0] * (2 * n + 2)
        self.level = [0] * (n + 1)
        self.reason = [None] * (n + 1)
        self.watches = [[] for _ in range(2 * n + 2)]
        self.trail = []
        self.trail_lim = []
        self.qhead = 0
        self.ok = True
        self.conflicts = 0
        self.seen = [0] * (n + 1)
        # variable for (order position i, colour c) is i*r + c
        self.group_of = [0] * (n + 1)
        for i in range(len(self.order)):
            for c in range(1, r + 1):
                self.group_of[i * r + c] = i
        clauses = []
        for i in range(len(self.order)):
            base = i * r
            clauses.append([2 * (base + c) for c in range(1, r + 1)])
            for c1 in range(1, r + 1):
                for c2 in range(c1 + 1, r + 1):
                    clauses.append([2 * (base + c1) + 1, 2 * (base + c2) + 1])
        for e in edges:
            pos = [index[v] for v in e]
            for c in range(1, r + 1):
                clauses.append([2 * (p * r + c) + 1 for p in pos])
        for cl in clauses:
            self._add(cl)
        self.dpos = 0
        self.activity = [0.0] * (n + 1)
        self.var_inc = 1.0
        self.phase = [1] * (n + 1)
        self.heap = [(0.0, v) for v in range(1, n + 1)]
        self.use_heap = False

    def _add(self, cl):
        if not self.ok:
            return
        if len(cl) == 1:
            lit = cl[0]
            if self.val[lit] == -1:
                self.ok = False
            elif self.val[lit] == 0:
                self._enqueue(lit, None)
            return
        self.watches[cl[0]].append(cl)
        self.watches[cl[1]].append(cl)

    def _enqueue(self, lit, reason):
        v = lit >> 1
        self.val[lit] = 1
        self.val[lit ^ 1] = -1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(lit)

    def _propagate(self):
        val, watches, trail = self.val, self.watches, self.trail
        level, reason = self.level, self.reason
        lvl = len(self.trail_lim)
        while self.qhead < len(trail):
            p = trail[self.qhead]
            self.qhead += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            i = j = 0
            n = len(ws)
            while i < n:
                cl = ws[i]
                i += 1
                if cl[0] == false_lit:
                    cl[0], cl[1] = cl[1], false_lit
                first = cl[0]
                if val[first] == 1:
                    ws[j] = cl
                    j += 1
                    continue
                for k in range(2, len(cl)):
                    lk = cl[k]
                    if val[lk] != -1:
                        cl[1], cl[k] = lk, false_lit
                        watches[lk].append(cl)
                        break
                else:
                    ws[j] = cl
                    j += 1
                    if val[first] == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self.qhead = len(trail)
                        return cl
                    v = first >> 1
                    val[first] = 1
                    val[first ^ 1] = -1
                    level[v] = lvl
                    reason[v] = cl
                    trail.append(first)
            del ws[j:]
        return None

    def _analyze(self, confl):
        seen, level, reason, trail = self.seen, self.level, self.reason, self.trail
        cur = len(self.trail_lim)
        learnt = [0]
        counter = 0
        p = None
        idx = len(trail) - 1
        cl = confl
        while True:
            for q in (cl if p is None else cl[1:]):
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    self._bump(v)
                    if level[v] == cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            v = p >> 1
            seen[v] = 0
            counter -= 1
            if counter == 0:
                break
            cl = reason[v]
        learnt[0] = p ^ 1
        for q in learnt[1:]:
            seen[q >> 1] = 0
        if len(learnt) == 1:
            return learnt, 0
        best = max(range(1, len(learnt)), key=lambda k: level[learnt[k] >> 1])
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    def _bump(self, v):
        act = self.activity
        act[v] += self.var_inc
        if act[v] > 1e100:
            for u in range(1, self.nvars + 1):
                act[u] *= 1e-100
            self.var_inc *= 1e-100
            self.heap = [(-act[u], u) for u in range(1, self.nvars + 1) if self.val[2 * u] == 0]
            heapq.heapify(self.heap)
        elif self.use_heap and self.val[2 * v] == 0:
            heapq.heappush(self.heap, (-act[v], v))

    def _pick_branch(self):
        heap, act, val = self.heap, self.activity, self.val
        while heap:
            a, v = heapq.heappop(heap)
            if val[2 * v] == 0 and -a == act[v]:
                return 2 * v + self.phase[v]
        return None

    def _cancel_until(self, lvl):
        if len(self.trail_lim) <= lvl:
            return
        stop = self.trail_lim[lvl]
        val, trail, group_of = self.val, self.trail, self.group_of
        dpos = self.dpos
        heap, act, phase, use_heap = self.heap, self.activity, self.phase, self.use_heap
        for k in range(len(trail) - 1, stop - 1, -1):
            lit = trail[k]
            val[lit] = 0
            val[lit ^ 1] = 0
            if use_heap:
                v = lit >> 1
                phase[v] = lit & 1
                heapq.heappush(heap, (-act[v], v))
            if not lit & 1:
                g = group_of[lit >> 1]
                if g < dpos:
                    dpos = g
        self.dpos = dpos
        del trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(trail)

    def _next_decision(self):
        r, val, n = self.r, self.val, len(self.order)
        while self.dpos < n:
            base = self.dpos * r
            lits = [2 * (base + c) for c in range(1, r + 1)]
            if any(val[lit] == 1 for lit in lits):
                self.dpos += 1
                continue
            for lit in lits:
                if val[lit] == 0:
                    return lit
            # every colour excluded; propagation reports the conflict first
            raise AssertionError("unpropagated empty domain")
        return None

    def solve(self, prefix=(), conflict_cap=None, mode="static"):
        """Return colours for ``order`` (list), or ``None`` if unsatisfiable.

        ``prefix`` fixes the colours of the first vertices of the order and
        acts as a set of assumptions.  May be called again (e.g. ``vsids``
        then ``static``); learned clauses are kept.
        """
        if not self.ok:
            return None
        self._cancel_until(0)
        self.dpos = 0
        vsids = mode == "vsids"
        self.use_heap = vsids
        if vsids:
            self.heap = [(-self.activity[v], v) for v in range(1, self.nvars + 1) if self.val[2 * v] == 0]
            heapq.heapify(self.heap)
        r = self.r
        assumptions = [2 * (i * r + c) for i, c in enumerate(prefix)]
        restart_no, budget = 1, 100
        while True:
            confl = self._propagate()
            if confl is not None:
                self.conflicts += 1
                if conflict_cap is not None and self.conflicts > conflict_cap:
                    raise SearchLimit(self.conflicts)
                if not self.trail_lim:
                    self.ok = False
                    return None
                learnt, back = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self._enqueue(learnt[0], learnt)
                if vsids:
                    self.var_inc /= 0.95
                    budget -= 1
                    if budget <= 0:
                        restart_no += 1
                        budget = 100 * luby(restart_no)
                        self._cancel_until(0)
                continue
            lvl = len(self.trail_lim)
            if lvl < len(assumptions):
                lit = assumptions[lvl]
                if self.val[lit] == -1:
                    return None
                self.trail_lim.append(len(self.trail))
                if self.val[lit] == 0:
                    self._enqueue(lit, None)
                continue
            lit = self._pick_branch() if vsids else self._next_decision()
            if lit is None:
                return self._model()
            self.trail_lim.append(len(self.trail))
            self._enqueue(lit, None)

    def _model(self):
        r, val = self.r, self.val
        out = []
        for i in range(len(self.order)):
            base = i * r
            out.append(next(c for c in range(1, r + 1) if val[2 * (base + c)] == 1))
        return out
