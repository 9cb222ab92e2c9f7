"""Brute-force reference implementations used only by the tests.

Nothing here calls the enumeration, ranking or search code of the package;
lines are generated by labelling every position independently.
"""
import itertools

import numpy as np

from hjext.words import LocatedWord

ABSENT, GAMMA, MEMBER = "absent", "gamma", "member"


def all_words(N, sigma):
    """Every word on positions 1..N, as a set, via one choice per position."""
    out = set()
    for choice in itertools.product([None] + list(range(sigma)), repeat=N):
        out.add(LocatedWord({p + 1: s for p, s in enumerate(choice) if s is not None}))
    return out


def brute_lines(N, sigma, members=None):
    """All lines inside [1..N] as ``(alpha_dict, gamma, F)``.

    Each position is labelled absent, a constant of alpha, part of gamma or
    (extended case) part of F.  ``members=None`` gives classical lines.
    """
    labels = [ABSENT, GAMMA] + list(range(sigma))
    if members is not None:
        labels.append(MEMBER)
        members = {tuple(sorted(m)) for m in members}
    out = []
    for lab in itertools.product(labels, repeat=N):
        gamma = tuple(p + 1 for p, x in enumerate(lab) if x == GAMMA)
        F = tuple(p + 1 for p, x in enumerate(lab) if x == MEMBER)
        alpha = {p + 1: x for p, x in enumerate(lab) if isinstance(x, int)}
        if not gamma:
            continue
        if members is not None and F not in members:
            continue
        out.append((alpha, gamma, F))
    return out


def line_points(alpha, gamma, F, sigma):
    if not F:
        return {LocatedWord({**alpha, **{g: s for g in gamma}}) for s in range(sigma)}
    return {LocatedWord({**alpha, **{g: s for g in gamma}, t: s}) for s in range(sigma) for t in F}


def all_aps(k, N):
    out = []
    for a in range(1, N + 1):
        for d in range(1, N + 1):
            prog = tuple(a + i * d for i in range(k + 1))
            if prog[-1] <= N:
                out.append(prog)
    return out


def brute_colorable(vertex_count, edges, r):
    for assignment in itertools.product(range(r), repeat=vertex_count):
        if all(len({assignment[v] for v in e}) > 1 for e in edges):
            return list(assignment)
    return None


def brute_cnf_sat(num_vars, clauses):
    """Exhaustive CNF evaluation over all 2^num_vars assignments (numpy)."""
    if num_vars > 24:
        raise ValueError("too many variables for exhaustive evaluation")
    a = np.arange(1 << num_vars, dtype=np.uint32)
    ok = np.ones(a.shape, dtype=bool)
    for cl in clauses:
        sat = np.zeros(a.shape, dtype=bool)
        for lit in cl:
            bit = (a >> (abs(lit) - 1)) & 1
            sat |= bit.astype(bool) if lit > 0 else ~bit.astype(bool)
        ok &= sat
        if not ok.any():
            return False
    return bool(ok.any())
