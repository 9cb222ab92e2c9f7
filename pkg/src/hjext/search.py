"""Search engine: monochromatic witnesses, avoiding colourings, minimal N, CNF.

The word universe ``dom w ⊆ [1..N]`` is indexed by canonical rank.  Each
line of the chosen family becomes a hyperedge over ranks; a colouring with
no monochromatic hyperedge is an avoiding (proper) colouring.

The backtracking solver colours vertices in rank order, tries colours in
ascending order and propagates along edges that have one uncoloured vertex
left.  It also applies value-symmetry breaking: a vertex may only take a
colour at most one above every colour used earlier in the order.  The
lexicographically least proper colouring is invariant under that rule, so
the returned certificate does not depend on it, nor on the worker count.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .configurations import (
    bad_pattern_set,
    enumerate_extended_lines,
    int_set_to_json,
    power_grid,
    s_grid,
)
from ._cdcl import ColoringSolver, SearchLimit
from .words import DEFAULT_UNIVERSE_CAP, Alphabet, ResourceLimit, rank, universe_size

log = logging.getLogger(__name__)

DEFAULT_PARTITION_CAP = 2**24
DEFAULT_CONFLICT_CAP = 2_000_000


@dataclass(frozen=True)
class Coloring:
    """Total colouring of the ``N``-universe; ``colors[rank] in 1..r``."""

    N: int
    alphabet: Alphabet
    r: int
    colors: tuple

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != universe_size(self.N, self.alphabet):
            raise ValueError(
                f"colouring has {len(colors)} entries, universe has {universe_size(self.N, self.alphabet)}"
            )
        if colors and (min(colors) < 1 or max(colors) > self.r):
            raise ValueError(f"colours must lie in 1..{self.r}")

    @classmethod
    def constant(cls, N, alphabet, c=1, r=None):
        return cls(N, alphabet, r or c, (c,) * universe_size(N, alphabet))

    def __getitem__(self, w):
        return self.colors[rank(w, self.N, self.alphabet)]


@dataclass(frozen=True, eq=False)
class Hypergraph:
    vertex_count: int
    edges: tuple
    lines: tuple = field(default=(), repr=False)

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if e[-1] >= self.vertex_count or e[0] < 0:
                raise ValueError(f"edge {e} outside vertex range")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)

    @classmethod
    def from_edges(cls, vertex_count, edges):
        return cls(vertex_count, tuple(tuple(sorted(set(e))) for e in edges))


@lru_cache(maxsize=16)
def build_hypergraph(N, alphabet, family, cap=DEFAULT_UNIVERSE_CAP):
    """One edge per line of ``family`` inside ``[1..N]``, in canonical line order.

    Lines with identical point sets (possible for a one-letter alphabet)
    keep only the canonically first line.
    """
    family = family if family.window <= N else family.at_window(N)
    V = universe_size(N, alphabet)
    if cap is not None and V > cap:
        raise ResourceLimit(f"universe of {V} words exceeds cap {cap}")
    edges, lines, seen = [], [], set()
    for line in enumerate_extended_lines(N, alphabet, family, cap):
        e = tuple(sorted(rank(w, N, alphabet) for w in line.points()))
        if e in seen:
            continue
        seen.add(e)
        edges.append(e)
        lines.append(line)
    return Hypergraph(V, tuple(edges), tuple(lines))


@dataclass
class Certificate:
    kind: str
    payload: dict

    def __getitem__(self, key):
        return self.payload[key]


@dataclass(frozen=True)
class Exceeded:
    N_max: int


def _edge_groups(hg):
    groups = {}
    for i, e in enumerate(hg.edges):
        groups.setdefault(len(e), []).append(i)
    return {
        size: (np.asarray(idx), np.asarray([hg.edges[i] for i in idx], dtype=np.int64))
        for size, idx in groups.items()
    }


_groups_cache = {}


def first_monochromatic_edge(hg, colors):
    """Index of the first edge whose vertices share one colour, or ``None``."""
    key = id(hg)
    cached = _groups_cache.get(key)
    if cached is None or cached[0] is not hg:
        cached = (hg, _edge_groups(hg))
        _groups_cache.clear()
        _groups_cache[key] = cached
    c = np.asarray(colors)
    best = None
    for idx, arr in cached[1].values():
        vals = c[arr]
        mono = np.flatnonzero((vals == vals[:, :1]).all(axis=1))
        if mono.size:
            i = int(idx[mono[0]])
            best = i if best is None else min(best, i)
    return best


def witness_certificate(coloring, family, line):
    color = coloring[next(iter(line.points()))]
    return Certificate(
        "witness",
        {
            "N": coloring.N,
            "alphabet": coloring.alphabet.size,
            "family": family.to_json(),
            "r": coloring.r,
            "coloring": list(coloring.colors),
            "witness": {
                "alpha": str(line.alpha),
                "gamma": list(line.gamma),
                "F": list(line.F),
                "color": color,
            },
        },
    )


def find_witness(coloring, family, hypergraph=None):
    """Canonically least monochromatic line of ``family``, or ``None``."""
    family = family.at_window(coloring.N) if family.window != coloring.N else family
    hg = hypergraph or build_hypergraph(coloring.N, coloring.alphabet, family)
    i = first_monochromatic_edge(hg, coloring.colors)
    if i is None:
        return None
    return witness_certificate(coloring, family, hg.lines[i])


# avoidance search


def _prefixes(order_len, r, depth):
    """Colour prefixes for the first ``depth`` ordered vertices; the first is fixed to 1."""
    depth = min(depth, order_len)
    if depth == 0:
        yield ()
        return
    for rest in itertools.product(range(1, r + 1), repeat=depth - 1):
        yield (1,) + rest


def _solve_subtree(args):
    hg, r, order, prefix, conflict_cap = args
    solver = ColoringSolver(hg.vertex_count, hg.edges, r, order)
    try:
        if solver.solve(prefix, conflict_cap, mode="vsids") is None:
            return None, solver.conflicts
        return solver.solve(prefix, conflict_cap, mode="static"), solver.conflicts
    except SearchLimit as exc:
        raise ResourceLimit(
            f"search exceeded {conflict_cap} conflicts", progress={"conflicts": exc.conflicts, "prefix": prefix}
        ) from None


def proper_coloring(hg, r, jobs=1, conflict_cap=DEFAULT_CONFLICT_CAP, split_depth=None):
    """Lexicographically least proper ``r``-colouring (list by rank), or ``None``.

    Vertices outside every edge take colour 1.  The first vertex that lies
    on an edge is fixed to colour 1 (colour permutation symmetry).
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    covered = set()
    for e in hg.edges:
        covered.update(e)
    order = sorted(covered)
    if jobs <= 1:
        prefixes = [(1,) if order else ()]
    else:
        depth = split_depth or max(1, (jobs * 2 - 1).bit_length())
        prefixes = list(_prefixes(len(order), r, depth))
    bare = Hypergraph(hg.vertex_count, hg.edges)  # workers do not need the lines
    tasks = [(bare, r, order, p, conflict_cap) for p in prefixes]
    if jobs <= 1:
        results = map(_solve_subtree, tasks)
        return _merge(hg, order, results)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # consumed in prefix order, so the first hit is the canonical one
        return _merge(hg, order, pool.map(_solve_subtree, tasks))


def _merge(hg, order, results):
    for sub, _ in results:
        if sub is not None:
            colors = [1] * hg.vertex_count
            for v, c in zip(order, sub):
                colors[v] = c
            return colors
    return None


def avoidance_search(hg, r, jobs=1, conflict_cap=DEFAULT_CONFLICT_CAP):
    colors = proper_coloring(hg, r, jobs=jobs, conflict_cap=conflict_cap)
    if colors is None:
        return Certificate("unsat", {"r": r})
    return Certificate("proper_coloring", {"r": r, "coloring": colors})


def decide(N, alphabet, r, family, jobs=1, conflict_cap=DEFAULT_CONFLICT_CAP, cap=DEFAULT_UNIVERSE_CAP):
    """Avoidance search at one universe size, returned as a full certificate."""
    family = family.at_window(N)
    hg = build_hypergraph(N, alphabet, family, cap)
    cert = avoidance_search(hg, r, jobs=jobs, conflict_cap=conflict_cap)
    cert.payload = {"N": N, "alphabet": alphabet.size, "family": family.to_json(), **cert.payload}
    return cert


def minimal_N_search(alphabet, r, family, N_max, jobs=1, conflict_cap=DEFAULT_CONFLICT_CAP, cap=DEFAULT_UNIVERSE_CAP):
    """Like :func:`minimal_N` but also return the certificates on both sides.

    Returns ``(N, below, at)`` where ``below`` is the avoiding colouring at
    ``N - 1`` (``None`` for ``N = 1``) and ``at`` the unsat certificate, or
    ``(Exceeded(N_max), last_avoiding, None)``.
    """
    below = None
    for N in range(1, N_max + 1):
        fam = family(N) if callable(family) else family.at_window(N)
        cert = decide(N, alphabet, r, fam, jobs=jobs, conflict_cap=conflict_cap, cap=cap)
        log.debug("N=%d: %s", N, cert.kind)
        if cert.kind == "unsat":
            return N, below, cert
        below = cert
    return Exceeded(N_max), below, None


def minimal_N(alphabet, r, family, N_max, jobs=1, conflict_cap=DEFAULT_CONFLICT_CAP, cap=DEFAULT_UNIVERSE_CAP):
    """Least ``N <= N_max`` at which every ``r``-colouring has a monochromatic line.

    ``family`` is a :class:`ConfigFamily` (re-windowed to each ``N``) or a
    callable ``N -> ConfigFamily``.  Returns :class:`Exceeded` otherwise.
    """
    return minimal_N_search(alphabet, r, family, N_max, jobs, conflict_cap, cap)[0]


# CNF


def cnf_clauses(hg, r):
    """Clauses of the colouring CNF; variable ``r*v + c`` means vertex ``v`` has colour ``c``."""
    clauses = []
    for v in range(hg.vertex_count):
        base = r * v
        clauses.append([base + c for c in range(1, r + 1)])
        for c1, c2 in itertools.combinations(range(1, r + 1), 2):
            clauses.append([-(base + c1), -(base + c2)])
    for e in hg.edges:
        for c in range(1, r + 1):
            clauses.append([-(r * v + c) for v in e])
    return clauses


def export_cnf(hg, r):
    clauses = cnf_clauses(hg, r)
    lines = [f"p cnf {r * hg.vertex_count} {len(clauses)}"]
    lines.extend(" ".join(map(str, cl)) + " 0" for cl in clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs(text):
    """Return ``(num_vars, clauses)`` from DIMACS text."""
    num_vars, clauses, current = None, [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            _, fmt, nv, _nc = line.split()
            if fmt != "cnf":
                raise ValueError(f"not a cnf header: {line!r}")
            num_vars = int(nv)
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(current)
    if num_vars is None:
        raise ValueError("missing p cnf header")
    return num_vars, clauses


def decode_model(model, vertex_count, r):
    """Colour list from a satisfying assignment (iterable of true literals)."""
    true = {lit for lit in model if lit > 0}
    colors = []
    for v in range(vertex_count):
        cs = [c for c in range(1, r + 1) if r * v + c in true]
        if len(cs) != 1:
            raise ValueError(f"vertex {v} has colours {cs} in the model")
        colors.append(cs[0])
    return colors


# grid partitions


@dataclass(frozen=True)
class GridPattern:
    """The configuration ``{b (a + i d)^j}`` and a search box for ``(b, a, d)``."""

    i_range: tuple = (0, 1, 2)
    j_range: tuple = (0, 1)
    b: tuple = (1, 1)
    a: tuple = (1, 1)
    d: tuple = (1, 1)

    @classmethod
    def covering(cls, grid, i_range=(0, 1, 2), j_range=(0, 1)):
        """Box ``[1..max(grid)]`` for each parameter."""
        top = max(grid)
        return cls(tuple(i_range), tuple(j_range), (1, top), (1, top), (1, top))

    @property
    def empty(self):
        return any(hi < lo for lo, hi in (self.b, self.a, self.d))

    def box(self):
        return itertools.product(
            range(self.b[0], self.b[1] + 1),
            range(self.a[0], self.a[1] + 1),
            range(self.d[0], self.d[1] + 1),
        )

    def to_json(self):
        return {
            "i_range": list(self.i_range),
            "j_range": list(self.j_range),
            "box": {"b": list(self.b), "a": list(self.a), "d": list(self.d)},
        }

    @classmethod
    def from_json(cls, obj):
        box = obj["box"]
        return cls(
            tuple(obj["i_range"]),
            tuple(obj["j_range"]),
            tuple(box["b"]),
            tuple(box["a"]),
            tuple(box["d"]),
        )


def pattern_instances(grid, pattern):
    """Distinct pattern sets ``{b (a + i d)^j}`` inside ``grid``, box order."""
    grid = frozenset(grid)
    if pattern.empty or not grid:
        return []
    i_range, j_range = pattern.i_range, pattern.j_range
    has_zero = 0 in i_range
    out, seen = [], set()
    for b in range(pattern.b[0], pattern.b[1] + 1):
        if 0 in j_range and b not in grid:
            continue
        for a in range(pattern.a[0], pattern.a[1] + 1):
            if has_zero and any(b * a**j not in grid for j in j_range):
                continue
            for d in range(pattern.d[0], pattern.d[1] + 1):
                ok = True
                for i in i_range:
                    for j in j_range:
                        if b * (a + i * d) ** j not in grid:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    inst = bad_pattern_set(b, a, d, i_range, j_range)
                    if inst not in seen:
                        seen.add(inst)
                        out.append(inst)
    return out


def avoiding_partition(grid, instances, r=2, cap=DEFAULT_PARTITION_CAP):
    """First ``r``-partition of ``grid`` (lexicographic in sorted element order,
    cell 1 first) in which no cell contains a whole instance."""
    elems = sorted(grid)
    n = len(elems)
    if cap is not None and r**n > cap:
        raise ResourceLimit(f"{r}^{n} partitions exceed cap {cap}")
    pos = {x: i for i, x in enumerate(elems)}
    closing = [[] for _ in range(n)]
    for inst in instances:
        idx = sorted(pos[x] for x in inst)
        closing[idx[-1]].append(idx)
    assign = [0] * n

    def rec(i):
        if i == n:
            return True
        for c in range(r):
            assign[i] = c
            if all(any(assign[j] != c for j in idx) for idx in closing[i]) and rec(i + 1):
                return True
        return False

    if not rec(0):
        return None
    cells = [set() for _ in range(r)]
    for x, c in zip(elems, assign):
        cells[c].add(x)
    return [frozenset(c) for c in cells]


def make_grid(kind, A, D, K):
    if kind == "power":
        return power_grid(A, D, K)
    if kind == "s":
        return s_grid(A, D, K)
    raise ValueError(f"unknown grid kind {kind!r}")


def grid_counterexample_search(
    K, A_range, D_range, pattern=None, r=2, grid_kind="power", cap=DEFAULT_PARTITION_CAP
):
    """Search ``(A, D)`` pairs for an ``r``-partition of the grid avoiding the pattern.

    ``pattern=None`` uses the three-by-two configuration with a box that
    covers every instance inside each grid.
    """
    for A in A_range:
        for D in D_range:
            grid = make_grid(grid_kind, A, D, K)
            pat = pattern or GridPattern.covering(grid)
            cells = avoiding_partition(grid, pattern_instances(grid, pat), r, cap)
            if cells is not None:
                return Certificate(
                    "grid_partition",
                    {
                        "K": K,
                        "A": A,
                        "D": D,
                        "grid": grid_kind,
                        "r": r,
                        "pattern": pat.to_json(),
                        "partition": [int_set_to_json(c) for c in cells],
                    },
                )
    return None


def verify_partition(partition, pattern):
    """True iff no cell contains a full pattern set for any ``(b, a, d)`` in the box."""
    cells = [frozenset(c) for c in partition]
    for b, a, d in pattern.box():
        inst = bad_pattern_set(b, a, d, pattern.i_range, pattern.j_range)
        for cell in cells:
            if inst <= cell:
                return False
    return True
