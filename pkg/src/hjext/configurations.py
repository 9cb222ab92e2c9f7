"""Combinatorial lines, extended lines and the integer configuration sets.

An extended line is the triple ``(alpha, gamma, F)`` with pairwise disjoint
``dom alpha``, ``gamma`` and ``F``; its points are the words
``alpha ∪ (gamma ∪ {t}) × {s}`` for every symbol ``s`` and ``t in F``.

Index ranges follow two conventions: ``range(0, k + 1)`` (zero-based, the
default for the product sets) and ``range(1, k + 1)``.  Every generator
takes explicit ranges so both readings are expressible.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .words import (
    DEFAULT_UNIVERSE_CAP,
    VAR,
    Alphabet,
    LocatedWord,
    ResourceLimit,
    place,
    universe_size,
    words_on,
)


class OverlappingDomains(ValueError):
    pass


class WindowTooSmall(ValueError):
    pass


def _member_key(m):
    return (len(m), m)


@dataclass(frozen=True)
class ConfigFamily:
    """A finite window ``[1..window]`` of a configuration family.

    ``kind`` is ``"ap"`` (all ``(k+1)``-term progressions), ``"list"``
    (explicit members) or ``"plain"``, the degenerate mode in which lines
    carry no ``F`` and the engine searches classical combinatorial lines.
    """

    kind: str
    window: int
    k: int | None = None
    explicit: tuple = field(default=())

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be positive")
        if self.kind == "ap":
            if self.k is None or self.k < 1:
                raise ValueError("AP families need k >= 1 (no singleton members)")
        elif self.kind == "list":
            norm = []
            for m in self.explicit:
                m = tuple(sorted(set(m)))
                if len(m) < 2:
                    raise ValueError(f"family member {list(m)} has fewer than two elements")
                if m[0] < 1 or m[-1] > self.window:
                    raise ValueError(f"family member {list(m)} not inside [1..{self.window}]")
                norm.append(m)
            object.__setattr__(self, "explicit", tuple(sorted(set(norm), key=_member_key)))
        elif self.kind != "plain":
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def is_plain(self):
        return self.kind == "plain"

    def members(self):
        """Members as sorted tuples, ordered by size then lexicographically."""
        if self.kind == "ap":
            return tuple(
                sorted(
                    (
                        tuple(a + i * d for i in range(self.k + 1))
                        for d in range(1, self.window)
                        for a in range(1, self.window - self.k * d + 1)
                    ),
                    key=_member_key,
                )
            )
        return self.explicit

    def at_window(self, N):
        """The same family restricted to (or widened to) ``[1..N]``."""
        if self.kind == "list":
            kept = tuple(m for m in self.explicit if m[-1] <= N)
            return ConfigFamily("list", N, explicit=kept)
        return ConfigFamily(self.kind, N, k=self.k)

    def to_json(self):
        if self.kind == "ap":
            return {"kind": "ap", "k": self.k, "window": self.window}
        if self.kind == "list":
            return {"kind": "list", "members": [list(m) for m in self.explicit], "window": self.window}
        return {"kind": "plain", "window": self.window}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        kind = obj["kind"]
        if kind == "ap":
            return cls("ap", obj["window"], k=obj["k"])
        if kind == "list":
            return cls("list", obj["window"], explicit=tuple(tuple(m) for m in obj["members"]))
        if kind == "plain":
            return cls("plain", obj["window"])
        raise ValueError(f"unknown family kind {kind!r}")


def ap_family(k, N):
    """All ``(k+1)``-term arithmetic progressions inside ``[1..N]``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if N < k + 1:
        raise WindowTooSmall(f"no {k + 1}-term progression fits in [1..{N}]")
    return ConfigFamily("ap", N, k=k)


def list_family(members, window=None):
    members = [tuple(m) for m in members]
    if window is None:
        window = max((max(m) for m in members if m), default=1)
    return ConfigFamily("list", window, explicit=tuple(members))


def plain_family(N=1):
    return ConfigFamily("plain", N)


def _check_alpha(alpha, alphabet):
    for p, s in alpha.entries:
        if s is VAR or not alphabet.contains(s):
            raise ValueError(f"alpha must be a constant word over the alphabet, got {alpha}")


@dataclass(frozen=True)
class Line:
    """A classical combinatorial line ``{alpha ∪ gamma × {s}}``."""

    alpha: LocatedWord
    gamma: tuple
    alphabet: Alphabet

    def __post_init__(self):
        gamma = tuple(sorted(set(self.gamma)))
        object.__setattr__(self, "gamma", gamma)
        if not gamma:
            raise ValueError("gamma must be nonempty")
        _check_alpha(self.alpha, self.alphabet)
        if self.alpha.dom & set(gamma):
            raise OverlappingDomains(f"dom {self.alpha} meets gamma {list(gamma)}")

    F = ()

    @property
    def sort_key(self):
        return (0, (), len(self.gamma), self.gamma, self.alpha.sort_key)

    def point_list(self):
        return [place(self.alpha, self.gamma, s) for s in range(self.alphabet.size)]

    def points(self):
        return frozenset(self.point_list())


@dataclass(frozen=True)
class ExtendedLine:
    alpha: LocatedWord
    gamma: tuple
    F: tuple
    alphabet: Alphabet

    def __post_init__(self):
        gamma = tuple(sorted(set(self.gamma)))
        F = tuple(sorted(set(self.F)))
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "F", F)
        if not gamma:
            raise ValueError("gamma must be nonempty")
        if len(F) < 2:
            raise ValueError("F needs at least two elements")
        _check_alpha(self.alpha, self.alphabet)
        dom = self.alpha.dom
        if dom & set(gamma) or dom & set(F) or set(gamma) & set(F):
            raise OverlappingDomains(
                f"dom alpha={sorted(dom)}, gamma={list(gamma)}, F={list(F)} are not pairwise disjoint"
            )

    @property
    def sort_key(self):
        return (len(self.F), self.F, len(self.gamma), self.gamma, self.alpha.sort_key)

    def point_list(self):
        """Points ordered by symbol, then by ``t``."""
        return [
            place(self.alpha, self.gamma + (t,), s)
            for s in range(self.alphabet.size)
            for t in self.F
        ]

    def points(self):
        return frozenset(self.point_list())

    def line_at(self, t):
        """The combinatorial line obtained by fixing ``t in F``."""
        if t not in self.F:
            raise ValueError(f"{t} not in F")
        return Line(self.alpha, self.gamma + (t,), self.alphabet)


def combinatorial_line(alpha, gamma, alphabet):
    return Line(alpha, tuple(gamma), alphabet).points()


def extended_line_points(line):
    return line.points()


def _nonempty_subsets(positions):
    for size in range(1, len(positions) + 1):
        yield from combinations(positions, size)


def enumerate_lines(N, alphabet, cap=DEFAULT_UNIVERSE_CAP):
    """Every classical combinatorial line inside ``[1..N]``, canonical order."""
    if cap is not None and universe_size(N, alphabet) > cap:
        raise ResourceLimit(f"universe for N={N} exceeds cap {cap}")
    full = tuple(range(1, N + 1))
    for gamma in _nonempty_subsets(full):
        rest = [p for p in full if p not in gamma]
        for alpha in words_on(rest, alphabet):
            yield Line(alpha, gamma, alphabet)


def enumerate_extended_lines(N, alphabet, family, cap=DEFAULT_UNIVERSE_CAP):
    """Every extended line with ``F`` in ``family`` and all parts inside ``[1..N]``.

    Lines come out ordered by ``F``, then ``gamma``, then ``alpha``.  A plain
    family yields classical lines instead.
    """
    if family.window > N:
        raise ValueError(f"family window {family.window} exceeds N={N}")
    if family.is_plain:
        yield from enumerate_lines(N, alphabet, cap)
        return
    if cap is not None and universe_size(N, alphabet) > cap:
        raise ResourceLimit(f"universe for N={N} exceeds cap {cap}")
    full = tuple(range(1, N + 1))
    for F in family.members():
        free = tuple(p for p in full if p not in F)
        for gamma in _nonempty_subsets(free):
            rest = [p for p in free if p not in gamma]
            for alpha in words_on(rest, alphabet):
                yield ExtendedLine(alpha, gamma, F, alphabet)


# integer configuration sets


def _products(factors, m_range):
    out = {}
    for m in m_range:
        for idx in combinations_with_replacement(range(len(factors)), m):
            value = 1
            for i in idx:
                value *= factors[i]
            out.setdefault(value, idx)
    return out


def geo_arith_set(k, a, b, d, include_empty=True, index_range=None, with_certificates=False):
    """``{b (a + i1 d) ... (a + im d)}`` over ``m`` and all ``i`` in ``0..k``.

    ``include_empty=False`` drops the ``m = 0`` term.  With
    ``with_certificates`` a dict ``value -> (m, (i1, ..., im))`` is returned.
    """
    for name, v in (("a", a), ("b", b), ("d", d)):
        if v < 1:
            raise ValueError(f"{name} must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    idx_range = tuple(range(k + 1)) if index_range is None else tuple(index_range)
    factors = [a + i * d for i in idx_range]
    m_range = range(0 if include_empty else 1, k + 1)
    prods = _products(factors, m_range)
    if with_certificates:
        return {b * v: (len(ii), tuple(idx_range[i] for i in ii)) for v, ii in prods.items()}
    return frozenset(b * v for v in prods)


def expand_certificate(a, b, d, cert):
    m, indices = cert
    if len(indices) != m:
        raise ValueError("certificate length mismatch")
    value = b
    for i in indices:
        value *= a + i * d
    return value


def s_grid(A, D, K, include_empty=True):
    """``{(A + i1 D) ... (A + im D)}`` over ``m`` and all ``i`` in ``0..K``."""
    return geo_arith_set(K, A, 1, D, include_empty=include_empty)


def power_grid(A, D, K, i_range=None, j_range=None):
    """``{(A + i D)^j}`` for ``i, j`` in ``0..K`` unless ranges are given."""
    if min(A, D, K) < 1:
        raise ValueError("A, D, K must be positive")
    i_range = range(K + 1) if i_range is None else i_range
    j_range = range(K + 1) if j_range is None else j_range
    return frozenset((A + i * D) ** j for i in i_range for j in j_range)


def bad_pattern_set(b, a, d, i_range=(0, 1, 2), j_range=(0, 1)):
    """``{b (a + i d)^j}`` over the given index ranges."""
    if min(a, b, d) < 1:
        raise ValueError("a, b, d must be positive")
    if not i_range or not j_range:
        raise ValueError("index ranges must be nonempty")
    return frozenset(b * (a + i * d) ** j for i in i_range for j in j_range)


def int_set_to_json(values):
    return [str(v) for v in sorted(values)]


def int_set_from_json(items):
    return frozenset(int(x) for x in items)
