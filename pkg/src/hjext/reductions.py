"""Maps from constant words to positive integers, and pullback colourings.

Three reductions are provided.  Symbol values are read as integers, so the
alphabet ``{0, ..., k}`` is realised by indices ``0..k``.

* additive:        ``w -> 1 + sum(w(t))``
* multiplicative:  ``w -> prod(t ** w(t))``
* affine(A, D):    ``w -> prod((A + t D) ** w(t))``

Under the multiplicative and affine maps an extended line with
``F = {a, a+d, ..., a+kd}`` lands on ``{b (a' + i d')^j}`` for integers
computed by :func:`derived_params`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .words import enumerate_universe, place


class VariableInConstantReduction(ValueError):
    pass


class UnsupportedKind(ValueError):
    pass


class MissingBaseColor(KeyError):
    pass


@dataclass(frozen=True)
class Reduction:
    kind: str
    A: int | None = None
    D: int | None = None

    def __post_init__(self):
        if self.kind not in ("additive", "multiplicative", "affine"):
            raise ValueError(f"unknown reduction kind {self.kind!r}")
        if self.kind == "affine":
            if self.A is None or self.D is None or self.A < 1 or self.D < 1:
                raise ValueError("affine reduction needs A, D >= 1")

    def base(self, t):
        """Integer that position ``t`` contributes as a factor."""
        if self.kind == "affine":
            return self.A + t * self.D
        return t

    def __call__(self, w):
        return reduce(self, w)

    def to_json(self):
        if self.kind == "affine":
            return {"kind": "affine", "A": self.A, "D": self.D}
        return {"kind": self.kind}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["kind"], obj.get("A"), obj.get("D"))


ADDITIVE = Reduction("additive")
MULTIPLICATIVE = Reduction("multiplicative")


def affine(A, D):
    return Reduction("affine", A, D)


@dataclass(frozen=True)
class DerivedTriple:
    b_bar: int
    a_bar: int
    d_bar: int

    def point(self, i, j):
        return self.b_bar * (self.a_bar + i * self.d_bar) ** j

    def configuration(self, i_range, j_range):
        return frozenset(self.point(i, j) for i in i_range for j in j_range)


def reduce(kind, w):
    if w.has_variable:
        raise VariableInConstantReduction(f"{w} contains the variable")
    if kind.kind == "additive":
        return 1 + sum(s for _, s in w.entries)
    return prod(kind.base(t) ** s for t, s in w.entries)


def additive_params(alpha, gamma):
    """``(f(alpha), |gamma|)``: start and step of the additive image of a line."""
    return reduce(ADDITIVE, alpha), len(set(gamma))


def derived_params(kind, alpha, gamma, a, d):
    if kind.kind == "additive":
        raise UnsupportedKind("additive reduction has no (b, a, d) triple; use additive_params")
    if a < 1 or d < 1:
        raise ValueError("a and d must be positive")
    gamma = set(gamma)
    if alpha.dom & gamma:
        raise ValueError("dom alpha and gamma overlap")
    g = prod(kind.base(t) for t in gamma)
    b_bar = reduce(kind, alpha)
    if kind.kind == "multiplicative":
        return DerivedTriple(b_bar, a * g, d * g)
    return DerivedTriple(b_bar, kind.base(a) * g, d * kind.D * g)


def identity_check(kind, alpha, gamma, a=1, d=1, i=0, j=0):
    """Compare the reduction of an assembled word with its closed form.

    For the additive map the word is ``alpha ∪ gamma × {i}`` and the closed
    form ``f(alpha) + i |gamma|``.  Otherwise the word is
    ``alpha ∪ (gamma ∪ {a + i d}) × {j}`` and the closed form
    ``b (a' + i d')^j``.
    """
    gamma = tuple(gamma)
    if kind.kind == "additive":
        start, step = additive_params(alpha, gamma)
        return reduce(kind, place(alpha, gamma, i)) == start + i * step
    word = place(alpha, gamma + (a + i * d,), j)
    return reduce(kind, word) == derived_params(kind, alpha, gamma, a, d).point(i, j)


@dataclass(frozen=True)
class ModRule:
    """Colour ``n`` by ``colors[n % q]``."""

    q: int
    colors: tuple

    def __post_init__(self):
        if self.q < 1 or len(self.colors) != self.q:
            raise ValueError("mod rule needs q >= 1 and exactly q colours")

    def __getitem__(self, n):
        return self.colors[n % self.q]

    def to_json(self):
        return {"mod": self.q, "colors": list(self.colors)}


def base_coloring_from_json(obj):
    if "mod" in obj:
        return ModRule(int(obj["mod"]), tuple(int(c) for c in obj["colors"]))
    if "map" in obj:
        return {int(k): int(v) for k, v in obj["map"].items()}
    raise ValueError("base colouring needs a 'mod' or 'map' field")


def pullback_coloring(kind, base, N, alphabet):
    """Colour every word of the ``N``-universe by ``base[reduce(kind, w)]``.

    Returns the list of colours in universe rank order.  ``base`` is any
    mapping-like object (a dict or a :class:`ModRule`).
    """
    colors = []
    for w in enumerate_universe(N, alphabet):
        n = reduce(kind, w)
        try:
            colors.append(base[n])
        except KeyError:
            raise MissingBaseColor(f"base colouring has no colour for {n} (word {w})") from None
    return colors


__all__ = [
    "ADDITIVE",
    "MULTIPLICATIVE",
    "DerivedTriple",
    "MissingBaseColor",
    "ModRule",
    "Reduction",
    "UnsupportedKind",
    "VariableInConstantReduction",
    "additive_params",
    "affine",
    "base_coloring_from_json",
    "derived_params",
    "identity_check",
    "pullback_coloring",
    "reduce",
]
