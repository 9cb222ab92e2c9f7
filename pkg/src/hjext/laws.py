"""Bounded checks of the structural definitions behind the search.

Everything here works on a finite universe or window, so a passing check
means "not refuted at this scale", never a proof of the infinite property.
The piecewise-syndetic test is the combinatorial one for the integers:
finitely many translates of a set cover a long interval.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .configurations import enumerate_extended_lines
from .words import (
    VAR,
    Alphabet,
    LocatedWord,
    UndefinedProduct,
    combine,
    enumerate_universe,
    is_defined,
    place,
    substitute,
)


def phi(x, universe):
    """Words ``y`` of ``universe`` for which ``x`` combined with ``y`` is defined."""
    dom = x.dom
    return [y for y in universe if dom.isdisjoint(y.dom)]


def check_adequacy_sample(F, N, alphabet, include_empty=True):
    """True iff the ``phi`` sets of all words in ``F`` share a word of the ``N``-universe."""
    used = set()
    for x in F:
        used |= x.dom
    for y in enumerate_universe(N, alphabet):
        if not y and not include_empty:
            continue
        if used.isdisjoint(y.dom):
            return True
    return False


@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    side: str | None = None
    shift: LocatedWord | None = None
    member: frozenset | None = None

    def __bool__(self):
        return self.ok


def _translate(s, member, left):
    out = []
    for f in member:
        if not is_defined(s, f):
            return None
        out.append(combine(s, f) if left else combine(f, s))
    return frozenset(out)


def check_invariance(family, sample):
    """Check closure of ``family`` (sets of words) under defined translations.

    For every ``s`` in ``sample`` and member ``F``: if ``s`` can be combined
    with every element of ``F`` (on the left, resp. right), the translate
    must again be a member.  Returns the first violation found.
    """
    members = {frozenset(m) for m in family}
    for s in sample:
        for member in sorted(members, key=lambda m: sorted(w.sort_key for w in m)):
            for side, left in (("left", True), ("right", False)):
                moved = _translate(s, member, left)
                if moved is not None and moved not in members:
                    return InvarianceResult(False, side, s, member)
    return InvarianceResult(True)


def variable_line_family(N, alphabet, family):
    """Sets ``{beta ∪ {(t, v)} : t in F}`` with ``beta`` a variable word inside ``[1..N]``.

    Writing ``beta = alpha ∪ gamma × {v}`` these are exactly the extended
    lines of the variable alphabet evaluated at the variable.
    """
    out = []
    for line in enumerate_extended_lines(N, alphabet, family):
        out.append(frozenset(place(line.alpha, line.gamma + (t,), VAR) for t in line.F))
    return out


@dataclass(frozen=True)
class WindowSet:
    M: int
    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if self.M < 1:
            raise ValueError("M must be positive")
        if any(not 1 <= a <= self.M for a in members):
            raise ValueError(f"members must lie in [1..{self.M}]")


def pws_window_check(A, r, L):
    """True iff ``∪_{n=1..r} (A - n)`` contains ``L`` consecutive integers."""
    if r < 1 or L < 1:
        raise ValueError("r and L must be positive")
    covered = {a - n for a in A.members for n in range(1, r + 1)}
    run = best = 0
    prev = None
    for x in sorted(covered):
        run = run + 1 if prev is not None and x == prev + 1 else 1
        best = max(best, run)
        prev = x
    return best >= L


# random sampling for the partial semigroup laws


def random_word(rng, N, alphabet, density=0.5):
    symbols = alphabet.symbols
    return LocatedWord((p, rng.choice(symbols)) for p in range(1, N + 1) if rng.random() < density)


def _try(a, b):
    try:
        return combine(a, b)
    except UndefinedProduct:
        return None


def associativity_violations(a, b, c):
    """Violations of the partial associativity and symmetry laws for one triple."""
    out = []
    ab = _try(a, b)
    bc = _try(b, c)
    left = _try(ab, c) if ab is not None else None
    right = _try(a, bc) if bc is not None else None
    if (left is None) != (right is None) or left != right:
        out.append("associativity")
    if _try(a, b) != _try(b, a):
        out.append("symmetry")
    return out


def homomorphism_violations(a, b, alphabet):
    """Substitution must commute with combination whenever the product is defined."""
    ab = _try(a, b)
    if ab is None:
        return []
    out = []
    for s in range(alphabet.size):
        sa, sb = substitute(s, a), substitute(s, b)
        if not is_defined(sa, sb) or combine(sa, sb) != substitute(s, ab):
            out.append(f"substitute {s}")
    return out


def sample_law_violations(samples, seed=0, max_N=8, max_sigma=3):
    """Random triples over variable alphabets; returns ``{law: count}``."""
    rng = random.Random(seed)
    counts = {"associativity": 0, "symmetry": 0, "homomorphism": 0}
    for _ in range(samples):
        N = rng.randint(1, max_N)
        alphabet = Alphabet(rng.randint(1, max_sigma), has_variable=True)
        density = rng.choice((0.15, 0.3, 0.5))
        a, b, c = (random_word(rng, N, alphabet, density) for _ in range(3))
        for law in associativity_violations(a, b, c):
            counts[law] += 1
        if homomorphism_violations(a, b, alphabet):
            counts["homomorphism"] += 1
    return counts
