"""Located words over a finite alphabet.

A located word is a finite partial map from positions ``1, 2, ...`` to
symbols.  Constant symbols are the integers ``0..size-1``; the variable
symbol :data:`VAR` is an out-of-band marker that is never an integer.

Words are immutable and hashable.  Their canonical order is by domain
size, then lexicographic on the sorted ``(position, symbol)`` entries with
the variable ordered after every constant.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

DEFAULT_UNIVERSE_CAP = 2**20


class UndefinedProduct(ValueError):
    """Raised when two words with intersecting domains are combined."""


class NotAVariableWord(ValueError):
    pass


class ResourceLimit(RuntimeError):
    """A configured enumeration or search cap would be exceeded."""

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class OutOfRange(IndexError):
    pass


class _Variable:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "v"

    def __reduce__(self):
        return (_Variable, ())


VAR = _Variable()


def _symbol_key(s):
    # the variable sorts after every constant
    return (1, 0) if s is VAR else (0, s)


@dataclass(frozen=True)
class Alphabet:
    size: int
    has_variable: bool = False

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError(f"alphabet size must be a positive integer, got {self.size!r}")

    @property
    def symbols(self):
        """Symbols in canonical order (constants ascending, then the variable)."""
        syms = tuple(range(self.size))
        return syms + (VAR,) if self.has_variable else syms

    def with_variable(self):
        return Alphabet(self.size, True)

    def contains(self, s):
        if s is VAR:
            return self.has_variable
        return isinstance(s, int) and 0 <= s < self.size


class LocatedWord:
    """Immutable finite map ``position -> symbol``."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries=()):
        if isinstance(entries, LocatedWord):
            items = entries._entries
        else:
            if isinstance(entries, dict):
                entries = entries.items()
            items = tuple(sorted(entries, key=lambda e: e[0]))
            for i, (p, s) in enumerate(items):
                if not isinstance(p, int) or p < 1:
                    raise ValueError(f"positions must be positive integers, got {p!r}")
                if not (s is VAR or (isinstance(s, int) and s >= 0)):
                    raise ValueError(f"bad symbol {s!r} at position {p}")
                if i and items[i - 1][0] == p:
                    raise ValueError(f"position {p} occurs twice")
        object.__setattr__(self, "_entries", items)
        object.__setattr__(self, "_hash", hash(items))

    def __setattr__(self, name, value):
        raise AttributeError("LocatedWord is immutable")

    def __reduce__(self):
        return (LocatedWord, (self._entries,))

    @property
    def entries(self):
        return self._entries

    @property
    def dom(self):
        return frozenset(p for p, _ in self._entries)

    def positions(self):
        return tuple(p for p, _ in self._entries)

    def as_dict(self):
        return dict(self._entries)

    def get(self, p, default=None):
        for q, s in self._entries:
            if q == p:
                return s
        return default

    def __getitem__(self, p):
        s = self.get(p, _MISSING)
        if s is _MISSING:
            raise KeyError(p)
        return s

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __iter__(self):
        return iter(self._entries)

    @property
    def has_variable(self):
        return any(s is VAR for _, s in self._entries)

    @property
    def sort_key(self):
        return (len(self._entries), tuple((p, _symbol_key(s)) for p, s in self._entries))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __le__(self, other):
        return self.sort_key <= other.sort_key

    def __eq__(self, other):
        if not isinstance(other, LocatedWord):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "{" + ",".join(f"{p}:{'v' if s is VAR else s}" for p, s in self._entries) + "}"

    def __repr__(self):
        return f"LocatedWord({self})"

    @classmethod
    def parse(cls, text):
        """Parse the ``{pos:sym,...}`` text form (``v`` is the variable)."""
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ValueError(f"not a located word: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return EMPTY
        entries = []
        for part in body.split(","):
            m = _ENTRY_RE.fullmatch(part.strip())
            if m is None:
                raise ValueError(f"bad entry {part!r} in {text!r}")
            sym = VAR if m.group(2) == "v" else int(m.group(2))
            entries.append((int(m.group(1)), sym))
        return cls(entries)


_MISSING = object()
_ENTRY_RE = re.compile(r"(\d+)\s*:\s*(v|\d+)")
EMPTY = LocatedWord()


def combine(a, b):
    """The partial operation: union of ``a`` and ``b`` if their domains are disjoint."""
    if a.dom & b.dom:
        raise UndefinedProduct(f"{a} and {b} have overlapping domains")
    return LocatedWord(a.entries + b.entries)


def is_defined(a, b):
    return a.dom.isdisjoint(b.dom)


def substitute(s, w):
    """Replace every occurrence of the variable in ``w`` by the constant ``s``."""
    if s is VAR or not isinstance(s, int) or s < 0:
        raise ValueError(f"substitution symbol must be a constant, got {s!r}")
    if not w.has_variable:
        return w
    return LocatedWord(tuple((p, s if c is VAR else c) for p, c in w.entries))


def place(alpha, gamma, s):
    """Return ``alpha`` extended by symbol ``s`` on every position of ``gamma``."""
    return combine(alpha, LocatedWord((p, s) for p in gamma))


def decompose_variable_word(w):
    """Split a variable word into its constant part and the set of variable positions."""
    gamma = frozenset(p for p, s in w.entries if s is VAR)
    if not gamma:
        raise NotAVariableWord(f"{w} contains no variable")
    alpha = LocatedWord(tuple(e for e in w.entries if e[1] is not VAR))
    return alpha, gamma


def universe_size(N, alphabet):
    return (len(alphabet.symbols) + 1) ** N


def _check_universe(N, alphabet, cap):
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    size = universe_size(N, alphabet)
    if cap is not None and size > cap:
        raise ResourceLimit(f"universe of {size} words exceeds cap {cap}")
    return size


def _words_of_size(start, N, m, symbols):
    if m == 0:
        yield ()
        return
    for p in range(start, N - m + 2):
        for s in symbols:
            for rest in _words_of_size(p + 1, N, m - 1, symbols):
                yield ((p, s),) + rest


def enumerate_universe(N, alphabet, cap=DEFAULT_UNIVERSE_CAP):
    """Yield every word with domain inside ``{1..N}`` in canonical order."""
    _check_universe(N, alphabet, cap)
    symbols = alphabet.symbols
    for m in range(N + 1):
        for entries in _words_of_size(1, N, m, symbols):
            yield LocatedWord(entries)


def words_on(positions, alphabet):
    """Yield every word whose domain is a subset of ``positions``, canonical order."""
    positions = sorted(positions)
    symbols = alphabet.symbols

    def rec(idx, m):
        if m == 0:
            yield ()
            return
        for i in range(idx, len(positions) - m + 1):
            for s in symbols:
                for rest in rec(i + 1, m - 1):
                    yield ((positions[i], s),) + rest

    for m in range(len(positions) + 1):
        for entries in rec(0, m):
            yield LocatedWord(entries)


def rank(w, N, alphabet):
    """Index of ``w`` in :func:`enumerate_universe` order."""
    symbols = alphabet.symbols
    c = len(symbols)
    if any(p > N for p in w.positions()):
        raise OutOfRange(f"{w} is not inside [1..{N}]")
    index = {s: i for i, s in enumerate(symbols)}
    m = len(w)
    r = sum(comb(N, j) * c**j for j in range(m))
    prev, left = 0, m
    for p, s in w.entries:
        if s not in index:
            raise OutOfRange(f"symbol {s!r} not in alphabet")
        block = comb(N - p, left - 1) * c ** (left - 1)
        for q in range(prev + 1, p):
            r += c * comb(N - q, left - 1) * c ** (left - 1)
        r += index[s] * block
        prev, left = p, left - 1
    return r


def unrank(i, N, alphabet):
    """Inverse of :func:`rank`."""
    symbols = alphabet.symbols
    c = len(symbols)
    if not 0 <= i < (c + 1) ** N:
        raise OutOfRange(f"rank {i} outside universe of size {(c + 1) ** N}")
    m = 0
    while True:
        n_m = comb(N, m) * c**m
        if i < n_m:
            break
        i -= n_m
        m += 1
    entries = []
    p, left = 1, m
    while left:
        block = comb(N - p, left - 1) * c ** (left - 1)
        if i < c * block:
            entries.append((p, symbols[i // block]))
            i %= block
            left -= 1
        else:
            i -= c * block
        p += 1
    return LocatedWord(entries)
