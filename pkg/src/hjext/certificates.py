"""JSON certificates and their verifier.

The verifier re-derives everything from the certificate alone.  Lines are
rebuilt from their text form and checked by a plain scan over
:func:`enumerate_extended_lines`; it does not use the hypergraph or the
solver that produced the certificate, except to re-decide ``unsat``
claims that are too large to enumerate.
"""
from __future__ import annotations

import itertools
import json

from .configurations import (
    ConfigFamily,
    ExtendedLine,
    Line,
    enumerate_extended_lines,
    int_set_from_json,
    power_grid,
    s_grid,
)
from .search import Certificate, GridPattern, build_hypergraph, proper_coloring, verify_partition
from .words import Alphabet, LocatedWord, rank, universe_size

BRUTE_FORCE_LIMIT = 2**16


def dumps(cert):
    """Canonical text form: sorted keys, one trailing newline."""
    return json.dumps({"kind": cert.kind, **cert.payload}, sort_keys=True) + "\n"


def loads(text):
    obj = json.loads(text)
    kind = obj.pop("kind")
    return Certificate(kind, obj)


def _line_from(payload, alphabet):
    w = payload["witness"]
    alpha = LocatedWord.parse(w["alpha"])
    if w["F"]:
        return ExtendedLine(alpha, tuple(w["gamma"]), tuple(w["F"]), alphabet)
    return Line(alpha, tuple(w["gamma"]), alphabet)


def _monochrome(line, colors, N, alphabet):
    cs = {colors[rank(p, N, alphabet)] for p in line.points()}
    return next(iter(cs)) if len(cs) == 1 else None


def _check_coloring(p):
    N, alphabet, r = p["N"], Alphabet(p["alphabet"]), p["r"]
    colors = p["coloring"]
    if len(colors) != universe_size(N, alphabet):
        return "colouring length does not match the universe"
    if any(not (isinstance(c, int) and 1 <= c <= r) for c in colors):
        return f"colours outside 1..{r}"
    return None


def _verify_witness(p):
    problem = _check_coloring(p)
    if problem:
        return False, problem
    N, alphabet = p["N"], Alphabet(p["alphabet"])
    family = ConfigFamily.from_json(p["family"])
    try:
        line = _line_from(p, alphabet)
    except ValueError as exc:
        return False, f"malformed witness: {exc}"
    if family.is_plain != isinstance(line, Line):
        return False, "witness shape does not match the family"
    if not family.is_plain and line.F not in family.members():
        return False, f"F={list(line.F)} is not a family member"
    if max(line.gamma + line.F + line.alpha.positions()) > N:
        return False, "witness leaves [1..N]"
    colors = p["coloring"]
    c = _monochrome(line, colors, N, alphabet)
    if c is None or c != p["witness"]["color"]:
        return False, "witness is not monochrome in the stated colour"
    for other in enumerate_extended_lines(N, alphabet, family):
        if other == line:
            break
        if _monochrome(other, colors, N, alphabet) is not None:
            return False, "an earlier line is already monochrome"
    return True, "witness verified"


def _verify_proper(p):
    problem = _check_coloring(p)
    if problem:
        return False, problem
    N, alphabet = p["N"], Alphabet(p["alphabet"])
    family = ConfigFamily.from_json(p["family"])
    for line in enumerate_extended_lines(N, alphabet, family):
        if _monochrome(line, p["coloring"], N, alphabet) is not None:
            return False, f"line alpha={line.alpha} gamma={list(line.gamma)} F={list(line.F)} is monochrome"
    return True, "colouring avoids every line"


def _brute_force_colorable(hg, r):
    covered = sorted({v for e in hg.edges for v in e})
    pos = {v: i for i, v in enumerate(covered)}
    edges = [[pos[v] for v in e] for e in hg.edges]
    for assignment in itertools.product(range(r), repeat=len(covered)):
        if all(len({assignment[i] for i in e}) > 1 for e in edges):
            return True
    return False


def _verify_unsat(p):
    N, alphabet, r = p["N"], Alphabet(p["alphabet"]), p["r"]
    family = ConfigFamily.from_json(p["family"])
    hg = build_hypergraph(N, alphabet, family)
    covered = len({v for e in hg.edges for v in e})
    if r**covered <= BRUTE_FORCE_LIMIT:
        colorable = _brute_force_colorable(hg, r)
    else:
        colorable = proper_coloring(hg, r) is not None
    if colorable:
        return False, "an avoiding colouring exists"
    return True, f"no {r}-colouring avoids every line at N={N}"


def _verify_grid(p):
    grid = power_grid(p["A"], p["D"], p["K"]) if p["grid"] == "power" else s_grid(p["A"], p["D"], p["K"])
    cells = [frozenset(int_set_from_json(c)) for c in p["partition"]]
    if len(cells) != p["r"]:
        return False, "wrong number of cells"
    if sum(len(c) for c in cells) != len(grid) or frozenset().union(*cells) != grid:
        return False, "cells do not partition the grid"
    if not verify_partition(cells, GridPattern.from_json(p["pattern"])):
        return False, "a cell contains a pattern instance"
    return True, "partition avoids the pattern"


def _verify_minimal(p):
    at = p["at"]
    if at["kind"] != "unsat" or at["N"] != p["N"]:
        return False, "missing unsat certificate at N"
    ok, msg = verify(Certificate("unsat", {k: v for k, v in at.items() if k != "kind"}))
    if not ok:
        return False, f"at N: {msg}"
    below = p["below"]
    if p["N"] == 1:
        if below is not None:
            return False, "unexpected certificate below N=1"
        return True, "minimal N verified"
    if below is None or below["kind"] != "proper_coloring" or below["N"] != p["N"] - 1:
        return False, "missing avoiding colouring at N-1"
    ok, msg = verify(Certificate("proper_coloring", {k: v for k, v in below.items() if k != "kind"}))
    if not ok:
        return False, f"at N-1: {msg}"
    return True, "minimal N verified"


_VERIFIERS = {
    "witness": _verify_witness,
    "proper_coloring": _verify_proper,
    "unsat": _verify_unsat,
    "grid_partition": _verify_grid,
    "minimal_n": _verify_minimal,
}


def verify(cert):
    """Return ``(ok, message)`` for a certificate."""
    if isinstance(cert, str):
        cert = loads(cert)
    check = _VERIFIERS.get(cert.kind)
    if check is None:
        return False, f"unknown certificate kind {cert.kind!r}"
    try:
        return check(cert.payload)
    except (KeyError, TypeError, ValueError) as exc:
        return False, f"malformed certificate: {exc!r}"


def minimal_n_certificate(alphabet, r, family, N, below, at):
    """Bundle the certificates on both sides of a minimal ``N``."""

    def flat(c):
        return None if c is None else {"kind": c.kind, **c.payload}

    return Certificate(
        "minimal_n",
        {
            "N": N,
            "alphabet": alphabet.size,
            "r": r,
            "family": family.to_json(),
            "below": flat(below),
            "at": flat(at),
        },
    )
