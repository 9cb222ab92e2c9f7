"""Command line front end.

Exit status: 0 found or verified, 1 nothing found or refuted, 2 resource
limit reached, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import certificates
from .configurations import ConfigFamily, ap_family, plain_family
from .laws import (
    WindowSet,
    check_adequacy_sample,
    check_invariance,
    phi,
    pws_window_check,
    random_word,
    sample_law_violations,
    variable_line_family,
)
from .reductions import ModRule, Reduction, base_coloring_from_json, pullback_coloring, reduce
from .search import (
    DEFAULT_PARTITION_CAP,
    Coloring,
    Exceeded,
    GridPattern,
    build_hypergraph,
    export_cnf,
    find_witness,
    grid_counterexample_search,
    minimal_N_search,
)
from .words import (
    DEFAULT_UNIVERSE_CAP,
    Alphabet,
    LocatedWord,
    ResourceLimit,
    UndefinedProduct,
    combine,
    enumerate_universe,
)

EXIT_FOUND, EXIT_NONE, EXIT_LIMIT, EXIT_USAGE = 0, 1, 2, 3

log = logging.getLogger("hjext")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_family(spec, N):
    """``ap:<k>``, ``plain``, ``json:<object>`` or ``file:<path>``."""
    if spec == "plain":
        return plain_family(N)
    if spec.startswith("ap:"):
        k = int(spec[3:])
        return ap_family(k, N) if N >= k + 1 else ConfigFamily("ap", N, k=k)
    if spec.startswith("json:"):
        return ConfigFamily.from_json(json.loads(spec[5:])).at_window(N)
    if spec.startswith("file:"):
        return ConfigFamily.from_json(json.loads(Path(spec[5:]).read_text())).at_window(N)
    raise UsageError(f"bad family spec {spec!r}")


def parse_reduction(args):
    if args.reduce == "affine":
        if args.A is None or args.D is None:
            raise UsageError("--reduce affine needs --A and --D")
        return Reduction("affine", args.A, args.D)
    return Reduction(args.reduce)


def parse_coloring(spec, args, N, alphabet):
    """``const:<c>``, ``mod:<q>:<c1,c2,...>`` (pulled back via ``--reduce``) or ``file:<path>``."""
    if spec.startswith("const:"):
        c = int(spec[6:])
        return Coloring.constant(N, alphabet, c)
    if spec.startswith("mod:"):
        _, q, cs = spec.split(":")
        base = ModRule(int(q), tuple(int(c) for c in cs.split(",")))
        colors = pullback_coloring(parse_reduction(args), base, N, alphabet)
        return Coloring(N, alphabet, max(base.colors), colors)
    if spec.startswith("file:"):
        obj = json.loads(Path(spec[5:]).read_text())
        if "colors" in obj and "mod" not in obj:
            return Coloring(N, alphabet, int(obj.get("r", max(obj["colors"]))), obj["colors"])
        base = base_coloring_from_json(obj)
        colors = pullback_coloring(parse_reduction(args), base, N, alphabet)
        return Coloring(N, alphabet, max(colors), colors)
    raise UsageError(f"bad colouring spec {spec!r}")


def _int_range(text):
    if "-" in text:
        lo, hi = text.split("-")
        return range(int(lo), int(hi) + 1)
    if ".." in text:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def _int_list(text):
    return tuple(int(x) for x in text.split(",") if x)


def _emit(text, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args):
    alphabet = Alphabet(args.sigma, args.variable)
    if args.lines:
        hg = build_hypergraph(args.N, alphabet, parse_family(args.family, args.N))
        for line in hg.lines:
            print(f"alpha={line.alpha} gamma={list(line.gamma)} F={list(line.F)}")
        return EXIT_FOUND
    for w in enumerate_universe(args.N, alphabet, cap=args.cap):
        print(w)
    return EXIT_FOUND


def cmd_witness(args):
    alphabet = Alphabet(args.sigma)
    family = parse_family(args.family, args.N)
    coloring = parse_coloring(args.coloring, args, args.N, alphabet)
    cert = find_witness(coloring, family)
    if cert is None:
        print("no monochromatic line", file=sys.stderr)
        return EXIT_NONE
    _emit(certificates.dumps(cert), args.out)
    return EXIT_FOUND


def cmd_min_n(args):
    alphabet = Alphabet(args.sigma)
    family = parse_family(args.family, args.nmax)
    value, below, at = minimal_N_search(alphabet, args.r, family, args.nmax, jobs=args.jobs, cap=args.cap)
    if isinstance(value, Exceeded):
        print(f"exceeded N_max={value.N_max}")
        return EXIT_NONE
    print(value)
    if args.out:
        cert = certificates.minimal_n_certificate(alphabet, args.r, family.at_window(value), value, below, at)
        Path(args.out).write_text(certificates.dumps(cert))
    return EXIT_FOUND


def cmd_export_cnf(args):
    alphabet = Alphabet(args.sigma)
    hg = build_hypergraph(args.N, alphabet, parse_family(args.family, args.N), args.cap)
    _emit(export_cnf(hg, args.r), args.cnf)
    return EXIT_FOUND


def cmd_counterexample(args):
    pattern = None
    if args.box:
        box = dict(part.split(":") for part in args.box.split(","))
        pattern = GridPattern(
            _int_list(args.i_range),
            _int_list(args.j_range),
            *((r.start, r.stop - 1) for r in (_int_range(box[k]) for k in ("b", "a", "d"))),
        )
    elif (args.i_range, args.j_range) != ("0,1,2", "0,1"):
        raise UsageError("custom index ranges need an explicit --box")
    cert = grid_counterexample_search(
        args.K, _int_range(args.A), _int_range(args.D), pattern, r=args.r, grid_kind=args.grid, cap=args.partition_cap
    )
    if cert is None:
        print("no avoiding partition in the searched range", file=sys.stderr)
        return EXIT_NONE
    _emit(certificates.dumps(cert), args.out)
    return EXIT_FOUND


def cmd_verify(args):
    text = Path(args.certificate).read_text()
    try:
        cert = certificates.loads(text)
    except (ValueError, KeyError) as exc:
        print(f"refuted: unreadable certificate ({exc})")
        return EXIT_NONE
    ok, message = certificates.verify(cert)
    canonical = certificates.dumps(cert) == text
    print(("verified: " if ok else "refuted: ") + message + ("" if canonical else " (non-canonical encoding)"))
    return EXIT_FOUND if ok else EXIT_NONE


def cmd_reduce(args):
    args.reduce = args.kind
    print(reduce(parse_reduction(args), LocatedWord.parse(args.word)))
    return EXIT_FOUND


def _combinable(x, y):
    try:
        combine(x, y)
    except UndefinedProduct:
        return False
    return True


def cmd_laws(args):
    rng = random.Random(args.seed)
    alphabet = Alphabet(args.sigma)
    if args.check == "associativity":
        counts = sample_law_violations(args.samples, seed=args.seed, max_N=args.N, max_sigma=args.sigma)
        print(json.dumps(counts, sort_keys=True))
        return EXIT_FOUND if not any(counts.values()) else EXIT_NONE
    if args.check == "phi":
        universe = list(enumerate_universe(args.N, alphabet))
        bad = 0
        for _ in range(args.samples):
            x = rng.choice(universe)
            by_definition = phi(x, universe)
            by_filter = [y for y in universe if _combinable(x, y)]
            bad += by_definition != by_filter
        print(json.dumps({"phi_mismatches": bad}))
        return EXIT_FOUND if not bad else EXIT_NONE
    if args.check == "adequacy":
        fails = 0
        for _ in range(args.samples):
            F = [random_word(rng, args.N, alphabet, 0.3) for _ in range(rng.randint(1, 3))]
            fails += not check_adequacy_sample(F, args.N, alphabet)
        print(json.dumps({"not_adequate": fails, "note": f"not refuted at N={args.N}" if not fails else ""}))
        return EXIT_FOUND if not fails else EXIT_NONE
    if args.check == "invariance":
        family = variable_line_family(args.N, alphabet, parse_family(args.family, args.N))
        var_alphabet = alphabet.with_variable()
        sample = [random_word(rng, args.N, var_alphabet, 0.3) for _ in range(args.samples)]
        result = check_invariance(family, sample)
        if result:
            print(json.dumps({"invariant": True, "members": len(family), "samples": len(sample)}))
            return EXIT_FOUND
        print(json.dumps({"invariant": False, "side": result.side, "shift": str(result.shift)}))
        return EXIT_NONE
    fails = 0
    for _ in range(args.samples):
        M = rng.randint(1, args.M)
        A = WindowSet(M, frozenset(a for a in range(1, M + 1) if rng.random() < 0.3))
        fails += not pws_window_check(A, args.r, args.L)
    print(json.dumps({"windows": args.samples, "without_interval": fails}))
    return EXIT_FOUND


def build_parser():
    p = _Parser(prog="hjext", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, need_N=True):
        if need_N:
            sp.add_argument("--N", type=int, required=True)
        sp.add_argument("--sigma", type=int, required=True)
        sp.add_argument("--cap", type=int, default=DEFAULT_UNIVERSE_CAP)

    sp = sub.add_parser("enumerate", help="list the word universe or the lines of a family")
    common(sp)
    sp.add_argument("--variable", action="store_true", help="adjoin the variable symbol")
    sp.add_argument("--lines", action="store_true")
    sp.add_argument("--family", default="ap:1")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("witness", help="find a monochromatic line")
    common(sp)
    sp.add_argument("--family", required=True)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--reduce", choices=("additive", "multiplicative", "affine"), default="multiplicative")
    sp.add_argument("--A", type=int)
    sp.add_argument("--D", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("min-n", help="least N forcing a monochromatic line")
    common(sp, need_N=False)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--family", required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_min_n)

    sp = sub.add_parser("export-cnf", help="DIMACS encoding of the avoidance problem")
    common(sp)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--family", required=True)
    sp.add_argument("--cnf")
    sp.set_defaults(func=cmd_export_cnf)

    sp = sub.add_parser("counterexample", help="search grid partitions avoiding a pattern")
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--A", default="1-3")
    sp.add_argument("--D", default="1-3")
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--grid", choices=("power", "s"), default="power")
    sp.add_argument("--i-range", default="0,1,2")
    sp.add_argument("--j-range", default="0,1")
    sp.add_argument("--box", help="e.g. b:1-20,a:1-20,d:1-20 (default covers the grid)")
    sp.add_argument("--partition-cap", type=int, default=DEFAULT_PARTITION_CAP)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_counterexample)

    sp = sub.add_parser("verify", help="re-check a certificate")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("reduce", help="evaluate a reduction on a word")
    sp.add_argument("--kind", choices=("additive", "multiplicative", "affine"), required=True)
    sp.add_argument("--A", type=int)
    sp.add_argument("--D", type=int)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("laws", help="bounded checks of the structural laws")
    sp.add_argument("--check", choices=("associativity", "phi", "adequacy", "invariance", "pws"), required=True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--N", type=int, default=4)
    sp.add_argument("--sigma", type=int, default=2)
    sp.add_argument("--family", default="ap:1")
    sp.add_argument("--M", type=int, default=200)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--L", type=int, default=5)
    sp.set_defaults(func=cmd_laws)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        if exc.progress:
            print(f"progress: {exc.progress}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
