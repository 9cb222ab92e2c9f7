import json

from hjext import certificates
from hjext.configurations import ap_family, plain_family
from hjext.search import Coloring, decide, find_witness, grid_counterexample_search, minimal_N_search
from hjext.words import Alphabet

S1, S2 = Alphabet(1), Alphabet(2)


def _edit(cert, fn):
    obj = json.loads(certificates.dumps(cert))
    fn(obj)
    return json.dumps(obj, sort_keys=True) + "\n"


def test_dumps_is_canonical():
    cert = decide(3, S2, 2, ap_family(1, 3))
    text = certificates.dumps(cert)
    assert text.endswith("\n")
    assert certificates.dumps(certificates.loads(text)) == text


def test_witness_round_trip_and_tampering():
    cert = find_witness(Coloring.constant(3, S2, 1), ap_family(1, 3))
    assert certificates.verify(cert)[0]

    def recolor(obj):
        obj["coloring"][obj["coloring"].index(1)] = 2
        obj["r"] = 2

    tampered = _edit(cert, recolor)
    # either a point of the witness now has colour 2, or an earlier line was skipped
    c2 = find_witness(Coloring(3, S2, 2, json.loads(tampered)["coloring"]), ap_family(1, 3))
    ok = certificates.verify(tampered)[0]
    assert ok == (c2 is not None and c2.payload["witness"] == cert.payload["witness"])


def test_witness_not_least_is_refuted():
    cert = find_witness(Coloring.constant(3, S2, 1), ap_family(1, 3))

    def later(obj):
        obj["witness"]["F"] = [2, 3]
        obj["witness"]["gamma"] = [1]

    assert not certificates.verify(_edit(cert, later))[0]


def test_proper_and_unsat():
    sat = decide(4, S2, 2, ap_family(1, 4))
    assert sat.kind == "proper_coloring" and certificates.verify(sat)[0]

    def flip(obj):
        obj["coloring"] = [1] * len(obj["coloring"])

    assert not certificates.verify(_edit(sat, flip))[0]
    unsat = decide(2, S2, 2, plain_family(2))
    assert unsat.kind == "unsat" and certificates.verify(unsat)[0]

    def lie(obj):
        obj["N"] = 1

    assert not certificates.verify(_edit(unsat, lie))[0]


def test_grid_partition():
    cert = grid_counterexample_search(2, [1], [1])
    assert certificates.verify(cert)[0]

    def merge(obj):
        obj["partition"] = [sorted(obj["partition"][0] + obj["partition"][1], key=int), []]

    assert not certificates.verify(_edit(cert, merge))[0]


def test_minimal_n_certificate():
    N, below, at = minimal_N_search(S1, 2, ap_family(1, 2), 5)
    cert = certificates.minimal_n_certificate(S1, 2, ap_family(1, N), N, below, at)
    assert certificates.verify(cert)[0]

    def drop(obj):
        obj["below"] = None

    assert not certificates.verify(_edit(cert, drop))[0]


def test_unknown_and_malformed():
    assert not certificates.verify('{"kind": "nope"}')[0]
    assert not certificates.verify('{"kind": "witness"}')[0]
