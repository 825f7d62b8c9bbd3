"""Acceptance gate: every shipped criterion, one printed line each.

Each test runs one criterion at its stated scale and prints a single
PASS/FAIL line so the whole gate can be audited from the pytest -v
output.  Everything is exact; there are no tolerances to tune.
"""

import io
import json
import random

from qmpairs.scalars import LaurentScalar, q_pow, r_pow
from qmpairs.algebra import (
    TYPE_I, TYPE_II, TYPE_III, Element, generator, oracle_reduce,
    NonReducible, BetaDegreeExceeded,
)
from qmpairs.matrices import generator_matrix, closed_power
from qmpairs.pairs import (
    generator_pair, rescale_pair, verify_pair, verify_prop1, verify_prop2,
    verify_prop3, verify_theorem1, verify_theorem2,
)
from qmpairs.modular import verify_theorem3
from qmpairs.mq2 import (
    generator_full_matrix, check_R, fm_pow, verify_results,
    verify_pbw_smoke,
)
from qmpairs.cli import main

FAMILIES = (TYPE_I, TYPE_II, TYPE_III)


def _gate(number, label, ok):
    print("ACCEPTANCE %d %s: %s" % (number, "PASS" if ok else "FAIL", label))
    assert ok, "criterion %d failed: %s" % (number, label)


def _clean(reports):
    return all(r.ok() for r in reports)


def test_criterion_1_power_relations():
    ok = all(_clean(verify_prop1(fam, 4)) for fam in FAMILIES)
    _gate(1, "two-generator power relations, |n|,|m| <= 4, all families", ok)


def test_criterion_2_closed_powers():
    ok = all(_clean(verify_prop3(fam, 5)) for fam in FAMILIES)
    corner = generator_matrix(1, TYPE_III).pow(2).a12
    expected = (generator("b1", 1, TYPE_III)
                * generator("g1", 1, TYPE_III)).scale(1 + r_pow(1))
    ok = ok and corner == expected
    ok = ok and all(
        generator_matrix(i, fam).pow(n) == closed_power(i, n, fam)
        for fam in FAMILIES for i in (1, 2) for n in range(-5, 6))
    _gate(2, "closed power forms |n| <= 5 and the (1+r) square corner", ok)


def test_criterion_3_product_matrix_relations():
    ok = all(_clean(verify_theorem1(fam, 4)) for fam in (TYPE_I, TYPE_II))
    reports = verify_theorem1(TYPE_III, 4)
    ok = ok and _clean(reports)
    probes = [r for r in reports if r.expected]
    ok = ok and len(probes) == 17
    ok = ok and all(r.status == "violated" for r in probes)
    _gate(3, "product-matrix internal relations |n|,|m| <= 4 with the "
             "off-diagonal witness refuted for all |k| <= 8", ok)


def test_criterion_4_derived_pairs():
    ok = all(_clean(verify_theorem2(fam, 3)) for fam in FAMILIES)
    _gate(4, "derived pairs pass full suites, |n,m,s,t| <= 3 "
             "(diagonal |n| <= 3 where r survives)", ok)


def test_criterion_5_word_action():
    ok = all(_clean(verify_theorem3(fam)) for fam in (TYPE_I, TYPE_II))
    _gate(5, "S^4 and (ST)^3 act as identity, intermediate pinned, "
             "50-word exponent correspondence", ok)


def test_criterion_6_derived_diagonal_and_rescaling():
    ok = _clean(verify_prop2(4))
    choices = (
        (q_pow(3), LaurentScalar.one()),
        (LaurentScalar.monomial(-1, 1, 0), q_pow(-2)),
        (LaurentScalar.monomial(1, 2, 1), LaurentScalar.monomial(-1, 0, 2)),
    )
    for fam in FAMILIES:
        for c1, c2 in choices:
            ok = ok and _clean(verify_pair(rescale_pair(
                generator_pair(fam), c1, c2)))
    _gate(6, "diagonal relations derived to range 4; rescaled pairs pass "
             "for three scalar choices", ok)


def test_criterion_7_background_engine():
    reports = verify_results(3)
    ok = _clean(reports)
    ok = ok and _clean(check_R(fm_pow(generator_full_matrix(), 4), 8))
    ok = ok and _clean(verify_pbw_smoke(word_count=300, max_length=6,
                                        seed=20260816))
    _gate(7, "background power grids |n| <= 3 (direct to 4), determinant "
             "centrality, exact inverse, 300-word order independence", ok)


def test_criterion_8_oracle_equivalence():
    rng = random.Random(20260816)
    names = ("a1", "a2", "g1", "g2", "b1", "b2")
    admissible = 0
    ok = True
    while admissible < 500:
        family = rng.choice(FAMILIES)
        word = []
        corner_used = False
        for _ in range(rng.randint(1, 5)):
            name = rng.choice(names)
            if name.startswith("b"):
                if corner_used:
                    name = rng.choice(names[:4])
                else:
                    corner_used = True
            exp = 1 if name.startswith("b") else rng.choice((-2, -1, 1, 2))
            word.append((name, exp))
        try:
            bulk = Element.one(family)
            for name, exp in word:
                bulk = bulk * generator(name, exp, family)
        except (NonReducible, BetaDegreeExceeded):
            continue
        admissible += 1
        ok = ok and oracle_reduce(word, family) == bulk
    _gate(8, "500 admissible words reduce identically in kernel and "
             "naive rewriter", ok)


def test_criterion_9_cli_contract():
    def run(argv):
        out = io.StringIO()
        return main(argv, out=out), out.getvalue()

    ok = run(["verify", "--suite", "theorem1", "--type", "I",
              "--range", "3"])[0] == 0
    ok = ok and run(["verify", "--suite", "theorem3", "--type", "II"])[0] == 0
    ok = ok and run(["reduce", "--type", "II", "b1 * b2"])[0] == 1
    ok = ok and run(["reduce", "--type", "I", "a1 +"])[0] == 2
    ok = ok and run(["verify", "--suite", "prop1"])[0] == 2
    argv = ["verify", "--suite", "all", "--type", "I", "--range", "2",
            "--format", "json"]
    first, second = run(argv), run(argv)
    ok = ok and first == second and first[0] == 0
    schema = {"suite", "family", "params", "relation", "status",
              "expected", "lhs", "rhs"}
    for line in first[1].splitlines():
        ok = ok and set(json.loads(line)) == schema
    _gate(9, "CLI exit codes 0/1/2 per contract and byte-identical "
             "JSON reports", ok)
