"""Exit criteria. Each test is one criterion; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import itertools
import time
from collections import Counter

from pointed_partitions import (
    Cell,
    decompose,
    distribution,
    gf_f,
    phi,
    pointed,
    remark_identity_gap,
    rho,
    to_tilde,
)
from pointed_partitions.enumeration import (
    pointed_partitions_of,
    verify_involution,
    verify_pealing,
    verify_supersymmetry,
    verify_symmetry,
    verify_zeta,
)

from .helpers import PAPER_LAMBDA, PAPER_MU
from .test_enumeration import FIGURE_2


def _check(report):
    assert report.passed, "\n".join([report.summary()] + report.failures)
    print(report.summary())


def test_criterion_1_worked_example(record_acceptance):
    start = time.perf_counter()
    pp = pointed(PAPER_LAMBDA, (6, 5))
    q = decompose(pp)
    tq = to_tilde(q)
    r = rho(tq)
    out = phi(pp)
    elapsed = time.perf_counter() - start
    assert tq.At.parts == (5, 3, 1)
    assert tuple(sorted(p for p in tq.Ct if p <= q.a + q.m)) == (5, 7, 8)
    assert tq.Ct.parts == (12, 10, 10, 9, 8, 7, 5)
    assert r.At.parts == (3, 1)
    assert r.D.parts == (4, 4, 4, 4, 4, 4)
    assert out.partition.parts == PAPER_MU
    assert out.cell == Cell(4, 7)
    assert elapsed < 1.0


def test_criterion_2_figure_2(record_acceptance):
    assert distribution(4, "hp").counts == dict(Counter(FIGURE_2.values()))
    assert sum(distribution(4, "hp").counts.values()) == 20


def test_criterion_3_involution(record_acceptance):
    start = time.perf_counter()
    report = verify_involution(14)
    elapsed = time.perf_counter() - start
    _check(report)
    assert report.checked == sum(len(pointed_partitions_of(n)) for n in range(15))
    assert elapsed < 30.0


def test_criterion_4_pealing(record_acceptance):
    _check(verify_pealing(18, 4, 4))


def test_criterion_5_generating_function(record_acceptance):
    N = 25
    tables = [distribution(n, "alm") for n in range(N + 1)]
    for a, l, m in itertools.product(range(4), repeat=3):
        series = gf_f(a, l, m, N)
        assert list(series) == [tables[n].get((a, l, m)) for n in range(N + 1)], (a, l, m)


def test_criterion_6_remark_identity(record_acceptance):
    for a in range(6):
        for m in range(1, 6):
            assert remark_identity_gap(a, m, 40).is_zero(), (a, m)


def test_criterion_7_symmetry_and_supersymmetry(record_acceptance):
    _check(verify_symmetry(14))
    _check(verify_supersymmetry(14))


def test_criterion_8_zeta(record_acceptance):
    _check(verify_zeta(12, 4))
