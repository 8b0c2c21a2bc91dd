import itertools
from collections import Counter

import pytest

from pointed_partitions import (
    Partition,
    distribution,
    f_count,
    partitions_of,
    phi,
    pointed_partitions_of,
    q_pochhammer_inv,
    stats,
)
from pointed_partitions.enumeration import (
    VerifyReport,
    verify_decomposition,
    verify_gf,
    verify_involution,
    verify_pealing,
    verify_remark,
    verify_supersymmetry,
    verify_symmetry,
    verify_tau,
    verify_zeta,
)

from .helpers import brute_partitions

# (h, p) per cell of every partition of 4, read off the labelled diagrams in Figure 2
FIGURE_2 = {
    ((1, 1, 1, 1), (1, 1)): (4, 1),
    ((1, 1, 1, 1), (1, 2)): (3, 1),
    ((1, 1, 1, 1), (1, 3)): (2, 1),
    ((1, 1, 1, 1), (1, 4)): (1, 1),
    ((2, 1, 1), (1, 1)): (4, 2),
    ((2, 1, 1), (2, 1)): (1, 2),
    ((2, 1, 1), (1, 2)): (2, 1),
    ((2, 1, 1), (1, 3)): (1, 1),
    ((2, 2), (1, 1)): (3, 2),
    ((2, 2), (2, 1)): (2, 2),
    ((2, 2), (1, 2)): (2, 2),
    ((2, 2), (2, 2)): (1, 2),
    ((3, 1), (1, 1)): (4, 3),
    ((3, 1), (2, 1)): (2, 3),
    ((3, 1), (3, 1)): (1, 3),
    ((3, 1), (1, 2)): (1, 1),
    ((4,), (1, 1)): (4, 4),
    ((4,), (2, 1)): (3, 4),
    ((4,), (3, 1)): (2, 4),
    ((4,), (4, 1)): (1, 4),
}


def test_partitions_of_4():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_0():
    assert partitions_of(0) == [Partition()]


@pytest.mark.parametrize("n", range(13))
def test_partitions_of_matches_brute(n):
    assert [p.parts for p in partitions_of(n)] == brute_partitions(n)


def test_partition_counts_match_series():
    series = q_pochhammer_inv(1, 20)
    assert len(partitions_of(10)) == 42
    assert [len(partitions_of(n)) for n in range(21)] == list(series)


def test_partitions_of_max_part():
    assert [p.parts for p in partitions_of(5, max_part=2)] == [(2, 2, 1), (2, 1, 1, 1), (1,) * 5]


def test_pointed_partitions_small():
    assert len(pointed_partitions_of(4)) == 20
    assert [(pp.partition.parts, tuple(pp.cell)) for pp in pointed_partitions_of(1)] == [((1,), (1, 1))]
    assert pointed_partitions_of(0) == []


@pytest.mark.parametrize("n", range(11))
def test_pointed_partitions_count(n):
    pps = pointed_partitions_of(n)
    assert len(pps) == len(set(pps)) == sum(sum(p) for p in brute_partitions(n))
    assert len(pps) == n * len(brute_partitions(n))


def test_figure_2_per_cell():
    got = {(pp.partition.parts, tuple(pp.cell)): (stats(*pp).hook, stats(*pp).part_len) for pp in pointed_partitions_of(4)}
    assert got == FIGURE_2


def test_distribution_hp_4():
    table = distribution(4, "hp")
    assert table.counts == dict(Counter(FIGURE_2.values()))
    assert table.get((1, 1)) == 3
    assert table.total == 20


def test_distribution_1():
    assert distribution(1, "hp").counts == {(1, 1): 1}


def test_distribution_alm_symmetric_7():
    table = distribution(7, "alm")
    for (a, l, m), c in table.counts.items():
        assert table.get((a, m, l)) == c


@pytest.mark.parametrize("n", range(11))
def test_distribution_totals(n):
    for kind in ("alm", "hp", "am", "al"):
        assert distribution(n, kind).total == n * len(brute_partitions(n))


def test_distribution_unknown_kind():
    with pytest.raises(ValueError):
        distribution(3, "xy")


def test_dist_table_serialization():
    table = distribution(2, "hp")
    assert table.to_tsv() == "h\tp\tcount\n1\t1\t1\n1\t2\t1\n2\t1\t1\n2\t2\t1\n"
    js = table.to_json()
    assert js["rows"][0] == {"h": 1, "p": 1, "count": 1}
    assert distribution(3, "alm").to_tsv().splitlines()[0] == "a\tl\tm\tcount"


def test_f_count_examples():
    assert f_count(4, 0, 0, 0) == 3
    assert f_count(4, 3, 0, 0) == 1
    for a, l, m in itertools.product(range(3), repeat=3):
        for n in range((m + 1) * (l + 1) + a):
            assert f_count(n, a, l, m) == 0


def test_hp_table_symmetric():
    for n in range(13):
        table = distribution(n, "hp")
        for (h, p), c in table.counts.items():
            assert table.get((p, h)) == c


def test_phi_realises_symmetry_pointwise():
    for n in range(9):
        F = pointed_partitions_of(n)
        matched = {pp: phi(pp) for pp in F}
        assert set(matched.values()) == set(F)
        for pp, img in matched.items():
            assert matched[img] == pp


def test_report_caps_failures():
    r = VerifyReport("x", {}, max_failures=2)
    for i in range(5):
        r.fail(str(i))
    assert not r.passed
    assert r.failures == ["0", "1"]
    assert r.failure_count == 5
    assert VerifyReport("y", {}).passed


def test_verify_small_ranges():
    assert verify_involution(8).passed
    assert verify_symmetry(1).passed
    assert verify_gf(2, 2, 2, 20).passed
    assert verify_supersymmetry(8).passed
    assert verify_pealing(10, 3, 3).passed
    assert verify_remark(3, 3, 20).passed
    assert verify_tau(6).passed
    assert verify_zeta(8, 3).passed
    assert verify_decomposition(8).passed


def test_verify_reports_counterexamples(monkeypatch):
    import pointed_partitions.enumeration as enum

    monkeypatch.setattr(enum, "phi", lambda pp: pp)
    report = enum.verify_involution(4, max_failures=3)
    assert not report.passed
    assert len(report.failures) == 3
    assert "expected" in report.failures[0]
