"""Exhaustive enumeration of (pointed) partitions and the verification suites.

Every ``verify_*`` function returns a :class:`VerifyReport`; counterexamples
are collected as data (capped at ``max_failures``) rather than raised.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .bijections import decompose, from_tilde, phi, recompose, rho, tau, to_tilde, zeta
from .partition import Partition, PointedPartition, format_cell, format_partition, stats
from .qseries import gf_f, remark_identity_gap
from .rimhook import peal, unpeal

KEY_KINDS = {
    "alm": ("arm", "leg", "coarm"),
    "hp": ("hook", "part_len"),
    "am": ("arm", "coarm"),
    "al": ("arm", "leg"),
}

# column headers used in TSV/JSON output
_HEADERS = {"arm": "a", "leg": "l", "coarm": "m", "hook": "h", "part_len": "p"}


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if max_part is None:
        return list(_partitions_cached(n))
    return [Partition(p) for p in _partitions(n, max_part)]


def pointed_partitions_of(n: int) -> list[PointedPartition]:
    return [PointedPartition(lam, v) for lam in partitions_of(n) for v in lam.cells()]


@dataclass
class DistTable:
    n: int
    key_kind: str
    counts: dict[tuple[int, ...], int]

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(_HEADERS[f] for f in KEY_KINDS[self.key_kind])

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def get(self, key: tuple[int, ...]) -> int:
        return self.counts.get(tuple(key), 0)

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns + ("count",))]
        lines += ["\t".join(map(str, key + (c,))) for key, c in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        cols = self.columns
        return {
            "n": self.n,
            "key_kind": self.key_kind,
            "rows": [dict(zip(cols, key), count=c) for key, c in self.rows()],
        }


def distribution(n: int, key_kind: str) -> DistTable:
    try:
        fields = KEY_KINDS[key_kind]
    except KeyError:
        raise ValueError(f"unknown key kind {key_kind!r}; choose from {sorted(KEY_KINDS)}")
    counts: Counter = Counter()
    for lam, v in pointed_partitions_of(n):
        st = stats(lam, v)
        counts[tuple(getattr(st, f) for f in fields)] += 1
    return DistTable(n, key_kind, dict(counts))


def f_count(n: int, a: int, l: int, m: int) -> int:
    """Number of pointed partitions of ``n`` with arm ``a``, leg ``l``, coarm ``m``."""
    return sum(1 for lam, v in pointed_partitions_of(n) if stats(lam, v).alm == (a, l, m))


@dataclass
class VerifyReport:
    check_name: str
    params: dict
    failures: list[str] = field(default_factory=list)
    checked: int = 0
    max_failures: int = 10
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, message: str) -> None:
        self.failure_count += 1
        if len(self.failures) < self.max_failures:
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.check_name} ({params}): {self.checked} checked, {self.failure_count} failures"

    def to_json(self) -> dict:
        return {
            "check_name": self.check_name,
            "params": self.params,
            "passed": self.passed,
            "checked": self.checked,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }


def _pp_str(pp: PointedPartition) -> str:
    return f"({format_partition(pp.partition)}; {format_cell(pp.cell)})"


def verify_involution(n_max: int, max_failures: int = 10) -> VerifyReport:
    """Phi is an involution on every F_n, n <= n_max, sending (a,l,m) to (a,m,l)."""
    report = VerifyReport("involution", {"n_max": n_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        for pp in pointed_partitions_of(n):
            report.checked += 1
            try:
                image = phi(pp)
                back = phi(image)
            except ValueError as exc:
                report.fail(f"{_pp_str(pp)}: {exc}")
                continue
            a, l, m = stats(*pp).alm
            if image.partition.weight != n:
                report.fail(f"{_pp_str(pp)} -> {_pp_str(image)} changes the weight")
            elif stats(*image).alm != (a, m, l):
                report.fail(
                    f"{_pp_str(pp)} -> {_pp_str(image)} has stats {stats(*image).alm}, "
                    f"expected {(a, m, l)}"
                )
            elif back != pp:
                report.fail(f"phi(phi{_pp_str(pp)}) = {_pp_str(back)}")
    return report


def verify_decomposition(n_max: int, max_failures: int = 10) -> VerifyReport:
    """Region and tilde maps are weight-preserving bijections with valid outputs."""
    report = VerifyReport("decomposition", {"n_max": n_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        for pp in pointed_partitions_of(n):
            report.checked += 1
            try:
                q = decompose(pp)
                q.check()
                tq = to_tilde(q)
                tq.check()
                r = rho(tq)
                r.check()
                ok = (
                    q.weight == n
                    and tq.weight == n
                    and rho(r) == tq
                    and from_tilde(tq) == q
                    and recompose(q) == pp
                )
            except ValueError as exc:
                report.fail(f"{_pp_str(pp)}: {exc}")
                continue
            if not ok:
                report.fail(f"{_pp_str(pp)}: decomposition roundtrip or weight identity broken")
    return report


def _symmetric_under(table: DistTable, swap: Callable[[tuple], tuple], report: VerifyReport, n: int):
    for key, c in table.rows():
        report.checked += 1
        other = table.get(swap(key))
        if other != c:
            report.fail(f"n={n} {table.key_kind}: count{key}={c} but count{swap(key)}={other}")


def verify_symmetry(n_max: int, max_failures: int = 10) -> VerifyReport:
    """The (a,l,m) table is invariant under l <-> m and the (h,p) table under h <-> p."""
    report = VerifyReport("symmetry", {"n_max": n_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        _symmetric_under(distribution(n, "alm"), lambda k: (k[0], k[2], k[1]), report, n)
        _symmetric_under(distribution(n, "hp"), lambda k: (k[1], k[0]), report, n)
    return report


def verify_supersymmetry(n_max: int, max_failures: int = 10) -> VerifyReport:
    """The (a,l) and (a,m) tables coincide and each count depends only on the sum."""
    report = VerifyReport("supersymmetry", {"n_max": n_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        am = distribution(n, "am")
        al = distribution(n, "al")
        report.checked += 1
        if am.counts != al.counts:
            report.fail(f"n={n}: (a,m) and (a,l) tables differ")
        for table in (am, al):
            top = max((sum(k) for k in table.counts), default=-1)
            for s in range(top + 1):
                values = {table.get((i, s - i)) for i in range(s + 1)}
                report.checked += 1
                if len(values) != 1:
                    report.fail(f"n={n} {table.key_kind}: counts on sum {s} are {sorted(values)}")
    return report


def verify_gf(a_max: int, l_max: int, m_max: int, n_max: int, max_failures: int = 10) -> VerifyReport:
    """Series coefficients match brute-force counts of F_n(a,l,m)."""
    report = VerifyReport(
        "gf", {"a_max": a_max, "l_max": l_max, "m_max": m_max, "n_max": n_max},
        max_failures=max_failures,
    )
    tables = [distribution(n, "alm") for n in range(n_max + 1)]
    for a, l, m in itertools.product(range(a_max + 1), range(l_max + 1), range(m_max + 1)):
        series = gf_f(a, l, m, n_max)
        for n in range(n_max + 1):
            report.checked += 1
            brute = tables[n].get((a, l, m))
            if series[n] != brute:
                report.fail(f"(a,l,m)=({a},{l},{m}) n={n}: series {series[n]} vs count {brute}")
    return report


def verify_pealing(n_max: int, a_max: int, m_max: int, max_failures: int = 10) -> VerifyReport:
    """Pealing and unpealing are mutually inverse, with weight and bound invariants."""
    report = VerifyReport(
        "pealing", {"n_max": n_max, "a_max": a_max, "m_max": m_max}, max_failures=max_failures
    )
    for a in range(a_max + 1):
        for m in range(m_max + 1):
            seen: dict[tuple, Partition] = {}
            for n in range(n_max + 1):
                for A in partitions_of(n, max_part=m):
                    report.checked += 1
                    tag = f"A=({A}) a={a} m={m}"
                    res = peal(A, a, m)
                    rs = res.hook_lengths
                    if A.weight != res.reduced.weight + sum(rs):
                        report.fail(f"{tag}: weight not conserved")
                    elif len(res.reduced) > a or res.reduced.largest > m:
                        report.fail(f"{tag}: reduced ({res.reduced}) not in the {a}x{m} box")
                    elif any(r < a + 1 or r > a + m for r in rs) or list(rs) != sorted(rs):
                        report.fail(f"{tag}: hook lengths {rs} not weakly increasing in [{a + 1},{a + m}]")
                    elif unpeal(res.reduced, rs, a, m) != A:
                        report.fail(f"{tag}: unpeal does not restore A")
                    key = (res.reduced, rs)
                    if key in seen:
                        report.fail(f"{tag}: same image as A=({seen[key]})")
                    seen[key] = A
            # surjectivity onto box x R at each weight, by counting the other side
            for n in range(n_max + 1):
                report.checked += 1
                expected = _box_times_r_count(n, a, m)
                got = sum(1 for red, rs in seen if red.weight + sum(rs) == n)
                if got != expected:
                    report.fail(f"a={a} m={m} n={n}: {got} images, expected {expected} pairs")
    return report


def _box_times_r_count(n: int, a: int, m: int) -> int:
    """Brute-force count of (reduced, r-sequence) pairs of total weight ``n``."""
    total = 0
    for w in range(n + 1):
        boxes = sum(1 for p in _partitions(w, m) if len(p) <= a)
        if boxes:
            # r-sequences are multisets of values in [a+1, a+m] summing to n - w
            seqs = sum(1 for p in _partitions(n - w, a + m) if all(r >= a + 1 for r in p))
            total += boxes * seqs
    return total


def verify_remark(a_max: int, m_max: int, N: int, max_failures: int = 10) -> VerifyReport:
    report = VerifyReport("remark", {"a_max": a_max, "m_max": m_max, "N": N}, max_failures=max_failures)
    for a in range(a_max + 1):
        for m in range(1, m_max + 1):
            report.checked += 1
            gap = remark_identity_gap(a, m, N)
            if not gap.is_zero():
                report.fail(f"a={a} m={m}: nonzero gap {gap.to_json()}")
    return report


def verify_tau(n_max: int, max_failures: int = 10) -> VerifyReport:
    """Row shifts are bijections between (arm, coarm) classes."""
    report = VerifyReport("tau", {"n_max": n_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        for pp in pointed_partitions_of(n):
            st = stats(*pp)
            s = st.arm + st.coarm
            for alpha2 in range(s + 1):
                report.checked += 1
                u = tau(pp, alpha2, s - alpha2)
                ust = stats(*u)
                if u.partition != pp.partition or (ust.arm, ust.coarm) != (alpha2, s - alpha2):
                    report.fail(f"tau{_pp_str(pp)} -> {_pp_str(u)} has wrong statistics")
                elif tau(u, st.arm, st.coarm) != pp:
                    report.fail(f"tau{_pp_str(pp)} is not undone by the reverse shift")
    return report


def verify_zeta(n_max: int, sum_max: int, max_failures: int = 10) -> VerifyReport:
    """zeta maps F_n(alpha,beta,*) injectively into F_n(alpha',beta',*) and the classes are equinumerous."""
    report = VerifyReport("zeta", {"n_max": n_max, "sum_max": sum_max}, max_failures=max_failures)
    for n in range(n_max + 1):
        classes: dict[tuple[int, int], list[PointedPartition]] = {}
        for pp in pointed_partitions_of(n):
            st = stats(*pp)
            if st.arm + st.leg <= sum_max:
                classes.setdefault((st.arm, st.leg), []).append(pp)
        for s in range(sum_max + 1):
            for alpha in range(s + 1):
                src = classes.get((alpha, s - alpha), [])
                for alpha2 in range(s + 1):
                    target = (alpha2, s - alpha2)
                    report.checked += 1
                    if len(src) != len(classes.get(target, [])):
                        report.fail(
                            f"n={n}: |F({alpha},{s - alpha},*)|={len(src)} but "
                            f"|F{target[0], target[1]}|={len(classes.get(target, []))}"
                        )
                    images = set()
                    for pp in src:
                        img = zeta(pp, *target)
                        ist = stats(*img)
                        if (ist.arm, ist.leg) != target or img.partition.weight != n:
                            report.fail(f"zeta{_pp_str(pp)} -> {_pp_str(img)} lands outside {target}")
                        elif zeta(img, alpha, s - alpha) != pp:
                            report.fail(f"zeta{_pp_str(pp)} is not undone by the reverse parameters")
                        images.add(img)
                    if len(images) != len(src):
                        report.fail(f"n={n}: zeta ({alpha},{s - alpha})->{target} is not injective")
    return report
