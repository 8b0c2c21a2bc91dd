"""The hook/part-length involution on pointed partitions and its building blocks.

A pointed partition with statistics ``(arm, leg, coarm) = (a, l, m)`` splits into
five regions (:func:`decompose`)::

    C  rows 1 .. y-1              every part >= m + a + 1
    D  rows y .. y+l, columns 1 .. m+1   an (l+1) x (m+1) rectangle
    E  row y beyond column m+1    the single part a (empty if a = 0)
    B  rows y+1 .. y+l beyond column m+1   fits in l x a
    A  rows y+l+1 ..              parts <= m

Pealing ``A`` moves its rim hooks into ``C`` (:func:`to_tilde`), after which
conjugating ``A~``, ``B`` and ``D`` and swapping the first two (:func:`rho`)
exchanges the roles of leg and coarm. :func:`phi` undoes the first two steps
in the swapped context.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partition import (
    Cell,
    Partition,
    PointedPartition,
    conjugate,
    format_partition,
    stats,
)
from .rimhook import peal, unpeal


class QuintupleError(ValueError):
    """Raised when a quintuple violates the constraints of its context."""


class ParameterError(ValueError):
    """Raised when the target statistics of a shift do not have the source's sum."""


def _rect(rows: int, cols: int) -> Partition:
    return Partition((cols,) * rows if cols else ())


def _fits(p: Partition, rows: int, cols: int) -> bool:
    return len(p) <= rows and p.largest <= cols


@dataclass(frozen=True)
class Quintuple:
    A: Partition
    B: Partition
    C: Partition
    D: Partition
    E: Partition
    a: int
    l: int
    m: int

    def check(self) -> None:
        a, l, m = self.a, self.l, self.m
        if min(a, l, m) < 0:
            raise QuintupleError(f"context (a,l,m)=({a},{l},{m}) must be nonnegative")
        if self.A.largest > m:
            raise QuintupleError(f"A has part {self.A.largest} larger than m={m}")
        if not _fits(self.B, l, a):
            raise QuintupleError(f"B=({self.B}) does not fit in an {l}x{a} rectangle")
        if self.C and self.C.parts[-1] < m + a + 1:
            raise QuintupleError(f"C has part {self.C.parts[-1]} smaller than m+a+1={m + a + 1}")
        _check_de(self.D, self.E, a, l, m)

    @property
    def weight(self) -> int:
        return sum(p.weight for p in (self.A, self.B, self.C, self.D, self.E))

    def to_json(self) -> dict:
        out = {k: format_partition(getattr(self, k)) for k in "ABCDE"}
        out.update(a=self.a, l=self.l, m=self.m)
        return out


@dataclass(frozen=True)
class TildeQuintuple:
    At: Partition
    B: Partition
    Ct: Partition
    D: Partition
    E: Partition
    a: int
    l: int
    m: int

    def check(self) -> None:
        a, l, m = self.a, self.l, self.m
        if min(a, l, m) < 0:
            raise QuintupleError(f"context (a,l,m)=({a},{l},{m}) must be nonnegative")
        if not _fits(self.At, a, m):
            raise QuintupleError(f"At=({self.At}) does not fit in an {a}x{m} rectangle")
        if not _fits(self.B, l, a):
            raise QuintupleError(f"B=({self.B}) does not fit in an {l}x{a} rectangle")
        if self.Ct and self.Ct.parts[-1] < a + 1:
            raise QuintupleError(f"Ct has part {self.Ct.parts[-1]} smaller than a+1={a + 1}")
        _check_de(self.D, self.E, a, l, m)

    @property
    def weight(self) -> int:
        return sum(p.weight for p in (self.At, self.B, self.Ct, self.D, self.E))

    def to_json(self) -> dict:
        out = {k: format_partition(getattr(self, k)) for k in ("At", "B", "Ct", "D", "E")}
        out.update(a=self.a, l=self.l, m=self.m)
        return out


def _check_de(D: Partition, E: Partition, a: int, l: int, m: int) -> None:
    if D != _rect(l + 1, m + 1):
        raise QuintupleError(f"D=({D}) is not an {l + 1}x{m + 1} rectangle")
    if E != _rect(1, a):
        raise QuintupleError(f"E=({E}) is not a 1x{a} rectangle")


def decompose(pp: PointedPartition) -> Quintuple:
    lam, v = pp
    st = stats(lam, v)
    a, l, m = st.alm
    y = v.y
    parts = lam.parts
    return Quintuple(
        A=Partition(parts[y + l:]),
        B=Partition(tuple(part - m - 1 for part in parts[y:y + l] if part > m + 1)),
        C=Partition(parts[:y - 1]),
        D=_rect(l + 1, m + 1),
        E=_rect(1, a),
        a=a,
        l=l,
        m=m,
    )


def recompose(q: Quintuple) -> PointedPartition:
    q.check()
    a, l, m = q.a, q.l, q.m
    b = q.B.parts + (0,) * (l - len(q.B))
    parts = q.C.parts + (m + 1 + a,) + tuple(m + 1 + part for part in b) + q.A.parts
    return PointedPartition(Partition(parts), Cell(m + 1, len(q.C) + 1))


def to_tilde(q: Quintuple) -> TildeQuintuple:
    """Peal ``A`` and glue the removed hook lengths onto the bottom of ``C``."""
    q.check()
    res = peal(q.A, q.a, q.m)
    return TildeQuintuple(
        At=res.reduced,
        B=q.B,
        Ct=Partition(q.C.parts + res.hook_lengths[::-1]),
        D=q.D,
        E=q.E,
        a=q.a,
        l=q.l,
        m=q.m,
    )


def from_tilde(tq: TildeQuintuple) -> Quintuple:
    tq.check()
    bound = tq.a + tq.m
    big = tuple(part for part in tq.Ct if part > bound)
    rs = tuple(part for part in tq.Ct if part <= bound)[::-1]
    return Quintuple(
        A=unpeal(tq.At, rs, tq.a, tq.m),
        B=tq.B,
        C=Partition(big),
        D=tq.D,
        E=tq.E,
        a=tq.a,
        l=tq.l,
        m=tq.m,
    )


def rho(tq: TildeQuintuple) -> TildeQuintuple:
    return TildeQuintuple(
        At=conjugate(tq.B),
        B=conjugate(tq.At),
        Ct=tq.Ct,
        D=conjugate(tq.D),
        E=tq.E,
        a=tq.a,
        l=tq.m,
        m=tq.l,
    )


def phi_trace(pp: PointedPartition) -> list[tuple[str, object]]:
    """Every intermediate object of :func:`phi`, in order, ending with the image."""
    q = decompose(pp)
    tq = to_tilde(q)
    swapped = rho(tq)
    back = from_tilde(swapped)
    image = recompose(back)
    return [
        ("quintuple", q),
        ("tilde_quintuple", tq),
        ("rho", swapped),
        ("inverse_quintuple", back),
        ("image", image),
    ]


def phi(pp: PointedPartition) -> PointedPartition:
    """The involution exchanging leg and coarm, hence hook length and part length.

    >>> from pointed_partitions.partition import pointed
    >>> print(phi(pointed((4,), (2, 1))))
    (3,1; 1,1)
    """
    return recompose(from_tilde(rho(to_tilde(decompose(pp)))))


def tau(pp: PointedPartition, alpha2: int, beta2: int) -> PointedPartition:
    """Slide the marked cell along its row to arm ``alpha2`` and coarm ``beta2``."""
    lam, v = pp
    st = stats(lam, v)
    if alpha2 < 0 or beta2 < 0 or alpha2 + beta2 != st.arm + st.coarm:
        raise ParameterError(
            f"target (arm, coarm)=({alpha2},{beta2}) must be nonnegative with sum "
            f"{st.arm + st.coarm}"
        )
    return PointedPartition(lam, Cell(beta2 + 1, v.y))


def zeta(pp: PointedPartition, alpha2: int, beta2: int) -> PointedPartition:
    """Move ``pp`` from its (arm, leg) class to the class ``(alpha2, beta2)``."""
    st = stats(*pp)
    if alpha2 < 0 or beta2 < 0 or alpha2 + beta2 != st.arm + st.leg:
        raise ParameterError(
            f"target (arm, leg)=({alpha2},{beta2}) must be nonnegative with sum "
            f"{st.arm + st.leg}"
        )
    return phi(tau(phi(pp), alpha2, beta2))
