"""Hooks, rim hooks and the pealing bijection.

Pealing strips rim hooks of height ``a + 1`` anchored in the first column off a
partition whose parts are at most ``m`` until fewer than ``a + 1`` rows remain::

    >>> r = peal(Partition((5, 5, 4, 4, 3, 2, 2, 2, 1, 1)), a=3, m=5)
    >>> r.reduced.parts, r.hook_lengths
    ((5, 3, 1), (5, 7, 8))

:func:`unpeal` inserts the hooks back in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .partition import Cell, Partition, check_cell, from_padded, stats


class PealingError(ValueError):
    """Raised when pealing or unpealing inputs violate their constraints."""


@dataclass(frozen=True)
class RimHook:
    cells: tuple[Cell, ...]

    @property
    def length(self) -> int:
        return len(self.cells)

    @property
    def height(self) -> int:
        return len({c.y for c in self.cells})

    @property
    def width(self) -> int:
        return len({c.x for c in self.cells})


@dataclass(frozen=True)
class PealingResult:
    reduced: Partition
    hook_lengths: tuple[int, ...]
    a: int
    m: int


def hook_cells(p: Partition, v: Cell) -> list[Cell]:
    """The hook of ``v``: ``v``, its arm to the right and its leg above."""
    check_cell(p, v)
    x, y = v
    cells = [Cell(i, y) for i in range(x, p.part(y) + 1)]
    j = y + 1
    while p.part(j) >= x:
        cells.append(Cell(x, j))
        j += 1
    return cells


def _strip(p: Partition, v: Cell) -> tuple[list[int], int]:
    """Padded parts after removing the rim hook of ``v``, plus the leg of ``v``."""
    x, y = v
    leg = stats(p, v).leg
    top = y + leg
    parts = list(p.parts)
    for j in range(y, top):
        parts[j - 1] = parts[j] - 1
    parts[top - 1] = x - 1
    return parts, leg


def remove_rim_hook(p: Partition, v: Cell) -> Partition:
    """Remove the rim hook of ``v`` from the diagram of ``p``.

    Rows ``y .. y + leg - 1`` take the length of the next row minus one and the
    top row of the hook is cut back to ``x - 1``; rows outside the hook stay.
    """
    check_cell(p, v)
    parts, _ = _strip(p, v)
    return from_padded(parts)


def rim_hook(p: Partition, v: Cell) -> RimHook:
    """The border strip running from the top of ``v``'s column to the end of its row.

    Cells are listed from the uppermost cell ``(x, y + leg)`` to the rightmost
    cell ``(p_y, y)``.
    """
    check_cell(p, v)
    after, leg = _strip(p, v)
    cells = []
    for j in range(v.y + leg, v.y - 1, -1):
        cells.extend(Cell(i, j) for i in range(after[j - 1] + 1, p.part(j) + 1))
    return RimHook(tuple(cells))


def peal(A: Partition, a: int, m: int) -> PealingResult:
    if a < 0 or m < 0:
        raise PealingError(f"a and m must be nonnegative, got a={a}, m={m}")
    if A.largest > m:
        raise PealingError(f"largest part {A.largest} exceeds m={m}")
    parts = list(A.parts)
    lengths = []
    while len(parts) >= a + 1:
        y = len(parts) - a
        # the column-1 cell at row y has leg exactly a, so its hook length is arm + a + 1
        lengths.append(parts[y - 1] + a)
        for j in range(y, len(parts)):
            parts[j - 1] = parts[j] - 1
        parts.pop()
        while parts and parts[-1] == 0:
            parts.pop()
    return PealingResult(Partition(tuple(parts)), tuple(lengths), a, m)


def unpeal(reduced: Partition, rs: Sequence[int], a: int, m: int) -> Partition:
    """Inverse of :func:`peal`."""
    rs = tuple(rs)
    if a < 0 or m < 0:
        raise PealingError(f"a and m must be nonnegative, got a={a}, m={m}")
    if len(reduced) > a:
        raise PealingError(f"reduced partition has {len(reduced)} parts, more than a={a}")
    if reduced.largest > m:
        raise PealingError(f"reduced partition has part {reduced.largest} larger than m={m}")
    for i, r in enumerate(rs):
        if not a + 1 <= r <= a + m:
            raise PealingError(f"hook length r_{i + 1}={r} outside [{a + 1}, {a + m}]")
        if i and rs[i - 1] > r:
            raise PealingError(f"hook lengths must be weakly increasing, got {rs}")

    parts = list(reduced.parts)
    for r in reversed(rs):
        new_part = r - a
        alpha = next((j for j, part in enumerate(parts, start=1) if part < new_part), len(parts) + 1)
        tail = parts[alpha - 1:] + [0] * (a - len(parts) + alpha - 1)
        parts = parts[:alpha - 1] + [new_part] + [part + 1 for part in tail]
        while parts and parts[-1] == 0:
            parts.pop()
    return Partition(tuple(parts))
