"""Partitions, diagram cells and the statistics of a pointed partition.

Cells are addressed as ``(x, y)`` with ``x`` the column and ``y`` the part
index, both 1-based. Row ``y`` of the diagram holds ``parts[y - 1]`` cells and
rows with a larger part index are drawn *above* smaller ones, so the leg of a
cell counts cells in the same column with a larger part index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class PartitionError(ValueError):
    """Raised when a sequence is not a valid partition."""


class CellError(ValueError):
    """Raised when a cell does not lie in the diagram of a partition."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for i, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool):
                raise PartitionError(f"part {i + 1} is not an integer: {part!r}")
            if part <= 0:
                raise PartitionError(f"parts must be positive, got {part} at index {i + 1}")
            if i and parts[i - 1] < part:
                raise PartitionError(
                    f"parts must be weakly decreasing, got {parts[i - 1]} < {part} "
                    f"at indices {i}, {i + 1}"
                )
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def part(self, y: int) -> int:
        """The ``y``-th part (1-based), 0 beyond the length."""
        return self.parts[y - 1] if 1 <= y <= len(self.parts) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[Cell]:
        """Cells of the diagram ordered by ``(y, x)``."""
        for y, part in enumerate(self.parts, start=1):
            for x in range(1, part + 1):
                yield Cell(x, y)

    def __contains__(self, cell) -> bool:
        x, y = cell
        return 1 <= y <= len(self.parts) and 1 <= x <= self.parts[y - 1]


class Cell(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return format_cell(self)


class PointedPartition(NamedTuple):
    partition: Partition
    cell: Cell

    def __str__(self) -> str:
        return f"({self.partition}; {self.cell})"


class StatTuple(NamedTuple):
    arm: int
    leg: int
    coarm: int
    coleg: int
    hook: int
    part_len: int

    @property
    def alm(self) -> tuple[int, int, int]:
        return (self.arm, self.leg, self.coarm)


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a :class:`Partition`."""
    return Partition(tuple(parts))


def from_padded(parts: Iterable[int]) -> Partition:
    """Build a partition from a weakly decreasing sequence that may end in zeros."""
    return Partition(tuple(p for p in parts if p != 0))


def pointed(parts: Sequence[int] | Partition, cell: Sequence[int]) -> PointedPartition:
    """Convenience constructor checking that ``cell`` lies in the diagram."""
    partition = parts if isinstance(parts, Partition) else make_partition(parts)
    cell = Cell(*cell)
    check_cell(partition, cell)
    return PointedPartition(partition, cell)


def weight(p: Partition) -> int:
    return sum(p.parts)


def conjugate(p: Partition) -> Partition:
    """Transpose the diagram: the i-th part counts parts of ``p`` that are >= i."""
    parts = p.parts
    conj = []
    k = len(parts)
    for i in range(1, p.largest + 1):
        while k and parts[k - 1] < i:
            k -= 1
        conj.append(k)
    return Partition(tuple(conj))


def check_cell(p: Partition, v: Cell) -> None:
    if v not in p:
        raise CellError(f"cell {format_cell(v)} is not in the diagram of ({format_partition(p)})")


def stats(p: Partition, v: Cell) -> StatTuple:
    x, y = v
    check_cell(p, v)
    parts = p.parts
    arm = parts[y - 1] - x
    leg = 0
    for j in range(y, len(parts)):
        if parts[j] < x:
            break
        leg += 1
    coarm = x - 1
    return StatTuple(arm, leg, coarm, y - 1, leg + arm + 1, coarm + arm + 1)


def pp_stats(pp: PointedPartition) -> StatTuple:
    return stats(pp.partition, pp.cell)


# Text encodings shared by the CLI and the JSON output.

def format_partition(p: Partition | Sequence[int]) -> str:
    return ",".join(str(part) for part in p)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}: expected comma-separated integers")
    return make_partition(parts)


def format_cell(v: Cell | Sequence[int]) -> str:
    return f"{v[0]},{v[1]}"


def parse_cell(text: str) -> Cell:
    toks = text.strip().split(",")
    try:
        x, y = (int(tok) for tok in toks)
    except ValueError:
        raise CellError(f"cannot parse cell {text!r}: expected 'x,y'")
    if x < 1 or y < 1:
        raise CellError(f"cell coordinates are 1-based, got {text!r}")
    return Cell(x, y)
