import itertools

from hypothesis import strategies as st

from pointed_partitions import Cell, Partition, PointedPartition

PAPER_LAMBDA = (12, 10, 10, 9, 9, 8, 7, 7, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1)
PAPER_MU = (12, 10, 10, 9, 8, 7, 7, 7, 6, 6, 5, 5, 3, 2, 2, 1, 1)


@st.composite
def partitions(draw, max_parts=8, max_part=8, min_size=0):
    parts = draw(st.lists(st.integers(1, max_part), min_size=min_size, max_size=max_parts))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def pointed_partitions(draw, max_parts=8, max_part=8):
    lam = draw(partitions(max_parts, max_part, min_size=1))
    y = draw(st.integers(1, len(lam)))
    x = draw(st.integers(1, lam.part(y)))
    return PointedPartition(lam, Cell(x, y))


def brute_partitions(n):
    """Partitions of n by sorting every composition; independent of the library generator."""
    if n == 0:
        return [()]
    found = set()
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        found.add(tuple(sorted(parts, reverse=True)))
    return sorted(found, reverse=True)


def diagram(p):
    return {(x, y) for y, part in enumerate(p, start=1) for x in range(1, part + 1)}
