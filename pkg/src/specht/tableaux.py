"""Standard Young tableaux: streaming enumeration and the major index.

This module is the brute-force counterpart of the character-theoretic
major-index counts in :mod:`specht.spectrum`: counting tableaux by major
index mod n must reproduce the eigenvalue multiplicities on an n-cycle.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .shapes import Partition

__all__ = ["enumerate_syt", "maj_count_brute", "maj_counts_brute", "major_index"]

StandardTableau = tuple[tuple[int, ...], ...]


def enumerate_syt(lam) -> Iterator[StandardTableau]:
    """Yield every standard tableau of shape ``lam`` exactly once, as a
    tuple of rows.

    Entries 1..n are placed in order; the k-th entry goes in the first
    row whose next free cell keeps columns strictly increasing.  The
    stream is ordered lexicographically by the sequence of rows chosen,
    and nothing is materialized, so large shapes iterate in constant
    memory.
    """
    lam = Partition(lam)
    if not lam:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in lam]

    def place(entry: int) -> Iterator[StandardTableau]:
        if entry > lam.n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue  # the cell above is still empty
            row.append(entry)
            yield from place(entry + 1)
            row.pop()

    yield from place(1)


def major_index(tableau: Sequence[Sequence[int]]) -> int:
    """Sum of the i in 1..n-1 whose successor i+1 sits in a lower row."""
    row_of: dict[int, int] = {}
    for i, row in enumerate(tableau):
        for value in row:
            row_of[value] = i
    n = len(row_of)
    return sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def maj_counts_brute(lam) -> tuple[int, ...]:
    """Counts of standard tableaux of shape ``lam`` by major index mod n."""
    lam = Partition(lam)
    if lam.n == 0:
        return (1,)
    counts = [0] * lam.n
    for tableau in enumerate_syt(lam):
        counts[major_index(tableau) % lam.n] += 1
    return tuple(counts)


def maj_count_brute(lam, r: int) -> int:
    """Number of standard tableaux of shape ``lam`` with major index
    congruent to r mod n, by full enumeration."""
    lam = Partition(lam)
    if lam.n == 0:
        return 1
    return maj_counts_brute(lam)[r % lam.n]
