"""Partitions, Young-diagram geometry, and permutations.

Conventions used throughout the package: partitions are weakly decreasing
tuples of positive integers, diagram cells are 1-based ``(row, col)`` pairs
in English notation, and every function is pure.

The canonical order on partitions of n is reverse-lexicographic, largest
first: ``(4) > (3,1) > (2,2) > (2,1,1) > (1,1,1,1)``.  All reports and
serialized output sort by this order so that runs are diffable.

Text format: comma-separated parts with an optional exponent shorthand,
``2^3`` meaning ``2,2,2``.  :func:`parse_partition` and
:func:`format_partition` are inverse to each other.
"""

from __future__ import annotations

from functools import cache
from math import gcd, lcm
from typing import Iterable, Iterator, NamedTuple, Sequence

__all__ = [
    "Cell",
    "HypothesisViolation",
    "Partition",
    "Permutation",
    "RimHook",
    "canonical_permutation",
    "fold",
    "format_partition",
    "hook_length",
    "is_dop",
    "order",
    "parse_partition",
    "partitions_of",
    "power_cycle_type",
    "rim_hook",
    "sign_of_class",
    "unfold",
    "wreath_embed",
    "z_mu",
]

Cell = tuple[int, int]


class HypothesisViolation(ValueError):
    """A stated precondition of an operation fails for the given input."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple subclass, partitions hash and compare structurally and
    can be used interchangeably with plain tuples as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        """Weight (number of cells)."""
        return sum(self)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        cols = [0] * self[0]
        for part in self:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: Sequence[int]) -> bool:
        """True iff the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return all(x == 0 for x in other[len(self):])
        return all(o <= s for s, o in zip(self, other))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"


def parse_partition(text: str) -> Partition:
    """Parse the comma/exponent text format, e.g. ``"5,4^2,1"``.

    The empty string denotes the empty partition.
    """
    text = text.strip()
    if not text or text == "()":
        return Partition()
    parts: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if "^" in item:
            base_s, _, exp_s = item.partition("^")
            base, exponent = int(base_s), int(exp_s)
            if exponent < 0:
                raise ValueError(f"negative exponent in partition: {item!r}")
            parts.extend([base] * exponent)
        elif item:
            parts.append(int(item))
        else:
            raise ValueError(f"empty item in partition text: {text!r}")
    return Partition(parts)


def format_partition(parts: Sequence[int]) -> str:
    """Inverse of :func:`parse_partition`; repeated parts use ``k^m``."""
    out: list[str] = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        run = j - i
        out.append(f"{parts[i]}^{run}" if run > 1 else str(parts[i]))
        i = j
    return ",".join(out)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in canonical (reverse-lexicographic) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for k in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - k, k):
                yield (k,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def hook_length(lam: Sequence[int], cell: Cell) -> int:
    """Arm + leg + 1 of a cell of the diagram of ``lam``."""
    lam = Partition(lam)
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside the diagram of {lam}")
    conj = lam.conjugate()
    return lam[i - 1] - j + conj[j - 1] - i + 1


class RimHook(NamedTuple):
    cells: frozenset[Cell]
    height: int
    remainder: Partition


def rim_hook(lam: Sequence[int], cell: Cell) -> RimHook:
    """Border strip of ``cell``: the cells (u,v) weakly below/right of it
    with no diagram cell at (u+1, v+1).

    ``height`` is the number of rows the strip meets, minus one.  The
    remainder is the partition left after removing the strip.
    """
    lam = Partition(lam)
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside the diagram of {lam}")
    # Last row whose length still reaches column j.
    r = max(u for u in range(i, len(lam) + 1) if lam[u - 1] >= j)
    cells: set[Cell] = set()
    for u in range(i, r + 1):
        nxt = lam[u] if u < len(lam) else 0
        for v in range(max(j, nxt), lam[u - 1] + 1):
            cells.add((u, v))
    new_rows = list(lam)
    for u in range(i, r):
        new_rows[u - 1] = lam[u] - 1
    new_rows[r - 1] = j - 1
    remainder = Partition(x for x in new_rows if x > 0)
    if len(cells) != hook_length(lam, cell):
        raise AssertionError(f"rim hook size mismatch at {cell} of {lam}")
    return RimHook(frozenset(cells), r - i, remainder)


def order(mu: Sequence[int]) -> int:
    """Order of a permutation with cycle type ``mu`` (lcm of the parts)."""
    return lcm(*mu) if mu else 1


def sign_of_class(mu: Sequence[int]) -> int:
    """Sign of any permutation with cycle type ``mu``."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def power_cycle_type(mu: Sequence[int], j: int) -> Partition:
    """Cycle type of the j-th power of a permutation of cycle type ``mu``.

    Each part a splits into gcd(j, a) cycles of length a/gcd(j, a).
    """
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    parts: list[int] = []
    for a in mu:
        g = gcd(j, a)
        parts.extend([a // g] * g)
    return Partition(sorted(parts, reverse=True))


def is_dop(mu: Sequence[int]) -> bool:
    """True iff the parts are distinct and all odd."""
    return len(set(mu)) == len(mu) and all(a % 2 == 1 for a in mu)


def fold(mu: Sequence[int]) -> Partition:
    """Self-conjugate partition whose principal hooks have the lengths of
    the distinct odd parts of ``mu``.

    Writing the parts as 2*m_i + 1 with m_1 > m_2 > ..., the result has
    Frobenius coordinates (m_1, ..., m_k | m_1, ..., m_k).
    """
    mu = Partition(mu)
    if not is_dop(mu):
        raise HypothesisViolation(f"{mu} does not have distinct odd parts")
    arms = [(a - 1) // 2 for a in mu]
    size = max(a + 1 for a in arms) if arms else 0
    grid = [[False] * (size + 1) for _ in range(size + 1)]
    for d, m in enumerate(arms, start=1):
        for c in range(d, d + m + 1):
            grid[d][c] = True
        for r in range(d, d + m + 1):
            grid[r][d] = True
    rows = [sum(grid[r]) for r in range(1, size + 1)]
    result = Partition(x for x in rows if x > 0)
    if result.conjugate() != result or result.n != mu.n:
        raise AssertionError(f"folding of {mu} is inconsistent")
    return result


def unfold(lam: Sequence[int]) -> Partition:
    """Inverse of :func:`fold`: principal hook lengths of a self-conjugate
    partition, as a distinct-odd-parts partition."""
    lam = Partition(lam)
    if lam.conjugate() != lam:
        raise HypothesisViolation(f"{lam} is not self-conjugate")
    diag = sum(1 for i, part in enumerate(lam, start=1) if part >= i)
    return Partition(2 * (lam[i - 1] - i) + 1 for i in range(1, diag + 1))


def z_mu(mu: Sequence[int]) -> int:
    """Centralizer order: product over part sizes i of i^m_i * m_i!."""
    result = 1
    i = 0
    mu = tuple(mu)
    while i < len(mu):
        j = i
        while j < len(mu) and mu[j] == mu[i]:
            j += 1
        m = j - i
        result *= mu[i] ** m
        for k in range(1, m + 1):
            result *= k
        i = j
    return result


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            cyc = tuple(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Function composition: (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles (fixed points included), each led by its least element,
        sorted by least element."""
        seen: set[int] = set()
        out: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return f"Permutation.identity({self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
        return f"Permutation[{self.degree}]{text}"


def canonical_permutation(alpha: Sequence[int]) -> Permutation:
    """The permutation cycling each consecutive block [1..a_1],
    [a_1+1..a_1+a_2], ... of sizes given by the composition ``alpha``."""
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    n = sum(alpha)
    images = list(range(1, n + 1))
    start = 0
    for a in alpha:
        for i in range(start + 1, start + a):
            images[i - 1] = i + 1
        images[start + a - 1] = start + 1
        start += a
    return Permutation(images)


def wreath_embed(fs: Sequence[Permutation], pi: Permutation) -> Permutation:
    """Embed (f_1..f_n; pi), with each f_j a permutation of {1..m} and pi a
    permutation of {1..n}, into the symmetric group on {1..mn}.

    The point (j-1)m + i maps to (pi(j)-1)m + f_{pi(j)}(i).
    """
    if not fs:
        raise ValueError("need at least one inner permutation")
    m = fs[0].degree
    if any(f.degree != m for f in fs):
        raise ValueError("inner permutations must share a degree")
    n = pi.degree
    if n != len(fs):
        raise ValueError("outer degree must match the number of inner permutations")
    images = [0] * (m * n)
    for j in range(1, n + 1):
        pj = pi(j)
        f = fs[pj - 1]
        for i in range(1, m + 1):
            images[(j - 1) * m + i - 1] = (pj - 1) * m + f(i)
    return Permutation(images)
