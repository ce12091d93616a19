"""Schur-function layer: Littlewood-Richardson coefficients, induced
character expansions, and the Schur-positivity lemma verifiers.

c(lam; alpha, beta) counts semistandard fillings of the skew shape
lam/alpha with content beta whose reverse row reading word (rows top to
bottom, each read right to left) is a lattice word.  The backtracking
below fills cells in exactly that reading order, so the lattice property
and semistandardness are enforced incrementally and failures prune early.

The f/g expansions are induced characters of the cyclic group generated
by a permutation of a given cycle type: coefficient of s_lam in f_mu is
the invariant-vector multiplicity, in g_mu the multiplicity of -1.
"""

from __future__ import annotations

import time
from functools import cache
from typing import Iterator, Mapping, Sequence

from . import _exceptions as fixtures
from .reports import VerificationReport
from .shapes import (
    Cell,
    HypothesisViolation,
    Partition,
    format_partition,
    order,
    parse_partition,
    partitions_of,
)
from .spectrum import eig_multiplicities

__all__ = [
    "LEMMA_TAGS",
    "SchurVector",
    "SkewTableau",
    "choose_beta",
    "f_mu",
    "g_mu",
    "is_lattice_word",
    "lr_coefficient",
    "schur_product",
    "t_lambda_alpha",
    "verify_lemma",
    "verify_schur_inequality",
]


class SkewTableau:
    """A filling of the cells of outer/inner by positive integers."""

    __slots__ = ("outer", "inner", "entries")

    def __init__(self, outer, inner, entries: Mapping[Cell, int]):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")
        expected = set(_skew_cells(self.outer, self.inner))
        if set(entries) != expected:
            raise ValueError("entries must cover exactly the skew cells")
        self.entries = dict(entries)

    def content(self) -> tuple[int, ...]:
        """Multiplicity of each letter 1..max, as a tuple."""
        if not self.entries:
            return ()
        top = max(self.entries.values())
        counts = [0] * top
        for value in self.entries.values():
            counts[value - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for (i, j), value in self.entries.items():
            right = self.entries.get((i, j + 1))
            if right is not None and right < value:
                return False
            below = self.entries.get((i + 1, j))
            if below is not None and below <= value:
                return False
        return True

    def reverse_reading_word(self) -> list[int]:
        """Rows top to bottom, each row read right to left."""
        word = []
        for i in range(1, len(self.outer) + 1):
            lo = self.inner[i - 1] if i <= len(self.inner) else 0
            for j in range(self.outer[i - 1], lo, -1):
                word.append(self.entries[(i, j)])
        return word

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewTableau)
            and self.outer == other.outer
            and self.inner == other.inner
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SkewTableau({self.outer!r}, {self.inner!r}, {self.entries!r})"


def is_lattice_word(word: Sequence[int]) -> bool:
    """Every prefix contains at least as many i as i+1, for all i."""
    counts: dict[int, int] = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts.get(letter - 1, 0) < counts[letter]:
            return False
    return True


def _skew_cells(outer: Partition, inner: Partition) -> list[Cell]:
    """Skew cells in reverse reading order (rows top down, right to left)."""
    cells = []
    for i in range(1, len(outer) + 1):
        lo = inner[i - 1] if i <= len(inner) else 0
        for j in range(outer[i - 1], lo, -1):
            cells.append((i, j))
    return cells


def _iter_lattice_fillings(
    outer: Partition, inner: Partition, budget: list[int] | None, max_letter: int
) -> Iterator[tuple[int, ...]]:
    """Yield the content of every lattice semistandard filling of
    outer/inner; with a budget, only fillings of exactly that content.

    Cells are filled in reverse reading order, so the lattice condition is
    a running constraint and the right/above neighbours are already
    placed when a cell is assigned.
    """
    cells = _skew_cells(outer, inner)
    inner_padded = tuple(inner) + (0,) * (len(outer) - len(inner))
    entries: dict[Cell, int] = {}
    counts = [0] * (max_letter + 1)

    def fill(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == len(cells):
            yield tuple(counts[1:])
            return
        i, j = cells[pos]
        above = entries.get((i - 1, j), 0) if i > 1 and j > inner_padded[i - 2] else 0
        right = entries.get((i, j + 1))
        hi = right if right is not None else max_letter
        for letter in range(above + 1, hi + 1):
            if budget is not None and budget[letter - 1] == 0:
                continue
            if letter > 1 and counts[letter - 1] <= counts[letter]:
                continue
            entries[(i, j)] = letter
            counts[letter] += 1
            if budget is not None:
                budget[letter - 1] -= 1
            yield from fill(pos + 1)
            if budget is not None:
                budget[letter - 1] += 1
            counts[letter] -= 1
            del entries[(i, j)]

    yield from fill(0)


def lr_coefficient(lam, alpha, beta) -> int:
    """Littlewood-Richardson coefficient: the number of lattice
    semistandard fillings of lam/alpha with content beta."""
    lam, alpha, beta = Partition(lam), Partition(alpha), Partition(beta)
    if alpha.n + beta.n != lam.n:
        raise HypothesisViolation(f"|{alpha}| + |{beta}| != |{lam}|")
    if not (lam.contains(alpha) and lam.contains(beta)):
        return 0
    budget = list(beta)
    return sum(1 for _ in _iter_lattice_fillings(lam, alpha, budget, len(beta)))


def skew_lr_contents(lam, alpha) -> dict[Partition, int]:
    """All Littlewood-Richardson coefficients c(lam; alpha, -) at once:
    content -> count over lattice fillings of lam/alpha."""
    lam, alpha = Partition(lam), Partition(alpha)
    if not lam.contains(alpha):
        return {}
    out: dict[Partition, int] = {}
    for content in _iter_lattice_fillings(lam, alpha, None, len(lam)):
        beta = Partition(x for x in content if x)
        out[beta] = out.get(beta, 0) + 1
    return out


class SchurVector:
    """Finitely supported integer combination of Schur functions of one
    weight.  Serializes as ``partition<TAB>coefficient`` lines in
    canonical partition order."""

    __slots__ = ("weight", "_coeffs")

    def __init__(self, weight: int, coeffs: Mapping | None = None):
        self.weight = int(weight)
        self._coeffs: dict[Partition, int] = {}
        for lam, value in (coeffs or {}).items():
            lam = Partition(lam)
            if lam.n != self.weight:
                raise ValueError(f"{lam} is not a partition of {self.weight}")
            if value:
                self._coeffs[lam] = int(value)

    def __getitem__(self, lam) -> int:
        return self._coeffs.get(Partition(lam), 0)

    def support(self) -> tuple[Partition, ...]:
        return tuple(sorted(self._coeffs, key=tuple, reverse=True))

    def items(self):
        return ((lam, self._coeffs[lam]) for lam in self.support())

    def zero_partitions(self) -> frozenset[Partition]:
        """All partitions of the weight with coefficient zero."""
        return frozenset(lam for lam in partitions_of(self.weight) if lam not in self._coeffs)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if self.weight != other.weight:
            raise ValueError("weights differ")
        coeffs = dict(self._coeffs)
        for lam, value in other._coeffs.items():
            coeffs[lam] = coeffs.get(lam, 0) + value
        return SchurVector(self.weight, coeffs)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (other * -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurVector(self.weight, {l: c * other for l, c in self._coeffs.items()})
        result = SchurVector(self.weight + other.weight)
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                result = result + schur_product(a, b) * (ca * cb)
        return result

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurVector)
            and self.weight == other.weight
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*s[{format_partition(l)}]" if c != 1 else f"s[{format_partition(l)}]"
            for l, c in self.items()
        )
        return f"SchurVector({self.weight}: {body or '0'})"

    def to_tsv(self) -> str:
        return "\n".join(f"{format_partition(l)}\t{c}" for l, c in self.items())

    @classmethod
    def from_tsv(cls, weight: int, text: str) -> "SchurVector":
        coeffs = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            shape, _, value = line.partition("\t")
            coeffs[parse_partition(shape)] = int(value)
        return cls(weight, coeffs)


def schur_product(alpha, beta) -> SchurVector:
    """Product of two Schur functions in the Schur basis."""
    alpha, beta = Partition(alpha), Partition(beta)
    n = alpha.n + beta.n
    coeffs: dict[Partition, int] = {}
    for lam in partitions_of(n):
        if len(lam) > len(alpha) + len(beta) or (lam and lam[0] > (alpha[0] if alpha else 0) + (beta[0] if beta else 0)):
            continue
        if not (lam.contains(alpha) and lam.contains(beta)):
            continue
        c = lr_coefficient(lam, alpha, beta)
        if c:
            coeffs[lam] = c
    return SchurVector(n, coeffs)


def t_lambda_alpha(lam, alpha) -> tuple[SkewTableau, Partition]:
    """The canonical lattice filling of lam/alpha: each column of the skew
    shape is filled 1, 2, ... from its top cell down.  Returns the
    tableau and its content, a partition of |lam| - |alpha|."""
    lam, alpha = Partition(lam), Partition(alpha)
    if not lam.contains(alpha):
        raise HypothesisViolation(f"{alpha} is not contained in {lam}")
    entries: dict[Cell, int] = {}
    depth: dict[int, int] = {}
    for i in range(1, len(lam) + 1):
        lo = alpha[i - 1] if i <= len(alpha) else 0
        for j in range(lo + 1, lam[i - 1] + 1):
            depth[j] = depth.get(j, 0) + 1
            entries[(i, j)] = depth[j]
    tableau = SkewTableau(lam, alpha, entries)
    beta = Partition(x for x in tableau.content() if x)
    return tableau, beta


def f_mu(mu) -> SchurVector:
    """Schur expansion of the character induced from the trivial character
    of the cyclic group generated by a permutation of cycle type ``mu``."""
    mu = Partition(mu)
    coeffs = {lam: eig_multiplicities(lam, mu).counts[0] for lam in partitions_of(mu.n)}
    return SchurVector(mu.n, coeffs)


def g_mu(mu) -> SchurVector:
    """Schur expansion of the character induced from the order-two
    character of the cyclic group generated by a permutation of cycle type
    ``mu``; requires even order."""
    mu = Partition(mu)
    m = order(mu)
    if m % 2:
        raise HypothesisViolation(f"class {mu} has odd order")
    coeffs = {lam: eig_multiplicities(lam, mu).counts[m // 2] for lam in partitions_of(mu.n)}
    return SchurVector(mu.n, coeffs)


@cache
def _f_single_coeff(beta: Partition) -> int:
    """Coefficient of s_beta in f over a single cycle of length |beta|."""
    return eig_multiplicities(beta, Partition((beta.n,))).counts[0]


def choose_beta(lam, q: int) -> Partition:
    """First partition beta of q, in canonical order, that is contained in
    ``lam`` and appears in the single-cycle expansion f over a q-cycle.

    Such a beta exists whenever |lam| >= q + 2 and lam is not a single
    column; that existence is the content of the choose-beta lemma and is
    enforced here as a precondition.
    """
    lam = Partition(lam)
    if lam.n < q + 2 or lam == Partition((1,) * lam.n):
        raise HypothesisViolation(f"choose_beta needs |lam| >= q + 2 and a non-column shape")
    for beta in partitions_of(q):
        if lam.contains(beta) and _f_single_coeff(beta) > 0:
            return beta
    raise AssertionError(f"no admissible choice for lam={lam}, q={q}")


def verify_schur_inequality(lhs: SchurVector, exceptions) -> frozenset[Partition]:
    """Symmetric difference between the zero-coefficient set of ``lhs``
    and an expected exception set; empty means the inequality holds with
    exactly the stated exceptions."""
    expected = frozenset(Partition(x) for x in exceptions)
    return lhs.zero_partitions() ^ expected


# ---------------------------------------------------------------------------
# Lemma verifiers

LEMMA_TAGS = (
    "base_1",
    "base_2",
    "base_3",
    "base_4",
    "three_parts_1",
    "three_parts_2",
    "gen_case_1",
    "gen_case_2",
    "yang_staroletov",
    "yang_staroletov_cor",
    "eigen_minus_one",
)


def _punctured(n: int, removed: set[tuple[int, ...]]) -> list[Partition]:
    removed = {Partition(x) for x in removed}
    return [lam for lam in partitions_of(n) if lam not in removed]


def _hook_sets(p: int) -> tuple[set[Partition], set[Partition]]:
    """The two punctured sets used by the two-factor lemmas: near-hooks
    (parity dependent) and the trivial pair."""
    if p % 2:
        near = {Partition((p - 1, 1)), Partition([2] + [1] * (p - 2))}
    else:
        near = {Partition((p - 1, 1)), Partition([1] * p)}
    trivial = {Partition((p,)), Partition([1] * p)}
    return near, trivial


def _two_row_removed(p: int) -> set[Partition]:
    return {
        Partition((2 * p,)),
        Partition((2 * p - 1, 1)),
        Partition((p, p)),
        Partition([2] * p),
        Partition([2] + [1] * (2 * p - 2)),
        Partition([1] * (2 * p)),
    }


def _first_allowed_content(lam: Partition, alpha: Partition, allowed: set[Partition],
                           forbid: Partition | None = None) -> bool:
    """True iff some lattice filling of lam/alpha has content in
    ``allowed`` (and different from ``forbid`` when given)."""
    seen: set[Partition] = set()
    for content in _iter_lattice_fillings(lam, alpha, None, len(lam)):
        beta = Partition(x for x in content if x)
        if beta in seen:
            continue
        seen.add(beta)
        if beta in allowed and beta != forbid:
            return True
    return False


def _zero_set_product(n: int, lefts: Sequence[Partition], rights: set[Partition],
                      distinct: bool) -> list[Partition]:
    """Partitions of n missing from sum of s_alpha * s_beta over allowed
    pairs (alpha from lefts, beta from rights, unequal when ``distinct``)."""
    zero = []
    for lam in partitions_of(n):
        hit = False
        for alpha in lefts:
            if not lam.contains(alpha):
                continue
            if _first_allowed_content(lam, alpha, rights, alpha if distinct else None):
                hit = True
                break
        if not hit:
            zero.append(lam)
    return zero


def _zero_set_chain(p: int, j: int, alphas: set[Partition], betas: set[Partition]) -> list[Partition]:
    """Zero set of (sum of s_beta)^j * (sum of s_alpha) at weight (j+2)p."""
    n = (j + 2) * p

    @cache
    def reachable(lam: Partition, level: int) -> bool:
        if level == 0:
            return lam in alphas
        for nu in partitions_of(lam.n - p):
            if lam.contains(nu) and reachable(nu, level - 1):
                if _first_allowed_content(lam, nu, betas):
                    return True
        return False

    result = [lam for lam in partitions_of(n) if not reachable(lam, j)]
    reachable.cache_clear()
    return result


def _lemma_report(tag: str, params: dict, found: list[str], n: int,
                  start: float, extra_ctx: dict | None = None) -> VerificationReport:
    rows = fixtures.fixture_rows()[f"lemma_{tag}"]
    ctx = {"n": n, **(extra_ctx or {})}
    expected: dict[str, bool] = {}
    for row in rows:
        if not fixtures.holds(row.cond, **ctx):
            continue
        lam = fixtures.expand_shape(row.left, n)
        if lam is None:
            continue
        unit = f"lambda={format_partition(lam)}"
        expected[unit] = expected.get(unit, True) and row.optional
    if "r_values" in params:
        expected = {
            f"{unit}; r={r}": optional
            for unit, optional in expected.items()
            for r in params["r_values"]
        }
    required = sorted(u for u, optional in expected.items() if not optional)
    optional_units = sorted(u for u, optional in expected.items() if optional)
    found_set = set(found)
    return VerificationReport(
        theorem=f"lemma:{tag}",
        params=params,
        found=sorted(found_set),
        expected=required,
        optional=optional_units,
        missing=sorted(set(required) - found_set),
        unexpected=sorted(found_set - set(expected)),
        pattern_mismatches=[],
        optional_found=sorted(found_set & set(optional_units)),
        elapsed_seconds=time.monotonic() - start,
    )


def verify_lemma(tag: str, p: int, q: int | None = None, j: int = 1) -> VerificationReport:
    """Verify one of the bundled Schur-positivity inequalities, returning
    a report of its zero-coefficient set against the expected exceptions."""
    if tag not in LEMMA_TAGS:
        raise ValueError(f"unknown lemma tag {tag!r}; known: {', '.join(LEMMA_TAGS)}")
    start = time.monotonic()

    if tag in ("base_1", "base_2", "base_3", "base_4"):
        odd_case = tag in ("base_1", "base_2")
        if p <= 5 or (p % 2 == 1) != odd_case:
            raise HypothesisViolation(f"{tag} needs p > 5 and p {'odd' if odd_case else 'even'}")
        near, trivial = _hook_sets(p)
        rights = set(_punctured(p, near))
        lefts = _punctured(p, near if tag in ("base_1", "base_3") else trivial)
        zero = _zero_set_product(2 * p, lefts, rights, distinct=True)
        found = [f"lambda={format_partition(l)}" for l in zero]
        return _lemma_report(tag, {"p": p, "n": 2 * p}, found, 2 * p, start)

    if tag in ("three_parts_1", "three_parts_2"):
        if p < 7 or p % 2 == 0:
            raise HypothesisViolation(f"{tag} needs odd p >= 7")
        near, _ = _hook_sets(p)
        rights = set(_punctured(p, near))
        removed = _two_row_removed(p)
        if tag == "three_parts_2":
            removed -= {Partition((2 * p - 1, 1)), Partition([2] + [1] * (2 * p - 2))}
        lefts = _punctured(2 * p, removed)
        zero = _zero_set_product(3 * p, lefts, rights, distinct=False)
        found = [f"lambda={format_partition(l)}" for l in zero]
        return _lemma_report(tag, {"p": p, "n": 3 * p}, found, 3 * p, start)

    if tag in ("gen_case_1", "gen_case_2"):
        if p < 7 or p % 2 == 0 or j < 1:
            raise HypothesisViolation(f"{tag} needs odd p >= 7 and j >= 1")
        near, _ = _hook_sets(p)
        betas = set(_punctured(p, near))
        removed = _two_row_removed(p)
        if tag == "gen_case_2":
            removed -= {Partition((2 * p - 1, 1)), Partition([2] + [1] * (2 * p - 2))}
        alphas = set(_punctured(2 * p, removed))
        n = (j + 2) * p
        zero = _zero_set_chain(p, j, alphas, betas)
        found = [f"lambda={format_partition(l)}" for l in zero]
        return _lemma_report(tag, {"p": p, "j": j, "n": n}, found, n, start)

    if q is None:
        raise HypothesisViolation(f"{tag} needs both p and q")
    if q > p:
        raise HypothesisViolation(f"(p, q) = ({p}, {q}) is not a partition")
    n = p + q
    mu = Partition((p, q))

    if tag == "yang_staroletov":
        if p < 3 or q < 1:
            raise HypothesisViolation("needs p >= 3 and q >= 1")
        m = order(mu)
        r_values = [r for r in range(1, p) if (2 * r) % p != 0]
        found = []
        for r in r_values:
            k = r * (m // p) % m
            for lam in partitions_of(n):
                if eig_multiplicities(lam, mu).counts[k] == 0:
                    found.append(f"lambda={format_partition(lam)}; r={r}")
        params = {"p": p, "q": q, "n": n, "r_values": r_values}
        return _lemma_report(tag, params, found, n, start, {"p": p, "q": q})

    if tag == "yang_staroletov_cor":
        if p < 3 or q < 1:
            raise HypothesisViolation("needs p >= 3 and q >= 1")
        _, trivial = _hook_sets(p)
        lefts = _punctured(p, trivial)
        rights = {beta for beta in partitions_of(q) if _f_single_coeff(beta) > 0}
        zero = _zero_set_product(n, lefts, rights, distinct=False)
        found = [f"lambda={format_partition(l)}" for l in zero]
        return _lemma_report(tag, {"p": p, "q": q, "n": n}, found, n, start, {"p": p, "q": q})

    if tag == "eigen_minus_one":
        if p < 6 or q < 1:
            raise HypothesisViolation("needs p >= 6 and q >= 1")
        m = order(mu)
        if m % 2:
            raise HypothesisViolation(f"class {mu} has odd order")
        found = [
            f"lambda={format_partition(lam)}"
            for lam in partitions_of(n)
            if eig_multiplicities(lam, mu).counts[m // 2] == 0
        ]
        return _lemma_report(tag, {"p": p, "q": q, "n": n}, found, n, start, {"p": p, "q": q})

    raise AssertionError(f"unhandled tag {tag}")
