"""Eigenvalue multiplicities and minimal polynomials of representation
matrices, and the theorem verification harness.

For a permutation w of order m and an irreducible character chi, the
multiplicity of exp(2*pi*i*r/m) as an eigenvalue of the representing
matrix is the inner product of the restriction of chi to <w> with the
character w -> exp(2*pi*i*r/m).  Because chi(w^j) depends only on
gcd(j, m), grouping the sum by divisors turns it into

    counts[r] = (1/m) * sum over d | m of chi(w^d) * c_{m/d}(r),

where c_k(r) is the Ramanujan sum, an integer.  The symmetric-group path
therefore never leaves integer arithmetic.  Alternating-group split
characters contribute an extra term b*sqrt(eps*M) on the classes whose
cycle type has distinct odd parts; that surd part is the one place
floating point enters, guarded by an integrality assertion.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import cache
from math import cos, gcd, pi, sin
from typing import NamedTuple

from . import _exceptions as fixtures
from .characters import (
    AltClassLabel,
    AltIrrep,
    _check_alt_class,
    _check_alt_irrep,
    alt_classes,
    alt_dimension,
    alt_irreducibles,
    chi,
    dimension,
    epsilon_mu,
    m_product,
    split_class_of_power,
)
from .reports import VerificationReport
from .shapes import (
    HypothesisViolation,
    Partition,
    fold,
    format_partition,
    is_dop,
    order,
    partitions_of,
    power_cycle_type,
    sign_of_class,
)

__all__ = [
    "MultiplicityVector",
    "RootSet",
    "THEOREM_TAGS",
    "alt_eig_multiplicities",
    "eig_multiplicities",
    "has_invariant_vector",
    "has_minus_one",
    "maj_count_kw",
    "minimal_polynomial",
    "ramanujan_sum",
    "verify_theorem",
]

SURD_TOLERANCE = 1e-6


@cache
def _mobius(k: int) -> int:
    result = 1
    f = 2
    while f * f <= k:
        if k % f == 0:
            k //= f
            if k % f == 0:
                return 0
            result = -result
        f += 1
    if k > 1:
        result = -result
    return result


@cache
def _totient(k: int) -> int:
    result = k
    f = 2
    while f * f <= k:
        if k % f == 0:
            while k % f == 0:
                k //= f
            result -= result // f
        f += 1
    if k > 1:
        result -= result // k
    return result


@cache
def _divisors(m: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, m + 1) if m % d == 0)


def ramanujan_sum(m: int, r: int) -> int:
    """Sum of exp(2*pi*i*r*j/m) over j coprime to m; always an integer:
    mobius(m/g) * phi(m) / phi(m/g) with g = gcd(r, m)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    g = gcd(r % m, m) or m
    k = m // g
    return _mobius(k) * (_totient(m) // _totient(k))


class MultiplicityVector(NamedTuple):
    """Multiplicities counts[r] of the eigenvalues exp(2*pi*i*r/m)."""

    order: int
    counts: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return sum(self.counts)

    @property
    def present(self) -> frozenset[int]:
        return frozenset(r for r, c in enumerate(self.counts) if c > 0)

    @property
    def is_full(self) -> bool:
        return all(c > 0 for c in self.counts)


class RootSet(NamedTuple):
    """The distinct-eigenvalue set of a representing matrix, i.e. the
    root set of its minimal polynomial inside the m-th roots of unity."""

    order: int
    present: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.present)

    @property
    def is_full(self) -> bool:
        return len(self.present) == self.order


@cache
def eig_multiplicities(lam, mu) -> MultiplicityVector:
    """Eigenvalue multiplicities of the matrix of a permutation of cycle
    type ``mu`` in the irreducible indexed by ``lam``; exact."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise HypothesisViolation(f"weight mismatch: |{lam}| != |{mu}|")
    m = order(mu)
    values = {d: chi(lam, power_cycle_type(mu, d)) for d in _divisors(m)}
    counts = []
    for r in range(m):
        total = sum(values[d] * ramanujan_sum(m // d, r) for d in _divisors(m))
        if total % m:
            raise AssertionError(f"non-integral multiplicity at ({lam}, {mu}, {r})")
        if total < 0:
            raise AssertionError(f"negative multiplicity at ({lam}, {mu}, {r})")
        counts.append(total // m)
    result = MultiplicityVector(m, tuple(counts))
    if result.dimension != dimension(lam):
        raise AssertionError(f"multiplicities of ({lam}, {mu}) do not sum to the dimension")
    return result


def minimal_polynomial(lam, mu) -> RootSet:
    """Root set of the minimal polynomial of the representing matrix."""
    mv = eig_multiplicities(lam, mu)
    return RootSet(mv.order, mv.present)


def has_invariant_vector(lam, mu) -> bool:
    """True iff 1 is an eigenvalue."""
    return eig_multiplicities(lam, mu).counts[0] > 0


def has_minus_one(lam, mu) -> bool:
    """True iff -1 is an eigenvalue; requires an even-order class."""
    mv = eig_multiplicities(lam, mu)
    if mv.order % 2:
        raise HypothesisViolation(f"class {Partition(mu)} has odd order")
    return mv.counts[mv.order // 2] > 0


def maj_count_kw(lam, r: int) -> int:
    """Number of standard tableaux of shape ``lam`` with major index
    congruent to r mod n, computed as a character multiplicity on the
    n-cycle (no tableau is ever enumerated)."""
    lam = Partition(lam)
    if lam.n == 0:
        return 1
    mv = eig_multiplicities(lam, Partition((lam.n,)))
    return mv.counts[r % lam.n]


@cache
def alt_eig_multiplicities(v: AltIrrep, c: AltClassLabel) -> MultiplicityVector:
    """Eigenvalue multiplicities over the alternating group.

    The rational part of the character is constant on power classes with a
    fixed gcd, so it goes through the exact Ramanujan-sum path; the surd
    part of a split character (supported on the powers coprime to the
    order) is evaluated in floating point and the total is rounded, with
    the residual checked against SURD_TOLERANCE.
    """
    v = _check_alt_irrep(v)
    c = _check_alt_class(c)
    lam, nu = v.partition, c.cycle_type
    if lam.n != nu.n:
        raise HypothesisViolation(f"weight mismatch: |{lam}| != |{nu}|")
    m = order(nu)
    split_here = v.tag is not None and is_dop(nu) and fold(nu) == lam

    rational: dict[int, Fraction] = {}
    for d in _divisors(m):
        value = chi(lam, power_cycle_type(nu, d))
        if v.tag is None:
            rational[d] = Fraction(value)
        elif d == 1 and split_here:
            rational[d] = Fraction(epsilon_mu(nu), 2)
        else:
            rational[d] = Fraction(value, 2)

    if split_here:
        radicand = epsilon_mu(nu) * m_product(nu)
        root = complex(0.0, abs(radicand) ** 0.5) if radicand < 0 else complex(abs(radicand) ** 0.5)
        class_sign = 1 if c.tag == "+" else -1
        label_sign = 1 if v.tag == "+" else -1
        coprime = [
            (j, class_sign * (1 if split_class_of_power(nu, j) == "+" else -1))
            for j in range(1, m)
            if gcd(j, m) == 1
        ]

    counts = []
    for r in range(m):
        exact = sum(rational[d] * ramanujan_sum(m // d, r) for d in _divisors(m)) / m
        total = complex(exact)
        if split_here:
            angleunit = 2.0 * pi * r / m
            surd = sum(
                s * complex(cos(angleunit * j), -sin(angleunit * j)) for j, s in coprime
            )
            total += root * label_sign * surd / (2 * m)
        nearest = round(total.real)
        if abs(total - nearest) > SURD_TOLERANCE:
            raise AssertionError(
                f"multiplicity of ({v}, {c}) at r={r} is not integral: {total}"
            )
        if nearest < 0:
            raise AssertionError(f"negative multiplicity at ({v}, {c}, {r})")
        counts.append(nearest)
    result = MultiplicityVector(m, tuple(counts))
    if result.dimension != alt_dimension(v):
        raise AssertionError(f"multiplicities of ({v}, {c}) do not sum to the dimension")
    return result


# ---------------------------------------------------------------------------
# Theorem verification harness

THEOREM_TAGS = (
    "main",
    "main_min",
    "main_alt",
    "main_2_min_alt",
    "sundaram",
    "klyachko",
    "inv_vec_sym",
    "inv_vec_alt",
    "eigen_sgn",
    "eigen_neg",
    "eigen_neg_alt",
)

DEFAULT_RANGES = {
    "main": (2, 12),
    "main_min": (3, 14),
    "main_alt": (4, 10),
    "main_2_min_alt": (5, 9),
    "sundaram": (2, 11),
    "klyachko": (3, 12),
    "inv_vec_sym": (2, 11),
    "inv_vec_alt": (3, 10),
    "eigen_sgn": (2, 11),
    "eigen_neg": (2, 11),
    "eigen_neg_alt": (3, 10),
}

_FIXTURE_SECTION = {tag: tag for tag in THEOREM_TAGS}


def _divides_largest(mu: Partition) -> bool:
    return all(mu[0] % a == 0 for a in mu)


def _sym_class_universe(tag: str, n: int) -> list[Partition]:
    if tag in ("main_min", "sundaram", "klyachko"):
        return [Partition((n,))]
    if tag == "main":
        return [mu for mu in partitions_of(n) if _divides_largest(mu)]
    if tag == "eigen_neg":
        return [mu for mu in partitions_of(n) if order(mu) % 2 == 0]
    return list(partitions_of(n))  # inv_vec_sym, eigen_sgn


def _alt_class_universe(tag: str, n: int) -> list[AltClassLabel]:
    classes = alt_classes(n)
    if tag == "main_alt":
        return [c for c in classes if _divides_largest(c.cycle_type)]
    if tag == "eigen_neg_alt":
        return [c for c in classes if order(c.cycle_type) % 2 == 0]
    return list(classes)  # inv_vec_alt


def _key_sym(n: int, lam: Partition, mu: Partition | None) -> tuple:
    if mu is None:
        return (n, tuple(lam))
    return (n, tuple(lam), tuple(mu))


def _key_alt(n: int, v: AltIrrep, c: AltClassLabel) -> tuple:
    return (n, tuple(v.partition), v.tag or "", tuple(c.cycle_type), c.tag or "")


def _render_unit(tag: str, key: tuple) -> str:
    if tag in ("main_min", "sundaram", "klyachko"):
        n, lam = key
        return f"n={n}: lambda={format_partition(lam)}"
    if tag == "main_2_min_alt":
        n, lam, vtag = key
        return f"n={n}: V={format_partition(lam)}{vtag}"
    if tag in ("main", "inv_vec_sym", "eigen_sgn", "eigen_neg"):
        n, lam, mu = key
        return f"n={n}: lambda={format_partition(lam)}; mu={format_partition(mu)}"
    n, lam, vtag, ctype, ctag = key
    return f"n={n}: V={format_partition(lam)}{vtag}; class={format_partition(ctype)}{ctag}"


def _scan_for_n(tag: str, n: int) -> list[tuple[tuple, int, tuple[int, ...]]]:
    """All exceptions the scan finds at weight n, with their evidence
    (class order, sorted present residues)."""
    found: list[tuple[tuple, int, tuple[int, ...]]] = []
    if tag in ("main", "main_min", "sundaram", "klyachko", "inv_vec_sym", "eigen_sgn", "eigen_neg"):
        single = tag in ("main_min", "sundaram", "klyachko")
        for mu in _sym_class_universe(tag, n):
            m = order(mu)
            for lam in partitions_of(n):
                mv = eig_multiplicities(lam, mu)
                if tag in ("main", "main_min"):
                    bad = not mv.is_full
                elif tag in ("sundaram", "inv_vec_sym"):
                    bad = mv.counts[0] == 0
                elif tag == "klyachko":
                    bad = mv.counts[1 % n] == 0
                elif tag == "eigen_sgn":
                    index = 0 if sign_of_class(mu) == 1 else m // 2
                    bad = mv.counts[index] == 0
                else:  # eigen_neg
                    bad = mv.counts[m // 2] == 0
                if bad:
                    key = _key_sym(n, lam, None if single else mu)
                    found.append((key, m, tuple(sorted(mv.present))))
    elif tag == "main_2_min_alt":
        if n % 2 == 0:
            return []
        c = AltClassLabel(Partition((n,)), "+")
        for v in alt_irreducibles(n):
            mv = alt_eig_multiplicities(v, c)
            if not mv.is_full:
                found.append(((n, tuple(v.partition), v.tag or ""), mv.order, tuple(sorted(mv.present))))
    else:  # main_alt, inv_vec_alt, eigen_neg_alt
        for c in _alt_class_universe(tag, n):
            m = order(c.cycle_type)
            for v in alt_irreducibles(n):
                if tag == "eigen_neg_alt" and v == AltIrrep(Partition((n,)), None):
                    continue  # the trivial label is outside this scan's hypotheses
                mv = alt_eig_multiplicities(v, c)
                if tag == "main_alt":
                    bad = not mv.is_full
                elif tag == "inv_vec_alt":
                    bad = mv.counts[0] == 0
                else:
                    bad = mv.counts[m // 2] == 0
                if bad:
                    found.append((_key_alt(n, v, c), m, tuple(sorted(mv.present))))
    return found


def _expected_for_n(tag: str, n: int) -> dict[tuple, tuple[frozenset[int] | None, bool]]:
    """Expand the fixture rows at weight n into unit -> (predicted present
    set or None, optional flag)."""
    if tag == "main_2_min_alt" and n % 2 == 0:
        return {}  # the scan's hypothesis restricts to odd n
    rows = fixtures.fixture_rows()[_FIXTURE_SECTION[tag]]
    sym_pairs = tag in ("main", "inv_vec_sym", "eigen_sgn", "eigen_neg")
    alt_pairs = tag in ("main_alt", "inv_vec_alt", "eigen_neg_alt")
    expected: dict[tuple, tuple[frozenset[int] | None, bool]] = {}

    def put(key: tuple, pattern: frozenset[int] | None, optional: bool) -> None:
        if key in expected:
            old_pattern, old_optional = expected[key]
            if old_pattern is not None and pattern is not None and old_pattern != pattern:
                raise AssertionError(f"fixture rows disagree on {key}")
            expected[key] = (old_pattern or pattern, old_optional and optional)
        else:
            expected[key] = (pattern, optional)

    for row in rows:
        if not fixtures.holds(row.cond, n=n):
            continue
        left_text, left_tag = fixtures.split_label(row.left)
        lam = fixtures.expand_shape(left_text, n)
        if lam is None:
            continue
        if alt_pairs or tag == "main_2_min_alt":
            self_conj = lam.conjugate() == lam
            if self_conj != (left_tag is not None):
                continue  # label shape not valid at this weight
            label = AltIrrep(lam, left_tag)
        if tag in ("main_min", "sundaram", "klyachko"):
            pat = (
                fixtures.predicted_present(row.pattern, n, n, sign_of_class(Partition((n,))))
                if row.pattern
                else None
            )
            put(_key_sym(n, lam, None), pat, row.optional)
            continue
        if tag == "main_2_min_alt":
            pat = (
                fixtures.predicted_present(row.pattern, n, n, 1)
                if row.pattern
                else None
            )
            put((n, tuple(lam), left_tag or ""), pat, row.optional)
            continue
        # pair scans: expand the class side
        if sym_pairs:
            universe = _sym_class_universe(tag, n)
            if row.right.startswith("*"):
                selector = row.right
                for mu in universe:
                    if selector == "*!id" and mu == Partition((1,) * n):
                        continue
                    if selector == "*odd" and sign_of_class(mu) != -1:
                        continue
                    if selector == "*even" and sign_of_class(mu) != 1:
                        continue
                    pat = (
                        fixtures.predicted_present(row.pattern, order(mu), n, sign_of_class(mu))
                        if row.pattern
                        else None
                    )
                    put(_key_sym(n, lam, mu), pat, row.optional)
            else:
                mu = fixtures.expand_shape(row.right, n)
                if mu is None or mu not in universe:
                    continue
                pat = (
                    fixtures.predicted_present(row.pattern, order(mu), n, sign_of_class(mu))
                    if row.pattern
                    else None
                )
                put(_key_sym(n, lam, mu), pat, row.optional)
        else:
            universe = _alt_class_universe(tag, n)
            if tag == "eigen_neg_alt" and label == AltIrrep(Partition((n,)), None):
                continue
            if row.right.startswith("*"):
                for c in universe:
                    if row.right == "*!id" and c.cycle_type == Partition((1,) * n):
                        continue
                    pat = (
                        fixtures.predicted_present(row.pattern, order(c.cycle_type), n, 1)
                        if row.pattern
                        else None
                    )
                    put(_key_alt(n, label, c), pat, row.optional)
            else:
                right_text, right_tag = fixtures.split_label(row.right)
                ctype = fixtures.expand_shape(right_text, n)
                if ctype is None:
                    continue
                split = is_dop(ctype)
                if split != (right_tag is not None):
                    continue
                c = AltClassLabel(ctype, right_tag)
                if c not in universe:
                    continue
                pat = (
                    fixtures.predicted_present(row.pattern, order(ctype), n, 1)
                    if row.pattern
                    else None
                )
                put(_key_alt(n, label, c), pat, row.optional)
    return expected


def verify_theorem(tag: str, min_n: int | None = None, max_n: int | None = None,
                   jobs: int = 1) -> VerificationReport:
    """Exhaustively scan the stated hypothesis range and diff the found
    exception set (with its eigenvalue patterns) against the bundled
    expected list."""
    if tag not in THEOREM_TAGS:
        raise ValueError(f"unknown theorem tag {tag!r}; known: {', '.join(THEOREM_TAGS)}")
    lo, hi = DEFAULT_RANGES[tag]
    lo = lo if min_n is None else min_n
    hi = hi if max_n is None else max_n
    start = time.monotonic()
    ns = list(range(lo, hi + 1))
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_scan_for_n, [tag] * len(ns), ns))
    else:
        chunks = [_scan_for_n(tag, n) for n in ns]

    found: dict[tuple, tuple[int, frozenset[int]]] = {}
    for chunk in chunks:
        for key, m, present in chunk:
            found[key] = (m, frozenset(present))
    expected: dict[tuple, tuple[frozenset[int] | None, bool]] = {}
    for n in ns:
        expected.update(_expected_for_n(tag, n))

    required = {k for k, (_, optional) in expected.items() if not optional}
    optional_keys = {k for k, (_, optional) in expected.items() if optional}
    missing = sorted(required - set(found))
    unexpected = sorted(set(found) - set(expected))
    optional_found = sorted(optional_keys & set(found))
    pattern_mismatches = []
    for key in sorted(set(found) & set(expected)):
        predicted = expected[key][0]
        if predicted is not None and found[key][1] != predicted:
            got = sorted(found[key][1])
            pattern_mismatches.append(
                f"{_render_unit(tag, key)}: present={got}, predicted={sorted(predicted)}"
            )

    render = lambda keys: [_render_unit(tag, k) for k in keys]
    return VerificationReport(
        theorem=tag,
        params={"min_n": lo, "max_n": hi},
        found=render(sorted(found)),
        expected=render(sorted(required)),
        optional=render(sorted(optional_keys)),
        missing=render(missing),
        unexpected=render(unexpected),
        pattern_mismatches=pattern_mismatches,
        optional_found=render(optional_found),
        elapsed_seconds=time.monotonic() - start,
    )
