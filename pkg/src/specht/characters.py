"""Exact character values of symmetric and alternating group irreducibles.

Symmetric group values use the recursive border-strip (Murnaghan-Nakayama)
expansion, memoized on the (shape, class) pair.  Everything is ordinary
Python integer arithmetic, so there is no overflow regime.

For the alternating group: the restriction of the irreducible indexed by a
non-self-conjugate shape stays irreducible (and equals the restriction of
its conjugate); a self-conjugate shape splits into a pair ``+``/``-``.  A
conjugacy class of even permutations splits in two exactly when its cycle
type has distinct odd parts (DOP).  On the split pair of a DOP type mu
whose folding is the shape itself, the character values are
(eps +/- sqrt(eps*M))/2 with eps = (-1)**sum((mu_i - 1)/2) and
M = prod(mu_i); everywhere else the pair takes half the symmetric-group
value.
"""

from __future__ import annotations

import pickle
from fractions import Fraction
from functools import cache
from math import factorial, gcd
from pathlib import Path
from typing import Iterator, NamedTuple, Union

from .shapes import (
    HypothesisViolation,
    Partition,
    Permutation,
    canonical_permutation,
    fold,
    format_partition,
    is_dop,
    order,
    partitions_of,
    sign_of_class,
    z_mu,
)

__all__ = [
    "AltClassLabel",
    "AltIrrep",
    "SplitValue",
    "alt_char",
    "alt_class_size",
    "alt_classes",
    "alt_class_function",
    "alt_dimension",
    "alt_irreducibles",
    "chi",
    "chi_class_function",
    "chi_stripping",
    "dimension",
    "epsilon_mu",
    "inner_product",
    "load_character_cache",
    "m_product",
    "save_character_cache",
    "split_class_of_power",
]

CACHE_FORMAT = 1

_CHI_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _border_strips(lam: tuple[int, ...], size: int) -> Iterator[tuple[int, int]]:
    """Yield (height, remainder) for each removable border strip of the
    given size.  Strips correspond to cells of hook length ``size``."""
    if not lam:
        return
    conj = [0] * lam[0]
    for part in lam:
        for j in range(part):
            conj[j] += 1
    for i in range(1, len(lam) + 1):
        # Hook lengths strictly decrease along a row: at most one match.
        for j in range(1, lam[i - 1] + 1):
            h = lam[i - 1] - j + conj[j - 1] - i + 1
            if h < size:
                break
            if h > size:
                continue
            r = i
            while r < len(lam) and lam[r] >= j:
                r += 1
            rows = list(lam)
            for u in range(i, r):
                rows[u - 1] = lam[u] - 1
            rows[r - 1] = j - 1
            yield r - i, tuple(x for x in rows if x > 0)
            break


def _chi(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion, stripping the largest part of mu."""
    if not mu:
        return 1
    key = (lam, mu)
    cached = _CHI_CACHE.get(key)
    if cached is not None:
        return cached
    rest = mu[1:]
    value = sum(
        (-1) ** height * _chi(rem, rest)
        for height, rem in _border_strips(lam, mu[0])
    )
    _CHI_CACHE[key] = value
    return value


def chi(lam, mu) -> int:
    """Character of the symmetric group irreducible ``lam`` on the class
    of cycle type ``mu`` (both partitions of the same n)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise HypothesisViolation(f"weight mismatch: |{lam}| != |{mu}|")
    return _chi(tuple(lam), tuple(mu))


@cache
def _chi_smallest(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    rest = mu[:-1]
    return sum(
        (-1) ** height * _chi_smallest(rem, rest)
        for height, rem in _border_strips(lam, mu[-1])
    )


def chi_stripping(lam, mu, part: str = "largest") -> int:
    """Same value as :func:`chi` but with a selectable recursion order.

    ``part`` is ``"largest"`` (the production path) or ``"smallest"``;
    the result must not depend on the choice, which the test suite uses
    as a self-check of the recursion.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise HypothesisViolation(f"weight mismatch: |{lam}| != |{mu}|")
    if part == "largest":
        return _chi(tuple(lam), tuple(mu))
    if part == "smallest":
        return _chi_smallest(tuple(lam), tuple(mu))
    raise ValueError(f"unknown stripping choice {part!r}")


def dimension(lam) -> int:
    """Dimension of the irreducible indexed by ``lam``: the hook-length
    product n! / prod(hooks).  Agrees with chi(lam, (1,...,1))."""
    lam = Partition(lam)
    if not lam:
        return 1
    conj = lam.conjugate()
    result = factorial(lam.n)
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            result //= lam[i - 1] - j + conj[j - 1] - i + 1
    return result


def chi_class_function(lam) -> dict[Partition, int]:
    """The full character of ``lam`` as a mapping cycle type -> value."""
    lam = Partition(lam)
    return {mu: chi(lam, mu) for mu in partitions_of(lam.n)}


# ---------------------------------------------------------------------------
# Exact values of the form a + b*sqrt(d)


def _square_part(m: int) -> int:
    """Largest s with s*s dividing m (m positive)."""
    s = 1
    f = 2
    while f * f <= m:
        e = 0
        while m % f == 0:
            m //= f
            e += 1
        s *= f ** (e // 2)
        f += 1
    return s


class SplitValue:
    """Exact number rational + coefficient * sqrt(radicand).

    The radicand is an integer and may be negative (the value is then
    complex).  Construction normalizes: square factors move into the
    coefficient, and a radicand of 0 or 1 collapses to a rational.
    """

    __slots__ = ("rational", "coefficient", "radicand")

    def __init__(self, rational=0, coefficient=0, radicand=0):
        a = Fraction(rational)
        b = Fraction(coefficient)
        d = int(radicand)
        if b == 0 or d == 0:
            b, d = Fraction(0), 0
        else:
            s = _square_part(abs(d))
            if s > 1:
                b *= s
                d //= s * s
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        self.rational = a
        self.coefficient = b
        self.radicand = d

    @property
    def is_rational(self) -> bool:
        return self.coefficient == 0

    def as_exact(self) -> Union[int, Fraction, "SplitValue"]:
        """Collapse to int or Fraction when the surd part vanishes."""
        if not self.is_rational:
            return self
        if self.rational.denominator == 1:
            return int(self.rational)
        return self.rational

    def conjugate(self) -> "SplitValue":
        """Complex conjugate (only the negative-radicand case moves)."""
        if self.radicand < 0:
            return SplitValue(self.rational, -self.coefficient, self.radicand)
        return self

    def to_complex(self) -> complex:
        root = abs(self.radicand) ** 0.5
        surd = root * 1j if self.radicand < 0 else complex(root)
        return complex(self.rational) + complex(self.coefficient) * surd

    @staticmethod
    def _coerce(value) -> "SplitValue":
        if isinstance(value, SplitValue):
            return value
        return SplitValue(value)

    def __add__(self, other):
        other = self._coerce(other)
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError("cannot add values over different radicands")
        d = self.radicand or other.radicand
        return SplitValue(
            self.rational + other.rational,
            self.coefficient + other.coefficient,
            d,
        )

    __radd__ = __add__

    def __neg__(self):
        return SplitValue(-self.rational, -self.coefficient, self.radicand)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError("cannot multiply values over different radicands")
        d = self.radicand or other.radicand
        rational = self.rational * other.rational + (
            self.coefficient * other.coefficient * d
        )
        coefficient = (
            self.rational * other.coefficient + self.coefficient * other.rational
        )
        return SplitValue(rational, coefficient, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SplitValue):
            if not other.is_rational:
                raise ValueError("division by an irrational SplitValue")
            other = other.rational
        return SplitValue(
            self.rational / Fraction(other),
            self.coefficient / Fraction(other),
            self.radicand,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, SplitValue):
            return (
                self.rational == other.rational
                and self.coefficient == other.coefficient
                and self.radicand == other.radicand
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.rational == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.rational)
        return hash((self.rational, self.coefficient, self.radicand))

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.rational)
        q = self.rational.denominator
        q = q * self.coefficient.denominator // gcd(q, self.coefficient.denominator)
        a = self.rational.numerator * (q // self.rational.denominator)
        b = self.coefficient.numerator * (q // self.coefficient.denominator)
        root = f"i√{-self.radicand}" if self.radicand < 0 else f"√{self.radicand}"
        if b == 1:
            surd = root
        elif b == -1:
            surd = f"-{root}"
        else:
            surd = f"{b}{root}"
        if a == 0:
            body = surd
        else:
            body = f"{a}+{surd}" if not surd.startswith("-") else f"{a}{surd}"
        return f"({body})/{q}" if q != 1 else (f"({body})" if a != 0 else body)

    def __repr__(self) -> str:
        return f"SplitValue({self.rational!r}, {self.coefficient!r}, {self.radicand})"


def epsilon_mu(mu) -> int:
    """(-1)**sum((mu_i - 1)/2) for a distinct-odd-parts cycle type."""
    mu = Partition(mu)
    if not is_dop(mu):
        raise HypothesisViolation(f"{mu} does not have distinct odd parts")
    return -1 if sum((a - 1) // 2 for a in mu) % 2 else 1


def m_product(mu) -> int:
    """Product of the parts of ``mu``."""
    result = 1
    for a in mu:
        result *= a
    return result


# ---------------------------------------------------------------------------
# Alternating group labels, classes, and character values


class AltClassLabel(NamedTuple):
    """Conjugacy class of the alternating group: an even cycle type plus a
    ``+``/``-`` tag exactly when the type has distinct odd parts."""

    cycle_type: Partition
    tag: str | None = None

    def __str__(self) -> str:
        return format_partition(self.cycle_type) + (self.tag or "")


class AltIrrep(NamedTuple):
    """Irreducible of the alternating group: a non-self-conjugate shape
    (taken lexicographically above its conjugate), or a self-conjugate
    shape with a ``+``/``-`` tag."""

    partition: Partition
    tag: str | None = None

    def __str__(self) -> str:
        return format_partition(self.partition) + (self.tag or "")


def _check_alt_class(c: AltClassLabel) -> AltClassLabel:
    mu = Partition(c.cycle_type)
    if sign_of_class(mu) != 1:
        raise HypothesisViolation(f"{mu} is the type of odd permutations")
    split = is_dop(mu)
    if split and c.tag not in ("+", "-"):
        raise HypothesisViolation(f"class {mu} splits; a +/- tag is required")
    if not split and c.tag is not None:
        raise HypothesisViolation(f"class {mu} does not split; no tag allowed")
    return AltClassLabel(mu, c.tag)


def _check_alt_irrep(v: AltIrrep) -> AltIrrep:
    lam = Partition(v.partition)
    if lam.conjugate() == lam:
        if v.tag not in ("+", "-"):
            raise HypothesisViolation(f"{lam} is self-conjugate; a +/- tag is required")
    else:
        if v.tag is not None:
            raise HypothesisViolation(f"{lam} is not self-conjugate; no tag allowed")
    return AltIrrep(lam, v.tag)


def alt_classes(n: int) -> tuple[AltClassLabel, ...]:
    """Conjugacy classes of the alternating group, canonical order."""
    out: list[AltClassLabel] = []
    for mu in partitions_of(n):
        if sign_of_class(mu) != 1:
            continue
        if is_dop(mu):
            out.append(AltClassLabel(mu, "+"))
            out.append(AltClassLabel(mu, "-"))
        else:
            out.append(AltClassLabel(mu, None))
    return tuple(out)


def alt_class_size(c: AltClassLabel) -> int:
    c = _check_alt_class(c)
    mu = c.cycle_type
    size = factorial(mu.n) // z_mu(mu)
    return size // 2 if c.tag else size


def alt_irreducibles(n: int) -> tuple[AltIrrep, ...]:
    """Irreducibles of the alternating group, canonical order."""
    out: list[AltIrrep] = []
    for lam in partitions_of(n):
        conj = lam.conjugate()
        if lam == conj:
            out.append(AltIrrep(lam, "+"))
            out.append(AltIrrep(lam, "-"))
        elif tuple(lam) > tuple(conj):
            out.append(AltIrrep(lam, None))
    return tuple(out)


def alt_dimension(v: AltIrrep) -> int:
    v = _check_alt_irrep(v)
    d = dimension(v.partition)
    return d // 2 if v.tag else d


@cache
def split_class_of_power(mu, j: int) -> str:
    """Which split class the j-th power of the canonical permutation of a
    distinct-odd-parts type lies in: ``"+"`` for the class of the
    permutation itself.

    The canonical conjugator matches the cycles of w^j to those of w in
    anchored order (each cycle led by its least element, cycles sorted by
    length then least element) and maps entries pointwise.  Its parity is
    intrinsic: the centralizer of w consists of even permutations, so any
    conjugator has the same sign.
    """
    mu = Partition(mu)
    if not is_dop(mu):
        raise HypothesisViolation(f"{mu} does not have distinct odd parts")
    if gcd(j, order(mu)) != 1:
        raise HypothesisViolation(f"power {j} changes the cycle type of {mu}")
    w = canonical_permutation(mu)
    u = w ** j
    key = lambda c: (len(c), c[0])
    images = [0] * w.degree
    for source, target in zip(sorted(u.cycles(), key=key), sorted(w.cycles(), key=key)):
        for a, b in zip(source, target):
            images[a - 1] = b
    sigma = Permutation(images)
    if sigma * u * sigma.inverse() != w:
        raise AssertionError("canonical conjugator failed")
    return "+" if sigma.sign() == 1 else "-"


def alt_char(v: AltIrrep, c: AltClassLabel):
    """Exact alternating-group character value; an int/Fraction, or a
    :class:`SplitValue` in the irrational split case."""
    v = _check_alt_irrep(v)
    c = _check_alt_class(c)
    lam, mu = v.partition, c.cycle_type
    if lam.n != mu.n:
        raise HypothesisViolation(f"weight mismatch: |{lam}| != |{mu}|")
    if v.tag is None:
        return chi(lam, mu)
    if is_dop(mu) and fold(mu) == lam:
        eps = epsilon_mu(mu)
        sign = 1 if v.tag == c.tag else -1
        value = SplitValue(Fraction(eps, 2), Fraction(sign, 2), eps * m_product(mu))
        return value.as_exact()
    half = Fraction(chi(lam, mu), 2)
    return int(half) if half.denominator == 1 else half


def alt_class_function(v: AltIrrep) -> dict[AltClassLabel, object]:
    v = _check_alt_irrep(v)
    n = Partition(v.partition).n
    return {c: alt_char(v, c) for c in alt_classes(n)}


# ---------------------------------------------------------------------------
# Inner products of class functions


def _conj_value(value):
    if isinstance(value, SplitValue):
        return value.conjugate()
    return value


def inner_product(h: dict, g: dict):
    """Standard inner product of two class functions given as mappings
    class -> value.  Keys of type :class:`AltClassLabel` select the
    alternating group; plain cycle types select the symmetric group."""
    if set(h) != set(g):
        raise HypothesisViolation("class functions live on different class sets")
    if not h:
        raise HypothesisViolation("empty class function")
    keys = list(h)
    total = SplitValue(0)
    if isinstance(keys[0], AltClassLabel):
        n = Partition(keys[0].cycle_type).n
        group_order = factorial(n) // 2
        for c in keys:
            term = SplitValue._coerce(h[c]) * _conj_value(SplitValue._coerce(g[c]))
            total = total + term * alt_class_size(c)
        total = total / group_order
    else:
        for mu in keys:
            term = SplitValue._coerce(h[mu]) * _conj_value(SplitValue._coerce(g[mu]))
            total = total + term / z_mu(mu)
    return total.as_exact()


# ---------------------------------------------------------------------------
# Optional on-disk persistence of the character memo table


def save_character_cache(directory: str | Path) -> None:
    path = Path(directory) / "chi-cache.pickle"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "wb") as fh:
            pickle.dump({"format": CACHE_FORMAT, "chi": dict(_CHI_CACHE)}, fh)
        tmp.replace(path)
    except OSError:
        pass  # the cache is an optimization; failures must be invisible


def load_character_cache(directory: str | Path) -> None:
    path = Path(directory) / "chi-cache.pickle"
    try:
        with open(path, "rb") as fh:
            payload = pickle.load(fh)
    except (OSError, pickle.UnpicklingError, EOFError, AttributeError):
        return
    if not isinstance(payload, dict) or payload.get("format") != CACHE_FORMAT:
        return
    entries = payload.get("chi")
    if isinstance(entries, dict):
        _CHI_CACHE.update(entries)
