"""Rendering of minimal polynomials from root sets.

The root set of the minimal polynomial lives inside the m-th roots of
unity.  When it is closed under the Galois action (for each divisor d of
m, the primitive d-th roots are all present or all absent) the polynomial
is a product of cyclotomic polynomials and is printed expanded with
integer coefficients.  Otherwise it is printed as a quotient of x^m - 1
by the missing linear factors, or as a short product of linear factors,
with zeta denoting exp(2*pi*i/m).
"""

from __future__ import annotations

from functools import cache
from math import gcd

from .spectrum import RootSet

__all__ = ["cyclotomic", "render_minimal_polynomial"]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        coeff = a[i + len(b) - 1] // b[-1]
        out[i] = coeff
        for j, y in enumerate(b):
            a[i + j] -= coeff * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return out


@cache
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, ascending."""
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divexact(poly, list(cyclotomic(e)))
    return tuple(poly)


def _format_poly(coeffs: list[int]) -> str:
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        if power == 0:
            body = str(abs(c))
        else:
            x = "x" if power == 1 else f"x^{power}"
            body = x if abs(c) == 1 else f"{abs(c)}*{x}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


def _root_text(r: int, m: int) -> str:
    """One linear factor x - zeta^r, with rational roots made explicit."""
    if r % m == 0:
        return "x - 1"
    if 2 * r == m:
        return "x + 1"
    return f"x - zeta^{r}"


def render_minimal_polynomial(roots: RootSet) -> str:
    """Human-readable minimal polynomial for a root set."""
    m, present = roots.order, roots.present
    by_order: dict[int, set[int]] = {}
    for r in range(m):
        by_order.setdefault(m // gcd(r, m) if r else 1, set()).add(r)
    closed = all(
        residues <= present or not (residues & present)
        for residues in by_order.values()
    )
    if closed:
        poly = [1]
        for d in sorted(by_order):
            if by_order[d] <= present:
                poly = _poly_mul(poly, list(cyclotomic(d)))
        return _format_poly(poly)
    missing = sorted(set(range(m)) - present)
    if len(missing) <= len(present):
        denom = "".join(f"({_root_text(r, m)})" for r in missing)
        if len(missing) > 1:
            denom = f"({denom})"
        return f"(x^{m} - 1)/{denom}" + f", zeta = exp(2*pi*i/{m})"
    factors = "".join(f"({_root_text(r, m)})" for r in sorted(present))
    note = f", zeta = exp(2*pi*i/{m})" if any(r % m and 2 * r != m for r in present) else ""
    return factors + note
