"""Loader for the expected-exception fixtures used by the verification
scans.

The fixture file stores shape templates in the scan weight n (see the
comments at the top of ``data/expected_exceptions.txt`` for the grammar).
`expand_shape` turns a template into a concrete partition for one n, or
``None`` when the template does not apply at that weight.
"""

from __future__ import annotations

from functools import cache
from pathlib import Path
from typing import NamedTuple

from .shapes import Partition

__all__ = ["Row", "expand_shape", "fixture_rows", "holds", "predicted_present", "split_label"]

_DATA = Path(__file__).parent / "data" / "expected_exceptions.txt"


class Row(NamedTuple):
    left: str                 # lam= or V= template
    right: str | None         # mu= or c= template, when the scan is over pairs
    cond: str | None          # python expression over n (and p, q, j)
    pattern: tuple[str, object] | None   # ("present"|"missing", residues or symbol)
    optional: bool


@cache
def fixture_rows() -> dict[str, tuple[Row, ...]]:
    sections: dict[str, list[Row]] = {}
    current: list[Row] | None = None
    for raw in _DATA.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = sections.setdefault(line[1:-1], [])
            continue
        if current is None:
            raise ValueError(f"fixture record outside a section: {raw!r}")
        left = right = cond = None
        pattern = None
        optional = False
        for field in line.split(";"):
            field = field.strip()
            if field == "optional":
                optional = True
                continue
            key, _, value = field.partition("=")
            key, value = key.strip(), value.strip()
            if key in ("lam", "V"):
                left = value
            elif key in ("mu", "c"):
                right = value
            elif key == "when":
                cond = value
            elif key in ("present", "missing"):
                if value in ("par", "sgn"):
                    pattern = (key, value)
                else:
                    pattern = (key, frozenset(int(x) for x in value.split(",")))
            else:
                raise ValueError(f"unknown fixture field {key!r} in {raw!r}")
        if left is None:
            raise ValueError(f"fixture record without a shape: {raw!r}")
        current.append(Row(left, right, cond, pattern, optional))
    return {tag: tuple(rows) for tag, rows in sections.items()}


def holds(cond: str | None, **ctx) -> bool:
    if cond is None:
        return True
    return bool(eval(cond, {"__builtins__": {}}, dict(ctx)))


def _eval_int(expr: str, ctx: dict) -> int | None:
    value = eval(expr, {"__builtins__": {}}, dict(ctx))
    if isinstance(value, bool):
        raise ValueError(f"boolean in shape template: {expr!r}")
    if isinstance(value, float):
        if not value.is_integer():
            return None
        value = int(value)
    return value


def split_label(template: str) -> tuple[str, str | None]:
    """Separate a trailing +/- tag from a shape template."""
    if template.endswith(("+", "-")):
        return template[:-1], template[-1]
    return template, None


def expand_shape(template: str, n: int, **ctx) -> Partition | None:
    """Instantiate a shape template at weight n; None if inapplicable."""
    body = template.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    context = {"n": n, **ctx}
    parts: list[int] = []
    for item in body.split(","):
        item = item.strip()
        base_s, caret, exp_s = item.partition("^")
        base = _eval_int(base_s.strip("() "), context)
        if base is None or base < 1:
            return None
        if caret:
            mult = _eval_int(exp_s.strip("() "), context)
            if mult is None or mult < 0:
                return None
        else:
            mult = 1
        parts.extend([base] * mult)
    if any(a < b for a, b in zip(parts, parts[1:])) or sum(parts) != n:
        return None
    return Partition(parts)


def predicted_present(pattern: tuple[str, object], m: int, n: int, class_sign: int) -> frozenset[int]:
    """Present-residue set a pattern predicts for an exception at class
    order m and scan weight n."""
    kind, spec = pattern
    if spec == "par":
        residues = frozenset({0 if n % 2 == 1 else m // 2})
    elif spec == "sgn":
        residues = frozenset({0 if class_sign == 1 else m // 2})
    else:
        residues = frozenset(spec)
    if kind == "present":
        return residues
    return frozenset(range(m)) - residues
