"""Command-line surface.

Exit codes are a stable contract: 0 success (verification clean), 1
verification mismatch, 2 malformed input or usage error, 3 hypothesis
violation (structurally valid input outside an operation's stated
preconditions).

Split labels are written as a trailing ``+`` or ``-`` on a partition,
e.g. ``--lambda 3,1,1+ --mu 5-``.  ``SPECHT_CACHE_DIR`` optionally
persists the character memo table between runs; a stale or missing cache
only costs time, never changes results.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .characters import (
    AltClassLabel,
    AltIrrep,
    alt_char,
    chi,
    load_character_cache,
    save_character_cache,
)
from .render import render_minimal_polynomial
from .schur import LEMMA_TAGS, lr_coefficient, schur_product, verify_lemma
from .shapes import HypothesisViolation, Partition, format_partition, parse_partition
from .spectrum import (
    THEOREM_TAGS,
    MultiplicityVector,
    RootSet,
    alt_eig_multiplicities,
    eig_multiplicities,
    maj_count_kw,
    verify_theorem,
)
from .tableaux import maj_counts_brute

_LEMMA_GROUPS = {
    "base": ("base_1", "base_2", "base_3", "base_4"),
    "three_parts": ("three_parts_1", "three_parts_2"),
    "gen_case": ("gen_case_1", "gen_case_2"),
}


def _parse_tagged(text: str) -> tuple[Partition, str | None]:
    text = text.strip()
    if text.endswith(("+", "-")):
        return parse_partition(text[:-1]), text[-1]
    return parse_partition(text), None


def _emit(args, human: str, payload: dict, tsv_rows: list[tuple[str, str]]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "tsv":
        print("\n".join("\t".join(row) for row in tsv_rows))
    else:
        print(human)


def _cmd_char(args) -> int:
    lam, lam_tag = _parse_tagged(args.lam)
    mu, mu_tag = _parse_tagged(args.mu)
    if args.group == "sym":
        if lam_tag or mu_tag:
            raise ValueError("split tags only apply to --group alt")
        value = chi(lam, mu)
    else:
        value = alt_char(AltIrrep(lam, lam_tag), AltClassLabel(mu, mu_tag))
    text = str(value)
    _emit(args, text, {"value": text}, [("value", text)])
    return 0


def _multiplicities(args) -> MultiplicityVector:
    lam, lam_tag = _parse_tagged(args.lam)
    mu, mu_tag = _parse_tagged(args.mu)
    if args.group == "sym":
        if lam_tag or mu_tag:
            raise ValueError("split tags only apply to --group alt")
        return eig_multiplicities(lam, mu)
    return alt_eig_multiplicities(AltIrrep(lam, lam_tag), AltClassLabel(mu, mu_tag))


def _cmd_minpoly(args) -> int:
    mv = _multiplicities(args)
    roots = RootSet(mv.order, mv.present)
    poly = render_minimal_polynomial(roots)
    missing = sorted(set(range(mv.order)) - mv.present)
    human = "\n".join(
        [
            f"order: {mv.order}",
            f"counts: {list(mv.counts)}",
            f"present: {sorted(mv.present)}",
            f"missing: {missing}",
            f"p(x) = {poly}",
        ]
    )
    payload = {
        "order": mv.order,
        "counts": list(mv.counts),
        "present": sorted(mv.present),
        "missing": missing,
        "poly": poly,
    }
    rows = [("order", str(mv.order))] + [(f"count:{r}", str(c)) for r, c in enumerate(mv.counts)]
    rows.append(("poly", poly))
    _emit(args, human, payload, rows)
    return 0


def _cmd_maj(args) -> int:
    lam, tag = _parse_tagged(args.lam)
    if tag:
        raise ValueError("major-index counts take a plain partition")
    n = lam.n
    rs = [args.r % n] if args.r is not None and n else list(range(max(n, 1)))
    results: dict[str, list[int]] = {}
    if args.engine in ("kw", "both"):
        results["kw"] = [maj_count_kw(lam, r) for r in rs]
    if args.engine in ("brute", "both"):
        brute = maj_counts_brute(lam)
        results["brute"] = [brute[r % len(brute)] for r in rs]
    code = 0
    if args.engine == "both" and results["kw"] != results["brute"]:
        code = 1
    shown = results.get("kw", results.get("brute"))
    lines = [f"r={r}: {c}" for r, c in zip(rs, shown)]
    if args.engine == "both":
        lines.append("engines agree" if code == 0 else "ENGINE MISMATCH")
    payload = {"lambda": format_partition(lam), "r": rs, **results}
    rows = [(f"r={r}", str(c)) for r, c in zip(rs, shown)]
    _emit(args, "\n".join(lines), payload, rows)
    return code


def _cmd_lr(args) -> int:
    value = lr_coefficient(
        parse_partition(args.lam), parse_partition(args.alpha), parse_partition(args.beta)
    )
    _emit(args, str(value), {"coefficient": value}, [("coefficient", str(value))])
    return 0


def _cmd_schur_product(args) -> int:
    product = schur_product(parse_partition(args.alpha), parse_partition(args.beta))
    human = product.to_tsv() or "(zero)"
    payload = {format_partition(l): c for l, c in product.items()}
    rows = [(format_partition(l), str(c)) for l, c in product.items()]
    _emit(args, human, payload, rows)
    return 0


def _cmd_verify(args) -> int:
    reports = []
    if args.theorem.startswith("lemma:"):
        name = args.theorem[len("lemma:"):]
        tags = _LEMMA_GROUPS.get(name, (name,))
        if not set(tags) <= set(LEMMA_TAGS):
            raise ValueError(f"unknown lemma tag {name!r}; known: "
                             f"{', '.join(sorted(set(LEMMA_TAGS) | set(_LEMMA_GROUPS)))}")
        if args.p is None:
            raise ValueError("lemma verification needs --p")
        for tag in tags:
            if name == "base" and (args.p % 2 == 1) != (tag in ("base_1", "base_2")):
                continue  # parity selects which pair of displayed inequalities applies
            reports.append(verify_lemma(tag, p=args.p, q=args.q, j=args.j))
    else:
        if args.theorem not in THEOREM_TAGS:
            raise ValueError(
                f"unknown theorem tag {args.theorem!r}; known: {', '.join(THEOREM_TAGS)}"
            )
        reports.append(
            verify_theorem(args.theorem, min_n=args.min_n, max_n=args.max_n, jobs=args.jobs)
        )
    for report in reports:
        if args.format == "json":
            print(report.to_json())
        elif args.format == "tsv":
            print(report.to_tsv())
        else:
            print(report.to_text())
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specht",
        description="Exact symmetric/alternating group spectra and verification scans.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="exact character value", parents=[common])
    p_char.add_argument("--lambda", dest="lam", required=True)
    p_char.add_argument("--mu", required=True)
    p_char.add_argument("--group", choices=("sym", "alt"), default="sym")
    p_char.set_defaults(func=_cmd_char)

    p_min = sub.add_parser("minpoly", parents=[common], help="eigenvalue multiplicities and minimal polynomial")
    p_min.add_argument("--lambda", dest="lam", required=True)
    p_min.add_argument("--mu", required=True)
    p_min.add_argument("--group", choices=("sym", "alt"), default="sym")
    p_min.set_defaults(func=_cmd_minpoly)

    p_maj = sub.add_parser("maj", parents=[common], help="standard-tableau counts by major index mod n")
    p_maj.add_argument("--lambda", dest="lam", required=True)
    p_maj.add_argument("--r", type=int, default=None)
    p_maj.add_argument("--engine", choices=("kw", "brute", "both"), default="kw")
    p_maj.set_defaults(func=_cmd_maj)

    p_lr = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    p_lr.add_argument("--lambda", dest="lam", required=True)
    p_lr.add_argument("--alpha", required=True)
    p_lr.add_argument("--beta", required=True)
    p_lr.set_defaults(func=_cmd_lr)

    p_sp = sub.add_parser("schur-product", parents=[common], help="product of two Schur functions")
    p_sp.add_argument("--alpha", required=True)
    p_sp.add_argument("--beta", required=True)
    p_sp.set_defaults(func=_cmd_schur_product)

    p_ver = sub.add_parser("verify", parents=[common], help="run a bundled verification scan")
    p_ver.add_argument("--theorem", required=True,
                       help="a theorem tag, or lemma:<tag> (e.g. lemma:base)")
    p_ver.add_argument("--min-n", type=int, default=None)
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--p", type=int, default=None)
    p_ver.add_argument("--q", type=int, default=None)
    p_ver.add_argument("--j", type=int, default=1)
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = os.environ.get("SPECHT_CACHE_DIR")
    if cache_dir:
        load_character_cache(cache_dir)
    try:
        code = args.func(args)
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache_dir:
        save_character_cache(cache_dir)
    return code


if __name__ == "__main__":
    sys.exit(main())
