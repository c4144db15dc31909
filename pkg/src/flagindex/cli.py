"""Command-line front end.  The only module with side effects.

Six subcommands, one per artifact: ``index``, ``flag-cohomology``,
``wreath-class``, ``verify-relations``, ``shadows``, ``selftest``.
Everything prints to stdout (or to ``--out``); exit status is 0 on
success, 1 when a ``--verify`` comparison or verification fails, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .charclass import FIELD_COMPLEX, FIELD_REAL
from .fhindex import (
    BoundExceededError,
    closed_form_index,
    index_report,
    shadow_bound,
    sphere_index,
    verify_reduction_relations,
)
from .flagcoh import (
    SeriesDivisionError,
    default_depth,
    fibration_series_oracle,
    flag_presentation,
    gaussian_multinomial,
    poincare_series,
)
from .galgebra import StructuralError, render_presentation
from .selftest import run_all
from .wreath import (
    render_wreath_class,
    wreath_chern,
    wreath_euler,
    wreath_pontrjagin,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {out}", file=sys.stderr)
    else:
        print(text)


def _json_text(record) -> str:
    return json.dumps(record, indent=2)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_index(args) -> tuple[int, str]:
    record = index_report(args.p, args.n, args.field, args.max_l)
    code = 0
    if args.verify:
        table = closed_form_index(args.p, args.n, args.field)
        match = (record["shape"], record["l"]) == (table.shape, table.l)
        record["closedForm"] = {"shape": table.shape, "l": table.l}
        record["match"] = match
        code = 0 if match else 1
    if args.json:
        return code, _json_text(record)
    shape_text = f"{record['shape']} with l = {record['l']}"
    lines = [
        f"index (p={record['p']}, n={record['n']}, {record['field']}): {shape_text}",
        f"  decomposition: a={record['a']}, q={record['q']}",
        f"  generators used: {record['generatorsUsed']}; "
        f"degrees scanned: {record['degreesScanned']}; "
        f"elapsed: {record['elapsed']:.2f}s",
    ]
    if args.verify:
        cf = record["closedForm"]
        verdict = "MATCH" if record["match"] else "MISMATCH"
        lines.append(f"  closed form: {cf['shape']} with l = {cf['l']}  [{verdict}]")
    return code, "\n".join(lines)


def _cmd_flag(args) -> tuple[int, str]:
    depth = args.depth if args.depth is not None else default_depth(args.j, args.p)
    pres = flag_presentation(args.field, args.j, args.r, args.p)
    series = poincare_series(pres, depth)
    oracle = None
    oracle_error = None
    try:
        oracle = fibration_series_oracle(args.field, args.j, args.r, args.p, depth)
    except SeriesDivisionError as exc:
        oracle_error = str(exc)
    gaussian = None
    if args.field == FIELD_COMPLEX:
        parts = [args.j] * args.r
        if args.r < args.p:
            parts.append(args.j * (args.p - args.r))
        gaussian = gaussian_multinomial(parts, depth)
    match = oracle is not None and series.coefficients == oracle.coefficients
    if gaussian is not None:
        match = match and series.coefficients == gaussian.coefficients
    code = 0 if (match or not args.verify) else 1
    if args.json:
        record = {
            "field": args.field,
            "j": args.j,
            "r": args.r,
            "p": args.p,
            "depth": depth,
            "presentation": render_presentation(pres),
            "series": list(series.coefficients),
            "oracle": list(oracle.coefficients) if oracle else None,
            "oracleError": oracle_error,
            "gaussian": list(gaussian.coefficients) if gaussian else None,
            "match": match,
        }
        return code, _json_text(record)
    lines = [
        f"flag cohomology ({args.field}, j={args.j}, r={args.r}, p={args.p}), "
        f"depth {depth}",
        "",
        render_presentation(pres),
        "",
        f"series:  {list(series.coefficients)}",
    ]
    if oracle is not None:
        tag = "MATCH" if series.coefficients == oracle.coefficients else "MISMATCH"
        lines.append(f"oracle:  {list(oracle.coefficients)}  [{tag}]")
    else:
        lines.append(f"oracle:  unavailable ({oracle_error})")
    if gaussian is not None:
        tag = "MATCH" if series.coefficients == gaussian.coefficients else "MISMATCH"
        lines.append(f"q-multinomial: {list(gaussian.coefficients)}  [{tag}]")
    return code, "\n".join(lines)


def _cmd_wreath(args) -> tuple[int, str]:
    p, n = args.p, args.n
    items: list[tuple[str, int, str]] = []
    if args.field == FIELD_COMPLEX:
        table = wreath_chern(n, p, args.depth)
        for k in sorted(table):
            items.append((f"c{k}", 2 * k, render_wreath_class(table[k])))
    else:
        table = wreath_pontrjagin(n, p, args.depth)
        for i in sorted(table):
            items.append((f"p{i}", 4 * i, render_wreath_class(table[i])))
        if n % 2 == 0 and (args.depth is None or p * n <= args.depth):
            items.append((f"e{p * n}", p * n, render_wreath_class(wreath_euler(n, p))))
    if args.json:
        record = {
            "field": args.field,
            "n": n,
            "p": p,
            "classes": [
                {"name": name, "degree": deg, "text": text}
                for name, deg, text in items
            ],
        }
        return 0, _json_text(record)
    head = f"wreath-power classes ({args.field}, n={n}, p={p})"
    lines = [head] + [
        f"  {name} (degree {deg}) = {text}" for name, deg, text in items
    ]
    return 0, "\n".join(lines)


def _cmd_verify(args) -> tuple[int, str]:
    rep = verify_reduction_relations(args.p, args.n, args.field)
    code = 0 if rep.ok else 1
    if args.json:
        record = {
            "p": rep.p,
            "n": rep.n,
            "field": rep.field,
            "a": rep.a,
            "q": rep.q,
            "ok": rep.ok,
            "checks": [
                {
                    "k": c.k,
                    "degree": c.degree,
                    "family": c.family,
                    "ok": c.ok,
                    "alpha": c.alpha,
                    "detail": c.detail,
                }
                for c in rep.checks
            ],
            "corollaries": [
                {"target": c.target, "degree": c.degree, "ok": c.ok}
                for c in rep.corollaries
            ],
        }
        return code, _json_text(record)
    lines = [
        f"reduction relations (p={rep.p}, n={rep.n}, {rep.field}): "
        f"a={rep.a}, q={rep.q}"
    ]
    for c in rep.checks:
        suffix = f"  [{c.detail}]" if c.detail else ""
        lines.append(
            f"  k={c.k} (degree {c.degree}): {c.family:5s} "
            f"{'ok' if c.ok else 'FAIL'}{suffix}"
        )
    for c in rep.corollaries:
        lines.append(
            f"  consequence {c.target} (degree {c.degree}): "
            f"{'ok' if c.ok else 'FAIL'}"
        )
    lines.append("all relations verified" if rep.ok else "VERIFICATION FAILED")
    return code, "\n".join(lines)


def _cmd_shadows(args) -> tuple[int, str]:
    sb = shadow_bound(args.p, args.n, args.field)
    s_at = sphere_index(sb.p, sb.max_r)
    s_past = sphere_index(sb.p, sb.max_r + 1)
    if args.json:
        record = {
            "field": sb.field,
            "p": sb.p,
            "n": sb.n,
            "a": sb.a,
            "q": sb.q,
            "maxR": sb.max_r,
            "sharp": sb.sharp,
            "flagIndex": {"shape": sb.flag_index.shape, "l": sb.flag_index.l},
            "sphereAtMax": s_at.l,
            "sphereBeyond": s_past.l,
        }
        return 0, _json_text(record)
    lines = [
        f"shadow bound ({args.field}, p={sb.p}, n={sb.n}): maxR = {sb.max_r}",
        f"  decomposition: a={sb.a}, q={sb.q}; "
        f"flag index {sb.flag_index.ideal_text()}",
        f"  sphere index at r={sb.max_r}: {s_at.ideal_text()} "
        f"(exponent {s_at.l} < {sb.flag_index.l}: cannot sit inside, admitted)",
    ]
    if sb.sharp:
        lines.append(
            f"  sphere index at r={sb.max_r + 1}: {s_past.ideal_text()} "
            f"(exponent {s_past.l} >= {sb.flag_index.l}: rejected; "
            "boundary reproduced by containment)"
        )
    else:
        lines.append(
            f"  sphere index at r={sb.max_r + 1}: {s_past.ideal_text()} "
            f"(containment alone would still admit it; the tabulated real "
            "bound is one tighter)"
        )
    return 0, "\n".join(lines)


def _cmd_selftest(args) -> tuple[int, str]:
    results = run_all()
    ok = all(r.passed for r in results)
    code = 0 if ok else 1
    if args.json:
        record = {
            "ok": ok,
            "results": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "elapsed": r.elapsed,
                    "lines": list(r.lines),
                }
                for r in results
            ],
        }
        return code, _json_text(record)
    lines = []
    for r in results:
        lines.append(
            f"{r.name:26s} {'PASS' if r.passed else 'FAIL':4s} {r.elapsed:7.2f}s"
        )
        if not r.passed or args.verbose:
            lines.extend(f"    {ln}" for ln in r.lines)
    lines.append(
        f"{len(results)} checks, "
        f"{sum(1 for r in results if r.passed)} passed, "
        f"{sum(1 for r in results if not r.passed)} failed"
    )
    return code, "\n".join(lines)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sp, *, p=False, n=False, j=False, r=False, field=False,
                depth=False, max_l=False, verify=False):
    if p:
        sp.add_argument("--p", type=int, required=True, help="odd prime")
    if n:
        sp.add_argument("--n", type=int, required=True, help="bundle rank")
    if j:
        sp.add_argument("--j", type=int, required=True, help="rank of each factor")
    if r:
        sp.add_argument("--r", type=int, required=True, help="number of factors")
    if field:
        sp.add_argument(
            "--field", choices=[FIELD_COMPLEX, FIELD_REAL], required=True
        )
    if depth:
        sp.add_argument("--depth", type=int, default=None,
                        help="series truncation degree")
    if max_l:
        sp.add_argument("--max-l", type=int, default=None,
                        help="largest exponent the scan may try")
    if verify:
        sp.add_argument("--verify", action="store_true",
                        help="compare against the closed form / oracles")
    sp.add_argument("--json", action="store_true", help="structured output")
    sp.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="flagindex",
        description="Cohomology of equidimensional flags, wreath-power "
        "characteristic classes, and the index of the rotation action, "
        "all over F_p.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("index", help="compute the index ideal by scanning")
    _add_common(sp, p=True, n=True, field=True, max_l=True, verify=True)
    sp.set_defaults(fn=_cmd_index)

    sp = sub.add_parser("flag-cohomology",
                        help="flag presentation and Poincare series")
    _add_common(sp, p=True, j=True, r=True, field=True, depth=True, verify=True)
    sp.set_defaults(fn=_cmd_flag)

    sp = sub.add_parser("wreath-class",
                        help="characteristic classes of the wreath power")
    _add_common(sp, p=True, n=True, field=True, depth=True)
    sp.set_defaults(fn=_cmd_wreath)

    sp = sub.add_parser("verify-relations",
                        help="check the reduction-relation shapes")
    _add_common(sp, p=True, n=True, field=True)
    sp.set_defaults(fn=_cmd_verify)

    sp = sub.add_parser("shadows", help="orthogonal-shadow bound")
    _add_common(sp, p=True, n=True, field=True)
    sp.set_defaults(fn=_cmd_shadows)

    sp = sub.add_parser("selftest", help="run the acceptance grid")
    sp.add_argument("--verbose", action="store_true",
                    help="show every grid line, not only failures")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_selftest)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        code, text = args.fn(args)
    except (StructuralError, BoundExceededError, SeriesDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
