"""Command-line interface.

Exit status: 0 success, 1 data error or violations found, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import dataio
from .abacus import core_tower, p_core, p_quotient, weight
from .blocks import BlockLabel, block_labels, block_report
from .constructions import lambda_family
from .groupcalc import derived_series, lower_central_series, sylow_symmetric, unitriangular
from .partition import degree, degree_valuation, format_partition, parse_partition
from .verifier import SweepConfig, sweep


def _primes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list: {text!r}") from None


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_jobs() -> int:
    try:
        return int(os.environ.get("BLOCKLEDGER_JOBS", "1"))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=_default_jobs())

    parser = argparse.ArgumentParser(prog="blockledger", description="p-blocks of symmetric groups, heights and defect groups")
    sub = parser.add_subparsers(dest="command", required=True)

    part = sub.add_parser("partition", help="single-partition computations")
    psub = part.add_subparsers(dest="op", required=True)
    for op in ("core", "quotient", "tower", "degree"):
        sp = psub.add_parser(op, parents=[common])
        sp.add_argument("--lambda", dest="lam", type=_partition, required=True)
        sp.add_argument("--p", type=int, required=(op != "degree"))

    block = sub.add_parser("block", help="blocks of S_n")
    bsub = block.add_subparsers(dest="op", required=True)
    sp = bsub.add_parser("list", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp = bsub.add_parser("report", parents=[common])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--core", type=_partition, required=True)
    sp.add_argument("--w", type=int, required=True)
    sp = bsub.add_parser("export", parents=[common], help="all blocks of S_n in the external-data schema")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("construct", parents=[common], help="the height ladder lambda_0 .. lambda_{k-1}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--core", type=_partition, required=True)
    sp.add_argument("--w", type=int, required=True)

    verify = sub.add_parser("verify", help="sweeps and external data")
    vsub = verify.add_subparsers(dest="op", required=True)
    sp = vsub.add_parser("sym", parents=[common])
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--primes", type=_primes, default=[2, 3])
    sp.add_argument("--alt", action="store_true", help="also restrict to A_n (n >= 5)")
    cc = sp.add_mutually_exclusive_group()
    cc.add_argument("--cross-check", dest="cross_check", action="store_true", default=None)
    cc.add_argument("--no-cross-check", dest="cross_check", action="store_false")
    sp = vsub.add_parser("external", parents=[common])
    sp.add_argument("--file", required=True)

    for name, size_flag in (("sylow", "--m"), ("unitriangular", "--n")):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument(size_flag, type=int, required=True)
        sp.add_argument("--p", type=int, required=True)
    return parser


def _table(rows: list[dict]) -> str:
    if not rows:
        return "(no rows)\n"
    cols = list(dict.fromkeys(k for r in rows for k in r))
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if isinstance(v, (list, tuple, set, frozenset)):
        return "{" + ",".join(map(str, v)) + "}"
    if v is None:
        return "-"
    return str(v)


def _csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    cols = list(dict.fromkeys(k for r in rows for k in r))
    writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: (_cell(v) if isinstance(v, (list, tuple)) else v) for k, v in r.items()})
    return buf.getvalue()


def _render(fmt: str, rows: list[dict], payload=None, footer: str = "") -> str:
    if fmt == "json":
        return json.dumps(payload if payload is not None else rows, indent=2) + "\n"
    if fmt == "csv":
        return _csv(rows)
    return _table(rows) + footer


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_partition(args) -> int:
    lam, p = args.lam, args.p
    if args.op == "core":
        row = {"lambda": format_partition(lam), "p": p, "core": format_partition(p_core(lam, p)), "weight": weight(lam, p)}
        payload = row
    elif args.op == "quotient":
        q = [format_partition(x) for x in p_quotient(lam, p)]
        row = {"lambda": format_partition(lam), "p": p, "quotient": q}
        payload = row
    elif args.op == "tower":
        tower = core_tower(lam, p)
        payload = tower.to_json()
        row = {"lambda": format_partition(lam), "p": p, "layers": " | ".join(" ".join(layer) for layer in payload)}
    else:
        row = {"lambda": format_partition(lam), "degree": str(degree(lam))}
        if p is not None:
            row["valuation"] = degree_valuation(lam, p)
        payload = row
    _emit(args, _render(args.format, [row], payload))
    return 0


def _summary(report) -> dict:
    return {
        "block": str(report.label),
        "n": report.label.n,
        "members": len(report.members),
        "cd": sorted(report.cd_set),
        "ht": sorted(report.ht_set),
        "defect": report.defect,
        "dl": report.dl,
        "thmC": report.passes_thmC,
        "questionA": report.passes_questionA,
    }


def _cmd_block(args) -> int:
    if args.op == "list":
        reports = [block_report(lab) for lab in block_labels(args.n, args.p)]
        rows = [_summary(r) for r in reports]
        _emit(args, _render(args.format, rows, [r.to_json() for r in reports]))
    elif args.op == "report":
        report = block_report(BlockLabel(args.p, args.core, args.w), cross_check=True)
        if args.format == "table":
            rows = [
                {"partition": format_partition(m), "degree": d, "height": h}
                for m, d, h in zip(report.members, report.degrees, report.heights)
            ]
            s = _summary(report)
            footer = f"\ncd={_cell(s['cd'])} ht={_cell(s['ht'])} defect={s['defect']} dl={s['dl']} thmC={s['thmC']} questionA={s['questionA']}\n"
            _emit(args, _table(rows) + footer)
        else:
            _emit(args, _render(args.format, [_summary(report)], report.to_json()))
    else:
        data = dataio.export_symmetric(args.n, args.p)
        rows = [{"label": b.label, "defect": b.defect, "degrees": b.degrees, "dl": b.defect_group_dl, "cd_D": b.defect_group_cd} for b in data.blocks]
        _emit(args, _render(args.format, rows, data.to_json()))
    return 0


def _cmd_construct(args) -> int:
    family = lambda_family(BlockLabel(args.p, args.core, args.w))
    rows = family.rows()
    payload = {"block": str(family.label), "k": family.k, "members": rows, "towers": [t.to_json() for t in family.towers]}
    _emit(args, _render(args.format, rows, payload))
    return 0


def _cmd_verify(args) -> int:
    if args.op == "external":
        data = dataio.load(args.file)
        verdicts = dataio.check_all(data)
        rows = [v.to_json() for v in verdicts]
        payload = {"group": data.group_name, "prime": data.prime, "verdicts": rows}
        _emit(args, _render(args.format, rows, payload))
        return 1 if any(v.failed for v in verdicts) else 0

    config = SweepConfig(args.max_n, args.primes, args.alt, args.cross_check, max(1, args.jobs))
    report = sweep(config)
    if args.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    elif args.format == "csv":
        text = _csv([{k: v for k, v in r.items() if k != "problems"} | {"problems": "; ".join(r["problems"])} for r in report.rows])
    else:
        nsym = sum(r["group"] == "sym" for r in report.rows)
        nalt = len(report.rows) - nsym
        lines = [f"blocks checked: {nsym} (S_n)" + (f", {nalt} (A_n)" if nalt else "")]
        lines += [f"VIOLATION {v}" for v in report.violations]
        lines += [f"paper-gap p={g['p']} n={g['n']} core={g['core']} w={g['weight']}: k={g['k']} > |ht(b)|={len(g['ht'])}" for g in report.paper_gaps]
        lines.append("result: " + ("PASS" if report.ok else "FAIL"))
        lines.append(f"elapsed: {report.seconds:.2f}s")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if report.ok else 1


def _cmd_group(args) -> int:
    if args.command == "sylow":
        G = sylow_symmetric(args.m, args.p)
        name = f"Sylow_{args.p}(S_{args.m})"
    else:
        G = unitriangular(args.n, args.p)
        name = f"UT_{args.n}({args.p})"
    ds = [H.order for H in derived_series(G)]
    lc = [H.order for H in lower_central_series(G)]
    row = {"group": name, "order": G.order, "derived_series": ds, "lower_central_series": lc, "dl": len(ds) - 1, "class": len(lc) - 1}
    _emit(args, _render(args.format, [row], row))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "partition": _cmd_partition,
        "block": _cmd_block,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "sylow": _cmd_group,
        "unitriangular": _cmd_group,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
