"""Command-line frontend.

Commands: spectrum, genus, verify, classify, enumerate, table1.
Exit codes: 0 success / all present, 1 verification or membership failure,
2 usage error (bad q, bad literal), 3 invalid family parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, oracle, pgu, spectrum
from .families import FAMILY_ORDER, FamilyDomainError, InvalidParams
from .gf import CapacityError, DomainError, make_ctx
from .numthy import prime_power

USAGE_ERROR = 2
PARAM_ERROR = 3


def _parse_q(text: str) -> tuple[int, int, int]:
    try:
        q = int(text)
    except ValueError:
        print(f"{text!r} is not an integer", file=sys.stderr)
        raise SystemExit(USAGE_ERROR) from None
    pp = prime_power(q)
    if pp is None:
        print(f"{q} is not a prime power", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    return q, pp[0], pp[1]


def _family_filter(text: str) -> list[str] | None:
    if text == "all":
        return None
    fams = [f.strip() for f in text.split(",") if f.strip()]
    for f in fams:
        if f not in FAMILY_ORDER:
            print(f"unknown family {f!r}", file=sys.stderr)
            raise SystemExit(USAGE_ERROR)
    return fams


def _spectrum_one(job):
    q, fam = job
    return [
        families.genus(q, fam, params)
        for params in families.enumerate_family(q, fam)
    ]


def _cmd_spectrum(args) -> int:
    q, _, _ = _parse_q(args.q)
    fams = _family_filter(args.family)
    if args.jobs > 1:
        # per-family fan-out; the merge below restores canonical order
        import multiprocessing as mp

        work = [
            (q, fam)
            for fam in FAMILY_ORDER
            if (fams is None or fam in fams) and families.applicable(q, fam)
        ]
        with mp.get_context("fork").Pool(min(args.jobs, max(1, len(work)))) as pool:
            by_genus: dict[int, list] = {}
            for recs in pool.map(_spectrum_one, work):
                for rec in recs:
                    by_genus.setdefault(rec.genus, []).append(rec)
        entries = [
            spectrum.SpectrumEntry(
                g,
                tuple(
                    sorted(
                        recs,
                        key=lambda r: (FAMILY_ORDER.index(r.family), r.params_str(q)),
                    )
                ),
            )
            for g, recs in sorted(by_genus.items())
        ]
    else:
        entries = spectrum.compute_spectrum(q, fams)
    if args.format == "json":
        print(spectrum.spectrum_to_json(q, entries))
    elif args.format == "csv":
        print(spectrum.spectrum_to_csv(q, entries), end="")
    else:
        print(f"q={q}: {len(entries)} genera")
        for e in entries:
            first = e.witnesses[0]
            label = f"{first.family}[{first.params_str(q)}] |G|={first.group_order}"
            more = f" (+{len(e.witnesses) - 1} more)" if len(e.witnesses) > 1 else ""
            print(f"  g={e.genus:<8} {label}{more}")
    return 0


def _cmd_genus(args) -> int:
    q, _, _ = _parse_q(args.q)
    if args.family not in FAMILY_ORDER:
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return USAGE_ERROR
    try:
        params = families.parse_params(q, args.family, args.params)
        rec = families.genus(q, args.family, params)
    except (InvalidParams, FamilyDomainError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return PARAM_ERROR
    print(
        f"genus={rec.genus} group_order={rec.group_order} "
        f"family={rec.family} params={rec.params_str(q)}"
    )
    return 0


def _verify_one(job):
    q, fam, params, budget, fixed_points = job
    pp = prime_power(q)
    ctx = make_ctx(*pp)
    return oracle.verify_family(ctx, q, fam, params, budget, fixed_points)


def _cmd_verify(args) -> int:
    q, p, n = _parse_q(args.q)
    fams = _family_filter(args.family)
    jobs = []
    for fam in FAMILY_ORDER:
        if fams is not None and fam not in fams:
            continue
        if not families.applicable(q, fam):
            continue
        for params in families.enumerate_family(q, fam):
            jobs.append((q, fam, params, args.budget, not args.no_fixed_points))
    try:
        make_ctx(p, n)
    except CapacityError as exc:
        print(f"field table capacity: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.jobs > 1 and len(jobs) > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(args.jobs) as pool:
            reports = pool.map(_verify_one, jobs)
    else:
        reports = [_verify_one(j) for j in jobs]
    reports.sort(key=lambda r: (FAMILY_ORDER.index(r.family), families.params_to_str(q, r.family, r.params)))
    failures = 0
    skipped = 0
    for r in reports:
        pstr = families.params_to_str(q, r.family, r.params)
        if r.status == "skipped":
            skipped += 1
            print(f"SKIP {r.family}[{pstr}] {r.detail}")
        elif r.status == "ok":
            print(
                f"ok   {r.family}[{pstr}] |G|={r.claimed_order} g={r.claimed_genus}"
            )
        else:
            failures += 1
            print(f"FAIL {r.family}[{pstr}] {r.detail}")
    print(
        f"verified {len(reports) - failures - skipped}/{len(reports)} tuples at q={q}"
        + (f" ({skipped} over budget)" if skipped else "")
    )
    return 1 if failures else 0


def _cmd_classify(args) -> int:
    q, p, n = _parse_q(args.q)
    try:
        ctx = make_ctx(p, n)
    except CapacityError as exc:
        print(f"field table capacity: {exc}", file=sys.stderr)
        return USAGE_ERROR
    gram = pgu.make_gram(ctx, args.model)
    try:
        M = pgu.parse_matrix(ctx, args.matrix)
    except DomainError as exc:
        print(f"bad matrix literal: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if not pgu.is_unitary(ctx, gram, M):
        print("matrix is not unitary for this form", file=sys.stderr)
        return PARAM_ERROR
    if M == pgu.identity(ctx):
        print("identity element: no classification", file=sys.stderr)
        return PARAM_ERROR
    cls = pgu.classify(ctx, M)
    out = f"type={cls.kind} i={cls.i} order={cls.order} fixed={cls.fixdesc}"
    if cls.center is not None:
        out += " center=(" + ",".join(ctx.format_elt(x) for x in cls.center) + ")"
    print(out)
    return 0


def _cmd_enumerate(args) -> int:
    q, _, _ = _parse_q(args.q)
    fams = _family_filter(args.family)
    rows = []
    for fam in FAMILY_ORDER:
        if fams is not None and fam not in fams:
            continue
        if not families.applicable(q, fam):
            continue
        for params in families.enumerate_family(q, fam):
            rec = families.genus(q, fam, params)
            rows.append(rec)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "family": r.family,
                        "params": r.params,
                        "genus": r.genus,
                        "group_order": r.group_order,
                    }
                    for r in rows
                ],
                indent=2,
                sort_keys=True,
            )
        )
    elif args.format == "csv":
        print("family,params,genus,group_order")
        for r in rows:
            print(f'{r.family},"{r.params_str(q)}",{r.genus},{r.group_order}')
    else:
        for r in rows:
            print(f"{r.family}[{r.params_str(q)}] |G|={r.group_order} g={r.genus}")
    return 0


def _cmd_table1(args) -> int:
    report = spectrum.check_table1(_family_filter(args.family))
    if args.format == "json":
        payload = [
            {
                "q": q,
                "entries": [
                    {
                        "genus": g,
                        "present": present,
                        "witness": None
                        if rec is None
                        else {
                            "family": rec.family,
                            "params": rec.params,
                            "group_order": rec.group_order,
                        },
                    }
                    for g, present, rec in entries
                ],
            }
            for q, entries in report.rows
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "csv":
        print("q,present,total,missing")
        for q, entries in report.rows:
            present = sum(1 for _, ok, _ in entries if ok)
            missing = ";".join(str(g) for g, ok, _ in entries if not ok)
            print(f"{q},{present},{len(entries)},{missing}")
    else:
        for q, entries in report.rows:
            for g, present, rec in entries:
                mark = "PRESENT" if present else "ABSENT"
                wit = (
                    f" via {rec.family}[{rec.params_str(q)}] |G|={rec.group_order}"
                    if rec
                    else ""
                )
                print(f"q={q:<5} g={g:<7} {mark}{wit}")
    return 0 if report.all_present else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermgenus",
        description="Genera of quotients of the Hermitian curve, with a matrix-group oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="genus spectrum at q")
    sp.add_argument("-q", required=True)
    sp.add_argument("--family", default="all")
    sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=_cmd_spectrum)

    ge = sub.add_parser("genus", help="evaluate one parameter tuple")
    ge.add_argument("-q", required=True)
    ge.add_argument("--family", required=True)
    ge.add_argument("--params", required=True)
    ge.set_defaults(func=_cmd_genus)

    ve = sub.add_parser("verify", help="oracle check of all tuples at q")
    ve.add_argument("-q", required=True)
    ve.add_argument("--family", default="all")
    ve.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    ve.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ve.add_argument("--no-fixed-points", action="store_true")
    ve.set_defaults(func=_cmd_verify)

    cl = sub.add_parser("classify", help="classify one unitary matrix")
    cl.add_argument("-q", required=True)
    cl.add_argument("--model", choices=("MODEL1", "MODEL3"), default="MODEL1")
    cl.add_argument("--matrix", required=True)
    cl.set_defaults(func=_cmd_classify)

    en = sub.add_parser("enumerate", help="list valid parameter tuples at q")
    en.add_argument("-q", required=True)
    en.add_argument("--family", default="all")
    en.add_argument("--format", choices=("table", "json", "csv"), default="table")
    en.set_defaults(func=_cmd_enumerate)

    t1 = sub.add_parser("table1", help="reference-genera membership check")
    t1.add_argument("--family", default="all")
    t1.add_argument("--format", choices=("table", "json", "csv"), default="table")
    t1.set_defaults(func=_cmd_table1)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParams, FamilyDomainError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return PARAM_ERROR
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
