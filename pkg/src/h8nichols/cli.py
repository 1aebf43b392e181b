"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 resource cap, 3 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .cache import ProfileCache
from .expr import ExprError, parse, to_module
from .liftings import (FAMILIES, LiftingParams, NonConfluent, PresentationError, build_lifting,
                       hopf_verify_lifting)
from .nichols import (ENGINE_VERSION, NicholsConfig, ResourceCap, braiding, conjecture_probe,
                      diagonal_form, dynkin, gk_estimate, verify_braiding, _sparse_form)
from .tables import TABLE2, TABLE3, block_dim, compute_row, degree_cap, gk_text, profile
from .yd import all_simple_labels, decompose, simple, verify_yd

EXIT_OK, EXIT_MISMATCH, EXIT_CAP, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Outcome:
    inputs: dict
    rows: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    ok: bool = True

    def check(self, name, ok, detail=""):
        self.checks.append({"name": name, "ok": bool(ok), "detail": detail})
        self.ok &= bool(ok)

    def add_report(self, rep):
        for c in rep.checks:
            self.check(c.name, c.ok, c.detail)


# --- formatting ----------------------------------------------------------------

def _table(rows):
    if not rows:
        return ""
    cols = list(rows[0])
    data = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(d[k]) for d in data)) for k, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(d, widths)).rstrip() for d in data]
    return "\n".join(lines) + "\n"


def render(command, out, fmt):
    if fmt == "json":
        payload = {"command": command, "inputs": out.inputs,
                   "results": {"rows": out.rows, "checks": out.checks, "summary": out.summary,
                               "ok": out.ok},
                   "engine_version": ENGINE_VERSION}
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        rows = out.rows or out.checks or [out.summary]
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            for r in rows:
                w.writerow(r)
        return buf.getvalue()
    text = _table(out.rows)
    for c in out.checks:
        text += f"{'ok  ' if c['ok'] else 'FAIL'}  {c['name']}" + (f"  ({c['detail']})" if c["detail"] else "") + "\n"
    for k, v in out.summary.items():
        text += f"{k}: {v}\n"
    return text


# --- helpers ----------------------------------------------------------------------

def _module(text):
    try:
        return to_module(parse(text))
    except ExprError as e:
        raise UsageError(str(e)) from None


def _cutoff(m, requested, force, label="--max-degree"):
    d = block_dim(m)
    cap = degree_cap(d)
    if requested is None:
        return cap, NicholsConfig()
    if requested < 0:
        raise UsageError(f"{label} must be non-negative")
    if requested > cap:
        if not force:
            raise ResourceCap(f"{label} {requested} exceeds the default cap {cap} for blocks of "
                              f"dimension {d}; pass --force to override")
        print(f"warning: degree {requested} on a block of dimension {d} handles up to "
              f"{d ** requested} words per degree", file=sys.stderr)
        return requested, NicholsConfig(cap=max(4096, d ** requested))
    return requested, NicholsConfig()


def _profile_rows(p):
    cum = p.cumulative()
    return [{"degree": n, "dim": c, "cumulative": cum[n]} for n, c in enumerate(p.dims)]


def _cache(args):
    return ProfileCache() if not getattr(args, "no_cache", False) else None


# --- commands ----------------------------------------------------------------------

def cmd_simples(args):
    out = Outcome({})
    for lab in all_simple_labels():
        m = simple(lab)
        yd_ok = verify_yd(m).ok
        ybe_ok = verify_braiding(braiding(m)).ok
        out.rows.append({"label": lab.render(), "dim": m.dim, "yd": "ok" if yd_ok else "FAIL",
                         "braid": "ok" if ybe_ok else "FAIL"})
        out.ok &= yd_ok and ybe_ok
    out.summary["simples"] = len(out.rows)
    return out


def cmd_verify(args):
    m = _module(args.expr)
    out = Outcome({"expr": m.name})
    out.add_report(verify_yd(m))
    out.add_report(verify_braiding(braiding(m)))
    out.summary["dim"] = m.dim
    return out


def cmd_braiding(args):
    m = _module(args.expr)
    out = Outcome({"expr": m.name})
    c = m.braid_matrix()
    for i in range(c.nrows):
        out.rows.append({"row": i, "entries": " ".join(str(c[i, j]) for j in range(c.ncols))})
    out.add_report(verify_braiding(braiding(m)))
    out.summary["size"] = f"{c.nrows}x{c.ncols}"
    return out


def cmd_nichols(args):
    m = _module(args.expr)
    cutoff, cfg = _cutoff(m, args.max_degree, args.force)
    p = profile(m, cutoff, _cache(args), factor=not args.direct, cfg=cfg)
    out = Outcome({"expr": m.name, "max_degree": cutoff, "direct": bool(args.direct)})
    out.rows = _profile_rows(p)
    out.summary = {"profile": p.render(), "total": p.total if p.finite else "open",
                   "provenance": p.provenance}
    return out


def cmd_gk(args):
    m = _module(args.expr)
    cutoff, cfg = _cutoff(m, args.max_degree, args.force)
    p = profile(m, cutoff, _cache(args), cfg=cfg)
    out = Outcome({"expr": m.name, "max_degree": cutoff})
    out.rows = _profile_rows(p)
    if p.finite:
        out.summary = {"profile": p.render(), "gk_estimate": "0 (finite)"}
    else:
        try:
            est = gk_estimate(p)
        except ValueError as e:
            raise UsageError(f"{e}; raise --max-degree") from None
        out.summary = {"profile": p.render(), "gk_estimate": f"{est:.4f}"}
    return out


def cmd_dynkin(args):
    m = _sparse_form(_module(args.expr))
    out = Outcome({"expr": m.name})
    q = diagonal_form(m)
    if q is None:
        out.summary = {"diagonal": False, "verdict": "not of diagonal type in this basis"}
        return out
    for i, row in enumerate(q):
        out.rows.append({"i": i, "q": " ".join(str(v) for v in row)})
    dd = dynkin(q)
    out.summary = {"diagonal": True, "diagram": dd.render(), "verdict": dd.verdict,
                   "dimension": dd.dimension if dd.dimension else "", "reason": dd.reason}
    return out


def _table_cmd(rows_def, args, cross):
    out = Outcome({"max_degree": args.max_degree, "cross_check": cross})
    cache = _cache(args)
    for row in rows_def:
        res = compute_row(row, args.max_degree, cache, cross_check=cross)
        expected = "?" if row.open else (str(row.dim) if row.dim is not None else "inf")
        if row.open:
            computed = "; ".join(f"{e}: {p.render()}" for e, p, _c in res.cells)
        else:
            computed = res.dim_text()
        r = {"module": row.module, "condition": row.condition, "expected_dim": expected,
             "computed": computed, "expected_gk": row.gk}
        if row.dim is None and not row.open and row.gk not in ("", "inf"):
            r["gk_estimate"] = ",".join(sorted({gk_text(p) for _e, p, _c in res.cells}))
        else:
            r["gk_estimate"] = ""
        if cross:
            r["direct_deg<=4"] = ("ok" if all(ok for _e, ok in res.cross) else "FAIL") if res.cross else ""
        r["status"] = "ok" if res.ok else "MISMATCH"
        out.rows.append(r)
        out.ok &= res.ok
    out.summary["finite cells"] = sum(1 for r in rows_def if r.dim is not None)
    out.summary["result"] = "all finite cells match" if out.ok else "mismatch"
    return out


def cmd_table2(args):
    return _table_cmd(TABLE2, args, False)


def cmd_table3(args):
    return _table_cmd(TABLE3, args, not args.no_cross_check)


def cmd_conjecture(args):
    if args.b1 not in (1, -1):
        raise UsageError("--b1 must be 1 or -1")
    n = args.max_degree
    if n > 6 and not args.force:
        raise ResourceCap(f"--max-degree {n} exceeds the default cap 6 for a 4-dimensional block; "
                          "pass --force to override")
    cfg = NicholsConfig(cap=max(4096, 4 ** n))
    cache = _cache(args)
    profs = {}
    for which in ("xy,x", "y,xy"):
        hit = None
        from .yd import PairGG, W, direct_sum
        g = tuple(which.split(","))
        m = direct_sum(simple(PairGG(*g)), simple(W(args.b1, -1), "p"))
        if cache is not None:
            hit = cache.get(m, n, "direct")
        p = hit if hit is not None else conjecture_probe(args.b1, which, n, cfg)
        if hit is None:
            p.seconds, p.note = [], ""
            if cache is not None:
                cache.put(m, p, "direct")
        profs[which] = p
    a, b = profs["xy,x"], profs["y,xy"]
    out = Outcome({"b1": args.b1, "max_degree": n})
    for k in range(max(len(a.dims), len(b.dims))):
        out.rows.append({"degree": k, "M2(xy,x)+W": a.dims[k] if k < len(a.dims) else 0,
                         "M2(y,xy)+W": b.dims[k] if k < len(b.dims) else 0})
    out.check("profiles of the two pair modules agree", a.dims == b.dims)
    out.summary = {"M2(xy,x) + W": a.render(), "M2(y,xy) + W": b.render(),
                   "claim": "none (the cell is undetermined)" if not (a.finite or b.finite)
                   else "finite total observed"}
    return out


def cmd_decompose(args):
    m = _module(args.expr)
    out = Outcome({"expr": m.name})
    dec = decompose(m)
    total = 0
    for lab, k in dec.items():
        d = simple(lab).dim
        total += k * d
        out.rows.append({"label": lab.render(), "multiplicity": k, "dim": d})
    out.check("dimension sum", total == m.dim, f"{total} of {m.dim}")
    return out


def _load_params(args):
    data = {"family": args.family}
    if args.params:
        try:
            with open(args.params) as f:
                data.update(json.load(f))
        except (OSError, ValueError) as e:
            raise UsageError(f"cannot read parameters: {e}") from None
        data["family"] = args.family
    if args.counts is not None:
        data["counts"] = [int(c) for c in args.counts.split(",") if c.strip()]
    data.setdefault("counts", {"A1": [1, 0, 0, 0], "A2bos": [1, 0], "A4": [1, 0]}.get(args.family, []))
    try:
        return LiftingParams.from_dict(data)
    except (ValueError, KeyError) as e:
        raise UsageError(str(e)) from None


def cmd_lift(args):
    p = _load_params(args)
    out = Outcome({"family": p.family, "counts": list(p.counts),
                   "scalars": {k: str(v) for k, v in p.scalars.items()}, "verify": bool(args.verify)})
    try:
        a = build_lifting(p)
    except NonConfluent as e:
        out.check("confluence", False, f"overlap {e.overlap}: {e.residue}")
        out.summary = {"dim": "undefined"}
        return out
    except PresentationError as e:
        raise UsageError(str(e)) from None
    out.check("confluence", True)
    for n, c in enumerate(a.graded_dims()):
        out.rows.append({"degree": n, "dim": c})
    out.summary = {"algebra": a.name, "dim": a.dim}
    if args.verify:
        rep = hopf_verify_lifting(a, structure=args.structure or None)
        for c in rep.checks[1:]:
            out.check(c.name, c.ok, c.detail)
    if args.dump:
        out.summary["presentation"] = a.to_text()
    return out


COMMANDS = {
    "simples": cmd_simples, "verify": cmd_verify, "braiding": cmd_braiding, "nichols": cmd_nichols,
    "dynkin": cmd_dynkin, "table2": cmd_table2, "table3": cmd_table3, "conjecture": cmd_conjecture,
    "decompose": cmd_decompose, "lift": cmd_lift, "gk": cmd_gk,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser():
    ap = _Parser(prog="h8nichols", description="Nichols algebras and liftings over H8.")
    ap.add_argument("--format", choices=["table", "csv", "json"], default="table")
    ap.add_argument("--no-cache", action="store_true", help="ignore the on-disk profile cache")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("simples", help="list and verify the 22 simple modules")
    for name in ("verify", "braiding", "dynkin", "decompose"):
        sp = sub.add_parser(name)
        sp.add_argument("expr")
    for name in ("nichols", "gk"):
        sp = sub.add_parser(name)
        sp.add_argument("expr")
        sp.add_argument("--max-degree", type=int, default=None)
        sp.add_argument("--force", action="store_true", help="allow degrees above the default cap")
        if name == "nichols":
            sp.add_argument("--direct", action="store_true", help="skip tensor factorization")
    for name in ("table2", "table3"):
        sp = sub.add_parser(name)
        sp.add_argument("--max-degree", type=int, default=8,
                        help="cutoff for infinite cells (finite cells run to their cap)")
        if name == "table3":
            sp.add_argument("--no-cross-check", action="store_true")
    sp = sub.add_parser("conjecture")
    sp.add_argument("--b1", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=5)
    sp.add_argument("--force", action="store_true")
    sp = sub.add_parser("lift")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("--params", help="JSON file with counts and scalars")
    sp.add_argument("--counts", help="comma-separated multiplicities")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--structure", action="store_true", help="also verify structure constants")
    sp.add_argument("--dump", action="store_true", help="print the text presentation")
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code
    if getattr(args, "max_degree", None) is not None and args.max_degree < 0:
        print("error: --max-degree must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCap as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return EXIT_CAP
    sys.stdout.write(render(args.command, out, args.format))
    return EXIT_OK if out.ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
