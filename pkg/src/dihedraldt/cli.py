"""Command-line front end: ``dihedraldt <command> [options]``.

Commands: ``mckay``, ``roots``, ``omega``, ``series``, ``verify``, ``ncdt``,
``c2``.  Exit status is 0 when every requested check passes, 1 when a check
fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import dataclass, field

from . import dtengine, fqoracle, mckay, rootsystem
from .powerseries import degree_simplex

FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    ell: int = 1
    max_degree: int = 4
    primes: list[int] = field(default_factory=lambda: [2])
    budget: int | None = None
    fmt: str = "json"
    output: str | None = None
    workers: int = 1
    within_delta: bool = False


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p ** 0.5) + 1))


def _primes(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    bad = [p for p in values if not _is_prime(p)]
    if not values or bad:
        raise argparse.ArgumentTypeError(f"not prime: {bad or text!r}")
    return values


def _series_rows(s) -> list[dict]:
    return s.to_json()


def _diff_rows(a, b) -> list[list[int]]:
    return [list(d) for d in dtengine.series_diff(a, b)]


# -- commands -----------------------------------------------------------------
# each returns (payload, ok, rows-for-csv, text-lines)

def cmd_mckay(cfg: RunConfig):
    quiver = mckay.mckay_quiver(cfg.ell)
    red = mckay.extract_reduction(quiver)
    payload = quiver.to_json()
    payload["reduction"] = {
        "r": red.quiver.r,
        "arrows": [list(a) for a in red.quiver.arrows],
        "sigma": list(red.sigma),
        "vertex_map": red.vertex_map,
        "cut_I": [list(a) for a in red.cut_I],
        "cut_I_prime": [list(a) for a in red.cut_I_prime],
        "triangles": red.triangles,
    }
    rows = [{"source": a["source"], "target": a["target"], "color": a["color"],
             "multiplicity": a["multiplicity"]} for a in payload["arrows"]]
    text = [f"{a['source']} -> {a['target']} [{a['color']}] x{a['multiplicity']}"
            for a in payload["arrows"]]
    text.append(f"Q'' = D^_{red.quiver.r}, arrows {list(red.quiver.arrows)}, sigma {list(red.sigma)}")
    return payload, True, rows, text


def _class_name(cls) -> str:
    return dtengine.OmegaEntry((), cls, None).class_name()


def cmd_roots(cfg: RunConfig):
    rs = rootsystem.build(cfg.ell + 2)
    roots = [{"d": list(d), "class": _class_name(cls), "p": rootsystem.p_parity(rs, d)}
             for d, cls in rootsystem.positive_roots(rs, cfg.max_degree)]
    payload = {"ell": cfg.ell, "r": rs.r, "max_degree": cfg.max_degree, "roots": roots}
    rows = [{"d": " ".join(map(str, r["d"])), "class": r["class"], "p": r["p"]} for r in roots]
    text = [f"{r['d']}  {r['class']}" for r in roots]
    return payload, True, rows, text


def cmd_omega(cfg: RunConfig):
    rs = rootsystem.build(cfg.ell + 2)
    table = [e.to_json() for e in dtengine.omega_table(rs, cfg.max_degree)]
    payload = {"ell": cfg.ell, "r": rs.r, "max_degree": cfg.max_degree, "table": table}
    rows = [{"d": " ".join(map(str, e["d"])), "class": e["class"], "omega": e["omega"]}
            for e in table]
    text = [f"{e['d']}  {e['class']}  {e['omega']}" for e in table]
    return payload, True, rows, text


def cmd_series(cfg: RunConfig):
    rs = rootsystem.build(cfg.ell + 2)
    closed = dtengine.a_series_closed(rs, cfg.max_degree)
    ar = dtengine.a_series_ar(rs, cfg.max_degree)
    diff = _diff_rows(closed, ar)
    payload = {"ell": cfg.ell, "r": rs.r, "max_degree": cfg.max_degree,
               "closed": _series_rows(closed), "ar": _series_rows(ar),
               "diff": diff, "equal": not diff}
    rows = [{"d": " ".join(map(str, d)), "closed": str(closed[d]), "ar": str(ar[d])}
            for d in sorted(set(closed.coeffs) | set(ar.coeffs))]
    text = [f"{r['d']}  {r['closed']}" for r in rows]
    text.append(f"closed == ar: {not diff}")
    return payload, not diff, rows, text


def _verify_domain(rs, cfg: RunConfig):
    if cfg.within_delta:
        for d in itertools.product(*(range(k + 1) for k in rs.delta.tolist())):
            if any(d) and sum(d) <= cfg.max_degree:
                yield d
    else:
        yield from degree_simplex(rs.n, cfg.max_degree, start=1)


def cmd_verify(cfg: RunConfig):
    rs = rootsystem.build(cfg.ell + 2)
    series = dtengine.a_series_closed(rs, cfg.max_degree)
    reports = []
    for p in cfg.primes:
        for d in _verify_domain(rs, cfg):
            try:
                rep = fqoracle.coefficient_check(rs, d, p, series=series, budget=cfg.budget,
                                                 workers=cfg.workers)
            except fqoracle.BudgetExceeded as exc:
                reports.append({"d": list(d), "p": p, "status": "skipped",
                                "required": exc.required})
                continue
            row = rep.to_json()
            row["status"] = "pass" if rep.passed else "fail"
            reports.append(row)
    counts = {k: sum(r["status"] == k for r in reports) for k in ("pass", "fail", "skipped")}
    ok = counts["fail"] == 0
    payload = {"ell": cfg.ell, "r": rs.r, "max_degree": cfg.max_degree,
               "primes": cfg.primes, "reports": reports, "summary": counts, "pass": ok}
    rows = [{"d": " ".join(map(str, r["d"])), "p": r["p"], "status": r["status"],
             "count": r.get("count", ""), "P": json.dumps(r.get("P"))} for r in reports]
    text = [f"{r['d']} p={r['p']}: {r['status']}" for r in reports]
    text.append(f"summary: {counts}")
    return payload, ok, rows, text


def _two_sided(name_a, a, name_b, b, N):
    diff = _diff_rows(a, b)
    payload = {"max_degree": N, name_a: _series_rows(a), name_b: _series_rows(b),
               "diff": diff, "equal": not diff}
    rows = [{"d": " ".join(map(str, d)), name_a: str(a[d]), name_b: str(b[d])}
            for d in sorted(set(a.coeffs) | set(b.coeffs))]
    text = [f"{r['d']}  {r[name_a]}  {r[name_b]}" for r in rows]
    text.append(f"{name_a} == {name_b}: {not diff}")
    return payload, not diff, rows, text


def cmd_ncdt(cfg: RunConfig):
    if cfg.ell != 1:
        raise _UsageError("ncdt is defined for --ell 1 only")
    if cfg.max_degree < 4:
        raise _UsageError("ncdt needs --max-degree >= 4")
    exp_side, product_side = dtengine.ncdt_series(cfg.max_degree)
    return _two_sided("exp_side", exp_side, "product_side", product_side, cfg.max_degree)


def cmd_c2(cfg: RunConfig):
    lhs, rhs = dtengine.c2_series(cfg.max_degree)
    return _two_sided("lhs", lhs, "rhs", rhs, cfg.max_degree)


COMMANDS = {
    "mckay": cmd_mckay,
    "roots": cmd_roots,
    "omega": cmd_omega,
    "series": cmd_series,
    "verify": cmd_verify,
    "ncdt": cmd_ncdt,
    "c2": cmd_c2,
}


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedraldt",
        description="Motivic DT invariants of crepant resolutions of C^3/D_2l.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ell", type=int, default=1, help="dihedral parameter l >= 1 (r = l + 2)")
    common.add_argument("--max-degree", type=int, default=4, help="truncation order N >= 1")
    common.add_argument("--primes", type=_primes, default=[2], help="comma-separated primes")
    common.add_argument("--budget", type=int, default=None,
                        help=f"enumeration budget (default ${fqoracle.BUDGET_ENV} or 2^24)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--within-delta", action="store_true",
                        help="verify: sweep d <= delta componentwise")
    common.add_argument("--format", choices=FORMATS, default="json", dest="fmt")
    common.add_argument("--output", "-o", default=None, help="write to file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=fn.__name__.replace("cmd_", ""))
    return parser


def _render(payload, rows, text, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    return "\n".join(text) + "\n"


def run(command: str, cfg: RunConfig) -> tuple[int, str]:
    payload, ok, rows, text = COMMANDS[command](cfg)
    return (0 if ok else 1), _render(payload, rows, text, cfg.fmt)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.ell < 1:
        parser.error("--ell must be >= 1")
    if args.max_degree < 1:
        parser.error("--max-degree must be >= 1")
    if args.budget is not None and args.budget < 1:
        parser.error("--budget must be positive")
    cfg = RunConfig(ell=args.ell, max_degree=args.max_degree, primes=args.primes,
                    budget=args.budget, fmt=args.fmt, output=args.output,
                    workers=max(1, args.workers), within_delta=args.within_delta)
    try:
        code, out = run(args.command, cfg)
    except _UsageError as exc:
        parser.error(str(exc))
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
