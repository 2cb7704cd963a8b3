"""Command-line entry point.

Every subcommand builds one report dictionary.  ``--format structured``
prints it as JSON; ``--format human`` prints the same fields flattened to
``dotted.key: value`` lines, so both modes carry identical verdicts.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .bounds import ENTRY_NAMES, TrivialParametersError, bound_report, godsil_condition, bang_koolen_condition, lambda_bound
from .families import FamilyError, expected_parameters, generate, parse_family
from .feasibility import EXTRA_FILTERS, TableError, load_table, scan_main
from .geometry import (
    GeometryError,
    extract_geometry,
    geometry_report,
    metsch_t_corollary,
    metsch_t_min,
    satisfies_main,
)
from .graph import (
    AmpleParams,
    Graph,
    GraphError,
    RegularityError,
    ample_parameters,
    distance_matrix,
    find_claw,
    intersection_array,
    read_edge_list,
    to_edge_list_text,
)
from .spectra import (
    InfeasibleError,
    SrgParams,
    check_lambda_s,
    drg_eigenvalues,
    sign_changes,
    srg_spectrum,
    standard_sequence,
)


class UsageError(Exception):
    pass


class AnalysisError(Exception):
    pass


def _jsonable(x: Any) -> Any:
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return None
        return x
    return x


def _flatten(doc: Any, prefix: str = "") -> list[str]:
    if isinstance(doc, dict):
        if not doc:
            return [f"{prefix}: {{}}"] if prefix else []
        lines = []
        for key, val in doc.items():
            lines.extend(_flatten(val, f"{prefix}.{key}" if prefix else str(key)))
        return lines
    if isinstance(doc, list) and any(isinstance(v, (dict, list)) for v in doc):
        lines = []
        for i, val in enumerate(doc):
            lines.extend(_flatten(val, f"{prefix}[{i}]"))
        return lines or [f"{prefix}: []"]
    if isinstance(doc, list):
        return [f"{prefix}: " + ", ".join(_scalar(v) for v in doc)]
    return [f"{prefix}: {_scalar(doc)}"]


def _scalar(v: Any) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def render(doc: dict, fmt: str) -> str:
    doc = _jsonable(doc)
    if fmt == "structured":
        return json.dumps(doc, indent=2) + "\n"
    return "\n".join(_flatten(doc)) + "\n"


def _params_dict(p) -> dict:
    out = {"n": p.n, "k": p.k, "lambda": p.lam, "mu": p.mu}
    if isinstance(p, AmpleParams):
        out["mu_exact"] = p.mu_exact
    return out


def _parse_params(text: str) -> SrgParams:
    try:
        vals = [int(v.strip(), 10) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"--params needs four integers n,k,l,m; got {text!r}") from None
    if len(vals) != 4:
        raise UsageError(f"--params needs four integers n,k,l,m; got {text!r}")
    return SrgParams(*vals)


def _load_graph(args) -> tuple[Graph, Optional[str]]:
    if getattr(args, "family", None):
        try:
            spec = parse_family(args.family)
        except FamilyError as exc:
            raise UsageError(str(exc)) from None
        return generate(spec).graph, str(spec)
    if getattr(args, "graph", None):
        try:
            with open(args.graph, encoding="utf-8") as fh:
                return read_edge_list(fh), None
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None
        except GraphError as exc:
            raise UsageError(f"{args.graph}: {exc}") from None
    raise UsageError("one of --family or --graph is required")


def _structure(g: Graph) -> dict:
    """Measured parameters, and SRG/DRG status, of a graph."""
    try:
        p = ample_parameters(g)
    except RegularityError as exc:
        raise AnalysisError(f"graph is not sub-amply regular: {exc}") from None
    info: dict[str, Any] = {"params": p, "array": None, "srg": None}
    dist = distance_matrix(g)
    connected = bool((dist >= 0).all())
    if connected:
        try:
            info["array"] = intersection_array(g)
        except RegularityError:
            pass
    if p.mu_exact and p.mu > 0 and connected and int(dist.max()) == 2:
        info["srg"] = SrgParams(p.n, p.k, p.lam, p.mu)
    return info


def cmd_generate(args) -> dict:
    try:
        spec = parse_family(args.family)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    lg = generate(spec)
    if args.format == "human":
        return {"_raw": to_edge_list_text(lg.graph)}
    return {
        "family": str(spec),
        "vertex_count": lg.graph.n,
        "edge_count": lg.graph.edge_count,
        "expected": _params_dict(lg.expected) if lg.expected is not None else None,
        "edges": [list(e) for e in lg.graph.edges()],
    }


def cmd_analyze(args) -> dict:
    g, fam = _load_graph(args)
    info = _structure(g)
    p: AmpleParams = info["params"]
    doc: dict[str, Any] = {"family": fam, "params": _params_dict(p)}
    a = info["array"]
    doc["intersection_array"] = {"b": list(a.b), "c": list(a.c)} if a else None
    least = None
    if info["srg"] is not None:
        spec = srg_spectrum(info["srg"])
        doc["strongly_regular"] = True
        least = spec.s
        doc["eigenvalues"] = list(spec.theta)
    elif a is not None:
        doc["strongly_regular"] = False
        eig = drg_eigenvalues(a)
        least = eig[-1]
        doc["eigenvalues"] = eig
    else:
        doc["strongly_regular"] = False
        doc["eigenvalues"] = None
    doc["satisfies_main"] = satisfies_main(p)
    wmin, wcor = metsch_t_min(p), metsch_t_corollary(p)
    doc["metsch_t_min"] = {"t": wmin.t, "order_threshold": wmin.order_threshold} if wmin else None
    doc["metsch_t_corollary"] = {"t": wcor.t, "order_threshold": wcor.order_threshold} if wcor else None
    if least is not None and least < 0:
        m = math.floor(-least) + 1
        claw = find_claw(g, m)
        doc["claw"] = {"size": m, "found": claw is not None,
                       "center": claw.center if claw else None,
                       "leaves": list(claw.leaves) if claw else None}
    return doc


def cmd_geometry(args) -> dict:
    g, fam = _load_graph(args)
    info = _structure(g)
    p = info["params"]
    w = metsch_t_min(p) if args.t_mode == "min" else metsch_t_corollary(p)
    if w is None:
        raise AnalysisError(f"no Metsch witness ({args.t_mode} mode) for parameters {p.nklm}")
    try:
        geom = extract_geometry(g, w)
    except GeometryError as exc:
        raise AnalysisError(f"clique geometry check failed: {exc}") from None
    s = None
    if info["srg"] is not None:
        s = srg_spectrum(info["srg"]).s
    elif info["array"] is not None:
        s = drg_eigenvalues(info["array"])[-1]
    doc = {"family": fam, "params": _params_dict(p), "t_mode": args.t_mode, "axioms_verified": True}
    doc.update(geometry_report(geom, p.k, s))
    if p.mu <= 1:
        doc["note"] = "mu <= 1: cliques built directly from edge common neighborhoods"
    return doc


def _entries(report: dict) -> dict:
    return {name: report[name].to_dict() for name in ENTRY_NAMES if name in report}


def cmd_bounds(args) -> dict:
    if args.params:
        p = _parse_params(args.params)
        try:
            spec = srg_spectrum(p)
        except InfeasibleError as exc:
            raise AnalysisError(str(exc)) from None
        return {"params": _params_dict(p), "source": "params", "entries": _entries(bound_report(p, spec))}
    g, fam = _load_graph(args)
    info = _structure(g)
    p = info["params"]
    if info["srg"] is not None:
        srg = info["srg"]
        spec = srg_spectrum(srg)
        m = math.floor(-spec.s) + 1
        claw_free = find_claw(g, m) is None
        return {"params": _params_dict(p), "source": fam or "graph",
                "entries": _entries(bound_report(srg, spec, claw_free))}
    entries: dict[str, Any] = {}
    try:
        entries["lambda_bound"] = lambda_bound(p).to_dict()
    except TrivialParametersError as exc:
        entries["lambda_bound"] = {"name": "lambda_bound", "holds": None, "case": "not-applicable",
                                   "detail": {"reason": str(exc)}}
    if info["array"] is not None:
        s = drg_eigenvalues(info["array"])[-1]
        m = math.floor(-s) + 1
        gv = godsil_condition(p, s, find_claw(g, m) is None)
        bk = bang_koolen_condition(p, s)
        entries["godsil"] = {"name": "godsil", "holds": gv.holds, "margin": gv.margin,
                             "detail": {"claw_size": gv.claw_size, "claw_free": gv.claw_free,
                                        "parametric": gv.parametric}}
        entries["bang_koolen"] = {"name": "bang_koolen", "holds": bk.holds, "margin": float(bk.margin)}
    return {"params": _params_dict(p), "source": fam or "graph", "entries": entries}


def _srg_spectrum_doc(p: SrgParams) -> dict:
    try:
        spec = srg_spectrum(p)
    except InfeasibleError as exc:
        raise AnalysisError(str(exc)) from None
    doc = {
        "params": _params_dict(p),
        "eigenvalues": list(spec.theta),
        "multiplicities": list(spec.multiplicities),
        "r": spec.r,
        "s": spec.s,
        "integral": spec.integral,
    }
    if p.lam >= 1 and spec.s < 0:
        chk = check_lambda_s(p.k, p.lam, spec.s)
        doc["lambda_s"] = {"margin": chk.margin, "holds": chk.holds,
                           "bang_koolen_margin": chk.bang_koolen_margin,
                           "bang_koolen_holds": chk.bang_koolen_holds}
    return doc


def cmd_spectra(args) -> dict:
    if args.params:
        return _srg_spectrum_doc(_parse_params(args.params))
    g, fam = _load_graph(args)
    info = _structure(g)
    a = info["array"]
    if a is None:
        if info["srg"] is not None:
            return _srg_spectrum_doc(info["srg"])
        raise AnalysisError("graph is not distance-regular; no spectrum from parameters")
    eig = drg_eigenvalues(a)
    seqs = []
    for i, theta in enumerate(eig):
        seq = standard_sequence(a, theta)
        try:
            changes: Optional[int] = sign_changes(seq)
        except ValueError:
            changes = None
        seqs.append({"index": i, "theta": theta, "values": list(seq.values), "sign_changes": changes})
    doc = {"family": fam, "intersection_array": {"b": list(a.b), "c": list(a.c)},
           "eigenvalues": eig, "standard_sequences": seqs}
    if a.lam >= 1:
        chk = check_lambda_s(a.k, a.lam, eig[-1])
        doc["lambda_s"] = {"margin": chk.margin, "holds": chk.holds,
                           "bang_koolen_margin": chk.bang_koolen_margin,
                           "bang_koolen_holds": chk.bang_koolen_holds}
    return doc


def _record_doc(r) -> dict:
    return {
        "params": [r.params.n, r.params.k, r.params.lam, r.params.mu],
        "tag": r.classification.tag,
        "families": list(r.classification.families),
    }


def cmd_scan(args) -> dict:
    table = None
    if args.table:
        try:
            with open(args.table, encoding="utf-8", newline="") as fh:
                table = load_table(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.table}: {exc.strerror}") from None
        except TableError as exc:
            raise AnalysisError(f"table rejected: {exc}") from None
    filters = []
    if args.extra_filters:
        filters = [f.strip() for f in args.extra_filters.split(",") if f.strip()]
        bad = set(filters) - set(EXTRA_FILTERS)
        if bad:
            raise UsageError(f"unknown filter(s) {sorted(bad)}; choose from {','.join(EXTRA_FILTERS)}")
    if args.nmax < 5:
        raise UsageError("--nmax must be at least 5")
    if args.nmax > 5000 and not args.allow_large:
        raise UsageError("--nmax above 5000 needs --allow-large")
    rep = scan_main(args.nmax, table, filters, workers=args.workers, allow_large=args.allow_large)
    return {
        "n_max": rep.n_max,
        "filters_active": ["identity", "multiplicities"] + list(rep.filters_active),
        "table": args.table is not None,
        "total_feasible": rep.total_feasible,
        "main_satisfiers": [_record_doc(r) for r in rep.main_satisfiers],
        "matched": [_record_doc(r) for r in rep.matched],
        "unmatched": [_record_doc(r) for r in rep.unmatched],
        "trivially_satisfying": [_record_doc(r) for r in rep.trivially_satisfying],
        "min_unmatched_n": rep.min_unmatched_n,
    }


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "geometry": cmd_geometry,
    "bounds": cmd_bounds,
    "spectra": cmd_spectra,
    "scan": cmd_scan,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drgkit", description="Distance-regular and strongly regular graph analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("human", "structured"), default="human")

    def graph_source(p, with_params=False):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--family", metavar="SPEC", help="e.g. hamming:2,9, triangular:25, paley:13")
        grp.add_argument("--graph", metavar="PATH", help="edge-list file")
        if with_params:
            grp.add_argument("--params", metavar="N,K,L,M", help="strongly regular parameters only")

    p = sub.add_parser("generate", help="build a family graph")
    p.add_argument("--family", metavar="SPEC", required=True)
    fmt(p)
    p = sub.add_parser("analyze", help="parameters, intersection array, witnesses")
    graph_source(p)
    fmt(p)
    p = sub.add_parser("geometry", help="extract and verify the clique geometry")
    graph_source(p)
    p.add_argument("--t-mode", choices=("min", "corollary"), default="min")
    fmt(p)
    p = sub.add_parser("bounds", help="evaluate every parameter bound")
    graph_source(p, with_params=True)
    fmt(p)
    p = sub.add_parser("spectra", help="eigenvalues and standard sequences")
    graph_source(p, with_params=True)
    fmt(p)
    p = sub.add_parser("scan", help="scan feasible parameters for (lambda+1)^2 > (3k+lambda+1)(mu-1)")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--table", metavar="PATH")
    p.add_argument("--extra-filters", metavar="LIST", help=",".join(EXTRA_FILTERS))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    fmt(p)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (AnalysisError, RegularityError, GeometryError, InfeasibleError, TableError) as exc:
        print(f"analysis failed: {exc}", file=stderr)
        return 1
    if "_raw" in doc:
        stdout.write(doc["_raw"])
    else:
        stdout.write(render(doc, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
