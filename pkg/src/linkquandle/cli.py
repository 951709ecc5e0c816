"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 solver failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import BUILTIN_NAMES, builtin, parse_pd, serialize_pd
from .errors import DiagramInputError, SearchSpaceTooLarge, SolverError, SubsetNotClosed
from .groups import group_from_json
from .parabolic import complex_pair, element_to_dict
from .polysolve import SolverOptions, enumerate_parabolic_colorings
from .presentations import (
    eliminate_generators,
    fundamental_quandle_presentation,
    presentation_to_dict,
    wirtinger_presentation,
)
from .quandles import (
    enumerate_colorings,
    is_tricolorable,
    make_conj,
    make_dihedral,
    make_eisermann,
    make_trivial,
)
from .representation import (
    class_coloring,
    coloring_to_rep,
    conjugate_rep,
    gaussian_integer_evidence,
    parabolic_traces_ok,
    rep_from_dict,
    rep_to_dict,
    same_rep_up_to_conjugacy,
)

SCHEMA = 1
DIGITS = 12

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_SOLVER = 0, 1, 2, 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers

def load_diagram(args):
    if args.builtin:
        name = args.builtin.lower().replace("_", "-")
        if name not in BUILTIN_NAMES:
            raise InputError(f"unknown builtin {args.builtin!r}; choose from {', '.join(BUILTIN_NAMES)}")
        return builtin(name), name
    if args.pd == "-":
        return parse_pd(sys.stdin.read()), "stdin"
    try:
        text = Path(args.pd).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.pd}: {exc}") from None
    return parse_pd(text), args.pd


def parse_quandle_spec(spec: str):
    """``trivial:n | dihedral:n | eisermann:m,n | conj:<groupfile>:k``."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "trivial":
            return make_trivial(int(rest))
        if kind == "dihedral":
            return make_dihedral(int(rest))
        if kind == "eisermann":
            m, n = rest.split(",")
            return make_eisermann(int(m), int(n))
        if kind == "conj":
            path, _, k = rest.rpartition(":")
            data = Path(path).read_text()
            group = group_from_json(data)
            raw = json.loads(data)
            subset = raw.get("subset") if isinstance(raw, dict) else None
            return make_conj(group, subset, int(k))
    except (ValueError, OSError, KeyError) as exc:
        raise InputError(f"bad quandle spec {spec!r}: {exc}") from None
    raise InputError(f"bad quandle spec {spec!r}")


def _emit(args, payload: dict, table: str):
    if args.format == "json":
        text = json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2) + "\n"
    else:
        text = table.rstrip("\n") + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _round(x: float) -> float:
    return round(x, DIGITS) + 0.0


# ---------------------------------------------------------------------------
# commands

def cmd_present(args) -> int:
    d, source = load_diagram(args)
    w = wirtinger_presentation(d)
    q = fundamental_quandle_presentation(d)
    ws, qs = eliminate_generators(w), eliminate_generators(q)
    payload = {
        "command": "present",
        "source": source,
        "diagram": {"arcs": d.arc_count, "crossings": len(d.crossings),
                    "components": d.component_count, "pd": serialize_pd(d)},
        "group": presentation_to_dict(w),
        "group_simplified": presentation_to_dict(ws),
        "quandle": presentation_to_dict(q),
        "quandle_simplified": presentation_to_dict(qs),
    }
    lines = [f"diagram: {d.arc_count} arcs, {len(d.crossings)} crossings, "
             f"{d.component_count} components"]
    for title, p in (("group", w), ("group (simplified)", ws)):
        lines.append(f"{title}: generators {' '.join(p.generator_names)}")
        lines += [f"  {s}" for s in p.relator_strings()]
    for title, p in (("quandle", q), ("quandle (simplified)", qs)):
        lines.append(f"{title}: generators {' '.join(p.generator_names)}")
        lines += [f"  {s}" for s in p.relation_strings()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_color(args) -> int:
    d, source = load_diagram(args)
    q = parse_quandle_spec(args.quandle)
    cols = enumerate_colorings(d, q)
    payload = {"command": "color", "source": source, "quandle": args.quandle,
               "arcs": list(d.arc_names), "count": len(cols), "colorings": [list(c) for c in cols]}
    lines = [f"quandle {args.quandle}: {len(cols)} colorings"]
    lines += ["  " + " ".join(f"{n}={v}" for n, v in zip(d.arc_names, c)) for c in cols]
    if args.tricolor:
        tri = is_tricolorable(d)
        payload["tricolorable"] = tri
        lines.append(f"tricolorable: {str(tri).lower()}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_parabolic(args) -> int:
    d, source = load_diagram(args)
    opts = SolverOptions(seed=args.seed, max_branches=args.max_branches,
                         **({"tolerance": args.tolerance} if args.tolerance else {}))
    sols = enumerate_parabolic_colorings(d, opts, gauges="all" if args.all_gauges else None)
    group = eliminate_generators(wirtinger_presentation(d))
    classes, lines = [], []
    lines.append(f"{len(sols.raw)} raw solutions, {len(sols.classes)} classes, "
                 f"conjugate pairs {sols.conjugate_pairs}")
    ok = True
    for k, cls in enumerate(sols.classes):
        coloring = class_coloring(sols, k)
        rep = coloring_to_rep(coloring, group, f"class-{k}")
        ok &= rep.max_residual <= 1e-9
        classes.append({
            "index": k,
            "generators": {n: element_to_dict(e, DIGITS) for n, e in zip(sols.generator_names, cls.generators)},
            "arcs": {n: element_to_dict(e, DIGITS) for n, e in zip(sols.arc_names, cls.arcs)},
            "fingerprint": [complex_pair(z, DIGITS) for z in cls.fingerprint],
            "members": list(cls.members),
            "conjugate": cls.conjugate,
            "representation": rep_to_dict(rep, DIGITS),
            "gaussian_evidence": _evidence(rep),
        })
        gens = ", ".join(f"{n}=[{_fmt(e.x)}, {_fmt(e.y)}]" for n, e in zip(sols.generator_names, cls.generators))
        lines.append(f"class {k}: {gens}  max residual {rep.max_residual:.1e}")
    payload = {
        "command": "parabolic",
        "source": source,
        "raw_count": len(sols.raw),
        "class_count": len(sols.classes),
        "conjugate_pairs": [list(p) for p in sols.conjugate_pairs],
        "conjugate_pair_found": sols.has_conjugate_pair,
        "all_residuals_ok": ok,
        "dropped": {"non_injective": sols.dropped_non_injective, "reducible": sols.dropped_reducible},
        "classes": classes,
    }
    if args.raw:
        payload["raw"] = [{"branch": list(r.branch), "gauge": list(r.gauge),
                           "values": {v: complex_pair(z, DIGITS) for v, z in r.values.items()},
                           "residual": _round(r.residual)} for r in sols.raw]
        for r in sols.raw:
            vals = ", ".join(f"{v}={_fmt(z)}" for v, z in r.values.items())
            lines.append(f"  raw branch {list(r.branch)}: {vals}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _fmt(z) -> str:
    z = complex(z)
    re, im = round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0
    return f"{re:g}{im:+g}i"


def _evidence(rep) -> dict:
    ev = gaussian_integer_evidence(rep)
    return {"kind": ev["kind"], "max_distance": _round(ev["max_distance"]),
            "all_gaussian_integers": ev["all_gaussian_integers"]}


def cmd_verify(args) -> int:
    try:
        data = json.loads(Path(args.repfile).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load {args.repfile}: {exc}") from None
    entries = data["representations"] if "representations" in data else [data]
    tol = args.tolerance or 1e-9
    reps = []
    for entry in entries:
        entry = dict(entry)
        entry.setdefault("generators", data.get("generators"))
        entry.setdefault("relators", data.get("relators", []))
        try:
            reps.append(rep_from_dict(entry))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"bad representation entry: {exc}") from None
    report, passed, lines = [], True, []
    for r in reps:
        res_ok = r.max_residual <= tol
        tr_ok = parabolic_traces_ok(r, tol)
        passed &= res_ok and tr_ok
        report.append({"label": r.label, "relator_residuals": [_round(x) for x in r.relator_residuals],
                       "residuals_ok": res_ok, "traces_ok": tr_ok,
                       "meridian_traces": [complex_pair(t, DIGITS) for t in r.meridian_traces],
                       "gaussian_evidence": _evidence(r)})
        lines.append(f"{r.label or 'rep'}: max residual {r.max_residual:.1e} "
                     f"({'ok' if res_ok else 'FAIL'}), traces {'ok' if tr_ok else 'FAIL'}, "
                     f"gaussian integers {gaussian_integer_evidence(r)['all_gaussian_integers']}")
    pairs = [[i, j] for i in range(len(reps)) for j in range(i + 1, len(reps))
             if same_rep_up_to_conjugacy(conjugate_rep(reps[i]), reps[j], tol)]
    lines.append(f"conjugate pairs: {pairs}")
    lines.append("PASS" if passed else "FAIL")
    _emit(args, {"command": "verify", "representations": report, "conjugate_pairs": pairs,
                 "passed": passed}, "\n".join(lines))
    return EXIT_OK if passed else EXIT_VERIFY


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linkquandle",
                                     description="Link presentations, quandle colorings and parabolic representations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, diagram=True):
        if diagram:
            src = p.add_mutually_exclusive_group(required=True)
            src.add_argument("--builtin", help=f"one of {', '.join(BUILTIN_NAMES)}")
            src.add_argument("--pd", help="PD code file, or '-' for stdin")
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--out", help="write output to this file")

    p = sub.add_parser("present", help="Wirtinger and fundamental quandle presentations")
    common(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("color", help="colorings by a finite quandle")
    common(p)
    p.add_argument("--quandle", required=True,
                   help="trivial:n | dihedral:n | eisermann:m,n | conj:<groupfile>:k")
    p.add_argument("--tricolor", action="store_true", help="also report tricolorability")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("parabolic", help="parabolic colorings and representations")
    common(p)
    p.add_argument("--raw", action="store_true", help="list raw solutions with sign branches")
    p.add_argument("--tolerance", type=float, help="accepted relative residual (default 1e-12)")
    p.add_argument("--max-branches", type=int, default=4096)
    p.add_argument("--seed", type=int, default=0, help="seed for multistart Newton")
    p.add_argument("--all-gauges", action="store_true", help="pin every ordered generator pair")
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("verify", help="check a representation file")
    common(p, diagram=False)
    p.add_argument("repfile")
    p.add_argument("--tolerance", type=float, help="relator residual tolerance (default 1e-9)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tolerance", None) is not None and args.tolerance <= 0:
        print("error: tolerance must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, DiagramInputError, SubsetNotClosed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SolverError, SearchSpaceTooLarge) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
