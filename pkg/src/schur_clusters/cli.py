"""Command line front end.

Commands read quivers (and posets) from small text files and write
deterministic JSON, TSV or DOT to stdout.  Exit codes: 0 on success, 1 when
a well-formed request cannot be satisfied (domain errors such as a missing
height bound, non-Dynkin input to an exact-only command, probe exhaustion,
or a failed verification), 2 on unusable input (bad flags, malformed files
or inline JSON).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import product

from . import clusters as cl
from . import einv, fileio, output, posets, reps
from .errors import (
    LimitExceeded,
    ParseError,
    SchurClustersError,
    UnsupportedFormat,
)
from .quiver import (
    positive_real_roots,
    projective_dimension_vectors,
    tits_form,
)

# Variable sets beyond this need --allow-large (rank E6 and up).
_LARGE_VARS = 24


def _threads() -> int:
    """Effective worker count: the env var is an upper cap, the engine is
    serial, so this is min(cap, 1) clamped to at least 1."""
    raw = os.environ.get("SCHUR_CLUSTERS_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        cap = 1
    return max(1, min(cap, 1))


def _vec(text: str):
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _meta(args, **extra) -> dict:
    meta = {"command": args.command, "threads": _threads()}
    for key in ("seed", "bound", "probe_budget", "box", "method"):
        if hasattr(args, key):
            meta[key] = getattr(args, key)
    meta.update(extra)
    return meta


def _add_quiver(p):
    p.add_argument("--quiver", required=True, metavar="FILE", help="quiver text file")


def _add_bound(p):
    p.add_argument("--bound", type=int, default=None, help="height bound for roots")


def _add_seed(p):
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")


def _add_budget(p):
    p.add_argument(
        "--probe-budget",
        dest="probe_budget",
        type=int,
        default=8,
        help="sampling attempts per vector (default 8)",
    )


def _add_large(p):
    p.add_argument(
        "--allow-large",
        dest="allow_large",
        action="store_true",
        help="permit enumerations beyond the desk-scale guard",
    )


def _add_format(p, choices, default):
    p.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schur-clusters",
        description="Real Schur roots, clusters and support tilting posets "
        "of acyclic quivers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive real roots")
    _add_quiver(p)
    _add_bound(p)
    _add_format(p, ["json", "tsv"], "json")

    p = sub.add_parser("schur", help="real Schur roots")
    _add_quiver(p)
    _add_bound(p)
    _add_seed(p)
    _add_budget(p)
    _add_format(p, ["json", "tsv"], "json")

    p = sub.add_parser("einv", help="extension invariant of a vector pair")
    _add_quiver(p)
    p.add_argument("--x", type=_vec, required=True, help="comma-separated entries")
    p.add_argument("--y", type=_vec, required=True, help="comma-separated entries")
    p.add_argument("--stats", action="store_true", help="include memo statistics")
    _add_format(p, ["json"], "json")

    p = sub.add_parser("preclusters", help="enumerate preclusters")
    _add_quiver(p)
    _add_bound(p)
    _add_seed(p)
    _add_budget(p)
    _add_large(p)
    p.add_argument("--positive-only", dest="positive_only", action="store_true")
    _add_format(p, ["json", "tsv"], "json")

    p = sub.add_parser("clusters", help="enumerate clusters")
    _add_quiver(p)
    _add_bound(p)
    _add_seed(p)
    _add_budget(p)
    _add_large(p)
    _add_format(p, ["json", "tsv"], "json")

    p = sub.add_parser("poset", help="cluster poset with Hasse diagram")
    _add_quiver(p)
    _add_bound(p)
    _add_seed(p)
    _add_budget(p)
    _add_large(p)
    _add_format(p, ["json", "dot", "tsv"], "json")

    p = sub.add_parser("stilt", help="support tilting poset from realized modules")
    _add_quiver(p)
    _add_seed(p)
    _add_budget(p)
    _add_format(p, ["json", "dot"], "json")

    p = sub.add_parser("verify", help="cross-oracle self checks")
    _add_quiver(p)
    _add_bound(p)
    _add_seed(p)
    _add_budget(p)
    p.add_argument("--box", type=int, default=2, help="entry bound for form sweeps")
    _add_format(p, ["text", "json"], "text")

    p = sub.add_parser("torsion-count", help="monotone maps into the cluster poset")
    _add_quiver(p)
    p.add_argument("--poset", required=True, metavar="FILE", help="poset text file")
    p.add_argument("--method", choices=["auto", "dp", "backtrack"], default="auto")
    _add_format(p, ["text", "json"], "text")

    p = sub.add_parser("realize", help="attach verified modules to a precluster")
    _add_quiver(p)
    _add_seed(p)
    _add_budget(p)
    p.add_argument(
        "--vars",
        required=True,
        help='JSON list of cluster variables, e.g. '
        '\'[{"type":"root","dim":[1,1]},{"type":"neg_simple","vertex":2}]\'',
    )
    _add_format(p, ["json"], "json")

    return ap


def _gate_large(q, variables, allow_large):
    if len(variables) > _LARGE_VARS and not allow_large:
        raise LimitExceeded(
            f"{len(variables)} cluster variables exceed the desk-scale guard "
            f"({_LARGE_VARS}); pass --allow-large to proceed",
            variables=len(variables),
        )


def cmd_roots(args):
    q = fileio.parse_quiver_file(args.quiver)
    rs = positive_real_roots(q, args.bound)
    if args.format == "tsv":
        return output.emit_tsv(rs.roots), 0
    payload = {
        "meta": _meta(args),
        "complete": rs.complete,
        "height_bound": rs.height_bound,
        "roots": [list(r) for r in rs.roots],
    }
    return output.emit_json(payload), 0


def cmd_schur(args):
    q = fileio.parse_quiver_file(args.quiver)
    rs = einv.real_schur_roots(
        q, bound=args.bound, seed=args.seed, budget=args.probe_budget
    )
    if args.format == "tsv":
        return output.emit_tsv(rs.roots), 0
    payload = {
        "meta": _meta(args),
        "complete": rs.complete,
        "height_bound": rs.height_bound,
        "roots": [list(r) for r in rs.roots],
    }
    return output.emit_json(payload), 0


def cmd_einv(args):
    q = fileio.parse_quiver_file(args.quiver)
    x = q.check_dimvec(args.x)
    y = q.check_dimvec(args.y)
    value = einv.e_invariant(q, x, y)
    right, left = einv.e_invariant_alt(q, x, y)
    payload = {
        "meta": _meta(args),
        "x": list(x),
        "y": list(y),
        "e": value,
        "one_sided": [right, left],
    }
    if args.stats:
        payload["stats"] = einv.e_cache_stats(q)
    return output.emit_json(payload), 0


def cmd_preclusters(args):
    q = fileio.parse_quiver_file(args.quiver)
    variables = cl.cluster_variables(q, args.bound, args.seed, args.probe_budget)
    _gate_large(q, variables, args.allow_large)
    enum = cl.enumerate_preclusters(
        q,
        positive_only=args.positive_only,
        bound=args.bound,
        seed=args.seed,
        budget=args.probe_budget,
    )
    if args.format == "tsv":
        rows = [[cl.format_variable(v) for v in c] for c in enum.items]
        return output.emit_tsv(rows), 0
    payload = {
        "meta": _meta(args, positive_only=args.positive_only),
        "complete": enum.complete,
        "height_bound": enum.height_bound,
        "count": len(enum.items),
        "preclusters": [[output.variable_to_json(v) for v in c] for c in enum.items],
    }
    return output.emit_json(payload), 0


def cmd_clusters(args):
    q = fileio.parse_quiver_file(args.quiver)
    variables = cl.cluster_variables(q, args.bound, args.seed, args.probe_budget)
    _gate_large(q, variables, args.allow_large)
    enum = cl.enumerate_clusters(
        q, bound=args.bound, seed=args.seed, budget=args.probe_budget
    )
    if args.format == "tsv":
        rows = [[cl.format_variable(v) for v in c] for c in enum.items]
        return output.emit_tsv(rows), 0
    payload = {
        "meta": _meta(args),
        "complete": enum.complete,
        "height_bound": enum.height_bound,
        "count": len(enum.items),
        "clusters": [[output.variable_to_json(v) for v in c] for c in enum.items],
    }
    return output.emit_json(payload), 0


def _poset_payload(args, cp, elements_json, labels):
    if args.format == "dot":
        return output.emit_dot(labels, cp.hasse), 0
    if args.format == "tsv":
        return output.emit_tsv(cp.hasse), 0
    payload = {
        "meta": _meta(args),
        "complete": cp.complete,
        "height_bound": cp.height_bound,
        "elements": elements_json,
        "hasse": [list(e) for e in cp.hasse],
        "top": cp.top,
        "bottom": cp.bottom,
    }
    return output.emit_json(payload), 0


def cmd_poset(args):
    q = fileio.parse_quiver_file(args.quiver)
    variables = cl.cluster_variables(q, args.bound, args.seed, args.probe_budget)
    _gate_large(q, variables, args.allow_large)
    cp = cl.cluster_poset(q, bound=args.bound, seed=args.seed, budget=args.probe_budget)
    elements = [[output.variable_to_json(v) for v in c] for c in cp.elements]
    labels = [output.cluster_label(c) for c in cp.elements]
    return _poset_payload(args, cp, elements, labels)


def cmd_stilt(args):
    q = fileio.parse_quiver_file(args.quiver)
    sp = reps.stilt_poset(q, seed=args.seed, budget=args.probe_budget)
    elements = [
        [
            {"label": output.variable_to_json(v), "dims": list(rep.dims)}
            for v, rep in ml.items
        ]
        for ml in sp.elements
    ]
    labels = [output.cluster_label(ml.labels()) for ml in sp.elements]
    return _poset_payload(args, sp, elements, labels)


def cmd_torsion_count(args):
    q = fileio.parse_quiver_file(args.quiver)
    p = fileio.parse_poset_file(args.poset)
    count = posets.torsion_class_count(q, p, method=args.method)
    if args.format == "text":
        return f"{count}\n", 0
    return output.emit_json({"meta": _meta(args), "count": count}), 0


def cmd_realize(args):
    q = fileio.parse_quiver_file(args.quiver)
    try:
        raw = json.loads(args.vars)
    except json.JSONDecodeError as exc:
        raise ParseError(0, f"--vars is not valid JSON: {exc}")
    if not isinstance(raw, list):
        raise ParseError(0, "--vars must be a JSON list of cluster variables")
    svars = [output.variable_from_json(obj, q.n) for obj in raw]
    for v in svars:
        if all(a >= 0 for a in v):
            check = einv.is_real_schur_root(
                q, v, mode="auto", seed=args.seed, budget=args.probe_budget
            )
            if not check.ok:
                raise ValueError(
                    f"{v} is not a verified real Schur root ({check.reason})"
                )
    ml = reps.realize_cluster(q, svars, seed=args.seed, budget=args.probe_budget)
    payload = {
        "meta": _meta(args),
        "modules": [
            {
                "label": output.variable_to_json(v),
                **output.representation_to_json(rep),
            }
            for v, rep in ml.items
        ],
    }
    return output.emit_json(payload), 0


def _verification_checks(q, args):
    checks = []

    box = args.box
    sweep = list(product(range(box + 1), repeat=q.n))
    bad = None
    pairs = 0
    for x in sweep:
        for y in sweep:
            pairs += 1
            e = einv.e_invariant(q, x, y)
            right, left = einv.e_invariant_alt(q, x, y)
            if not (e == right == left):
                bad = (x, y, e, right, left)
                break
        if bad:
            break
    checks.append(
        (
            "e-invariant-formulas",
            bad is None,
            f"{pairs} pairs in box {box}" if bad is None else f"mismatch at {bad}",
        )
    )

    if q.is_dynkin:
        rs = positive_real_roots(q)
        maxent = max(max(r) for r in rs.roots)
        space = (maxent + 1) ** q.n
        if space <= 300000:
            grid = {
                x
                for x in product(range(maxent + 1), repeat=q.n)
                if any(x) and tits_form(q, x) == 1
            }
            ok = grid == set(rs.roots)
            detail = f"{len(rs.roots)} roots match the unit Tits locus"
        else:
            ok, detail = True, "skipped: grid too large"
    else:
        rs = positive_real_roots(q, args.bound)
        ok = all(tits_form(q, r) == 1 for r in rs.roots)
        detail = f"{len(rs.roots)} bounded roots all have Tits form 1"
    checks.append(("roots-closure", ok, detail))

    variables = cl.cluster_variables(q, args.bound, args.seed, args.probe_budget)
    if len(variables) <= 22:
        enum = cl.enumerate_clusters(q, args.bound, args.seed, args.probe_budget)
        naive = cl.enumerate_clusters_naive(q, args.bound, args.seed, args.probe_budget)
        ok = tuple(enum.items) == naive
        checks.append(
            ("cluster-count", ok, f"clique search and subset scan both give {len(naive)}")
        )
    else:
        enum = cl.enumerate_clusters(q, args.bound, args.seed, args.probe_budget)
        checks.append(
            ("cluster-count", True, f"{len(enum.items)} clusters (subset scan skipped)")
        )

    try:
        cp = cl.cluster_poset(q, args.bound, args.seed, args.probe_budget)
        ok, detail = True, f"axioms hold on {len(cp.elements)} clusters"
        if q.is_dynkin:
            if cp.top is None or cp.bottom is None:
                ok, detail = False, "missing top or bottom"
            else:
                top_pos = [v for v in cp.elements[cp.top] if any(a > 0 for a in v)]
                projs = sorted(projective_dimension_vectors(q), key=cl.var_key)
                if sorted(top_pos, key=cl.var_key) != projs:
                    ok, detail = False, "top cluster is not the projectives"
                elif any(any(a > 0 for a in v) for v in cp.elements[cp.bottom]):
                    ok, detail = False, "bottom cluster has a positive member"
                else:
                    detail += "; top = projectives, bottom = negatives"
    except SchurClustersError as exc:
        ok, detail = False, str(exc)
        cp = None
    checks.append(("cluster-poset", ok, detail))

    if q.is_dynkin and cp is not None:
        sp = reps.stilt_poset(q, seed=args.seed, budget=args.probe_budget)
        same, witness = reps.compare_posets(cp, sp)
        checks.append(
            (
                "stilt-match",
                same,
                "generation order matches the cluster order"
                if same
                else f"mismatch at {witness}",
            )
        )
        if len(variables) <= 22:
            enum_pc = cl.enumerate_preclusters(
                q, bound=args.bound, seed=args.seed, budget=args.probe_budget
            )
            failed = None
            for pc in enum_pc.items:
                try:
                    cl.complete_to_cluster(q, pc)
                except SchurClustersError:
                    failed = pc
                    break
            checks.append(
                (
                    "precluster-extension",
                    failed is None,
                    f"all {len(enum_pc.items)} preclusters extend to clusters"
                    if failed is None
                    else f"no completion for {failed}",
                )
            )
    return checks


def cmd_verify(args):
    q = fileio.parse_quiver_file(args.quiver)
    checks = _verification_checks(q, args)
    all_ok = all(ok for _, ok, _ in checks)
    code = 0 if all_ok else 1
    if args.format == "json":
        payload = {
            "meta": _meta(args),
            "ok": all_ok,
            "checks": [
                {"name": name, "ok": ok, "detail": detail}
                for name, ok, detail in checks
            ],
        }
        return output.emit_json(payload), code
    lines = [
        f"{'PASS' if ok else 'FAIL'} {name}: {detail}" for name, ok, detail in checks
    ]
    lines.append("ok" if all_ok else "FAILED")
    return "\n".join(lines) + "\n", code


_COMMANDS = {
    "roots": cmd_roots,
    "schur": cmd_schur,
    "einv": cmd_einv,
    "preclusters": cmd_preclusters,
    "clusters": cmd_clusters,
    "poset": cmd_poset,
    "stilt": cmd_stilt,
    "verify": cmd_verify,
    "torsion-count": cmd_torsion_count,
    "realize": cmd_realize,
}


def run_command(args) -> tuple[str, int]:
    return _COMMANDS[args.command](args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = run_command(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except UnsupportedFormat as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error[invalid-input]: {exc}", file=sys.stderr)
        return 2
    except SchurClustersError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
