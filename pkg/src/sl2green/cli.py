"""Command line interface.

Subcommands: correspond | ind | res | lift | tables | verify.  Results are
wrapped in a deterministic JSON envelope (sorted keys, no timestamps):

    {"schema_version": "1", "p": <prime>, "command": <name>, "result": {...}}

Label grammar: ``U:a,b`` (Borel indecomposable), ``M:i,l,s,eps`` (walk),
``V:t`` (simple), ``P:t`` (projective cover).  Walk inputs are canonicalized
with a notice in the result when the given quadruple was not canonical.

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 internal
inconsistency, 4 inconsistent user data.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import borel, gtree, indres, verify
from .correspondence import green_of_u, green_of_walk
from .labels import (
    BDecomposition,
    GSimpleLabel,
    InconsistentDataError,
    InternalConsistencyError,
    PrimeContext,
    ULabel,
    WalkLabel,
    canonicalize,
    enumerate_nonprojective_ulabels,
    proj_g_dim,
    u_is_projective,
    validate_ulabel,
)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_BAD_DATA = 4


class UsageError(ValueError):
    pass


def parse_label(ctx, text):
    """Parse U:a,b | M:i,l,s,eps | V:t | P:t into a label object."""
    try:
        kind, _, rest = text.partition(":")
        parts = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise UsageError(f"cannot parse label {text!r}")
    if kind == "U" and len(parts) == 2:
        return validate_ulabel(ctx, *parts)
    if kind == "M" and len(parts) == 4:
        i, l, s, eps = parts
        from .labels import _check_walk_ranges

        _check_walk_ranges(ctx, i, l, s, eps)
        return WalkLabel(i, l, s, eps)
    if kind == "V" and len(parts) == 1:
        t = parts[0]
        if not (1 <= t <= ctx.p):
            raise UsageError(f"t must lie in [1, {ctx.p}], got {t}")
        return GSimpleLabel(t)
    if kind == "P" and len(parts) == 1:
        t = parts[0]
        if not (1 <= t <= ctx.p):
            raise UsageError(f"t must lie in [1, {ctx.p}], got {t}")
        return ("P", t)
    raise UsageError(
        f"cannot parse label {text!r}; expected U:a,b | M:i,l,s,eps | V:t | P:t"
    )


def _frac(x):
    return str(x) if isinstance(x, Fraction) else x


def label_json(label):
    if isinstance(label, ULabel):
        return {"kind": "U", "params": {"a": label.a, "b": label.b}}
    if isinstance(label, WalkLabel):
        return {
            "kind": "walk",
            "params": {"i": label.i, "l": label.l, "s": label.s, "eps": label.eps},
        }
    if isinstance(label, GSimpleLabel):
        return {"kind": "V", "params": {"t": label.t}}
    raise TypeError(f"unexpected label {label!r}")


def bdec_json(dec):
    return [
        {**label_json(lab), "mult": n} for lab, n in dec.items()
    ]


def gdec_json(dec):
    out = [{**label_json(w), "mult": n} for w, n in dec.walk_items()]
    out += [{"kind": "projG", "params": {"t": t}, "mult": n} for t, n in dec.proj_items()]
    return out


def _walk_payload(ctx, w):
    left, right = gtree.g_boundaries(ctx, w)
    return {
        "label": label_json(w),
        "dim": gtree.walk_dim(ctx, w),
        "dim_mod_p": gtree.L(ctx, w.i, w.l, w.s),
        "block": w.i,
        "factors": {str(t): m for t, m in sorted(gtree.walk_factors(ctx, w).items())},
        "boundaries": [label_json(left), label_json(right)],
    }


def _ulabel_payload(ctx, u):
    payload = {
        "label": label_json(u),
        "dim": u.b,
        "block": u.block,
        "projective": u_is_projective(ctx, u),
        "factors": {
            str(c): borel.theta(ctx, u.a, u.b, c)
            for c in range(ctx.p - 1)
            if borel.theta(ctx, u.a, u.b, c)
        },
    }
    if not u_is_projective(ctx, u):
        bb = borel.b_boundaries(ctx, u)
        payload["boundaries"] = [
            {**label_json(bb.rim), "distance": bb.rim_distance},
            {**label_json(bb.simple), "distance": bb.simple_distance},
        ]
    return payload


def cmd_correspond(ctx, args):
    label = parse_label(ctx, args.label)
    result = {}
    if isinstance(label, ULabel):
        w = green_of_u(ctx, label)
        result = {
            "direction": "borel-to-sl2",
            "input": _ulabel_payload(ctx, label),
            "correspondent": _walk_payload(ctx, w),
        }
    elif isinstance(label, WalkLabel):
        canon = canonicalize(ctx, label)
        u = green_of_walk(ctx, canon)
        result = {
            "direction": "sl2-to-borel",
            "input": _walk_payload(ctx, canon),
            "correspondent": _ulabel_payload(ctx, u),
        }
        if canon != label:
            result["notice"] = f"input {label} canonicalized to {canon}"
    else:
        raise UsageError("correspond expects a U:a,b or M:i,l,s,eps label")
    return result


def cmd_ind(ctx, args):
    label = parse_label(ctx, args.label)
    if not isinstance(label, ULabel):
        raise UsageError("ind expects a U:a,b label")
    dec = indres.ind_u(ctx, label)
    return {
        "input": label_json(label),
        "decomposition": gdec_json(dec),
        "dim_input_induced": (ctx.p + 1) * label.b,
        "dim_decomposition": indres.g_decomposition_dim(ctx, dec),
    }


def cmd_res(ctx, args):
    label = parse_label(ctx, args.label)
    notice = None
    if isinstance(label, WalkLabel):
        canon = canonicalize(ctx, label)
        if canon != label:
            notice = f"input {label} canonicalized to {canon}"
        dec = indres.res_walk(ctx, canon)
        in_dim = gtree.walk_dim(ctx, canon)
        in_json = label_json(canon)
    elif isinstance(label, GSimpleLabel):
        dec = BDecomposition({indres.res_simple_g(ctx, label.t): 1})
        in_dim = label.t
        in_json = label_json(label)
    elif isinstance(label, tuple) and label[0] == "P":
        t = label[1]
        dec = indres.res_projective_g(ctx, t)
        in_dim = proj_g_dim(ctx, t)
        in_json = {"kind": "projG", "params": {"t": t}}
    else:
        raise UsageError("res expects M:i,l,s,eps, V:t, or P:t")
    result = {
        "input": in_json,
        "decomposition": bdec_json(dec),
        "dim_input_restricted": in_dim,
        "dim_decomposition": dec.total_dim(),
    }
    if notice:
        result["notice"] = notice
    return result


def _load_json_file(path, key):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}")
    if isinstance(data, dict) and key in data:
        return data[key]
    return data


def cmd_lift(ctx, args):
    ell_raw = _load_json_file(args.factors_file, "ell")
    res_raw = _load_json_file(args.res_file, "res")
    if not isinstance(ell_raw, dict):
        raise UsageError('factors file must hold {"ell": {"t": mult, ...}}')
    try:
        ell_vec = {int(t): int(n) for t, n in ell_raw.items()}
    except (TypeError, ValueError):
        raise UsageError("factor multiplicities must be integers keyed by t")
    if not isinstance(res_raw, list):
        raise UsageError('res file must hold {"res": [{"a":, "b":, "mult":}, ...]}')
    res_mults = {}
    try:
        for entry in res_raw:
            u = validate_ulabel(ctx, int(entry["a"]), int(entry["b"]))
            res_mults[u] = res_mults.get(u, 0) + int(entry["mult"])
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"bad res entry: {e}")
    dec = indres.lift_decomposition(ctx, ell_vec, res_mults)
    return {
        "decomposition": gdec_json(dec),
        "dim": indres.g_decomposition_dim(ctx, dec),
    }


def _tables_payload(ctx, which):
    if which == "cartan-B":
        blocks = []
        for i in (0, 1):
            bc = borel.b_cartan(ctx, i)
            blocks.append(
                {
                    "block": i,
                    "simples": [(i + 2 * j) % (ctx.p - 1) for j in range(ctx.half)],
                    "gamma": [list(row) for row in bc.gamma],
                    "delta": [[_frac(x) for x in row] for row in bc.delta],
                }
            )
        return {"blocks": blocks}
    if which == "cartan-G":
        blocks = []
        for i in (0, 1):
            gc = gtree.g_cartan(ctx, i)
            blocks.append(
                {
                    "block": i,
                    "simples": [gtree.edge_to_simple(ctx, i, j).t for j in range(1, ctx.half + 1)],
                    "cartan": [list(row) for row in gc.B],
                    "inverse": [[_frac(x) for x in row] for row in gc.Gamma],
                }
            )
        return {"blocks": blocks}
    if which == "quiver-B":
        blocks = []
        for i in (0, 1):
            vertices = sorted(
                u for u in enumerate_nonprojective_ulabels(ctx) if u.a % 2 == i
            )
            arrows = []
            for u in vertices:
                seq = borel.almost_split(ctx, u)
                for mid in seq.middle:
                    if not u_is_projective(ctx, mid):
                        arrows.append([label_json(u), label_json(mid)])
            orbits = []
            seen = set()
            for u in vertices:
                if u in seen:
                    continue
                orbit = [u]
                seen.add(u)
                v = borel.omega2(ctx, u)
                while v != u:
                    orbit.append(v)
                    seen.add(v)
                    v = borel.omega2(ctx, v)
                orbits.append([label_json(x) for x in orbit])
            blocks.append(
                {
                    "block": i,
                    "vertices": [label_json(u) for u in vertices],
                    "arrows": arrows,
                    "omega2_orbits": orbits,
                }
            )
        return {"blocks": blocks}
    if which == "hooks-G":
        blocks = []
        for i in (0, 1):
            hooks = []
            for h in gtree.g_hooks(ctx, i):
                entry = {**label_json(h.label), "dim": h.dim, "boundary": h.boundary}
                if h.distance is not None:
                    entry["distance"] = h.distance
                hooks.append(entry)
            blocks.append({"block": i, "hooks": hooks})
        return {"blocks": blocks}
    if which == "brauer-trees":
        blocks = []
        for i in (0, 1):
            tree = gtree.brauer_tree(ctx, i)
            blocks.append(
                {
                    "block": i,
                    "edges": list(tree.edges),
                    "exceptional_vertex": tree.exceptional,
                    "multiplicity": tree.multiplicity,
                }
            )
        return {"blocks": blocks}
    raise UsageError(f"unknown table selector {which!r}")


def cmd_tables(ctx, args):
    return _tables_payload(ctx, args.which)


def cmd_verify(args):
    primes = []
    for chunk in args.p.split(","):
        p = int(chunk)
        PrimeContext(p)  # validates "odd prime"
        primes.append(p)
    if args.oracle and not args.allow_large:
        too_big = [p for p in primes if p > 7]
        if too_big:
            raise UsageError(
                f"oracle verification is limited to p <= 7 (got {too_big}); pass --allow-large"
            )
    report = verify.run_suite(primes, with_oracle=args.oracle, jobs=args.jobs)
    return report


def _emit(envelope, args):
    text = json.dumps(envelope, sort_keys=True, indent=2, separators=(",", ": "))
    if getattr(args, "format", "json") == "text":
        text = _as_text(envelope)
    elif getattr(args, "format", "json") == "csv":
        text = _as_csv(envelope)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _flatten(prefix, obj, rows):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], rows)
    elif isinstance(obj, list):
        for idx, x in enumerate(obj):
            _flatten(f"{prefix}[{idx}]", x, rows)
    else:
        rows.append((prefix, obj))


def _as_csv(envelope):
    rows = []
    _flatten("", envelope, rows)
    return "\n".join(f"{k},{v}" for k, v in rows)


def _as_text(envelope):
    rows = []
    _flatten("", envelope, rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _add_common(sub):
    sub.add_argument("--p", required=True, help="odd prime (comma list for verify)")
    sub.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sub.add_argument("--output", metavar="FILE", help="write the envelope to FILE")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sl2green",
        description="Green correspondence toolkit for SL2 over a prime field",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("correspond", help="Green correspondent of a label")
    _add_common(sp)
    sp.add_argument("label", help="U:a,b or M:i,l,s,eps")

    sp = subs.add_parser("ind", help="decompose the induction of U_{a,b}")
    _add_common(sp)
    sp.add_argument("label", help="U:a,b")

    sp = subs.add_parser("res", help="decompose a restriction")
    _add_common(sp)
    sp.add_argument("label", help="M:i,l,s,eps, V:t, or P:t")

    sp = subs.add_parser("lift", help="lift a decomposition from factors + restriction")
    _add_common(sp)
    sp.add_argument("factors_file", help='JSON file with {"ell": {"t": mult}}')
    sp.add_argument("res_file", help='JSON file with {"res": [{"a","b","mult"}]}')

    sp = subs.add_parser("tables", help="dump structural tables")
    _add_common(sp)
    sp.add_argument(
        "which",
        choices=["cartan-B", "cartan-G", "quiver-B", "hooks-G", "brauer-trees"],
    )

    sp = subs.add_parser("verify", help="run the named invariant suite")
    _add_common(sp)
    sp.add_argument("--oracle", action="store_true", help="include matrix-oracle checks")
    sp.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sp.add_argument("--allow-large", action="store_true", help="lift the p <= 7 oracle bound")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            first_p = int(args.p.split(",")[0])
            report = cmd_verify(args)
            envelope = {
                "schema_version": SCHEMA_VERSION,
                "p": first_p,
                "command": "verify",
                "result": report,
            }
            _emit(envelope, args)
            return EXIT_OK if report["counts"]["fail"] == 0 else EXIT_VERIFY_FAIL
        p = int(args.p)
        ctx = PrimeContext(p)
        handler = {
            "correspond": lambda: cmd_correspond(ctx, args),
            "ind": lambda: cmd_ind(ctx, args),
            "res": lambda: cmd_res(ctx, args),
            "lift": lambda: cmd_lift(ctx, args),
            "tables": lambda: cmd_tables(ctx, args),
        }[args.command]
        result = handler()
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "p": p,
            "command": args.command,
            "result": result,
        }
        _emit(envelope, args)
        return EXIT_OK
    except InternalConsistencyError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except InconsistentDataError as e:
        print(f"inconsistent module data: {e}", file=sys.stderr)
        return EXIT_BAD_DATA
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
