"""Command-line interface.

Exit codes: 0 for any computed verdict, 2 for invalid input, 3 when a
computed object contradicts a structural theorem.
"""

import argparse
import json
import sys
from math import lcm

from . import angles as ang
from . import atlas
from . import cluster as clu
from . import landing as land
from . import mating as mat
from . import parameter as par
from .cache import TableCache
from .errors import InternalError, InvalidInputError

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _fmt(t):
    return None if t is None else ang.format_angle(t)


def _fmt_class(c):
    return None if c is None else [ang.format_angle(t) for t in c]


def parse_pair(text, degree=2):
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise InvalidInputError(f"expected a pair 'a/b,c/d', got {text!r}")
    return par.descriptor(ang.parse_angle(parts[0]), ang.parse_angle(parts[1]), degree)


# ---------------------------------------------------------------------------
# commands: each returns (record, text)
# ---------------------------------------------------------------------------


def cmd_angle(args):
    d = args.degree
    t = ang.parse_angle(args.angle)
    orb = ang.orbit(d, t)
    two = None
    if d == 2 and orb.period % 2 == 0:
        two = ang.two_rotation_number(t)
    rec = {
        "angle": _fmt(t),
        "degree": d,
        "period": orb.period,
        "orbit": [_fmt(x) for x in orb.iterates],
        "rotation_number": _fmt(ang.rotation_number(d, t)),
        "two_rotation_number": _fmt(two),
        "arc_index": ang.arc_index(d, t),
    }
    text = "\n".join(f"{k}: {v}" for k, v in rec.items())
    return rec, text


def _landing(p, N, cache):
    if cache is not None:
        return cache.landing_table(p, N)
    return land.landing_table(p, N)


def cmd_poly(args, cache=None):
    d = args.degree
    p = par.descriptor(ang.parse_angle(args.lower), ang.parse_angle(args.upper), d)
    N = args.bound or max(p.period, 1)
    tab = _landing(p, N, cache)
    alpha, beta = land.fixed_classes(p, tab)
    classes = [
        {
            "angles": _fmt_class(c),
            "period": land.class_period(c, d),
            "rotation_number": _fmt(land.class_rotation_number(c, d)),
        }
        for c in tab.nontrivial()
    ]
    rec = {
        "descriptor": str(p),
        "degree": d,
        "period": p.period,
        "bound": N,
        "class_count": len(tab.classes),
        "alpha": _fmt_class(alpha),
        "beta": [_fmt_class(c) for c in beta],
        "nontrivial_classes": classes,
    }
    lines = [
        f"polynomial {p} (degree {d}, period {p.period}), angles of period dividing {N}",
        f"classes: {len(tab.classes)} ({len(classes)} with two or more rays)",
        f"alpha: {rec['alpha']}",
        f"beta: {rec['beta']}",
    ]
    for c in classes:
        lines.append(f"  {c['angles']}  period {c['period']}  rotation {c['rotation_number']}")
    return rec, "\n".join(lines)


def _cluster_record(c):
    return None if c is None else c.to_record()


def cmd_mate(args, cache=None):
    d = args.degree
    f1, f2 = parse_pair(args.pair1, d), parse_pair(args.pair2, d)
    N = args.bound or lcm(max(f1.period, 1), max(f2.period, 1))
    if cache is not None:
        for f in (f1, f2):
            if not land._is_centre(f):
                cache.landing_table(f, N if N <= mat.DEFAULT_MAX_LAYER else max(f.period, 1))
    rep = mat.obstruction_report(f1, f2, N)
    g = rep.graph
    if args.dot:
        comp = rep.loop_witness
        if comp is None and rep.cluster is not None:
            comp = g.component_of_class(*rep.cluster.central)
        with open(args.dot, "w") as fh:
            fh.write(g.to_dot(comp))
    rec = {
        "first": str(f1),
        "second": str(f2),
        "bound": N,
        "layers": list(g.layers),
        "obstructed": rep.obstructed,
        "loop_witness": None if rep.loop_witness is None else sorted(rep.loop_witness.node_ids()),
        "conjugate_limbs": rep.conjugate_limb_verdict,
        "alpha_merge": rep.alpha_merge_verdict,
        "cluster": _cluster_record(rep.cluster),
    }
    lines = [
        f"{f1} ⊥⊥ {f2}",
        f"obstructed: {rep.obstructed}",
        f"conjugate limbs: {rep.conjugate_limb_verdict}",
        f"alpha classes merge: {rep.alpha_merge_verdict}",
    ]
    if rep.loop_witness is not None:
        lines.append(f"loop witness: {' '.join(sorted(rep.loop_witness.node_ids()))}")
    c = rep.cluster
    if c is None:
        lines.append("cluster: none")
    else:
        star = " ".join(f"P{p}:{k}" for p, k in c.star)
        lines.append(f"cluster: period {c.period}, rho {_fmt(c.rho)}, delta {c.delta}")
        lines.append(f"star: {star}")
    return rec, "\n".join(lines)


def _records(recs):
    return [r.to_record() for r in recs]


def cmd_enumerate(args):
    rho = ang.parse_rotation(args.rho)
    if rho == 0 or rho.denominator < 2:
        raise InvalidInputError("rotation number must be p/q with 0 < p < q")
    q = rho.denominator
    deltas = [args.delta] if args.delta is not None else [
        k for k in range(1, 2 * q, 2) if clu.admissible(args.period, q, k)
    ]
    out = []
    for delta in deltas:
        if not clu.admissible(args.period, q, delta):
            raise InvalidInputError(f"delta {delta} is not admissible for period {args.period}, q = {q}")
        if args.period == 1:
            recs = atlas.realizations_fixed(args.degree, rho, delta)
        else:
            if args.degree != 2:
                raise InvalidInputError("period-2 enumeration is quadratic only")
            recs = atlas.realizations_period2(rho, delta, exhaustive=args.exhaustive)
        out.append({"delta": delta, "count": len(recs), "records": _records(recs)})
    rec = {"period": args.period, "rho": _fmt(rho), "degree": args.degree, "results": out}
    lines = []
    for item in out:
        lines.append(f"delta {item['delta']}: {item['count']} realizations")
        for r in item["records"]:
            lines.append(f"  {r['first']} ⊥⊥ {r['second']}")
    return rec, "\n".join(lines)


def cmd_table(args):
    rho = ang.parse_rotation(args.rho)
    if rho == 0 or rho.denominator < 2:
        raise InvalidInputError("rotation number must be p/q with 0 < p < q")
    table = atlas.shared_mating_table(rho, exhaustive=args.exhaustive)
    names = atlas.name_map(rho)
    rec = {
        "rho": _fmt(rho),
        "names": {nm: str(desc) for desc, nm in sorted(names.items(), key=lambda kv: kv[1])},
        "groups": [
            {
                "delta": delta,
                "multiplicity": len(recs),
                "matings": [[names.get(r.first, str(r.first)), names.get(r.second, str(r.second))] for r in recs],
            }
            for delta, recs in table.items()
        ],
    }
    return rec, atlas.format_table(rho, table).rstrip("\n")


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="raymate", description="Combinatorics of polynomial matings.")
    ap.add_argument("--json", action="store_true", help="print a JSON record")
    ap.add_argument("--no-cache", action="store_true", help="do not read or write the table cache")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("angle", help="orbit data of an angle")
    a.add_argument("angle")
    a.add_argument("--degree", type=int, default=2)

    p = sub.add_parser("poly", help="landing table of a polynomial")
    p.add_argument("lower")
    p.add_argument("upper")
    p.add_argument("--bound", type=int)
    p.add_argument("--degree", type=int, default=2)

    m = sub.add_parser("mate", help="obstruction and cluster data of a mating")
    m.add_argument("pair1")
    m.add_argument("pair2")
    m.add_argument("--bound", type=int)
    m.add_argument("--degree", type=int, default=2)
    m.add_argument("--dot", metavar="FILE")

    e = sub.add_parser("enumerate", help="realizations of combinatorial data")
    e.add_argument("--period", type=int, choices=(1, 2), required=True)
    e.add_argument("--rho", required=True)
    e.add_argument("--delta", type=int)
    e.add_argument("--degree", type=int, default=2)
    e.add_argument("--exhaustive", action="store_true")

    t = sub.add_parser("table", help="shared-mating table")
    t.add_argument("--rho", required=True)
    t.add_argument("--exhaustive", action="store_true")
    return ap


def dumps(rec):
    return json.dumps(rec, indent=2, sort_keys=True, ensure_ascii=False)


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "degree", 2) < 2:
            raise InvalidInputError("degree must be at least 2")
        cache = None if args.no_cache else TableCache()
        if args.command == "angle":
            rec, text = cmd_angle(args)
        elif args.command == "poly":
            rec, text = cmd_poly(args, cache)
        elif args.command == "mate":
            rec, text = cmd_mate(args, cache)
        elif args.command == "enumerate":
            rec, text = cmd_enumerate(args)
        else:
            rec, text = cmd_table(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_INTERNAL
    print(dumps(rec) if args.json else text, file=out)
    return EXIT_OK


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
    sys.exit(code)
