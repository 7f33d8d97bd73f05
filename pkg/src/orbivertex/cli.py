"""Command line front end.  Every command prints one JSON document."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .characters import char_table, column_orthogonality, dim_wreath, group_order, row_orthogonality
from .io import SCHEMA, coeff_to_json, dumps, frac_str, multipartition_json, partition_json
from .partitions import diagram_to_quotient, multipartitions_of, partition, partitions_upto, quotient_to_diagram
from .weights import EquivWeights

DEFAULTS = {"n": 2, "s": "1", "window": "-4,4", "u_order": 3, "x_order": 1, "dv": 4, "max_size": None,
            "threads": 1}


class InputError(ValueError):
    pass


def parse_window(text) -> tuple:
    """"4" means [-4, 4]; "lo,hi" or "[lo, hi]" give both ends."""
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = [p for p in str(text).strip().strip("[]").split(",") if p.strip()]
    try:
        parts = [Fraction(p) for p in parts]
    except (ValueError, TypeError) as e:
        raise InputError(f"bad window {text!r}") from e
    if len(parts) == 1:
        return -parts[0], parts[0]
    if len(parts) != 2:
        raise InputError(f"bad window {text!r}")
    lo, hi = parts
    if lo > hi:
        raise InputError(f"empty window {text!r}")
    return lo, hi


def _json_arg(text, what):
    if text is None:
        return {}
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"malformed JSON for {what}: {e}") from e
    if what == "--legs" and not isinstance(doc, dict):
        raise InputError("--legs must be a JSON object keyed by leg name")
    return doc


def _mp(value, n, what):
    if value is None:
        return ((),) * n
    if len(value) != n:
        raise InputError(f"{what} needs {n} components")
    return tuple(partition(c) for c in value)


def _weights(args) -> EquivWeights:
    return EquivWeights(Fraction(args.s), args.n)


# -- commands -------------------------------------------------------------------------

def cmd_quotient(args):
    if args.diagram is not None:
        shape = partition(_json_arg(args.diagram, "--diagram"))
        core, quot = diagram_to_quotient(shape, args.n)
        return {"n": args.n, "diagram": partition_json(shape), "core": partition_json(core),
                "quotient": multipartition_json(quot)}
    if args.quotient is None:
        raise InputError("give --diagram or --quotient")
    mu = _mp(_json_arg(args.quotient, "--quotient"), args.n, "--quotient")
    core = partition(_json_arg(args.core, "--core") or [])
    shape = quotient_to_diagram(mu, core)
    return {"n": args.n, "diagram": partition_json(shape), "core": partition_json(core),
            "quotient": multipartition_json(mu)}


def cmd_char_table(args):
    m = args.max_size if args.max_size is not None else 2
    table = char_table(args.n, m)
    classes = multipartitions_of(m, args.n)
    return {"n": args.n, "size": m, "classes": [multipartition_json(c) for c in classes],
            "table": [[coeff_to_json(table[a, b]) for b in classes] for a in classes],
            "dimensions": [dim_wreath(c) for c in classes]}


def _window_terms(s, lo, hi):
    doc = s.to_json()
    idx = [g.name for g in s.gradings].index("q") if any(g.name == "q" for g in s.gradings) else None
    if idx is not None:
        keep = [t for t, m in zip(doc["terms"], [m for m, _ in s.items()]) if lo <= s.degrees(m)[idx] <= hi]
        doc["terms"] = keep
    return doc


def cmd_vertex_dt(args):
    from .dt_vertex import VertexLegs, framed_vertex, vertex_P
    legs_doc = _json_arg(args.legs, "--legs")
    legs = VertexLegs(partition(legs_doc.get("rho_plus", [])), partition(legs_doc.get("rho_minus", [])),
                      _mp(legs_doc.get("lambda"), args.n, "lambda"))
    lo, hi = parse_window(args.window)
    if args.framed:
        fv = framed_vertex(legs, _weights(args), hi)
        out = fv.to_json()
        out["series"] = _window_terms(fv.series, lo, hi)
        return out
    P = vertex_P(legs, hi)
    return {"legs": legs.to_json(), "framed": False, "series": _window_terms(P, lo, hi)}


def _gw_legs(args):
    d = _json_arg(args.legs, "--legs")
    return partition(d.get("tau_plus", [])), partition(d.get("tau_minus", [])), _mp(d.get("mu"), args.n, "mu")


def cmd_vertex_gw(args):
    from .gw_side import connected_family, predicted_framed_gw, strip_disks
    w = _weights(args)
    tp, tm, mu = _gw_legs(args)
    v = predicted_framed_gw(tp, tm, mu, w, args.u_order, args.x_order)
    out = {"legs": {"tau_plus": list(tp), "tau_minus": list(tm), "mu": multipartition_json(mu)},
           "framed": v.series.to_json(), "unframed": v.unframe().series.to_json()}
    if args.connected or args.strip:
        size = max(sum(tp), sum(tm), sum(sum(c) for c in mu))
        conn = connected_family(w, size, args.u_order, args.x_order)[(tp, tm, mu)]
        out["connected"] = conn.to_json()
        if args.strip:
            table = strip_disks(conn, (tp, tm, mu), w)
            out["correlators"] = [{"g": frac_str(g), "gamma": {v: e for v, e in gamma}, "value": coeff_to_json(c)}
                                  for (g, gamma), c in sorted(table.items())]
    return out


def cmd_glue(args):
    from .dt_vertex import glue_PY
    d = _json_arg(args.legs, "--legs")
    lo, hi = parse_window(args.window)
    s = glue_PY(partition(d.get("rho_plus", [])), partition(d.get("rho_minus", [])),
                _mp(d.get("lambda"), args.n, "lambda"), _weights(args), hi, args.dv)
    return {"dv": args.dv, "series": _window_terms(s, lo, hi)}


def cmd_oracle(args):
    from .box_oracle import match_legs
    d = _json_arg(args.legs, "--legs")
    legs = (partition(d.get("rho_plus", [])), partition(d.get("rho_minus", [])), partition(d.get("diagram", [])))
    rep = match_legs(args.n, legs, args.max_size if args.max_size is not None else 6)
    return _oracle_json(legs, rep)


def _oracle_json(legs, rep):
    return {"legs": [partition_json(x) for x in legs], "matched": rep["matched"],
            "offset": {v: frac_str(e) for v, e in rep["offset"]}, "max_boxes": rep["max_boxes"]}


def cmd_subst(args):
    from .correspondence import SubstitutionMap
    from .dt_vertex import VertexLegs
    from .rational import rf_framed_vertex
    d = _json_arg(args.legs, "--legs")
    legs = VertexLegs(partition(d.get("rho_plus", [])), partition(d.get("rho_minus", [])),
                      _mp(d.get("lambda"), args.n, "lambda"))
    sm = SubstitutionMap(args.kind, args.n, _weights(args), args.u_order, args.x_order)
    s = sm.apply(rf_framed_vertex(legs, _weights(args)))
    return {"kind": args.kind, "legs": legs.to_json(), "series": s.to_json()}


def cmd_crc_map(args):
    from .correspondence import crc_parameter_map
    geo = _json_arg(args.geometry, "--geometry") or [[args.n, 0]]
    out = crc_parameter_map([tuple(g) for g in geo])
    return {"geometry": geo, "map": {k: {v: coeff_to_json(c) for v, c in sorted(f.items())}
                                     for k, f in sorted(out.items())}}


# -- verification suites ----------------------------------------------------------------

def _report(name, results, started):
    """results: list of (instance_json, ok, detail)."""
    bad = [(i, d) for i, ok, d in results if not ok]
    return {"suite": name, "instances": len(results), "passed": len(results) - len(bad), "failed": len(bad),
            "first_counterexample": None if not bad else {"instance": bad[0][0], "detail": bad[0][1]},
            "seconds": round(time.time() - started, 2)}


def _pmap(fn, items, threads):
    if threads and threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def verify_lemma1(n, max_size):
    from .correspondence import lemma1_monomial
    t = time.time()
    res = []
    for m in range(max_size // n + 1):
        for lam in multipartitions_of(m, n):
            mono = lemma1_monomial(lam)
            res.append((multipartition_json(lam), mono == (), {v: frac_str(e) for v, e in mono}))
    return _report("lemma1", res, t)


def verify_lemma2(n, max_size):
    from .correspondence import lemma2_check
    t = time.time()
    res = []
    for k in range(1, n + 1):
        for m in range(max_size + 1):
            classes = multipartitions_of(m, k)
            for lam in classes:
                for mu in classes:
                    res.append(({"lambda": multipartition_json(lam), "mu": multipartition_json(mu)},
                                lemma2_check(lam, mu), None))
    for k in range(1, n + 1):
        for m in range(max_size + 1):
            ok = (row_orthogonality(k, m) and column_orthogonality(k, m)
                  and sum(dim_wreath(c) ** 2 for c in multipartitions_of(m, k)) == group_order(k, m))
            res.append(({"n": k, "size": m, "check": "orthogonality"}, ok, None))
    return _report("lemma2", res, t)


def _dtcrc_one(job):
    from .correspondence import dtcrc_check
    rp, rm, lam, s, n, window, dv, expansion = job
    rep = dtcrc_check(rp, rm, lam, EquivWeights(s, n), window, dv, expansion)
    doc = rep.to_json()
    return doc["legs"], rep.passed, doc


def dtcrc_jobs(n, s, max_size, window, dv, expansion="series"):
    lams = [l for k in range(max_size + 1) for l in multipartitions_of(k, n)]
    return [(rp, rm, lam, s, n, window, dv, expansion) for rp in partitions_upto(max_size)
            for rm in partitions_upto(max_size) for lam in lams]


def verify_dtcrc(n, s, max_size, window, dv, threads=1, expansion="series"):
    t = time.time()
    rep = _report("dtcrc", _pmap(_dtcrc_one, dtcrc_jobs(n, s, max_size, window, dv, expansion), threads), t)
    rep["expansion"] = expansion
    return rep


def verify_reality(n, s, max_size, u_order, x_order):
    from .gw_side import coefficients_rational, connected_from_disconnected, predicted_family, u_support_ok
    t = time.time()
    fam = predicted_family(EquivWeights(s, n), max_size, u_order, x_order)
    conn = connected_from_disconnected(fam)
    res = []
    for triple, series in conn.items():
        tp, tm, mu = triple
        l = len(tp) + len(tm) + sum(len(c) for c in mu)
        if not l:
            continue
        doc = {"tau_plus": list(tp), "tau_minus": list(tm), "mu": multipartition_json(mu)}
        rational = coefficients_rational(fam[triple])
        support = u_support_ok(series, l)
        res.append((doc, rational and support, {"rational": rational, "u_support": support}))
    return _report("reality", res, t)


def oracle_cases(n):
    if n == 1:
        return [((1,), (), ()), ((), (1,), ()), ((), (), (1,)), ((1,), (1,), ())]
    cases = [((), (), quotient_to_diagram(lam)) for m in (1, 2) for lam in multipartitions_of(m, n)]
    return cases + [((1,), (), ())]


def _oracle_one(job):
    from .box_oracle import match_legs
    n, legs, D = job
    rep = match_legs(n, legs, D)
    doc = _oracle_json(legs, rep)
    return doc, rep["matched"], doc


def verify_oracle(n, max_size, threads=1):
    t = time.time()
    jobs = [(n, legs, max_size) for legs in oracle_cases(n)]
    return _report("oracle-match", _pmap(_oracle_one, jobs, threads), t)


def cmd_verify(args):
    s = Fraction(args.s)
    window = parse_window(args.window)
    suites = ["lemma1", "lemma2", "dtcrc", "reality", "oracle-match"] if args.suite == "all" else [args.suite]
    reports = []
    for name in suites:
        if name == "lemma1":
            reports.append(verify_lemma1(args.n, args.max_size if args.max_size is not None else 12))
        elif name == "lemma2":
            reports.append(verify_lemma2(args.n, args.max_size if args.max_size is not None else 4))
        elif name == "dtcrc":
            reports.append(verify_dtcrc(args.n, s, args.max_size if args.max_size is not None else 2,
                                        window, args.dv, args.threads, args.expansion))
        elif name == "reality":
            reports.append(verify_reality(args.n, s, args.max_size if args.max_size is not None else 2,
                                          args.u_order, args.x_order))
        else:
            reports.append(verify_oracle(args.n, args.max_size if args.max_size is not None else 6, args.threads))
    if len(reports) == 1:
        return reports[0]
    return {"suite": "all", "instances": sum(r["instances"] for r in reports),
            "passed": sum(r["passed"] for r in reports), "failed": sum(r["failed"] for r in reports),
            "first_counterexample": next((r["first_counterexample"] for r in reports if r["failed"]), None),
            "suites": reports}


COMMANDS = {"quotient": cmd_quotient, "char-table": cmd_char_table, "vertex-dt": cmd_vertex_dt,
            "vertex-gw": cmd_vertex_gw, "glue": cmd_glue, "oracle": cmd_oracle, "subst": cmd_subst,
            "crc-map": cmd_crc_map, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of flag values")
    common.add_argument("--n", type=int)
    common.add_argument("--s", help="w1/w3 as a rational")
    common.add_argument("--window", help='"D" for [-D, D] or "lo,hi"')
    common.add_argument("--u-order", type=int, dest="u_order")
    common.add_argument("--x-order", type=int, dest="x_order")
    common.add_argument("--dv", type=int)
    common.add_argument("--max-size", type=int, dest="max_size")
    common.add_argument("--legs", help="legs as JSON")
    common.add_argument("--out", help="write the JSON here instead of stdout")
    common.add_argument("--threads", type=int)
    p = argparse.ArgumentParser(prog="orbivertex", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    q = sub.add_parser("quotient", parents=[common])
    q.add_argument("--diagram")
    q.add_argument("--quotient")
    q.add_argument("--core")
    sub.add_parser("char-table", parents=[common])
    v = sub.add_parser("vertex-dt", parents=[common])
    v.add_argument("--framed", action="store_true")
    g = sub.add_parser("vertex-gw", parents=[common])
    g.add_argument("--connected", action="store_true")
    g.add_argument("--strip", action="store_true", help="add the correlator table keyed by (g, gamma)")
    sub.add_parser("glue", parents=[common])
    sub.add_parser("oracle", parents=[common])
    s = sub.add_parser("subst", parents=[common])
    s.add_argument("--kind", default="vertex-gwdt", choices=["vertex-gwdt", "global-gwdt"])
    c = sub.add_parser("crc-map", parents=[common])
    c.add_argument("--geometry", help="JSON list of [n_i, m_i]")
    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("suite", choices=["lemma1", "lemma2", "dtcrc", "reality", "oracle-match", "all"])
    ver.add_argument("--expansion", default="series", choices=["series", "chain"],
                     help="dtcrc: expand the orbifold side as a q-series or in the chain's domain")
    return p


def _apply_defaults(args):
    if args.config:
        try:
            with open(args.config) as fh:
                conf = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"cannot read config: {e}") from e
        for k, v in conf.items():
            k = k.replace("-", "_")
            if getattr(args, k, None) is None:
                setattr(args, k, v)
    for k, v in DEFAULTS.items():
        if getattr(args, k, None) is None:
            setattr(args, k, v)
    if args.n < 1:
        raise InputError("--n must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_defaults(args)
        doc = COMMANDS[args.command](args)
    except (InputError, ValueError, KeyError, TypeError, AttributeError) as e:
        print(dumps({"schema": SCHEMA, "error": f"{type(e).__name__}: {e}"}), file=sys.stderr)
        return 2
    doc = {"schema": SCHEMA, "command": args.command, **doc}
    text = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.command == "verify":
        return 0 if doc["failed"] == 0 else 1
    if args.command == "oracle":
        return 0 if doc["matched"] else 1
    return 0
