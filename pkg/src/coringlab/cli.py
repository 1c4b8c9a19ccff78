"""Command line front end.

Four commands: ``demo`` runs the checks attached to one built-in instance,
``correspondence`` verifies the subalgebra/coideal roundtrips on the
cyclic-algebra family or on a user instance file, ``classify`` reproduces
the classification of simple cosemisimple Q(i)/Q-corings at a given rank,
and ``check`` validates a user instance file.

Reports are deterministic: identical inputs give byte-identical output
(keys sorted, no timestamps; ``--timings`` adds wall-clock fields and is
excluded from that guarantee).  ``--jobs N`` fans out across named
sub-instances only; assembly order is fixed.  Exit codes: 0 all checks
pass, 2 a mathematical check failed, 1 usage or schema error.
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .bimodules import cm_eq
from .comatrix import (
    EndoSubalgebra, NotASubalgebraOfEnd, SingularChangeOfBasis,
    check_comodule, comod_end,
)
from .corings import (
    CarrierTooLarge, NotACoideal, check_coideal, check_coring,
    grouplike_elements, is_coring_isomorphism, is_grouplike, quotient_coring,
)
from .duality import can_u, verify_jacobson_bourbaki
from .examples import (
    EXTENSION_NAMES, HypothesisViolated, OddRankForH, UnknownExtension,
    aomega_instance, classification_case, classification_conjugacy,
    classification_names, grouplike_quotient,
    quaternion_relations, quaternion_ustar, quotient_isomorphism,
    sweedler_instance, t2_instance, trig_instance,
)
from .fields import FieldError, field_preset
from .galois import (
    J_of, NoIsomorphismSupplied, NotIntermediate,
    galois_report, is_galois, quotient_comodule, verify_correspondence,
)
from .jsonio import SCHEMA, SchemaError, dumps, envelope, load_instance_file, qvec_str

DEMO_IDS = (
    "trig", "sweedler", "t2-counterexample", "aomega", "quaternion-ustar",
    "embed-Q", "embed-Qi-diag", "embed-Qi-twist", "embed-H",
)

MATH_ERRORS = (
    HypothesisViolated, OddRankForH, NotACoideal, NotASubalgebraOfEnd,
    SingularChangeOfBasis, NotIntermediate, NoIsomorphismSupplied,
    CarrierTooLarge, FieldError,
)

CLASS_COUNTS = {1: 2, 2: 4, 3: 3}


def _build_aomega(n, field, omega, alpha, beta):
    ground = field_preset(field) if field else None
    return aomega_instance(n, ground, omega, alpha, beta)


def _params_json(inst):
    g = inst.ground
    return {
        "n": inst.n,
        "field": g.label,
        "omega": qvec_str(g.to_qvec(inst.omega)),
        "alpha": qvec_str(g.to_qvec(inst.alpha)),
        "beta": qvec_str(g.to_qvec(inst.beta)),
    }


# ---------------------------------------------------------------------------
# demo


def _demo_trig():
    tr = trig_instance()
    car = tr.coring.carrier
    gr = grouplike_elements(tr.coring)
    T = comod_end(tr.space, car, tr.rho)
    checks = [
        ("model coring axioms", check_coring(tr.coring) == []),
        ("comatrix coring axioms", check_coring(tr.com.coring) == []),
        ("model matches comatrix coring", is_coring_isomorphism(tr.iso, tr.coring, tr.com.coring)),
        ("comodule axioms", check_comodule(tr.space, car, tr.rho, tr.coring) == []),
        ("no group-like elements", gr.points == [] and gr.complete),
        ("Galois comodule", is_galois(tr.space, car, tr.rho)),
        ("End(Sigma) is the quaternion algebra",
         T.dim == 4 and T == tr.B
         and quaternion_relations(tr.ibar, tr.jbar, tr.space.module.qdim)
         and T.as_finalgebra().is_division_certified()),
    ]
    return checks, {"grouplike_certificate": gr.certificate, "end_dim": T.dim}


def _demo_sweedler():
    sw = sweedler_instance()
    checks = [
        ("model coring axioms", check_coring(sw.coring) == []),
        ("comatrix coring axioms", check_coring(sw.com.coring) == []),
        ("model matches comatrix coring", is_coring_isomorphism(sw.iso, sw.coring, sw.com.coring)),
    ]
    return checks, {"extension": sw.A.label, "qdim": sw.coring.qdim}


def _demo_t2():
    rep = t2_instance().report
    checks = [
        ("canonical map surjective", rep.rank == rep.target_dim),
        ("canonical map not injective", rep.rank < rep.dom_dim),
        ("domain dimension 4, target 3", rep.dom_dim == 4 and rep.target_dim == 3),
        ("not Galois, as claimed", not rep.bijective),
    ]
    info = {
        "C_dim": rep.C.dim,
        "dom_dim": rep.dom_dim,
        "rank": rep.rank,
        "target_dim": rep.target_dim,
    }
    return checks, info


def _demo_aomega(args):
    inst = _build_aomega(args.n or 2, args.field, args.omega, args.alpha, args.beta)
    checks = [("comatrix coring axioms", check_coring(inst.com.coring) == [])]
    rows = []
    for name, C in inst.extensions:
        span = inst.fixture_coideal(name)
        jj = J_of(inst.com, C)
        checks.append(("fixture span equals J_of(%s)" % name, span == jj))
        rows.append({"name": name, "J_dim": span.dim, "C_dim": C.dim})
    quot, classes, swm, G = grouplike_quotient(inst)
    checks.append(("matrix-ring quotient classes group-like",
                   all(is_grouplike(quot.coring, g) for g in classes)))
    checks.append(("matrix-ring quotient is the Sweedler coring",
                   is_coring_isomorphism(G, quot.coring, swm)))
    return checks, {"params": _params_json(inst), "extensions": rows}


def _demo_quaternion_ustar():
    H, sp, cms, ustar = quaternion_ustar()
    rep = can_u(ustar, sp, cms)
    checks = [
        ("dual coring axioms", check_coring(ustar.coring) == []),
        ("canonical map bijective", rep.bijective),
        ("coefficients form a division ring",
         rep.C.as_finalgebra().is_division_certified()),
    ]
    info = {"U_dim": H.dim, "C_dim": rep.C.dim,
            "dom_dim": rep.dom_dim, "target_dim": rep.target_dim}
    return checks, info


def _demo_embed(name, args):
    case = classification_case(name, args.n or 2)
    from .galois import is_simple_cosemisimple
    scs, cert = is_simple_cosemisimple(case.space, case.com.coring.carrier, case.com.rho)
    checks = [
        ("model coring axioms", check_coring(case.model) == []),
        ("comatrix coring axioms", check_coring(case.com.coring) == []),
        ("isomorphism witness", is_coring_isomorphism(case.witness, case.model, case.com.coring)),
        ("simple cosemisimple", scs),
    ]
    info = {"D": case.dlabel, "model_qdim": case.model.qdim, "certificate": cert}
    return checks, info


def run_demo(args):
    name = args.instance
    if name == "trig":
        checks, info = _demo_trig()
    elif name == "sweedler":
        checks, info = _demo_sweedler()
    elif name == "t2-counterexample":
        checks, info = _demo_t2()
    elif name == "aomega":
        checks, info = _demo_aomega(args)
    elif name == "quaternion-ustar":
        checks, info = _demo_quaternion_ustar()
    else:
        checks, info = _demo_embed(name, args)
    payload = dict(info)
    payload["instance"] = name
    payload["checks"] = [{"label": lab, "pass": ok} for lab, ok in checks]
    return payload, all(ok for _, ok in checks)


# ---------------------------------------------------------------------------
# correspondence


def _corr_worker(packed):
    n, field, omega, alpha, beta, name, timings = packed
    inst = _build_aomega(n, field, omega, alpha, beta)
    rep = verify_correspondence(inst.com, [(name, inst.subalgebra(name))])[0]
    row = rep.as_json()
    if timings:
        row["seconds"] = round(rep.seconds, 6)
    return row, rep.ok


def run_correspondence(args):
    if args.input:
        return _correspondence_from_file(args)
    if args.instance != "aomega":
        raise SchemaError("correspondence runs on 'aomega' or --input", "/instance")
    n = args.n or 2
    packed = [
        (n, args.field, args.omega, args.alpha, args.beta, name, args.timings)
        for name in EXTENSION_NAMES
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_corr_worker, packed))
    else:
        inst = _build_aomega(n, args.field, args.omega, args.alpha, args.beta)
        results = []
        for name, C in inst.extensions:
            rep = verify_correspondence(inst.com, [(name, C)])[0]
            row = rep.as_json()
            if args.timings:
                row["seconds"] = round(rep.seconds, 6)
            results.append((row, rep.ok))
    rows = [r for r, _ in results]
    ok = all(flag for _, flag in results)
    inst = _build_aomega(n, args.field, args.omega, args.alpha, args.beta)
    payload = {"params": _params_json(inst), "extensions": rows}
    if n == 2:
        jb_rows = []
        for rep in verify_jacobson_bourbaki(inst.space, inst.extensions):
            row = rep.as_json()
            if args.timings:
                row["seconds"] = round(rep.seconds, 6)
            jb_rows.append(row)
            ok = ok and rep.ok
        payload["jacobson_bourbaki"] = jb_rows
    return payload, ok


def _amatrix_from_vecs(inst, rows, pointer):
    absa = inst.A.abs_degree
    out = []
    for r, row in enumerate(rows):
        cells = []
        for c, vec in enumerate(row):
            if len(vec) != absa:
                raise SchemaError(
                    "field elements of %s need %d coefficients" % (inst.A.label, absa),
                    "%s/%d/%d" % (pointer, r, c),
                )
            cells.append(inst.A.from_qvec(vec))
        out.append(cells)
    return out


def _correspondence_from_file(args):
    doc = load_instance_file(args.input)
    if doc["instance"] != "aomega":
        raise SchemaError("only the 'aomega' family accepts user data", "/instance")
    p = doc["params"]
    inst = _build_aomega(p.get("n", 2), p.get("field"),
                         p.get("omega"), p.get("alpha"), p.get("beta"))
    qdim = inst.com.coring.qdim
    ok = True
    rows = []
    for idx, entry in enumerate(doc["subalgebras"]):
        pointer = "/subalgebras/%d/matrices" % idx
        mats = [
            _amatrix_from_vecs(inst, m, "%s/%d" % (pointer, j))
            for j, m in enumerate(entry["matrices"])
        ]
        for m in mats:
            if len(m) != inst.n:
                raise SchemaError("matrices must be %d x %d" % (inst.n, inst.n), pointer)
        try:
            C = EndoSubalgebra.from_generators(
                inst.space, [inst.space.endo_from_amatrix(m) for m in mats]
            )
        except NotASubalgebraOfEnd as e:
            rows.append({"name": entry["name"], "error":
                         {"type": "NotASubalgebraOfEnd", "message": str(e)}})
            ok = False
            continue
        rep = verify_correspondence(inst.com, [(entry["name"], C)])[0]
        row = rep.as_json()
        if args.timings:
            row["seconds"] = round(rep.seconds, 6)
        rows.append(row)
        ok = ok and rep.ok
    coideal_rows = []
    for idx, entry in enumerate(doc["coideals"]):
        gens = entry["generators"]
        for j, g in enumerate(gens):
            if len(g) != qdim:
                raise SchemaError(
                    "carrier vectors need %d coordinates" % qdim,
                    "/coideals/%d/generators/%d" % (idx, j),
                )
        try:
            quot = quotient_coring(inst.com.coring, gens)
        except NotACoideal as e:
            coideal_rows.append({
                "name": entry["name"],
                "error": {
                    "type": "NotACoideal",
                    "message": str(e),
                    "generator_index": e.generator_index,
                },
            })
            ok = False
            continue
        quotc, rho_bar = quotient_comodule(inst.com, quot.span, verify=False)
        rep = galois_report(inst.space, quotc.coring.carrier, rho_bar)
        J2 = J_of(inst.com, rep.T)
        coideal_rows.append({
            "name": entry["name"],
            "J_dim": quot.span.dim,
            "R_dim": rep.T.dim,
            "roundtrip_JR": J2 == quot.span,
            "galois_quotient": rep.verdict,
        })
    payload = {"params": _params_json(inst), "extensions": rows,
               "coideals": coideal_rows, "input": args.input}
    return payload, ok


# ---------------------------------------------------------------------------
# classify


def _classify_worker(packed):
    name, n, timings = packed
    from .galois import is_simple_cosemisimple
    t0 = time.perf_counter()
    case = classification_case(name, n)
    scs, _ = is_simple_cosemisimple(case.space, case.com.coring.carrier, case.com.rho)
    car = case.model.carrier
    row = {
        "name": name,
        "D": case.dlabel,
        "model_qdim": case.model.qdim,
        "axioms_ok": check_coring(case.model) == [] and check_coring(case.com.coring) == [],
        "witness_ok": is_coring_isomorphism(case.witness, case.model, case.com.coring),
        "simple_cosemisimple": scs,
        "central_bimodule": cm_eq(car.left, car.right),
    }
    if timings:
        row["seconds"] = round(time.perf_counter() - t0, 6)
    return row


def run_classify(args):
    if args.base_pair != "QiQ":
        raise SchemaError("only the Q(i)/Q base pair is built in", "/base-pair")
    n = args.n or 2
    if not 1 <= n <= 3:
        raise SchemaError("classification is built in for n <= 3", "/n")
    names = classification_names(n)
    packed = [(name, n, args.timings) for name in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_classify_worker, packed))
    else:
        rows = [_classify_worker(p) for p in packed]
    excluded = []
    if n % 2:
        try:
            classification_case("embed-H", n)
        except OddRankForH as e:
            excluded.append({"name": "embed-H", "reason": str(e)})
    conj = []
    conj_ok = True
    for pair, cert in classification_conjugacy(n):
        conj.append({"pair": pair, "verdict": cert.verdict,
                     "candidates": cert.candidates})
        conj_ok = conj_ok and cert.verdict == "not-conjugate"
    expected = CLASS_COUNTS[n]
    ok = (
        len(rows) == expected
        and all(r["axioms_ok"] and r["witness_ok"] and r["simple_cosemisimple"]
                for r in rows)
        and (n % 2 == 0 or excluded)
        and conj_ok
    )
    payload = {
        "base_pair": "Q(i)/Q",
        "n": n,
        "classes": len(rows),
        "expected_classes": expected,
        "cases": rows,
        "excluded": excluded,
        "conjugacy": conj,
    }
    return payload, bool(ok)


# ---------------------------------------------------------------------------
# check


def run_check(args):
    doc = load_instance_file(args.input)
    if doc["instance"] != "aomega":
        raise SchemaError("only the 'aomega' family accepts user data", "/instance")
    p = doc["params"]
    inst = _build_aomega(p.get("n", 2), p.get("field"),
                         p.get("omega"), p.get("alpha"), p.get("beta"))
    qdim = inst.com.coring.qdim
    ok = True
    sub_rows = []
    for idx, entry in enumerate(doc["subalgebras"]):
        pointer = "/subalgebras/%d/matrices" % idx
        mats = [
            _amatrix_from_vecs(inst, m, "%s/%d" % (pointer, j))
            for j, m in enumerate(entry["matrices"])
        ]
        try:
            C = EndoSubalgebra.from_generators(
                inst.space, [inst.space.endo_from_amatrix(m) for m in mats]
            )
            sub_rows.append({"name": entry["name"], "ok": True, "dim": C.dim,
                             "simple_artinian": C.is_simple_artinian()})
        except NotASubalgebraOfEnd as e:
            sub_rows.append({"name": entry["name"], "ok": False, "message": str(e)})
            ok = False
    coid_rows = []
    for idx, entry in enumerate(doc["coideals"]):
        gens = entry["generators"]
        for j, g in enumerate(gens):
            if len(g) != qdim:
                raise SchemaError(
                    "carrier vectors need %d coordinates" % qdim,
                    "/coideals/%d/generators/%d" % (idx, j),
                )
        rep = check_coideal(inst.com.coring, gens)
        row = {"name": entry["name"], "ok": rep.ok, "dim": rep.span.dim}
        if not rep.ok:
            fail = rep.first_failure()
            row["message"] = "generator %d: %s" % (fail["index"], fail["reason"])
            ok = False
        coid_rows.append(row)
    payload = {"params": _params_json(inst), "input": args.input,
               "subalgebras": sub_rows, "coideals": coid_rows}
    return payload, ok


# ---------------------------------------------------------------------------
# rendering


def _fmt(value):
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    return str(value)


def _render_text(doc):
    lines = ["coring-lab %s (schema %s)" % (doc["command"], doc["schema"])]
    if "error" in doc:
        err = doc["error"]
        extra = ""
        if err.get("generator_index") is not None and not err["message"].startswith("generator "):
            extra = " at generator %d" % err["generator_index"]
        lines.append("error: %s%s: %s" % (err["type"], extra, err["message"]))
    if "instance" in doc:
        lines.append("instance: %s" % doc["instance"])
    if "params" in doc:
        p = doc["params"]
        lines.append("params: n=%s field=%s omega=%s alpha=%s beta=%s" % (
            p["n"], p["field"], ",".join(p["omega"]),
            ",".join(p["alpha"]), ",".join(p["beta"])))
    for row in doc.get("checks", []):
        lines.append("  %-45s %s" % (row["label"], _fmt(row["pass"])))
    for key in ("extensions", "jacobson_bourbaki", "coideals",
                "cases", "excluded", "conjugacy", "subalgebras"):
        rows = doc.get(key)
        if not rows:
            continue
        lines.append("%s:" % key)
        for row in rows:
            if "error" in row:
                err = row["error"]
                extra = ""
                if err.get("generator_index") is not None and not err["message"].startswith("generator "):
                    extra = " generator %d" % err["generator_index"]
                lines.append("  %-16s ERROR %s%s: %s" % (
                    row.get("name", "?"), err["type"], extra, err["message"]))
                continue
            parts = []
            for k in sorted(row):
                if k in ("name", "pair", "instance"):
                    continue
                parts.append("%s=%s" % (k, _fmt(row[k])))
            label = row.get("name") or row.get("instance") or row.get("pair", "?")
            lines.append("  %-28s %s" % (label, "  ".join(parts)))
    for key in ("classes", "expected_classes", "grouplike_certificate",
                "end_dim", "C_dim", "dom_dim", "rank", "target_dim", "U_dim"):
        if key in doc:
            lines.append("%s: %s" % (key, doc[key]))
    lines.append("overall: %s" % _fmt(doc["ok"]))
    return "\n".join(lines) + "\n"


def _emit(doc, args):
    text = dumps(doc) if args.format == "json" else _render_text(doc)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(1)


def _add_common(sub):
    sub.add_argument("--format", choices=("json", "text"), default="text")
    sub.add_argument("--output", default=None, help="write the report to a file")
    sub.add_argument("--jobs", type=int, default=1,
                     help="parallel fan-out across named sub-instances")
    sub.add_argument("--timings", action="store_true",
                     help="add wall-clock fields (breaks byte determinism)")


def _add_family(sub):
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--field", choices=("Q", "Qi", "Qw3", "Qw4"), default=None)
    sub.add_argument("--omega", type=Fraction, default=None)
    sub.add_argument("--alpha", type=Fraction, default=None)
    sub.add_argument("--beta", type=Fraction, default=None)


def build_parser():
    parser = _Parser(prog="coring-lab",
                     description="exact verification of coring correspondences")
    subs = parser.add_subparsers(dest="command", required=True)
    demo = subs.add_parser("demo", parents=[], help="run one built-in instance")
    demo.add_argument("instance", choices=DEMO_IDS)
    _add_family(demo)
    _add_common(demo)
    corr = subs.add_parser("correspondence",
                           help="verify the intermediate-ring roundtrips")
    corr.add_argument("instance", nargs="?", default="aomega")
    corr.add_argument("--input", default=None, help="user instance JSON file")
    _add_family(corr)
    _add_common(corr)
    cls = subs.add_parser("classify",
                          help="classify simple cosemisimple corings")
    cls.add_argument("--base-pair", dest="base_pair", default="QiQ")
    cls.add_argument("--n", type=int, default=2)
    _add_common(cls)
    chk = subs.add_parser("check", help="validate a user instance file")
    chk.add_argument("--input", required=True)
    _add_common(chk)
    return parser


RUNNERS = {
    "demo": run_demo,
    "correspondence": run_correspondence,
    "classify": run_classify,
    "check": run_check,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "demo" and args.instance not in DEMO_IDS:
        sys.stderr.write("error: unknown instance id %r\n" % args.instance)
        return 1
    if args.command == "correspondence" and not args.input \
            and args.instance != "aomega":
        sys.stderr.write("error: unknown instance id %r\n" % args.instance)
        return 1
    t0 = time.perf_counter()
    try:
        payload, ok = RUNNERS[args.command](args)
    except SchemaError as e:
        sys.stderr.write("error: %s\n" % e)
        return 1
    except UnknownExtension as e:
        sys.stderr.write("error: unknown name %s\n" % e)
        return 1
    except MATH_ERRORS as e:
        err = {"type": type(e).__name__, "message": str(e)}
        if getattr(e, "generator_index", None) is not None:
            err["generator_index"] = e.generator_index
        doc = envelope(args.command, {"error": err, "ok": False})
        _emit(doc, args)
        return 2
    doc = envelope(args.command, payload)
    doc["ok"] = ok
    if args.timings:
        doc["seconds"] = round(time.perf_counter() - t0, 6)
    _emit(doc, args)
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
