"""Command-line frontend: load JSON descriptions, run checks and builders.

Exit codes: 0 on success (all checks pass), 1 when a validator reports
violations, 2 on unreadable or malformed input.  Output is deterministic
for identical inputs; `--json` switches to machine-readable reports.
"""

import argparse
import json
import sys
from pathlib import Path

from .errors import GrpdError, SchemaError
from .exactlin import Field
from . import groupoid as gpd
from .algebra import StructureAlgebra
from . import paction as pact
from . import skewring as sk
from . import leavitt as lv


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def _load_groupoid(path):
    return gpd.from_dict(_load_json(path))


def _load_algebra(path):
    return StructureAlgebra.from_dict(_load_json(path))


def _load_action(path):
    d = _load_json(path)
    base = Path(path).parent
    try:
        gref = d["groupoid"]
        aref = d["algebra"]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"action file must reference groupoid and algebra: {exc}") from exc
    g0 = _load_groupoid(base / gref)
    bad = gpd.validate(g0)
    if bad:
        raise SchemaError(
            "referenced groupoid is invalid: " + "; ".join(str(v) for v in bad)
        )
    amb = _load_algebra(base / aref)
    return pact.action_from_dict(d, g0, amb)


def _emit(report, as_json):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for key in report:
        print(f"{key}: {_plain(report[key])}")


def _plain(v):
    if isinstance(v, dict):
        inner = ", ".join(f"{k}={_plain(x)}" for k, x in sorted(v.items(), key=lambda kv: str(kv[0])))
        return "{" + inner + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_plain(x) for x in v) + "]"
    return str(v)


def _violations_report(violations, as_json):
    if as_json:
        print(json.dumps(
            {"violations": [{"rule": v.rule, "witness": list(v.witness), "detail": v.detail}
                            for v in violations]},
            indent=2, sort_keys=True))
    else:
        if not violations:
            print("ok: no violations")
        for v in violations:
            print(str(v))
    return 1 if violations else 0


def cmd_check_groupoid(args):
    g = _load_groupoid(args.file)
    return _violations_report(gpd.validate(g), args.json)


def cmd_check_action(args):
    pa = _load_action(args.file)
    return _violations_report(pact.validate_action(pa), args.json)


def cmd_analyze(args):
    alg = _load_algebra(args.file)
    _emit(sk.analyze_algebra(alg), args.json)
    return 0


def cmd_build_skew(args):
    pa = _load_action(args.file)
    alg = sk.build_skew_groupoid_ring(pa)
    report = sk.analyze_algebra(alg)
    if args.dump:
        print(json.dumps(alg.to_dict(), indent=2, sort_keys=True))
    else:
        _emit(report, args.json)
    return 0


def cmd_groupoid_ring(args):
    g = _load_groupoid(args.groupoid)
    bad = gpd.validate(g)
    if bad:
        return _violations_report(bad, args.json)
    coeff = _load_algebra(args.algebra)
    alg = sk.build_groupoid_ring(g, coeff)
    if args.dump:
        print(json.dumps(alg.to_dict(), indent=2, sort_keys=True))
    else:
        _emit(sk.analyze_algebra(alg), args.json)
    return 0


def cmd_matrix_ring(args):
    field = Field(args.char)
    coeff = _load_algebra(args.algebra) if args.algebra else _scalar_algebra(field)
    g = gpd.pair_groupoid(args.n)
    alg = sk.build_groupoid_ring(g, coeff)
    result = sk.matrix_units_isomorphism(alg, args.n, coeff)
    report = dict(sk.analyze_algebra(alg))
    report["matrix_units_ok"] = bool(result)
    report["matrix_unit_checks"] = result.checks
    if result.counterexample:
        report["matrix_units_counterexample"] = result.counterexample
    _emit(report, args.json)
    return 0 if result else 1


def _scalar_algebra(field):
    return StructureAlgebra(field, 1, [[[field.one]]], unit=[field.one], labels=["1"])


def cmd_partial_group_algebra(args):
    g = _load_groupoid(args.group)
    bad = gpd.validate(g)
    if bad:
        return _violations_report(bad, args.json)
    field = Field(args.char)
    table = sk.exel_semigroup(g)
    alg = sk.semigroup_algebra(table, field)
    report = dict(sk.analyze_algebra(alg))
    report["semigroup_size"] = len(table.elements)
    _emit(report, args.json)
    return 0


def cmd_leavitt(args):
    graph = lv.graph_from_dict(_load_json(args.file))
    field = Field(args.char)
    report = lv.lpa_characterization(graph, field)
    if args.dump and report.acyclic:
        alg = lv.build_gr_skew_ring(graph, field)
        print(json.dumps(alg.to_dict(), indent=2, sort_keys=True))
        return 0
    out = report.to_dict()
    if report.acyclic:
        phi = lv.phi_isomorphism_check(graph, field)
        out["two_model_dims"] = list(phi.dims)
        out["phi_relations_ok"] = phi.relations_ok
        if phi.first_failure:
            out["phi_first_failure"] = phi.first_failure
    _emit(out, args.json)
    return 0


def cmd_globalize(args):
    pa = _load_action(args.file)
    bad = pact.validate_action(pa)
    if bad:
        return _violations_report(bad, args.json)
    glob = pact.globalize(pa)
    violations = pact.globalization_verify(pa, glob)
    unital = pact.envelope_component_unital(glob)
    report = {
        "envelope_dim": glob.action.ambient.dim,
        "component_dims": {e: glob.action.object_components[e].dim
                           for e in glob.action.groupoid.objects},
        "components_unital": unital,
        "finite_type": pact.is_finite_type(pa),
        "violations": [str(v) for v in violations],
    }
    _emit(report, args.json)
    return 1 if violations else 0


def cmd_maschke(args):
    pa = _load_action(args.file)
    bad = pact.validate_action(pa)
    if bad:
        return _violations_report(bad, args.json)
    report = sk.maschke_check(pa)
    _emit(report.to_dict(fmt=pa.ambient.field.fmt), args.json)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="grpd",
        description="Exact computations with partial skew groupoid rings, "
                    "groupoid rings, partial group algebras and Leavitt path algebras.",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check-groupoid", help="validate a groupoid JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_groupoid)

    s = sub.add_parser("check-action", help="validate a partial-action JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check_action)

    s = sub.add_parser("analyze", help="analysis report for an algebra JSON file")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("build-skew", help="build and analyze a partial skew groupoid ring")
    s.add_argument("file")
    s.add_argument("--dump", action="store_true", help="print the algebra JSON instead")
    s.set_defaults(func=cmd_build_skew)

    s = sub.add_parser("groupoid-ring", help="groupoid ring over a coefficient algebra")
    s.add_argument("groupoid")
    s.add_argument("algebra")
    s.add_argument("--dump", action="store_true")
    s.set_defaults(func=cmd_groupoid_ring)

    s = sub.add_parser("matrix-ring", help="pair-groupoid ring with matrix-unit verification")
    s.add_argument("-n", type=int, required=True, help="matrix size")
    s.add_argument("--algebra", help="coefficient algebra JSON (default: the base field)")
    s.add_argument("--char", type=int, default=0, help="field characteristic for the default coefficients")
    s.set_defaults(func=cmd_matrix_ring)

    s = sub.add_parser("partial-group-algebra", help="Exel-semigroup partial group algebra")
    s.add_argument("group", help="one-object groupoid JSON file")
    s.add_argument("--char", type=int, default=0)
    s.set_defaults(func=cmd_partial_group_algebra)

    s = sub.add_parser("leavitt", help="classify a graph and build its path algebra when finite-dimensional")
    s.add_argument("file")
    s.add_argument("--char", type=int, default=0)
    s.add_argument("--dump", action="store_true", help="print the algebra JSON instead")
    s.set_defaults(func=cmd_leavitt)

    s = sub.add_parser("globalize", help="construct and verify the enveloping globalization")
    s.add_argument("file")
    s.set_defaults(func=cmd_globalize)

    s = sub.add_parser("maschke", help="semisimplicity transfer report for an action")
    s.add_argument("file")
    s.set_defaults(func=cmd_maschke)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GrpdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
