"""
Command line for the toolkit.

    python -m awdaha build --family O --d 0 --q 2 --k 2,3,5,auto
    python -m awdaha verify --family E --d 3 --q 2 --k 2,3,5 --twist 1
    python -m awdaha irreducible --family E --d 1 --q 4 --k0 1/4 --k 1,1,1
    python -m awdaha factors --family E --d 3 --q 2 --twist 1 --kseed 7
    python -m awdaha leonard --family Vd --d 3 --q 2 --a 2 --b 3 --c 5
    python -m awdaha suite --config sweep.json --out results.json
    python -m awdaha replay 'daha_relations|E|d=1|q=2|q^(-1),2,3,5|eps=0'

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for bad input.
"""

import argparse
import json
import logging
import os
import random
import sys

from awdaha import __version__, linalg
from awdaha.analysis.composition import composition_series_aw
from awdaha.analysis.irreducibility import burnside_irreducible
from awdaha.analysis.leonard import leonard_pair_check, leonard_triple_check
from awdaha.analysis.predicates import criterion
from awdaha.analysis.relations import (
    t0t1_ladder_check,
    t0t1_spectrum_check,
    twist_discriminant,
    verify_aw_centrality,
    verify_daha_relations,
    verify_determinants,
)
from awdaha.config import DEFAULT_SEED, LOG_FORMAT, LOG_LEVEL_ENV
from awdaha.errors import AwDahaError, InvalidSpec
from awdaha.harness import suites
from awdaha.harness.grid import sample_spec
from awdaha.harness.runner import replay, run_suite
from awdaha.harness.sweep import SweepConfig
from awdaha.realizations import (
    DAHA_GENERATORS,
    VdSpec,
    build,
    e_k0,
    evaluate_word,
    make_spec,
    push_to_aw,
)
from awdaha.reports import ReportBuilder
from awdaha.scalar_field import ScalarField

logger = logging.getLogger(__name__)

# =============== CONFIGURATION VARIABLES ===============
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
RULE = "=" * 70
# =======================================================

FAMILIES = ("Vd", "E", "O")
AUTO = "auto"
DEFAULT_Q = "2"


def configure_logging(verbose):
    level = "DEBUG" if verbose else os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


# ===== spec resolution =====

def _split(text):
    return [part.strip() for part in str(text).split(",") if part.strip()]


def _apply_spec_file(args):
    """Fill unset module flags from a JSON spec file."""
    try:
        with open(args.spec) as handle:
            data = json.load(handle)
    except OSError as exc:
        raise InvalidSpec(f"cannot read spec file {args.spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"spec file {args.spec} is not valid JSON: {exc}") from exc
    for key in ("family", "d", "q", "twist"):
        if key in data and getattr(args, key) is None:
            setattr(args, key, data[key])
    params = data.get("params", {})
    if isinstance(params, dict):
        if args.family == "Vd":
            for name in ("a", "b", "c"):
                if name in params and getattr(args, name) is None:
                    setattr(args, name, str(params[name]))
            return
        params = [params.get(name, AUTO) for name in ("k0", "k1", "k2", "k3")]
    if args.k is None and params:
        args.k = ",".join(str(p) for p in params)


def _e_params(args, d, field):
    values = _split(args.k)
    if len(values) == 3:
        values = [args.k0 or AUTO] + values
    elif args.k0 is not None:
        raise InvalidSpec("give k0 either inside --k or with --k0, not both")
    if len(values) != 4:
        raise InvalidSpec(f"E modules take k1,k2,k3 or k0,k1,k2,k3; got {len(values)} values")
    if AUTO in values[1:]:
        raise InvalidSpec("only k0 can be 'auto' for E modules")
    k0 = e_k0(field, d) if values[0] == AUTO else field.parse(values[0])
    return [k0] + [field.parse(v) for v in values[1:]]


def _o_params(args, d, field):
    values = _split(args.k)
    if args.k0 is not None:
        if len(values) != 3:
            raise InvalidSpec("with --k0 give exactly k1,k2,k3 in --k")
        values = [args.k0] + values
    if len(values) != 4:
        raise InvalidSpec(f"O modules take k0,k1,k2,k3; got {len(values)} values")
    autos = [i for i, v in enumerate(values) if v == AUTO]
    if len(autos) > 1:
        raise InvalidSpec("at most one O parameter can be 'auto'")
    parsed = [None if v == AUTO else field.parse(v) for v in values]
    if autos:
        product = field.one
        for value in parsed:
            if value is not None:
                product *= value
        if field.is_zero(product):
            raise InvalidSpec("cannot solve for the 'auto' parameter: another parameter is zero")
        parsed[autos[0]] = field.q_power(-d - 1) / product
    return parsed


def resolve_spec(args, irreducible=False):
    """
    The spec and twist named by the module flags.

    Args:
        args: parsed namespace with family, d, q, k/k0/a/b/c, twist, kseed
        irreducible: with --kseed, resample until the criterion holds

    Raises:
        InvalidSpec: flags are missing or inconsistent
    """
    if args.spec:
        _apply_spec_file(args)
    if args.family is None or args.d is None:
        raise InvalidSpec("--family and --d are required (or a --spec file)")
    if args.family not in FAMILIES:
        raise InvalidSpec(f"unknown family {args.family!r} (expected Vd, E or O)")
    d = int(args.d)
    field = ScalarField.from_text(args.q if args.q is not None else DEFAULT_Q)
    twist = int(args.twist or 0)
    if args.family == "Vd" and twist:
        raise InvalidSpec("twists apply to E and O modules only")

    if args.kseed is not None:
        rng = random.Random(args.kseed)
        spec = sample_spec(args.family, d, field, rng, criterion if irreducible else None)
    elif args.family == "Vd":
        missing = [name for name in ("a", "b", "c") if getattr(args, name) is None]
        if missing:
            raise InvalidSpec(f"V_d needs --a, --b and --c (missing {', '.join(missing)})")
        spec = make_spec("Vd", d, [field.parse(getattr(args, n)) for n in ("a", "b", "c")], field)
    elif args.k is None:
        raise InvalidSpec(f"{args.family} modules need --k (or --kseed)")
    elif args.family == "E":
        spec = make_spec("E", d, _e_params(args, d, field), field)
    else:
        spec = make_spec("O", d, _o_params(args, d, field), field)
    logger.info("resolved %s, twist %d", spec.describe(), twist)
    return spec, twist


# ===== output =====

def _mark(passed):
    return "✓" if passed else "✗"


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, indent=2))


def print_banner(title):
    print(RULE)
    print(title)
    print(RULE)


def print_report(report):
    print(f"{_mark(report.passed)} {report.check}: {report.statement}")
    for entry in report.detail.get("entries", []):
        print(f"  • {_mark(entry['pass'])} {entry['name']}")


def print_matrix(name, M, field):
    print(f"{name}:")
    for line in linalg.format_matrix(M, field).splitlines()[1:]:
        print(f"  {line}")


def _finish(args, reports, payload=None, text=None):
    """Print reports in the chosen format and return the exit code."""
    passed = all(report.passed for report in reports)
    body = {"pass": passed, "reports": [report.to_dict() for report in reports]}
    body.update(payload or {})
    if getattr(args, "out", None):
        with open(args.out, "w") as handle:
            json.dump(body, handle, sort_keys=True, indent=2)
            handle.write("\n")
    if args.format == "json":
        _emit_json(body)
    else:
        if text is not None:
            text()
        for report in reports:
            print_report(report)
        print()
        print(f"{_mark(passed)} {'all checks passed' if passed else 'some checks failed'}")
    return EXIT_PASS if passed else EXIT_FAIL


def _spec_payload(spec, twist):
    return {
        "module": spec.describe(),
        "family": spec.family,
        "d": spec.d,
        "q": spec.field.q_text,
        "params": dict(zip(spec.param_names, (spec.field.format(p) for p in spec.params))),
        "twist": twist,
    }


# ===== commands =====

def cmd_build(args):
    spec, twist = resolve_spec(args)
    F = spec.field
    m = build(spec, twist)
    mats = dict(m.generators)
    extras = {}
    if not isinstance(spec, VdSpec):
        product = linalg.scalar_value(evaluate_word(m, DAHA_GENERATORS))
        extras["t0t1t2t3"] = F.format(product) if product is not None else None
        if args.push:
            mats.update(push_to_aw(m).generators)
    central = m.central.as_dict(F) if m.central is not None else None

    if args.format == "json":
        payload = _spec_payload(spec, twist)
        payload.update(
            matrices={name: [[F.format(e) for e in row] for row in M.to_list()]
                      for name, M in mats.items()},
            central=central,
            **extras,
        )
        _emit_json(payload)
        return EXIT_PASS

    print_banner(m.label)
    for name, M in mats.items():
        print_matrix(name, M, F)
    if central:
        print()
        for name, value in central.items():
            print(f"  • {name} = {value}")
    for name, value in extras.items():
        print(f"  • {name} = {value}")
    return EXIT_PASS


def cmd_verify(args):
    spec, twist = resolve_spec(args)
    m = build(spec, twist)
    if isinstance(spec, VdSpec):
        reports = [verify_aw_centrality(m)]
    else:
        reports = [
            verify_daha_relations(m),
            verify_determinants(m),
            verify_aw_centrality(push_to_aw(m)),
            t0t1_spectrum_check(m),
            t0t1_ladder_check(m),
            twist_discriminant(m),
        ]
    return _finish(args, reports, _spec_payload(spec, twist), lambda: print_banner(m.label))


def cmd_irreducible(args):
    spec, twist = resolve_spec(args)
    report = suites.irreducibility(spec, twist)
    verdict = report.detail["verdict"]

    def text():
        print_banner(spec.describe())
        print(f"  • criterion: {'irreducible' if verdict['by_criterion'] else 'reducible'}")
        print(f"  • burnside:  {'irreducible' if verdict['by_burnside'] else 'reducible'}")
        if verdict["witness"] is not None:
            print(f"  • invariant subspace of dimension {len(verdict['witness'])}:")
            for row in verdict["witness"]:
                print(f"      [{', '.join(row)}]")
        print()

    return _finish(args, [report], _spec_payload(spec, twist), text)


def _vd_factors_report(spec):
    aw = build(spec)
    series = composition_series_aw(aw)
    report = ReportBuilder(
        "composition_factors", "every composition factor of V_d(a,b,c) is irreducible"
    )
    for i, factor in enumerate(series.factors):
        report.record(f"factor_{i}_irreducible", burnside_irreducible(list(factor.matrices)),
                      dim=factor.dim)
    report.record("single_factor_iff_criterion", (len(series.factors) == 1) == criterion(spec))
    return report.build(module=aw.label, computed=series.to_dict(spec.field))


def cmd_factors(args):
    spec, twist = resolve_spec(args, irreducible=True)
    if isinstance(spec, VdSpec):
        report = _vd_factors_report(spec)
    else:
        report = suites.composition_factors(spec, twist)

    def text():
        print_banner(report.detail["module"])
        for i, factor in enumerate(report.detail["computed"]["factors"]):
            print(f"factor {i}: dimension {factor['dim']}")
            for name, value in (factor["central"] or {}).items():
                print(f"  • {name} = {value}")
            print(f"  • char poly A: {factor['charpoly_A']}")
            print(f"  • char poly B: {factor['charpoly_B']}")
        if "predicted" in report.detail:
            print("predicted:")
            for line in report.detail["predicted"]:
                print(f"  • {line}")
        print()

    return _finish(args, [report], _spec_payload(spec, twist), text)


def _leonard_certificates(spec, twist):
    m = build(spec, twist)
    aw = m if isinstance(spec, VdSpec) else push_to_aw(m)
    series = composition_series_aw(aw)
    F = spec.field
    factors = []
    for factor in series.factors:
        A, B, C = factor.matrices
        factors.append({
            "dim": factor.dim,
            "pairs": {
                "AB": leonard_pair_check(A, B).to_dict(F),
                "BC": leonard_pair_check(B, C).to_dict(F),
                "CA": leonard_pair_check(C, A).to_dict(F),
            },
            "triple": leonard_triple_check(A, B, C).to_dict(F),
        })
    return factors


def cmd_leonard(args):
    spec, twist = resolve_spec(args, irreducible=True)
    reports = [
        suites.leonard_pairs_on_factors(spec, twist),
        suites.leonard_triples_on_factors(spec, twist),
    ]
    factors = _leonard_certificates(spec, twist)

    def text():
        print_banner(spec.describe() + (f" twist {twist}" if twist else ""))
        for i, factor in enumerate(factors):
            print(f"factor {i}: dimension {factor['dim']}")
            verdicts = dict(factor["pairs"], ABC=factor["triple"])
            for name, verdict in verdicts.items():
                status = "Leonard" if verdict["result"] else f"not Leonard ({verdict['reason']})"
                print(f"  • {_mark(verdict['result'])} {name}: {status}")
                for op, order in verdict["certificates"].items():
                    print(f"      {op} eigenvalue order: {', '.join(order)}")
        print()

    payload = _spec_payload(spec, twist)
    payload["factors"] = factors
    return _finish(args, reports, payload, text)


def _sweep_from_flags(args):
    if not args.suite:
        raise InvalidSpec("suite needs --config or --suite")
    data = {"suites": _split(args.suite), "seed": args.seed, "workers": args.workers,
            "boundary": not args.no_boundary}
    if args.families:
        data["families"] = _split(args.families)
    if args.d:
        ds = [int(d) for d in _split(args.d)]
        families = data.get("families", FAMILIES)
        data["d_values"] = {
            family: [d for d in ds if family == "Vd" or d % 2 == (1 if family == "E" else 0)]
            for family in families
        }
    if args.q:
        data["q_values"] = _split(args.q)
    if args.samples is not None:
        data["samples"] = args.samples
    if args.twists:
        data["twists"] = [int(t) for t in _split(args.twists)]
    return SweepConfig.from_dict(data)


def cmd_suite(args):
    config = SweepConfig.from_file(args.config) if args.config else _sweep_from_flags(args)
    result = run_suite(config)
    if args.out:
        result.write(args.out)
    if args.format == "json":
        print(result.to_json())
    else:
        print_banner(f"suites: {', '.join(config.suites)}")
        for suite, counts in sorted(result.summary["by_suite"].items()):
            ok = counts["failed"] == 0
            print(f"{_mark(ok)} {suite}: {counts['passed']}/{counts['points']} points passed")
            if counts["known_exceptions"]:
                print(f"  • {counts['known_exceptions']} known exceptions at factor ladder gaps")
        for entry in result.failures:
            print(f"  • ✗ {entry['id']}")
        print()
        print(f"{result.summary['points']} points in {result.wall_time:.1f}s")
    return EXIT_PASS if result.passed else EXIT_FAIL


def cmd_replay(args):
    report = replay(args.point_id)
    return _finish(args, [report], {"point": args.point_id},
                   lambda: print_banner(args.point_id))


# ===== parser =====

def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--verbose", "-v", action="store_true",
                        help=f"debug logging on stderr (otherwise {LOG_LEVEL_ENV} or WARNING)")
    return common


def _module_flags():
    module = argparse.ArgumentParser(add_help=False)
    module.add_argument("--family", choices=FAMILIES)
    module.add_argument("--d", type=int, help="d; the module has dimension d+1")
    module.add_argument("--q", help="a rational other than 0, 1, -1, or 'q' for Q(q)")
    module.add_argument("--k", help="comma list k1,k2,k3 or k0,k1,k2,k3; 'auto' solves the constraint")
    module.add_argument("--k0", help="k0 for E and O modules ('auto' for E)")
    module.add_argument("--a", help="a for V_d(a,b,c)")
    module.add_argument("--b", help="b for V_d(a,b,c)")
    module.add_argument("--c", help="c for V_d(a,b,c)")
    module.add_argument("--twist", type=int, choices=(0, 1, 2, 3))
    module.add_argument("--kseed", type=int, help="draw seeded random parameters instead")
    module.add_argument("--spec", help="JSON spec file with family, d, q, params, twist")
    module.add_argument("--out", help="also write the JSON report here")
    return module


def build_parser():
    common = _common_flags()
    module = _module_flags()
    parser = argparse.ArgumentParser(
        prog="awdaha",
        description="Exact checks on Askey-Wilson and universal DAHA modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    commands = (
        ("build", cmd_build, "print the generator matrices of a module"),
        ("verify", cmd_verify, "check relations, centrality, determinants and spectra"),
        ("irreducible", cmd_irreducible, "closed-form criterion against the Burnside test"),
        ("factors", cmd_factors, "composition series and the predicted factors"),
        ("leonard", cmd_leonard, "Leonard pair and triple verdicts on composition factors"),
    )
    for name, handler, help_text in commands:
        cmd = sub.add_parser(name, parents=[common, module], help=help_text)
        cmd.set_defaults(handler=handler)
        if name == "build":
            cmd.add_argument("--push", action="store_true",
                             help="also print A, B, C of the pushforward")

    suite = sub.add_parser("suite", parents=[common], help="run harness suites over a grid")
    suite.add_argument("--config", help="SweepConfig JSON file")
    suite.add_argument("--suite", help=f"comma list of: {', '.join(suites.SUITES)}")
    suite.add_argument("--families", help="comma list of Vd, E, O")
    suite.add_argument("--d", help="comma list of d values (parity filtered per family)")
    suite.add_argument("--q", help="comma list of q values")
    suite.add_argument("--samples", type=int)
    suite.add_argument("--twists", help="comma list of twist labels")
    suite.add_argument("--seed", type=int, default=DEFAULT_SEED)
    suite.add_argument("--workers", type=int, default=1)
    suite.add_argument("--no-boundary", action="store_true",
                       help="skip constructed predicate-false points (rejected by criterion suites)")
    suite.add_argument("--out", help="write the SuiteResult JSON here")
    suite.set_defaults(handler=cmd_suite)

    replay_cmd = sub.add_parser("replay", parents=[common], help="recompute one grid point")
    replay_cmd.add_argument("point_id")
    replay_cmd.set_defaults(handler=cmd_replay)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except AwDahaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
