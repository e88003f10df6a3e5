"""Command-line front-end.

Subcommands: classify | semi | malcev | orbit | table | selfcheck | parse.
Every report echoes the result-affecting configuration, so a run is
reproducible from its own output; fixed seeds give byte-identical JSON
regardless of thread count or repetition.

Exit codes: 0 on a successful verdict/report, 1 on bad input, and 2 when a
mathematically guaranteed property failed (single-coordinate law violation,
containment violation, or an Anomalous verdict) -- exit 2 means a bug, not
a user error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import warnings

from . import classify as classify_mod
from . import malcev as malcev_mod
from . import orbits
from . import semihomogeneous as semi_mod
from .algebra import OctonionAlgebra, doubling_multiply, random_octonion
from .errors import MathViolation, NotMultilinear, OctimageError
from .fields import RATIONAL, FieldMode
from .polynomials import (
    ImplicitAssociationWarning,
    anticommutator,
    associator,
    commutator,
    parse_polynomial,
    scalar_image_example,
)

_EXIT_OK = 0
_EXIT_INPUT = 1
_EXIT_MATH = 2


def _parse_params(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise OctimageError("--params wants three comma-separated values, e.g. -1,-1,-1")
    return tuple(RATIONAL.parse(p) for p in parts)


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--params", default="-1,-1,-1",
                     help="doubling parameters a1,a2,a3 (standard division octonions)")
    sub.add_argument("--mode", choices=("rational", "real"), default=None,
                     help="field mode; classification subcommands are rational-only")
    sub.add_argument("--tol", type=float, default=1e-9,
                     help="tolerance for real-mode operations")
    sub.add_argument("--seed", type=int, default=0, help="random seed")
    sub.add_argument("--samples", type=int, default=200,
                     help="sample count for randomized checks")
    sub.add_argument("--threads", type=int, default=0,
                     help="worker threads for the basis scan (0 = machine parallelism); "
                          "results are identical for any value")
    sub.add_argument("--max-vars", type=int, default=classify_mod.MAX_SCAN_VARS,
                     help="largest variable count allowed for full 8^n scans")
    sub.add_argument("--retries", type=int, default=16,
                     help="retry budget for randomized constructions")
    sub.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octimage",
        description="Exact octonion arithmetic and polynomial image classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.formatter = argparse.ArgumentDefaultsHelpFormatter

    fmt = {"formatter_class": argparse.ArgumentDefaultsHelpFormatter}
    p_classify = sub.add_parser(
        "classify", help="four-way image verdict for a multilinear polynomial", **fmt)
    p_classify.add_argument("--poly", help="polynomial text, e.g. 'x1*x2 - x2*x1'")
    p_classify.add_argument("--poly-file", help="file with one polynomial per line")
    p_classify.add_argument("--full-scan", action="store_true",
                            help="scan all 8^n tuples even after the verdict is decided")
    p_classify.add_argument("--assume-property-p", choices=("true", "false"),
                            default="true",
                            help="whether norm quotients are squares in the base field")
    _common_flags(p_classify)

    p_semi = sub.add_parser(
        "semi", help="Zero/Scalars/Pure/Dense verdict for a semihomogeneous polynomial", **fmt)
    p_semi.add_argument("--poly", required=True)
    p_semi.add_argument("--excluded", default=None,
                        help="comma-separated eigenvalue-ratio statistics to count hits on")
    _common_flags(p_semi)

    p_malcev = sub.add_parser(
        "malcev", help="Zero/Pure verdict under the bracket product on pure octonions", **fmt)
    p_malcev.add_argument("--poly", required=True)
    p_malcev.add_argument("--target", default=None,
                          help="pure octonion to realize, e.g. '2*e1 - e7'")
    _common_flags(p_malcev)

    p_orbit = sub.add_parser(
        "orbit", help="scalar c and automorphism phi with to = c * phi(from)", **fmt)
    p_orbit.add_argument("--from", dest="src", required=True, help="pure octonion text")
    p_orbit.add_argument("--to", dest="dst", required=True, help="pure octonion text")
    _common_flags(p_orbit)

    p_table = sub.add_parser("table", help="print the 8x8 structure table", **fmt)
    _common_flags(p_table)

    p_self = sub.add_parser("selfcheck", help="run the built-in invariant suite", **fmt)
    _common_flags(p_self)

    p_parse = sub.add_parser("parse", help="parse a polynomial and report its profile", **fmt)
    p_parse.add_argument("--poly", required=True)
    _common_flags(p_parse)

    return parser


def _config_dict(args, algebra_mode: str) -> dict:
    # thread count is reported nowhere: outputs must not depend on it
    return {
        "command": args.command,
        "params": [str(p) for p in _parse_params(args.params)],
        "mode": algebra_mode,
        "tol": repr(args.tol),
        "seed": args.seed,
        "samples": args.samples,
        "max_vars": args.max_vars,
        "retries": args.retries,
    }


def _emit(report: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        config = report.get("config")
        if config:
            pairs = " ".join(f"{k}={v}" for k, v in sorted(config.items())
                             if k != "command")
            sys.stdout.write(f"# {config.get('command', '?')} [{pairs}]\n")
        for line in text_lines:
            sys.stdout.write(line + "\n")


def _parse_poly_collect_warnings(text: str):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ImplicitAssociationWarning)
        poly = parse_polynomial(text)
    notes = [str(w.message) for w in caught
             if issubclass(w.category, ImplicitAssociationWarning)]
    return poly, notes


def _require_rational_mode(args) -> None:
    if args.mode == "real":
        raise OctimageError(
            "this subcommand runs exact classification; drop --mode real "
            "(real mode is used automatically where square roots are needed)"
        )


def _threads(args) -> int:
    return args.threads if args.threads and args.threads > 0 else (os.cpu_count() or 1)


def _cmd_classify(args) -> int:
    _require_rational_mode(args)
    if bool(args.poly) == bool(args.poly_file):
        raise OctimageError("pass exactly one of --poly or --poly-file")
    texts = [args.poly]
    if args.poly_file:
        with open(args.poly_file, "r", encoding="utf-8") as fh:
            texts = [line.strip() for line in fh if line.strip()]
    algebra = OctonionAlgebra(_parse_params(args.params), RATIONAL)
    assume_p = args.assume_property_p == "true"

    entries = []
    lines = []
    exit_code = _EXIT_OK
    for text in texts:
        poly, notes = _parse_poly_collect_warnings(text)
        try:
            cls = classify_mod.classify_multilinear(
                poly, algebra, assume_property_p=assume_p,
                full_scan=args.full_scan, threads=_threads(args),
                max_vars=args.max_vars,
            )
        except NotMultilinear as exc:
            raise OctimageError(f"{exc}; try the 'semi' subcommand") from exc
        consistency = classify_mod.sample_consistency(
            poly, cls, samples=args.samples, seed=args.seed, algebra=algebra)
        cls.warnings = notes + cls.warnings
        report = cls.to_dict()
        report["samples_checked"] = consistency.samples_checked
        report["span_dimension"] = consistency.span_dimension
        report["polynomial"] = poly.render()
        entries.append(report)
        lines.append(f"{poly.render()}  ->  {cls.verdict}")
        for ev in cls.evidence:
            lines.append(f"  witness: tuple {list(ev.tuple_indices)} gives "
                         f"{ev.coefficient} * e{ev.basis_index}")
        lines.append(f"  tuples scanned: {cls.tuples_scanned}; "
                     f"samples checked: {consistency.samples_checked}"
                     + (f"; span dimension: {consistency.span_dimension}"
                        if consistency.span_dimension is not None else ""))
        for w in cls.warnings:
            lines.append(f"  warning: {w}")

    payload = {"config": _config_dict(args, "rational"),
               "results": entries if args.poly_file else entries[0]}
    _emit(payload, args.json, lines)
    return exit_code


def _cmd_semi(args) -> int:
    _require_rational_mode(args)
    algebra = OctonionAlgebra(_parse_params(args.params), RATIONAL)
    poly, notes = _parse_poly_collect_warnings(args.poly)
    cls = semi_mod.classify_semihomogeneous(
        poly, samples=args.samples, seed=args.seed, algebra=algebra)
    cls.warnings = notes + cls.warnings
    report = cls.to_dict()
    report["polynomial"] = poly.render()
    lines = [f"{poly.render()}  ->  {cls.verdict}"]
    for key, val in cls.details.items():
        lines.append(f"  {key}: {json.dumps(val, sort_keys=True)}")
    for w in cls.warnings:
        lines.append(f"  warning: {w}")
    if args.excluded:
        excluded = [RATIONAL.parse(v) for v in args.excluded.split(",")]
        check = semi_mod.excluded_ratio_check(
            poly, excluded, samples=args.samples, seed=args.seed, algebra=algebra)
        report["excluded_ratio_check"] = check.to_dict()
        lines.append(f"  excluded-ratio hits: {json.dumps(check.hits, sort_keys=True)}")
    payload = {"config": _config_dict(args, "rational"), "result": report}
    _emit(payload, args.json, lines)
    return _EXIT_MATH if cls.verdict == classify_mod.ANOMALOUS else _EXIT_OK


def _cmd_malcev(args) -> int:
    _require_rational_mode(args)
    algebra = OctonionAlgebra(_parse_params(args.params), RATIONAL)
    poly, notes = _parse_poly_collect_warnings(args.poly)
    cls = malcev_mod.classify_malcev(
        poly, samples=args.samples, seed=args.seed, algebra=algebra)
    cls.warnings = notes + cls.warnings
    report = cls.to_dict()
    report["polynomial"] = poly.render()
    lines = [f"{poly.render()}  ->  {cls.verdict} (bracket product)"]
    for w in cls.warnings:
        lines.append(f"  warning: {w}")
    if args.target is not None:
        real_algebra = OctonionAlgebra(
            _parse_params(args.params), FieldMode.real(args.tol))
        target = real_algebra.parse(args.target)
        assignment = malcev_mod.realize_malcev_target(
            poly, target, seed=args.seed, classification=cls,
            max_attempts=args.retries)
        value = poly.evaluate(assignment, product="malcev")
        residual = (value - target).norm() ** 0.5
        report["realization"] = {
            "target": real_algebra.format(target),
            "assignment": [[repr(float(c)) for c in x.coords] for x in assignment],
            "residual": repr(residual),
        }
        lines.append(f"  target {real_algebra.format(target)} realized, "
                     f"residual {residual:.3e}")
    payload = {"config": _config_dict(args, "rational"), "result": report}
    _emit(payload, args.json, lines)
    return _EXIT_OK


def _cmd_orbit(args) -> int:
    algebra = OctonionAlgebra(_parse_params(args.params), FieldMode.real(args.tol))
    src = algebra.parse(args.src)
    dst = algebra.parse(args.dst)
    c, phi = orbits.map_pure(src, dst, seed=args.seed)
    mapped = c * phi.apply(src)
    residual = (dst - mapped).norm() ** 0.5
    report = {
        "config": _config_dict(args, "real"),
        "c": repr(c),
        "matrix": [[repr(v) for v in row] for row in phi.matrix.tolist()],
        "basis_residual": repr(phi.basis_residual),
        "mapping_residual": repr(residual),
    }
    lines = [f"c = {c!r}", f"mapping residual = {residual:.3e}",
             f"basis multiplicativity residual = {phi.basis_residual:.3e}", "matrix:"]
    for row in phi.matrix.tolist():
        lines.append("  " + "  ".join(f"{v: .6f}" for v in row))
    _emit(report, args.json, lines)
    return _EXIT_OK


def _cmd_table(args) -> int:
    _require_rational_mode(args)
    algebra = OctonionAlgebra(_parse_params(args.params), RATIONAL)
    entries = []
    lines = ["    " + "".join(f"{'e%d' % j:>8}" for j in range(8))]
    for i in range(8):
        row = []
        cells = []
        for j in range(8):
            coeff, index = algebra.basis_product(i, j)
            row.append({"coeff": str(coeff), "index": index})
            text = f"e{index}" if coeff == 1 else f"-e{index}" if coeff == -1 else f"{coeff}*e{index}"
            cells.append(f"{text:>8}")
        entries.append(row)
        lines.append(f"e{i}  " + "".join(cells))
    report = {"config": _config_dict(args, "rational"), "table": entries}
    _emit(report, args.json, lines)
    return _EXIT_OK


def _selfcheck_properties(args) -> list[dict]:
    algebra = OctonionAlgebra.standard(RATIONAL)
    rng = random.Random(args.seed)
    n_pairs = 200
    pairs = [(random_octonion(algebra, rng), random_octonion(algebra, rng))
             for _ in range(n_pairs)]
    props = []

    def record(name: str, passed: bool, detail: str) -> None:
        props.append({"name": name, "passed": bool(passed), "detail": detail})

    ok = True
    for i in range(8):
        for j in range(8):
            ei = [0] * 8
            ej = [0] * 8
            ei[i] = 1
            ej[j] = 1
            ref = doubling_multiply(ei, ej, algebra.params)
            got = (algebra.e(i) * algebra.e(j)).coords
            ok = ok and tuple(ref) == got
    record("structure-table-vs-doubling", ok, "64 basis pairs, exact")

    ok = all(((a * a) * b - a * (a * b)).is_zero()
             and ((a * b) * a - a * (b * a)).is_zero()
             and ((b * a) * a - b * (a * a)).is_zero() for a, b in pairs)
    record("alternativity", ok, f"{n_pairs} random pairs, exact associators")

    ok = all((a * b).norm() == a.norm() * b.norm() for a, b in pairs)
    record("norm-multiplicativity", ok, f"{n_pairs} random pairs, exact")

    ok = all((a * b).conjugate() == b.conjugate() * a.conjugate()
             and a.conjugate().conjugate() == a for a, b in pairs)
    record("conjugation-anti-multiplicativity", ok, f"{n_pairs} random pairs, exact")

    ok = all((a * b).trace() == (b * a).trace() for a, b in pairs)
    record("trace-symmetry", ok, f"{n_pairs} random pairs, exact")

    ok = True
    for a, _ in pairs:
        v = a.pure_part()
        ok = ok and (v * v + algebra.scalar(v.norm())).is_zero()
    record("pure-square-norm", ok, f"{n_pairs} pure parts, exact")

    ok = all(a.char_poly_residual().is_zero() for a, _ in pairs)
    record("char-poly-residual", ok, f"{n_pairs} random octonions, exact")

    corpus = [
        ("commutator", commutator(), classify_mod.PURE),
        ("anticommutator", anticommutator(), classify_mod.FULL),
        ("associator", associator(), classify_mod.PURE),
        ("scalar-image", scalar_image_example(), classify_mod.SCALARS),
        ("cyclic-difference", parse_polynomial("(x1*x2)*x3 - x3*(x2*x1)"), None),
    ]
    ok = True
    detail_counts = 0
    for _, poly, _ in corpus:
        try:
            for _ev in classify_mod.basic_evaluations(poly, algebra):
                detail_counts += 1
        except MathViolation:
            ok = False
    record("lemma-single-coordinate", ok,
           f"{detail_counts} basis evaluations over the built-in corpus")

    ok = True
    for name, poly, expected in corpus:
        verdict = classify_mod.classify_multilinear(poly, algebra).verdict
        if expected is not None and verdict != expected:
            ok = False
    record("corpus-verdicts", ok, "expected Pure/Full/Pure/Scalars on the named corpus")

    real_alg = OctonionAlgebra.standard(FieldMode.real(args.tol))
    rrng = random.Random(args.seed + 1)
    worst = 0.0
    ok = True
    for i in range(20):
        x = random_octonion(real_alg, rrng, pure=True)
        y = random_octonion(real_alg, rrng, pure=True)
        try:
            c, phi = orbits.map_pure(x, y, seed=i)
            worst = max(worst, (y - c * phi.apply(x)).norm() ** 0.5)
            worst = max(worst, phi.basis_residual)
        except OctimageError:
            ok = False
    ok = ok and worst <= 1e-8
    record("automorphism-residuals", ok, f"20 random pure pairs, worst {worst:.3e}")

    ok = True
    for a, b in pairs[:100]:
        x, y = a.pure_part(), b.pure_part()
        z = (x * y).pure_part()
        if not malcev_mod.malcev_identity_residual(x, y, z).is_zero():
            ok = False
        if not (malcev_mod.malcev_product(x, y) + malcev_mod.malcev_product(y, x)).is_zero():
            ok = False
    record("malcev-identity", ok, "100 random pure triples, exact")

    ident = parse_polynomial("x1")
    vals = (
        semi_mod.eigenvalue_ratio_stat(ident, [algebra.scalar(3)]),
        semi_mod.eigenvalue_ratio_stat(ident, [algebra.e(1)]),
        semi_mod.eigenvalue_ratio_stat(ident, [algebra.parse("1 + e2")]),
    )
    record("eigenvalue-ratio-values", vals == (2, -2, 0),
           f"got {tuple(str(v) for v in vals)}, expected ('2', '-2', '0')")

    return props


def _cmd_selfcheck(args) -> int:
    props = _selfcheck_properties(args)
    all_passed = all(p["passed"] for p in props)
    report = {
        "config": _config_dict(args, "rational"),
        "properties": props,
        "all_passed": all_passed,
    }
    lines = [f"[{'PASS' if p['passed'] else 'FAIL'}] {p['name']}: {p['detail']}"
             for p in props]
    lines.append(f"{sum(p['passed'] for p in props)}/{len(props)} properties passed")
    _emit(report, args.json, lines)
    return _EXIT_OK if all_passed else _EXIT_MATH


def _cmd_parse(args) -> int:
    poly, notes = _parse_poly_collect_warnings(args.poly)
    profile = poly.degree_profile()
    report = {
        "config": _config_dict(args, "rational"),
        "polynomial": poly.render(),
        "num_vars": poly.num_vars,
        "json_form": poly.to_json(),
        "degree_vectors": [list(v) for v in profile.per_term],
        "is_multilinear": profile.is_multilinear,
        "weights": list(profile.weights) if profile.weights else None,
        "weighted_degree": profile.weighted_degree,
        "total_degree": profile.total_degree,
        "warnings": notes,
    }
    lines = [f"canonical form: {poly.render()}",
             f"variables: {poly.num_vars}; total degree: {profile.total_degree}",
             f"multilinear: {profile.is_multilinear}"]
    if profile.weights is not None:
        lines.append(f"semihomogeneous with weights {list(profile.weights)}, "
                     f"weighted degree {profile.weighted_degree}")
    else:
        lines.append("not semihomogeneous with nonzero weighted degree")
    for w in notes:
        lines.append(f"warning: {w}")
    _emit(report, args.json, lines)
    return _EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "semi": _cmd_semi,
    "malcev": _cmd_malcev,
    "orbit": _cmd_orbit,
    "table": _cmd_table,
    "selfcheck": _cmd_selfcheck,
    "parse": _cmd_parse,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MathViolation as exc:
        sys.stderr.write(f"mathematics violated: {exc}\n")
        return _EXIT_MATH
    except OctimageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return _EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
