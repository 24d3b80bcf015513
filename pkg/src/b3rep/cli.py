"""Batch front end.

Subcommands
-----------
simples     list simple dimension vectors of a given total dimension
components  list component signatures and dimensions in a given total dimension
analyze     smoothness report for a semisimple spec file (JSON)
verify      run one of the property suites: ext | tangent | lemma | gln | symmetry

Exit codes: 0 success (analyze: smooth point), 1 singular point,
2 invalid input, 3 formula/oracle mismatch or suite failure.  Output is
deterministic: the same command, flags and seed produce byte-identical
bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import B3RepError, ToleranceAmbiguity
from .extoracle import ToleranceConfig
from .factory import SemisimpleSpec, assemble
from .geometry import (
    analyze,
    component_dim,
    enumerate_component_signatures,
    tangent_dim_numeric,
)
from .lattice import enumerate_simple_gamma, ext_gamma_self, orbit_class
from .verify import SUITE_NAMES, run_suite

_COMPONENT_CAP = 10

EXIT_OK = 0
EXIT_SINGULAR = 1
EXIT_INPUT = 2
EXIT_MISMATCH = 3


def _emit(payload: dict, fmt: str, table_lines) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for line in table_lines:
            sys.stdout.write(line + "\n")


def _fail(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_INPUT


def cmd_simples(args) -> int:
    if args.n < 1:
        return _fail(f"--n must be >= 1, got {args.n}")
    vectors = enumerate_simple_gamma(args.n)
    classes = sorted({orbit_class(v) for v in vectors})
    payload = {
        "n": args.n,
        "simples": [
            {
                "alpha": v.to_json(),
                "orbit_class": orbit_class(v).to_json(),
                "self_ext": ext_gamma_self(v),
            }
            for v in vectors
        ],
        "orbit_classes": [c.to_json() for c in classes],
    }
    lines = [f"simple dimension vectors with n = {args.n}: {len(vectors)}"]
    lines += [
        f"  {v}  orbit {orbit_class(v)}  self-ext {ext_gamma_self(v)}"
        for v in vectors
    ]
    lines.append(f"orbit classes: {len(classes)}")
    lines += [f"  {c}" for c in classes]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_components(args) -> int:
    if args.n < 1:
        return _fail(f"--n must be >= 1, got {args.n}")
    if args.n > _COMPONENT_CAP and not args.force:
        return _fail(
            f"component enumeration above n = {_COMPONENT_CAP} grows quickly; "
            "pass --force to run anyway"
        )
    signatures = enumerate_component_signatures(args.n)
    payload = {
        "n": args.n,
        "components": [
            {"signature": s.to_json(), "dim": s.dimension()} for s in signatures
        ],
    }
    lines = [f"components of the variety in dimension n = {args.n}: {len(signatures)}"]
    lines += [f"  dim {s.dimension():4d}  {s}" for s in signatures]
    _emit(payload, args.format, lines)
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        with open(args.spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        return _fail(f"cannot read {args.spec}: {exc}")
    except json.JSONDecodeError as exc:
        return _fail(f"malformed JSON in {args.spec}: {exc}")
    try:
        spec = SemisimpleSpec.from_json(data)
        tol = ToleranceConfig(rel_tol=args.tol)
        report = analyze(spec)
    except (B3RepError, ValueError) as exc:
        return _fail(str(exc))

    payload = report.to_json()
    verification = None
    if args.verify:
        try:
            rep = assemble(spec, seed=args.seed, tol=tol)
            measured = tangent_dim_numeric(rep, tol)
        except ToleranceAmbiguity as exc:
            return _fail(f"numeric verification inconclusive: {exc}")
        verification = {
            "seed": args.seed,
            "tangent_dim_numeric": measured,
            "matches_formula": measured == report.tangent_dim,
            "matches_smooth_criterion":
                (measured == component_dim(spec)) == report.smooth,
        }
        payload["verification"] = verification

    lines = [
        f"n = {report.n}",
        f"signature      {report.signature}",
        f"component dim  {report.component_dim}",
        f"tangent dim    {report.tangent_dim}",
        f"verdict        {'smooth' if report.smooth else 'singular'}",
    ]
    for f in report.failed_conditions:
        if f["kind"] == "cross_ext":
            lines.append(
                f"  failed: entries {tuple(f['entries'])} have ext = {f['ext']}"
            )
        else:
            lines.append(
                f"  failed: entry {f['entry']} has dim {f['dim']}, mult {f['mult']}"
            )
    for w in report.witnesses:
        lines.append(f"  witness component {w}  dim {w.dimension()}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    if verification is not None:
        lines.append(
            f"numeric tangent dim {verification['tangent_dim_numeric']} "
            f"(formula match: {verification['matches_formula']})"
        )
    _emit(payload, args.format, lines)

    if verification is not None and not (
        verification["matches_formula"] and verification["matches_smooth_criterion"]
    ):
        sys.stderr.write("error: formula/oracle mismatch\n")
        return EXIT_MISMATCH
    return EXIT_OK if report.smooth else EXIT_SINGULAR


def cmd_verify(args) -> int:
    try:
        tol = ToleranceConfig(rel_tol=args.tol)
        result = run_suite(args.suite, n=args.n, trials=args.trials,
                           seed=args.seed, tol=tol)
    except (B3RepError, ValueError) as exc:
        return _fail(str(exc))
    payload = result.to_json()
    lines = [
        f"suite {result.name}: {result.checks - result.failed}/{result.checks} "
        f"checks passed, worst residual {result.worst_residual:.3e}"
    ]
    lines += [f"  FAIL: {msg}" for msg in result.failures]
    _emit(payload, args.format, lines)
    return EXIT_OK if result.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="b3rep",
        description="Smoothness of semisimple points of the matrix variety A^2 = B^3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p_simples = sub.add_parser("simples", help="list simple dimension vectors")
    p_simples.add_argument("--n", type=int, required=True)
    add_format(p_simples)
    p_simples.set_defaults(func=cmd_simples)

    p_comp = sub.add_parser("components", help="list component signatures")
    p_comp.add_argument("--n", type=int, required=True)
    p_comp.add_argument("--force", action="store_true",
                        help=f"allow n above the default cap of {_COMPONENT_CAP}")
    add_format(p_comp)
    p_comp.set_defaults(func=cmd_components)

    p_an = sub.add_parser("analyze", help="smoothness report for a spec file")
    p_an.add_argument("--spec", required=True, help="path to a spec JSON file")
    p_an.add_argument("--verify", action="store_true",
                      help="assemble matrices and check the tangent dimension")
    p_an.add_argument("--seed", type=int, default=0)
    p_an.add_argument("--tol", type=float, default=1e-8)
    add_format(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run a property suite")
    p_ver.add_argument("suite", choices=SUITE_NAMES)
    p_ver.add_argument("--n", type=int, default=None,
                       help="suite size (max dimension / max total)")
    p_ver.add_argument("--trials", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--tol", type=float, default=1e-8)
    add_format(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, which matches the input-error code
        return int(exc.code) if exc.code else EXIT_OK
    if getattr(args, "trials", None) is not None and args.trials < 1:
        return _fail("--trials must be >= 1")
    if getattr(args, "tol", None) is not None and not 0 < args.tol < 1:
        return _fail("--tol must be in (0, 1)")
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
