"""Command line surface.

Subcommands: validate, sets, verify, generate, sweep, bounds, plot.
Machine-readable results go to stdout, diagnostics to stderr.  Exit codes:
0 success / claim holds, 1 semantic failure (invalid instance, violated
claim, bad angle), 2 I/O, parse, or usage errors.

Angles are accepted as radians ("2.35619") or as fractions of pi
("0.75pi"); the internal canonical form is radians.

Instance files are UTF-8 JSON:
    {"sense": "min"|"max", "solutions": [{"id": "x1", "f": [1.0, 2.0]}, ...]}
Unknown fields are rejected.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import generators
from .approximation import min_alpha, verify_approx_set
from .bounds import BoundTable, guarantee_factor, rule_of_thumb
from .errors import ConeApproxError, InstanceFormatError, UnknownId
from .geometry import ConeParams
from .instances import (
    MIN,
    Instance,
    dump_instance,
    instance_to_obj,
    load_instance,
    validate,
)
from .instances import efficient_set
from .supportedness import gamma_supported_set, supported_set
from .svg import render_sweep_svg
from .tolerances import TAU_VAL

SWEEP_HEADER = "gamma,instance_id,empirical_alpha,theory_bound,rule_of_thumb"


def parse_angle(text: str) -> float:
    """Radians, or a multiple of pi written like '0.75pi'."""
    s = text.strip().lower()
    if s.endswith("pi"):
        head = s[:-2].strip()
        return (float(head) if head else 1.0) * math.pi
    return float(s)


def _load(path: str) -> Instance:
    return load_instance(path)


def _require_valid(instance: Instance) -> None:
    violations = validate(instance)
    if violations:
        for v in violations:
            print(v, file=sys.stderr)
        raise SystemExit(1)


def cmd_validate(args: argparse.Namespace) -> int:
    instance = _load(args.path)
    violations = validate(instance)
    for v in violations:
        print(v, file=sys.stderr)
    return 0 if not violations else 1


def cmd_sets(args: argparse.Namespace) -> int:
    instance = _load(args.path)
    _require_valid(instance)
    if args.mode == "efficient":
        ids = efficient_set(instance)
    elif args.mode == "supported":
        ids = supported_set(instance)
    else:
        if args.gamma is None:
            print("gamma-supported mode needs --gamma", file=sys.stderr)
            return 1
        try:
            gamma = parse_angle(args.gamma)
        except ValueError:
            print(f"cannot parse angle {args.gamma!r}", file=sys.stderr)
            return 1
        if not (0.5 * math.pi - 1e-12 <= gamma <= math.pi + 1e-12):
            print(f"inner angle {gamma} outside [pi/2, pi]", file=sys.stderr)
            return 1
        ids = gamma_supported_set(instance, gamma)
    print(json.dumps(sorted(ids)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    instance = _load(args.path)
    _require_valid(instance)
    selection = [s for s in args.set.split(",") if s]
    known = set(instance.ids())
    unknown = [s for s in selection if s not in known]
    if unknown:
        print(f"unknown solution ids: {unknown}", file=sys.stderr)
        return 2
    params = None
    if (args.gamma is None) != (args.phi is None):
        print("--gamma and --phi must be given together", file=sys.stderr)
        return 2
    if args.gamma is not None:
        params = ConeParams(parse_angle(args.gamma), parse_angle(args.phi))
    report = verify_approx_set(instance, selection, args.alpha, params)
    print(json.dumps(report.to_obj()))
    return 0 if report.is_valid else 1


def cmd_generate(args: argparse.Namespace) -> int:
    kwargs = {}
    if args.alpha is not None:
        kwargs["alpha"] = args.alpha
    if args.phi is not None:
        kwargs["phi"] = parse_angle(args.phi)
    if args.epsilon is not None:
        kwargs["epsilon"] = args.epsilon
    if args.n is not None:
        kwargs["n"] = args.n
    if args.k is not None:
        kwargs["k"] = args.k
    if args.family in ("convex", "concave", "mixed", "knapsack"):
        kwargs["seed"] = args.seed
    gamma = parse_angle(args.gamma) if args.gamma is not None else None
    instance = generators.make_family_instance(args.family, gamma=gamma, **kwargs)
    if args.out:
        dump_instance(instance, args.out)
    else:
        print(json.dumps(instance_to_obj(instance)))
    return 0


def parse_generator_spec(spec: str) -> tuple[str, dict]:
    """Parse 'family:key=value,key=value' into a family name and kwargs."""
    family, _, tail = spec.partition(":")
    family = family.strip()
    kwargs: dict = {}
    if tail:
        for piece in tail.split(","):
            key, sep, value = piece.partition("=")
            if not sep:
                raise ValueError(f"bad generator option {piece!r}")
            key = key.strip()
            if key in ("n", "k", "seed"):
                kwargs[key] = int(value)
            else:
                kwargs[key] = float(value)
    return family, kwargs


def sweep_rows(gamma_from: float, gamma_to: float, steps: int, spec: str) -> list[dict]:
    """One row per inner angle: empirical factor of the supported-style set
    against the guarantee and the rule of thumb."""
    family, kwargs = parse_generator_spec(spec)
    rows = []
    for gamma in np.linspace(gamma_from, gamma_to, steps):
        gamma = float(gamma)
        instance = generators.make_family_instance(family, gamma=gamma, **kwargs)
        if instance.sense != MIN:
            raise ConeApproxError("sweep requires a minimization family")
        supported = gamma_supported_set(instance, gamma)
        rows.append(
            {
                "gamma": gamma,
                "instance_id": spec,
                "empirical_alpha": min_alpha(instance, supported),
                "theory_bound": guarantee_factor(gamma),
                "rule_of_thumb": rule_of_thumb(gamma),
            }
        )
    rows.sort(key=lambda r: (r["gamma"], r["instance_id"]))
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    gamma_from = parse_angle(args.gamma_from)
    gamma_to = parse_angle(args.gamma_to)
    if not (0.5 * math.pi - 1e-12 <= gamma_from <= gamma_to <= math.pi + 1e-12) or args.steps < 1:
        print("need pi/2 <= from <= to <= pi and steps >= 1", file=sys.stderr)
        return 1
    rows = sweep_rows(gamma_from, gamma_to, args.steps, args.generator)
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(SWEEP_HEADER.split(","))
            for r in rows:
                writer.writerow(
                    [
                        repr(r["gamma"]),
                        r["instance_id"],
                        repr(r["empirical_alpha"]),
                        repr(r["theory_bound"]),
                        repr(r["rule_of_thumb"]),
                    ]
                )
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    gamma_from = parse_angle(args.gamma_from)
    gamma_to = parse_angle(args.gamma_to)
    lines = [BoundTable.CSV_HEADER]
    for gamma in np.linspace(gamma_from, gamma_to, args.steps):
        lines.append(BoundTable.at(float(gamma)).csv_row())
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def read_sweep_csv(path: str) -> list[dict]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        expected = SWEEP_HEADER.split(",")
        if reader.fieldnames != expected:
            raise InstanceFormatError(f"sweep CSV must have header {SWEEP_HEADER!r}")
        rows = []
        for raw in reader:
            try:
                rows.append(
                    {
                        "gamma": float(raw["gamma"]),
                        "instance_id": raw["instance_id"],
                        "empirical_alpha": float(raw["empirical_alpha"]) if raw["empirical_alpha"] else math.nan,
                        "theory_bound": float(raw["theory_bound"]),
                        "rule_of_thumb": float(raw["rule_of_thumb"]),
                    }
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise InstanceFormatError(f"bad sweep CSV row {raw!r}: {exc}") from exc
    return rows


def cmd_plot(args: argparse.Namespace) -> int:
    rows = read_sweep_csv(args.csv)
    text = render_sweep_svg(rows)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coneapprox",
        description="Approximation of biobjective problems via ordering cones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("sets", help="efficient / supported / gamma-supported ids")
    p.add_argument("path")
    p.add_argument("--mode", required=True, choices=("efficient", "supported", "gamma-supported"))
    p.add_argument("--gamma", help="inner angle (radians or '0.75pi')")
    p.set_defaults(func=cmd_sets)

    p = sub.add_parser("verify", help="check an approximation claim")
    p.add_argument("path")
    p.add_argument("--set", required=True, help="comma-separated solution ids")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--gamma", help="inner angle for a cone-order check")
    p.add_argument("--phi", help="rotation for a cone-order check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit an instance of a named family")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("--alpha", type=float)
    p.add_argument("--gamma", help="inner angle (radians or '0.75pi')")
    p.add_argument("--phi")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="empirical factors across inner angles, as CSV")
    p.add_argument("--gamma-from", default="0.5pi")
    p.add_argument("--gamma-to", default="pi")
    p.add_argument("--steps", type=int, default=9)
    p.add_argument("--generator", required=True, help="e.g. 'tightness:alpha=1,epsilon=0.1'")
    p.add_argument("out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bounds", help="guarantee factor table, as CSV")
    p.add_argument("--gamma-from", default="0.5pi")
    p.add_argument("--gamma-to", default="pi")
    p.add_argument("--steps", type=int, default=51)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("plot", help="render a sweep CSV as SVG")
    p.add_argument("csv")
    p.add_argument("out")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (InstanceFormatError, FileNotFoundError, IsADirectoryError, PermissionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnknownId as exc:
        print(f"unknown solution id: {exc}", file=sys.stderr)
        return 2
    except ConeApproxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
