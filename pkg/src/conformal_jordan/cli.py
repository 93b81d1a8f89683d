"""Command line entry point: verification suites and probes with JSON reports.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on flag or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

import numpy as np

from . import config
from .errors import ConformalJordanError
from .grassmann_groups import (
    CheckMode,
    chart_to_group,
    graph_embedding,
    group_cayley,
    make_form_space,
    unitary_and_cone_check,
)
from .conformal_completion import embed_point
from .jordan_core import (
    Family,
    JordanElement,
    family_label,
    join_direct_sum,
    make_algebra,
    random_element,
    unit,
)
from .lie_structure import wedge_membership_bracket, wedge_membership_hj
from .lorentz_quadric import (
    Chart,
    Component,
    Region,
    double_cone_membership_vector,
    gh_probe,
    rindler_membership,
    stereographic_chart,
    wedge_regions,
)
from .makarevic_spaces import (
    automorphism_residual,
    cone_classification,
    fixed_algebra,
    flip_wedge_membership,
    involution_catalog,
    make_involution,
    modularity_check,
    parse_sign,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
RESIDUAL_LIMIT = 1e-8


class UsageError(Exception):
    """Invalid combination of flags detected after parsing."""


def load_expected_table() -> dict:
    text = resources.files("conformal_jordan").joinpath("data/expected_tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _algebra(args: argparse.Namespace):
    _require(args, "family", "size")
    return make_algebra(args.family, args.size)


def _rng(args: argparse.Namespace) -> np.random.Generator:
    return np.random.default_rng(args.seed)


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args: argparse.Namespace) -> tuple[dict, bool]:
    algebra = _algebra(args)
    rng = _rng(args)
    specs = [make_involution(algebra, args.involution)] if args.involution else involution_catalog(algebra)
    signs = [parse_sign(args.sign)] if args.sign else [1, -1]
    samples = args.samples or 50
    entries, ok = [], True
    for spec in specs:
        entry: dict = {"kind": spec.label}
        for sign in signs:
            suffix = "plus" if sign > 0 else "minus"
            cone = cone_classification(spec, sign, samples, rng)
            expected = "Elliptic" if sign > 0 else "Hyperbolic"
            entry[f"dim_fixed_{suffix}"] = fixed_algebra(spec, sign).dim
            entry[f"cone_class_{suffix}"] = cone.verdict.value
            ok &= cone.verdict.value == expected
        entry["modular"] = modularity_check(spec).modular
        entries.append(entry)
    return {"family": family_label(algebra), "size": algebra.size, "involutions": entries}, ok


def cmd_verify_tables(args: argparse.Namespace) -> tuple[dict, bool]:
    max_rank = args.max_rank if args.max_rank is not None else 3
    table = load_expected_table()
    diff, checked = [], 0
    for row in table["rows"]:
        if row["rank"] > max_rank:
            continue
        if args.family and row["family"] != args.family:
            continue
        checked += 1
        key = {"family": row["family"], "size": row["size"], "involution": row["involution"]}
        algebra = make_algebra(row["family"], row["size"])
        spec = make_involution(algebra, row["involution"])
        computed = {
            "dim_fixed_plus": fixed_algebra(spec, 1).dim,
            "dim_fixed_minus": fixed_algebra(spec, -1).dim,
            "modular": modularity_check(spec).modular,
        }
        expected = {name: row[name] for name in computed}
        if computed != expected:
            diff.append({**key, "computed": computed, "expected": expected})
    report = {"table_version": table["version"], "max_rank": max_rank, "rows_checked": checked, "diff": diff}
    return report, not diff and checked > 0


def _wedge_minkowski(region: Region, d: int, samples: int, rng: np.random.Generator) -> tuple[dict, bool]:
    top, bottom = np.eye(d)[0], -np.eye(d)[0]
    agree, members, components = 0, 0, {c.value: 0 for c in Component}
    for _ in range(samples):
        v = rng.uniform(-2.0, 2.0, size=d)
        beta = v[0] ** 2 - v[1:] @ v[1:]
        if region is Region.DE_SITTER_WEDGE:
            if abs(1.0 - beta) < 1e-8:
                continue
            inside = wedge_regions(stereographic_chart(v, Chart.DE_SITTER), region).member
            agree += inside == double_cone_membership_vector(v, top, bottom)
        else:
            if abs(1.0 + beta) < 1e-8:
                continue
            membership = wedge_regions(stereographic_chart(v, Chart.ANTI_DE_SITTER), region)
            inside = membership.member
            agree += inside == rindler_membership(v)
            if inside:
                components[membership.component.value] += 1
        members += inside
    report = {"region": region.value, "d": d, "samples": samples, "members": members, "chart_agreement": agree}
    ok = agree == samples
    if region is Region.ANTI_DE_SITTER_WEDGE:
        report["components"] = components
        ok &= all(count > 0 for count in components.values())
    return report, ok


def cmd_wedge(args: argparse.Namespace) -> tuple[dict, bool]:
    _require(args, "region")
    region = Region(args.region)
    rng = _rng(args)
    samples = args.samples or 500
    if region in (Region.DE_SITTER_WEDGE, Region.ANTI_DE_SITTER_WEDGE):
        return _wedge_minkowski(region, args.d or 3, samples, rng)
    algebra = _algebra(args)
    if region is Region.FLIP_WEDGE:
        algebra = algebra.inner if algebra.family is Family.DIRECT_SUM else algebra
        e = unit(algebra)
        members = sum(flip_wedge_membership(random_element(algebra, rng), random_element(algebra, rng)) for _ in range(samples))
        ok = flip_wedge_membership(e, -e) and not flip_wedge_membership(e, e)
        pair = join_direct_sum(e, -e)
        return {"region": region.value, "family": family_label(pair.algebra), "size": algebra.size,
                "samples": samples, "members": int(members)}, ok
    j = args.j or 0
    agree = members = 0
    for _ in range(samples):
        x = random_element(algebra, rng)
        inside = wedge_membership_hj(x, j)
        members += inside
        agree += inside == wedge_membership_bracket(x, j)
    return {"region": region.value, "family": family_label(algebra), "size": algebra.size, "j": j,
            "samples": samples, "members": members, "route_agreement": agree}, agree == samples


def _probe_endpoints(region: Region, d: int, eps: float, args: argparse.Namespace):
    if region in (Region.DE_SITTER_WEDGE, Region.ANTI_DE_SITTER_WEDGE):
        algebra = make_algebra("SpinFactor", d)
        e0 = np.eye(d)[0]
        centre = np.eye(d)[d - 1] if region is Region.ANTI_DE_SITTER_WEDGE else np.zeros(d)
        return JordanElement(algebra, centre + eps * e0), JordanElement(algebra, centre - eps * e0)
    if region is Region.POSITIVE_CONE:
        algebra = make_algebra(args.family or "SpinFactor", args.size or d)
        e = unit(algebra)
        return (1.0 + eps) * e, (1.0 - eps) * e
    inner = make_algebra(args.family or "SpinFactor", args.size or d)
    inner = inner.inner if inner.family is Family.DIRECT_SUM else inner
    e = unit(inner)
    return join_direct_sum((1.0 + eps) * e, -(1.0 - eps) * e), join_direct_sum((1.0 - eps) * e, -(1.0 + eps) * e)


def cmd_gh_probe(args: argparse.Namespace) -> tuple[dict, bool]:
    _require(args, "region")
    region = Region(args.region)
    eps = args.eps if args.eps is not None else 0.3
    if not 0 < eps < 1:
        raise UsageError("--eps must lie in (0, 1)")
    a, b = _probe_endpoints(region, args.d or 3, eps, args)
    report = gh_probe(region, a, b, args.samples or 4000, _rng(args))
    expected = region is Region.ANTI_DE_SITTER_WEDGE
    data = report.to_json()
    data["expected_escape_detected"] = expected
    return data, report.escape_detected == expected


def cmd_cayley(args: argparse.Namespace) -> tuple[dict, bool]:
    algebra = _algebra(args)
    fields = {Family.SYM_R: "R", Family.HERM_C: "C", Family.HERM_H: "H"}
    if algebra.family not in fields:
        raise UsageError("cayley needs --family SymR, HermC or HermH")
    space = make_form_space(fields[algebra.family], algebra.size)
    rng = _rng(args)
    samples = args.samples or 200
    in_group = singular = 0
    worst_graph = 0.0
    for _ in range(samples):
        z = random_element(algebra, rng)
        transform = group_cayley(z, space)
        if transform is None:
            singular += 1
            continue
        in_group += unitary_and_cone_check(transform, space, CheckMode.GROUP)
        worst_graph = max(worst_graph, graph_embedding(chart_to_group(z, space), space).distance(embed_point(z)))
    report = {"family": family_label(algebra), "size": algebra.size, "samples": samples, "in_group": int(in_group),
              "singular": singular, "max_graph_distance": worst_graph}
    return report, in_group == samples and worst_graph <= RESIDUAL_LIMIT


def cmd_involutions(args: argparse.Namespace) -> tuple[dict, bool]:
    algebra = _algebra(args)
    rng = _rng(args)
    samples = args.samples or 20
    entries = []
    for spec in involution_catalog(algebra):
        entries.append({"kind": spec.label, "automorphism_residual": automorphism_residual(spec, rng, samples)})
    ok = all(entry["automorphism_residual"] <= RESIDUAL_LIMIT for entry in entries)
    return {"family": family_label(algebra), "size": algebra.size, "involutions": entries}, ok


COMMANDS = {
    "classify": cmd_classify,
    "verify-tables": cmd_verify_tables,
    "wedge": cmd_wedge,
    "gh-probe": cmd_gh_probe,
    "cayley": cmd_cayley,
    "involutions": cmd_involutions,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conformal-jordan", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--family", help="SymR, HermC, HermH, SpinFactor or DirectSum:<family>")
    parser.add_argument("--size", type=int, help="matrix size r, or d for the spin factor")
    parser.add_argument("--involution", help='involution label such as "Pierce(1)"')
    parser.add_argument("--sign", choices=["+", "-"])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int)
    parser.add_argument("--json", dest="json_path", metavar="PATH", help="also write the report to PATH")
    parser.add_argument("--tol-algebra", type=float)
    parser.add_argument("--tol-exp", type=float)
    parser.add_argument("--region", choices=[r.value for r in Region])
    parser.add_argument("--d", type=int, help="Minkowski dimension for the Lorentzian regions")
    parser.add_argument("--eps", type=float, help="half-height of the probed causal interval")
    parser.add_argument("--j", type=int, help="Pierce index for the positive-cone wedge check")
    parser.add_argument("--max-rank", type=int)
    return parser


def _emit(document: dict, path: str | None) -> None:
    text = json.dumps(document, indent=2, ensure_ascii=False)
    print(text)
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {k: v for k, v in (("algebra", args.tol_algebra), ("exp", args.tol_exp)) if v is not None}
    try:
        with config.tolerances(**overrides):
            report, ok = COMMANDS[args.command](args)
    except (UsageError, ValueError, ConformalJordanError) as error:
        _emit({"command": args.command, "status": "error", "error": type(error).__name__, "message": str(error)}, args.json_path)
        return EXIT_USAGE
    _emit({"command": args.command, "status": "pass" if ok else "fail", "report": report}, args.json_path)
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
