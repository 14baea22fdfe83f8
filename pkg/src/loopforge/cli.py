"""Command-line driver.

Three commands: ``search`` runs the loop search over a catalog slice and
writes a report directory; ``check`` prints the property record of a loop
file; ``verify-reformulation`` evaluates the six folder conditions on a
group-with-transversal file.

Exit codes: 0 success; 1 invalid configuration or unparseable input; 2 a
resource limit skipped at least one group (the report is still written).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .catalog import load_catalog
from .folder import folder_from_json, verify_reformulation
from .loops import LoopTable
from .report import build_report, run_outcomes
from .search import MODES, RunConfig, SearchLimits


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, not {text}")
    return value


def parse_degrees(spec: str) -> tuple[list[int], bool]:
    """Parse a degree request: a single degree, an inclusive range "A-B", or
    a comma list. Returns (degrees, explicit): explicit lists warn per missing
    degree, ranges only when nothing in the range is covered."""
    spec = spec.strip()
    if "-" in spec:
        left, _, right = spec.partition("-")
        low, high = int(left), int(right)
        if low > high:
            raise ValueError(f"empty degree range {spec!r}")
        degrees = list(range(low, high + 1))
        explicit = False
    else:
        degrees = [int(part) for part in spec.split(",")]
        explicit = True
    if len(set(degrees)) != len(degrees):
        raise ValueError(f"repeated degree in {spec!r}")
    if any(d < 2 for d in degrees):
        raise ValueError("degrees must be at least 2")
    return degrees, explicit


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopforge",
        description="search for simple automorphic loops inside primitive groups",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    search = commands.add_parser(
        "search", help="search catalog groups and write a report directory"
    )
    search.add_argument(
        "--degree", required=True,
        help="degree to search: N, an inclusive range A-B, or a comma list",
    )
    search.add_argument("--mode", choices=MODES, default="ra")
    search.add_argument("--catalog", help="catalog path (default: $LOOPFORGE_CATALOG or packaged)")
    search.add_argument("--output", default="loopforge-report", help="report directory")
    search.add_argument(
        "--iso-filter", action="store_true",
        help="count isomorphism classes in the aggregate table",
    )
    search.add_argument(
        "--use-known-exclusions", action="store_true",
        help="skip entries catalogued as never occurring as multiplication groups",
    )
    search.add_argument(
        "--force-search", action="store_true",
        help="search every entry, overriding all prefilters",
    )
    search.add_argument(
        "--no-skip-4transitive", dest="skip_four_transitive", action="store_false",
        help="do not skip 4-transitive groups",
    )
    search.add_argument(
        "--no-skip-solvable", dest="skip_solvable", action="store_false",
        help="do not skip solvable groups in aut/caut modes",
    )
    search.add_argument(
        "--no-affine-prune", dest="affine_prune", action="store_false",
        help="do not prune affine entries by stabilizer class sizes in caut mode",
    )
    search.add_argument("--coset-limit", type=_positive, default=SearchLimits.coset_elements,
                        help="largest centralizer coset to enumerate")
    search.add_argument("--class-limit", type=_positive, default=SearchLimits.class_enumeration,
                        help="largest stabilizer to scan for conjugacy classes")
    search.add_argument("--clique-limit", type=_positive, default=SearchLimits.dfs_nodes,
                        help="node budget for the orbit-selection search")
    search.add_argument("--jobs", type=_positive, default=1, help="worker processes")

    check = commands.add_parser("check", help="print the property record of a loop file")
    check.add_argument("loopfile", help="loop JSON file ({\"order\": d, \"table\": [[..1-indexed..]]})")
    check.add_argument("--json", action="store_true", help="emit the record as JSON")

    verify = commands.add_parser(
        "verify-reformulation",
        help="evaluate the six folder conditions on a group-with-transversal file",
    )
    verify.add_argument("folderfile", help="folder JSON file (group and transversal)")
    verify.add_argument("--catalog", help="catalog used to resolve group names")
    return parser


def cmd_search(args: argparse.Namespace) -> int:
    try:
        degrees, explicit = parse_degrees(args.degree)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        entries = load_catalog(args.catalog)
    except (OSError, ValueError) as exc:
        print(f"error: cannot load catalog: {exc}", file=sys.stderr)
        return 1
    config = RunConfig(
        mode=args.mode,
        skip_four_transitive=args.skip_four_transitive,
        skip_solvable=args.skip_solvable,
        affine_prune=args.affine_prune,
        force_search=args.force_search,
        limits=SearchLimits(
            coset_elements=args.coset_limit,
            class_enumeration=args.class_limit,
            dfs_nodes=args.clique_limit,
        ),
    )
    wanted = set(degrees)
    covered = {entry.degree for entry in entries}
    warnings = []
    if explicit:
        for degree in degrees:
            if degree not in covered:
                warnings.append(f"catalog has no entries of degree {degree}")
    elif not (wanted & covered):
        warnings.append(
            f"catalog has no entries of any degree in {degrees[0]}-{degrees[-1]}"
        )
    selected = [entry for entry in entries if entry.degree in wanted]

    outcomes = run_outcomes(
        selected, config, jobs=args.jobs, use_known_exclusions=args.use_known_exclusions
    )
    report = build_report(
        outcomes,
        config,
        requested_degrees=degrees,
        iso_filter=args.iso_filter,
        use_known_exclusions=args.use_known_exclusions,
        warnings=warnings,
    )
    report.write(args.output)

    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    for group in report.document["groups"]:
        state = group["decision"]
        if group["reason"]:
            state += f" ({group['reason']})"
        print(f"{group['name']:<24} degree {group['degree']:>4}  {state:<32} "
              f"loops {len(group['loops'])}")
    header = ("order", "searched", "skipped", "found", "simple-nonassoc", "classes")
    print(("{:>6} " * len(header)).format(*header).rstrip())
    for row in report.aggregate_rows():
        classes = "-" if row["classes"] is None else row["classes"]
        print(f"{row['order']:>6} {row['groups_searched']:>8} {row['groups_skipped']:>7} "
              f"{row['loops_found']:>5} {row['simple_nonassociative']:>15} {classes:>7}")
    code = report.exit_code()
    print(f"report written to {Path(args.output)}")
    return code


_CHECK_FIELDS = (
    "order",
    "associative",
    "commutative",
    "flexible",
    "aaip",
    "has_two_sided_inverses",
    "exponent",
    "left_exponent",
    "powers_agree",
    "right_automorphic",
    "automorphic",
    "automorphic_via_conjugations",
    "simple",
    "simple_via_subloops",
    "rmlt_order",
    "mlt_order",
)


def loop_record(table: LoopTable) -> dict:
    """The full property record the check command reports."""
    properties = table.properties()
    record = {
        "order": table.order,
        "right_automorphic": table.is_right_automorphic(),
        "automorphic": table.is_automorphic(),
        "automorphic_via_conjugations": table.is_automorphic_via_conjugations(),
        "simple": table.is_simple(),
        "simple_via_subloops": table.is_simple_via_subloops(),
        "rmlt_order": table.rmlt().order(),
        "mlt_order": table.mlt().order(),
    }
    for name in (
        "associative", "commutative", "flexible", "aaip",
        "has_two_sided_inverses", "exponent", "left_exponent", "powers_agree",
    ):
        record[name] = getattr(properties, name)
    return {name: record[name] for name in _CHECK_FIELDS}


def cmd_check(args: argparse.Namespace) -> int:
    import json

    try:
        text = Path(args.loopfile).read_text(encoding="utf-8")
        table = LoopTable.from_json(text)
    except (OSError, ValueError) as exc:
        print(f"error: invalid loop file: {exc}", file=sys.stderr)
        return 1
    record = loop_record(table)
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        for name, value in record.items():
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif value is None:
                value = "none"
            print(f"{name}: {value}")
    return 0


_CONDITION_LINES = (
    ("primitive_of_two_power_degree", "(a) primitive of two-power degree"),
    ("right_transversal", "(b) right transversal to the point stabilizer"),
    ("generates_group", "(c) transversal generates the group"),
    ("inverse_commutators_fix_base", "(d) inverse commutators fix the base point"),
    ("stabilizer_invariant", "(e) transversal is stabilizer-invariant"),
    ("squares_fix_base", "(f) squares fix the base point"),
)


def cmd_verify_reformulation(args: argparse.Namespace) -> int:
    try:
        text = Path(args.folderfile).read_text(encoding="utf-8")
        folder = folder_from_json(text, catalog_path=args.catalog)
    except (OSError, ValueError) as exc:
        print(f"error: invalid folder file: {exc}", file=sys.stderr)
        return 1
    report = verify_reformulation(folder)
    for field, label in _CONDITION_LINES:
        value = "true" if getattr(report, field) else "false"
        print(f"{label}: {value}")
    print(f"all conditions hold: {'true' if report.all_hold() else 'false'}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "search":
        return cmd_search(args)
    if args.command == "check":
        return cmd_check(args)
    return cmd_verify_reformulation(args)


if __name__ == "__main__":
    sys.exit(main())
