"""Search runs over catalog slices, and their on-disk reports.

A run maps a list of catalog entries through the per-group search (optionally
on a worker pool) and renders the outcomes into a report directory:
``report.json`` (the full machine-readable record), ``aggregate.csv`` (the
per-order summary table), ``aggregate.png`` (the same table as a bar chart),
and one JSON file per found loop under ``loops/`` beside an index.

Every artifact is a pure function of the catalog slice and the options, so
runs with equal configuration produce byte-identical files regardless of
worker count; nothing time- or host-dependent is written. Worker results are
merged back in catalog order.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path

from .catalog import CatalogEntry
from .isofilter import filter_up_to_isomorphism
from .loops import LoopTable
from .search import GroupOutcome, LoopRecord, RunConfig, search_group

SCHEMA = "loopforge-report/1"


def _search_one(task: tuple[CatalogEntry, RunConfig]) -> GroupOutcome:
    return search_group(*task)


def run_outcomes(
    entries: list[CatalogEntry],
    config: RunConfig,
    jobs: int = 1,
    use_known_exclusions: bool = False,
) -> list[GroupOutcome]:
    """Search the entries, in order. Entries excluded by their known-not-mlt
    tag are reported as skipped without being searched."""
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, not {jobs}")
    excluded = {
        entry.name
        for entry in entries
        if use_known_exclusions and "known-not-mlt" in entry.tags
    }
    tasks = [(entry, config) for entry in entries if entry.name not in excluded]
    if jobs == 1 or len(tasks) <= 1:
        searched = [_search_one(task) for task in tasks]
    else:
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            searched = pool.map(_search_one, tasks, chunksize=1)
    by_name = {outcome.name: outcome for outcome in searched}
    outcomes = []
    for entry in entries:
        if entry.name in excluded:
            outcomes.append(
                GroupOutcome(
                    name=entry.name,
                    degree=entry.degree,
                    mode=config.mode,
                    decision="skipped",
                    reason="known-not-mlt",
                    loops=(),
                    stats=None,
                )
            )
        else:
            outcomes.append(by_name[entry.name])
    return outcomes


@dataclass(frozen=True)
class Report:
    """A rendered run: the report document plus the loop files it references.

    ``document`` is the content of report.json; ``loop_files`` maps paths
    relative to the report directory to file contents.
    """

    document: dict
    loop_files: tuple[tuple[str, str], ...]

    def aggregate_rows(self) -> list[dict]:
        return self.document["aggregate"]

    def exit_code(self) -> int:
        """2 when a resource limit skipped any group, else 0."""
        for group in self.document["groups"]:
            reason = group["reason"]
            if reason is not None and reason.startswith("resource-limit"):
                return 2
        return 0

    def write(self, outdir: str | Path) -> None:
        outdir = Path(outdir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "report.json").write_text(
            _canonical_json(self.document), encoding="utf-8"
        )
        (outdir / "aggregate.csv").write_text(
            _aggregate_csv(self.aggregate_rows()), encoding="utf-8"
        )
        (outdir / "aggregate.png").write_bytes(
            _aggregate_png(self.aggregate_rows(), self.document["mode"])
        )
        loops_dir = outdir / "loops"
        loops_dir.mkdir(exist_ok=True)
        for stale in loops_dir.glob("*.json"):
            stale.unlink()
        for relative, content in self.loop_files:
            (outdir / relative).write_text(content, encoding="utf-8")
        (outdir / "loops" / "index.json").write_text(
            _canonical_json(self.document["loop_index"]), encoding="utf-8"
        )


def _canonical_json(data: object) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _slug(name: str) -> str:
    # "^" survives as "e" so 3^4:(8^2:2) and 3^4:(8:2):2 stay distinguishable
    lowered = name.lower().replace("^", "e")
    parts = "".join(c if c.isalnum() else " " for c in lowered).split()
    return "-".join(parts)


def _loop_entry(record: LoopRecord, file: str) -> dict:
    return {
        "file": file,
        "order": record.table.order,
        "associative": record.associative,
        "commutative": record.commutative,
        "simple": record.simple,
        "simple_via_subloops": record.simple_via_subloops,
        "right_automorphic": record.right_automorphic,
        "automorphic": record.automorphic,
    }


def _stats_entry(outcome: GroupOutcome) -> dict | None:
    stats = outcome.stats
    if stats is None:
        return None
    return {
        "point_orbits": stats.point_orbits,
        "orbit_sizes": list(stats.orbit_sizes),
        "candidate_counts": list(stats.candidate_counts),
        "orbit_counts": list(stats.orbit_counts),
        "dfs_nodes": stats.dfs_nodes,
        "raw_loops": stats.raw_loops,
    }


def build_report(
    outcomes: list[GroupOutcome],
    config: RunConfig,
    requested_degrees: list[int],
    iso_filter: bool = False,
    use_known_exclusions: bool = False,
    warnings: list[str] | None = None,
) -> Report:
    """Render outcomes into a report. The worker count is deliberately not
    recorded: it must not influence any emitted byte."""
    groups = []
    loop_files: list[tuple[str, str]] = []
    loop_index = []
    slugs: set[str] = set()
    for outcome in outcomes:
        slug = _slug(outcome.name)
        if outcome.loops:
            if slug in slugs:
                raise ValueError(f"catalog names collide on loop files: {slug!r}")
            slugs.add(slug)
        loops = []
        for k, record in enumerate(outcome.loops, start=1):
            file = f"loops/{slug}.{k}.json"
            loop_files.append((file, record.table.to_json() + "\n"))
            entry = _loop_entry(record, file)
            loops.append(entry)
            loop_index.append({"group": outcome.name, "degree": outcome.degree, **entry})
        groups.append(
            {
                "name": outcome.name,
                "degree": outcome.degree,
                "decision": outcome.decision,
                "reason": outcome.reason,
                "stats": _stats_entry(outcome),
                "loops": loops,
            }
        )
    document = {
        "schema": SCHEMA,
        "mode": config.mode,
        "requested_degrees": sorted(requested_degrees),
        "options": {
            "skip_four_transitive": config.skip_four_transitive,
            "skip_solvable": config.skip_solvable,
            "affine_prune": config.affine_prune,
            "force_search": config.force_search,
            "use_known_exclusions": use_known_exclusions,
            "iso_filter": iso_filter,
            "limits": {
                "coset_elements": config.limits.coset_elements,
                "class_enumeration": config.limits.class_enumeration,
                "dfs_nodes": config.limits.dfs_nodes,
            },
        },
        "warnings": list(warnings or []),
        "groups": groups,
        "aggregate": _aggregate(outcomes, iso_filter),
        "loop_index": loop_index,
    }
    return Report(document=document, loop_files=tuple(loop_files))


def _aggregate(outcomes: list[GroupOutcome], iso_filter: bool) -> list[dict]:
    """Per-order summary in the census layout: groups searched and skipped,
    loops found, the simple non-associative ones, and their isomorphism
    class count when the filter ran."""
    orders = sorted({outcome.degree for outcome in outcomes})
    rows = []
    for order in orders:
        mine = [o for o in outcomes if o.degree == order]
        found = [record for o in mine for record in o.loops]
        census = [r.table for r in found if r.simple and not r.associative]
        rows.append(
            {
                "order": order,
                "groups_searched": sum(1 for o in mine if o.decision == "searched"),
                "groups_skipped": sum(1 for o in mine if o.decision == "skipped"),
                "loops_found": len(found),
                "simple_nonassociative": len(census),
                "classes": len(filter_up_to_isomorphism(census)) if iso_filter else None,
            }
        )
    return rows


_CSV_COLUMNS = (
    "order",
    "groups_searched",
    "groups_skipped",
    "loops_found",
    "simple_nonassociative",
    "classes",
)


def _aggregate_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in rows:
        writer.writerow(["" if row[c] is None else row[c] for c in _CSV_COLUMNS])
    return out.getvalue()


def _aggregate_png(rows: list[dict], mode: str) -> bytes:
    # imported here so table-only callers never pay for the plotting stack
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7.0, 4.0), dpi=100)
    try:
        orders = [row["order"] for row in rows]
        positions = range(len(orders))
        counted = [
            row["simple_nonassociative"] if row["classes"] is None else row["classes"]
            for row in rows
        ]
        label = (
            "isomorphism classes"
            if any(row["classes"] is not None for row in rows)
            else "loops found"
        )
        ax.bar(positions, counted, color="#4878a8")
        for x, count in zip(positions, counted):
            ax.annotate(
                str(count), (x, count), ha="center", va="bottom", fontsize=9
            )
        ax.set_xticks(list(positions))
        ax.set_xticklabels([str(order) for order in orders])
        ax.set_xlabel("loop order")
        ax.set_ylabel(f"simple non-associative {label}")
        ax.set_title(f"search results by order (mode {mode})")
        ax.set_ylim(0, max(counted, default=0) + 1)
        buffer = io.BytesIO()
        # pinned metadata keeps the bytes independent of the library version
        fig.savefig(buffer, format="png", metadata={"Software": "loopforge"})
        return buffer.getvalue()
    finally:
        plt.close(fig)
