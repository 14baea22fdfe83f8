"""Report rendering: files, aggregates, determinism, exit codes."""

import json

import pytest
from loopforge.catalog import CatalogEntry
from loopforge.loops import LoopTable
from loopforge.perms import Perm
from loopforge.report import Report, build_report, run_outcomes
from loopforge.search import RunConfig, SearchLimits

RA = RunConfig(mode="ra")


def _entry(name, degree, cycle_texts, tags=()):
    from loopforge.catalog import parse_cycles

    return CatalogEntry(
        name=name,
        degree=degree,
        generators=tuple(parse_cycles(t, degree) for t in cycle_texts),
        tags=frozenset(tags),
        provenance="test",
    )


C3 = _entry("C3", 3, ["(1,2,3)"])
S3 = _entry("S3", 3, ["(1,2)", "(1,2,3)"])
S4 = _entry("S4", 4, ["(1,2)", "(1,2,3,4)"], tags=("four-transitive-claimed",))
M11ISH = _entry("A4", 4, ["(1,2,3)", "(2,3,4)"], tags=("known-not-mlt",))


def _report(entries, config=RA, **kwargs) -> Report:
    degrees = sorted({e.degree for e in entries})
    outcomes = run_outcomes(entries, config, jobs=kwargs.pop("jobs", 1),
                            use_known_exclusions=kwargs.pop("use_known_exclusions", False))
    return build_report(outcomes, config, requested_degrees=degrees, **kwargs)


def test_toy_catalog_emits_the_cyclic_loop():
    report = _report([C3, S3], iso_filter=True)
    groups = report.document["groups"]
    assert [g["name"] for g in groups] == ["C3", "S3"]
    assert all(g["decision"] == "searched" for g in groups)
    assert [len(g["loops"]) for g in groups] == [1, 1]
    for group in groups:
        loop = group["loops"][0]
        assert loop["associative"] is True
        assert loop["simple"] is True  # prime order
    row = report.aggregate_rows()[0]
    assert row == {
        "order": 3,
        "groups_searched": 2,
        "groups_skipped": 0,
        "loops_found": 2,
        "simple_nonassociative": 0,
        "classes": 0,
    }
    assert report.exit_code() == 0


def test_loop_files_round_trip(tmp_path):
    report = _report([C3, S3], iso_filter=True)
    report.write(tmp_path)
    index = json.loads((tmp_path / "loops" / "index.json").read_text())
    assert len(index) == 2
    for item in index:
        table = LoopTable.from_json((tmp_path / item["file"]).read_text())
        assert table.order == 3
        assert table.is_associative()
    assert {item["group"] for item in index} == {"C3", "S3"}


def test_report_files_are_deterministic_across_jobs(tmp_path):
    for jobs, where in ((1, "one"), (4, "four")):
        outcomes = run_outcomes([C3, S3, S4], RA, jobs=jobs)
        report = build_report(outcomes, RA, requested_degrees=[3, 4], iso_filter=True)
        report.write(tmp_path / where)
    one, four = tmp_path / "one", tmp_path / "four"
    files = sorted(p.relative_to(one) for p in one.rglob("*") if p.is_file())
    assert files == sorted(p.relative_to(four) for p in four.rglob("*") if p.is_file())
    for relative in files:
        assert (one / relative).read_bytes() == (four / relative).read_bytes(), relative


def test_write_clears_stale_loop_files(tmp_path):
    _report([C3, S3]).write(tmp_path)
    stale = tmp_path / "loops" / "c3.1.json"
    assert stale.exists()
    _report([S4]).write(tmp_path)
    assert not stale.exists()
    assert (tmp_path / "loops" / "index.json").exists()


def test_skips_are_reported_not_searched():
    report = _report([S4])
    group = report.document["groups"][0]
    assert group["decision"] == "skipped"
    assert group["reason"] == "four-transitive"
    assert group["stats"] is None
    row = report.aggregate_rows()[0]
    assert row["groups_skipped"] == 1
    assert row["classes"] is None  # no iso filter requested


def test_known_exclusions_skip_without_search():
    outcomes = run_outcomes([M11ISH], RA, use_known_exclusions=True)
    assert outcomes[0].decision == "skipped"
    assert outcomes[0].reason == "known-not-mlt"
    # without the flag the entry is searched like any other
    assert run_outcomes([M11ISH], RA)[0].decision == "searched"


def test_resource_limit_exit_code():
    squeezed = RunConfig(mode="ra", limits=SearchLimits(coset_elements=1))
    report = _report([S3], config=squeezed)
    group = report.document["groups"][0]
    assert group["decision"] == "skipped"
    assert group["reason"].startswith("resource-limit")
    assert report.exit_code() == 2


def test_jobs_must_be_positive():
    with pytest.raises(ValueError, match="jobs"):
        run_outcomes([C3], RA, jobs=0)


def test_colliding_names_refuse_to_emit_loop_files():
    clash = _entry("C3!", 3, ["(1,2,3)"])
    outcomes = run_outcomes([C3, clash], RA)
    with pytest.raises(ValueError, match="collide"):
        build_report(outcomes, RA, requested_degrees=[3])


def test_csv_layout(tmp_path):
    _report([C3, S3, S4], iso_filter=True).write(tmp_path)
    lines = (tmp_path / "aggregate.csv").read_text().splitlines()
    assert lines[0] == (
        "order,groups_searched,groups_skipped,loops_found,simple_nonassociative,classes"
    )
    assert lines[1] == "3,2,0,2,0,0"
    assert lines[2] == "4,0,1,0,0,0"


def test_png_has_png_header(tmp_path):
    _report([C3]).write(tmp_path)
    assert (tmp_path / "aggregate.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_warnings_land_in_document():
    report = _report([C3], warnings=["catalog has no entries of degree 9"])
    assert report.document["warnings"] == ["catalog has no entries of degree 9"]


def test_document_json_is_canonical(tmp_path):
    report = _report([C3, S3], iso_filter=True)
    report.write(tmp_path)
    text = (tmp_path / "report.json").read_text()
    assert text == json.dumps(json.loads(text), indent=2, sort_keys=True) + "\n"


def test_stats_survive_into_document():
    report = _report([S3])
    stats = report.document["groups"][0]["stats"]
    assert stats["point_orbits"] == 1
    assert stats["orbit_sizes"] == [2]
    assert stats["raw_loops"] == 1


def test_search_order_follows_catalog_order_with_pool():
    outcomes = run_outcomes([S4, C3, S3], RA, jobs=3)
    assert [o.name for o in outcomes] == ["S4", "C3", "S3"]


def test_regular_wrapper_round_trip():
    # the emitted loop table really is the transversal: its right translations
    # regenerate a transitive subgroup of the searched group
    outcomes = run_outcomes([S3], RA)
    record = outcomes[0].loops[0]
    rmlt = record.table.rmlt()
    assert rmlt.order() == 3
    group = S3.group()
    assert all(g in group for g in rmlt.generators)


def test_aggregate_groups_by_degree():
    report = _report([C3, S3, S4], iso_filter=True)
    rows = report.aggregate_rows()
    assert [row["order"] for row in rows] == [3, 4]


def test_identity_loop_entry_shape():
    report = _report([C3])
    entry = report.document["groups"][0]["loops"][0]
    assert set(entry) == {
        "file", "order", "associative", "commutative", "simple",
        "simple_via_subloops", "right_automorphic", "automorphic",
    }
    assert entry["file"] == "loops/c3.1.json"


def test_loop_index_matches_group_loops():
    document = _report([C3, S3]).document
    from_groups = [loop["file"] for g in document["groups"] for loop in g["loops"]]
    from_index = [item["file"] for item in document["loop_index"]]
    assert from_groups == from_index


def test_four_transitive_toy_has_no_loop_files():
    report = _report([S4])
    assert report.loop_files == ()


def test_png_identical_for_equal_runs(tmp_path):
    _report([C3, S3], iso_filter=True).write(tmp_path / "a")
    _report([C3, S3], iso_filter=True).write(tmp_path / "b")
    assert (tmp_path / "a" / "aggregate.png").read_bytes() == (
        tmp_path / "b" / "aggregate.png"
    ).read_bytes()


def test_perm_records_pickle_for_workers():
    import pickle

    outcome = run_outcomes([S3], RA)[0]
    clone = pickle.loads(pickle.dumps(outcome))
    assert clone.loops[0].table == outcome.loops[0].table
    assert clone.stats == outcome.stats
    assert isinstance(clone.loops[0].table.right_translation(1), Perm)
