"""The primitive-group catalog: cycle notation, JSONL entries, verification.

Catalog files are JSON Lines, one group per line:

    {"name": "...", "degree": d, "generators": ["(1,2,3)(4,5)", ...],
     "tags": [...], "provenance": "..."}

Cycle strings are 1-indexed, disjoint, each cycle rotated to start at its
least point, cycles sorted by least point; the identity is "()". Tags mark
facts the search may rely on; the two "-claimed" tags are recomputed under
strict loading, the others are trusted assertions about provenance.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .groups import PermGroup
from .perms import MAX_DEGREE, Perm

ENV_CATALOG = "LOOPFORGE_CATALOG"
DEFAULT_CATALOG = Path(__file__).parent / "data" / "catalog.jsonl"

KNOWN_TAGS = frozenset(
    {"affine", "known-not-mlt", "four-transitive-claimed", "solvable-claimed"}
)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse disjoint cycle notation like "(1,2,3)(4,5)" into a Perm of the
    given degree. Errors carry the character position."""
    if not 2 <= degree <= MAX_DEGREE:
        raise ValueError(f"degree {degree} out of supported range 2..{MAX_DEGREE}")
    images = bytearray(range(degree))
    seen = bytearray(degree)
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def fail(message: str) -> ValueError:
        return ValueError(f"cycle string, position {pos}: {message}")

    skip_ws()
    if pos == n:
        raise fail("empty cycle string (the identity is '()')")
    if text[pos:].strip() == "()":
        return Perm.identity(degree)
    while True:
        skip_ws()
        if pos == n:
            break
        if text[pos] != "(":
            raise fail(f"expected '(', found {text[pos]!r}")
        pos += 1
        cycle: list[int] = []
        while True:
            skip_ws()
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise fail("expected a point number")
            point = int(text[start:pos]) - 1
            if not 0 <= point < degree:
                pos = start
                raise fail(f"point {point + 1} out of range 1..{degree}")
            if seen[point]:
                pos = start
                raise fail(f"point {point + 1} appears twice; cycles must be disjoint")
            seen[point] = 1
            cycle.append(point)
            skip_ws()
            if pos == n:
                raise fail("unterminated cycle")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise fail(f"expected ',' or ')', found {text[pos]!r}")
        if len(cycle) < 2:
            raise fail("cycles need at least two points")
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return Perm(bytes(images))


def format_cycles(p: Perm) -> str:
    """Canonical disjoint cycle notation, 1-indexed; identity is '()'."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join(
        "(" + ",".join(str(point + 1) for point in cycle) + ")" for cycle in cycles
    )


@dataclass(frozen=True)
class CatalogEntry:
    """One primitive group: named generators plus trusted fact tags."""

    name: str
    degree: int
    generators: tuple[Perm, ...]
    tags: frozenset[str] = field(default_factory=frozenset)
    provenance: str = ""

    def group(self) -> PermGroup:
        return PermGroup(self.generators, self.degree)

    def to_json_line(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "degree": self.degree,
                "generators": [format_cycles(g) for g in self.generators],
                "tags": sorted(self.tags),
                "provenance": self.provenance,
            }
        )


def _parse_entry(data: object, where: str) -> CatalogEntry:
    if not isinstance(data, dict):
        raise ValueError(f"{where}: entry must be a JSON object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError(f"{where}: missing or empty 'name'")
    degree = data.get("degree")
    if not isinstance(degree, int) or degree < 2:
        raise ValueError(f"{where}: 'degree' must be an integer >= 2")
    raw_gens = data.get("generators")
    if not isinstance(raw_gens, list) or not raw_gens:
        raise ValueError(f"{where}: 'generators' must be a non-empty list")
    try:
        generators = tuple(parse_cycles(text, degree) for text in raw_gens)
    except ValueError as exc:
        raise ValueError(f"{where}: {exc}") from exc
    tags = data.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ValueError(f"{where}: 'tags' must be a list of strings")
    unknown = set(tags) - KNOWN_TAGS
    if unknown:
        raise ValueError(f"{where}: unknown tags {sorted(unknown)}")
    provenance = data.get("provenance", "")
    if not isinstance(provenance, str):
        raise ValueError(f"{where}: 'provenance' must be a string")
    return CatalogEntry(name, degree, generators, frozenset(tags), provenance)


def _verify_claimed_tags(entry: CatalogEntry, where: str) -> None:
    group = entry.group()
    if "four-transitive-claimed" in entry.tags and not group.is_k_transitive(4):
        raise ValueError(f"{where}: {entry.name} is tagged 4-transitive but is not")
    if "solvable-claimed" in entry.tags and not group.is_solvable():
        raise ValueError(f"{where}: {entry.name} is tagged solvable but is not")


def load_catalog(path: str | Path | None = None, strict: bool = False) -> list[CatalogEntry]:
    """Load a JSONL catalog. The path defaults to $LOOPFORGE_CATALOG, then to
    the packaged data. Strict loading recomputes the '-claimed' tags."""
    if path is None:
        path = os.environ.get(ENV_CATALOG) or DEFAULT_CATALOG
    path = Path(path)
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            where = f"{path.name}:{lineno}"
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{where}: invalid JSON: {exc}") from exc
            entry = _parse_entry(data, where)
            if entry.name in names:
                raise ValueError(f"{where}: duplicate entry name {entry.name!r}")
            names.add(entry.name)
            if strict:
                _verify_claimed_tags(entry, where)
            entries.append(entry)
    return entries


def groups_of_degree(
    entries: list[CatalogEntry], degree: int, use_known_exclusions: bool = False
) -> list[CatalogEntry]:
    """Catalog entries of one degree, in file order. With exclusions enabled,
    entries whose socle type is already known not to occur as a multiplication
    group are dropped before any search."""
    picked = [e for e in entries if e.degree == degree]
    if use_known_exclusions:
        picked = [e for e in picked if "known-not-mlt" not in e.tags]
    return picked
