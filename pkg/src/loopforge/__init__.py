"""Search for finite simple (right) automorphic loops inside permutation groups."""

from .catalog import CatalogEntry, format_cycles, groups_of_degree, load_catalog, parse_cycles
from .folder import (
    LoopFolder,
    ReformulationReport,
    folder_from_json,
    folder_from_loop,
    loop_from_folder,
    verify_reformulation,
)
from .groups import PermGroup, ResourceLimitError, StabilizerChain
from .isofilter import are_isomorphic, filter_up_to_isomorphism
from .loops import LoopProperties, LoopTable, all_loop_tables
from .perms import Perm
from .report import Report, build_report, run_outcomes
from .search import (
    GroupOutcome,
    LoopRecord,
    RunConfig,
    SearchLimits,
    SearchStats,
    search_entries,
    search_group,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry",
    "GroupOutcome",
    "LoopFolder",
    "LoopProperties",
    "LoopRecord",
    "LoopTable",
    "Perm",
    "PermGroup",
    "ReformulationReport",
    "Report",
    "ResourceLimitError",
    "RunConfig",
    "SearchLimits",
    "SearchStats",
    "StabilizerChain",
    "all_loop_tables",
    "are_isomorphic",
    "build_report",
    "filter_up_to_isomorphism",
    "folder_from_json",
    "folder_from_loop",
    "format_cycles",
    "groups_of_degree",
    "load_catalog",
    "loop_from_folder",
    "parse_cycles",
    "run_outcomes",
    "search_entries",
    "search_group",
    "verify_reformulation",
    "__version__",
]
