"""Command-line front end: single counts, whole tables, cache persistence.

Numbers are serialized as decimal strings everywhere: the degree-seven
plane count already exceeds the 64-bit range and no consumer should be
forced to parse machine integers.

Exit codes: 0 success, 2 validation error (bad flags, unbalanced
constraints, unusable cache file), 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import Dict, List, Optional, Sequence

from .genus2 import ConsistencyError, Genus2Report, n2_p2_pipeline, n2_p3
from .gw0 import DEFAULT_TABLE, GWKey, GWTable

__all__ = [
    "CACHE_VERSION",
    "CacheError",
    "CacheVersionError",
    "load_cache",
    "store_cache",
    "cmd_compute",
    "cmd_table",
    "main",
]

CACHE_VERSION = 1
CACHE_ENV_VAR = "GENUS2COUNT_CACHE"

_AMBIENT_DIM = {"p2": 2, "p3": 3}


class CacheError(ValueError):
    """The cache file cannot be used; nothing was loaded."""


class CacheVersionError(CacheError):
    """The cache file was written by an incompatible version."""


def store_cache(path: str, table: GWTable) -> None:
    """Write the genus-zero memo table atomically (write-temp-then-rename)."""
    entries: Dict[str, List[dict]] = {"p2": [], "p3": []}
    for key, value in sorted(table.items(), key=lambda kv: (kv[0].ambient_dim, kv[0].degree, kv[0].insertions)):
        ambient = "p2" if key.ambient_dim == 2 else "p3"
        entries[ambient].append(
            {"d": key.degree, "insertions": list(key.insertions), "value": str(value)}
        )
    document = {"version": CACHE_VERSION, "entries": entries}
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(prefix=".gwcache-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=0, sort_keys=True)
            handle.write("\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def load_cache(path: str, table: GWTable) -> int:
    """Load a cache file into `table`; returns the number of entries.

    A version mismatch or any malformed content is rejected before a
    single entry is installed, so a corrupted file never partially
    populates the table.
    """
    with open(path, "r", encoding="utf-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise CacheError(f"cache file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise CacheError(f"cache file {path!r} has an unexpected layout")
    version = document.get("version")
    if version != CACHE_VERSION:
        raise CacheVersionError(
            f"cache file {path!r} has version {version!r}; this build reads version {CACHE_VERSION}"
        )
    staged = []
    entries = document.get("entries")
    if not isinstance(entries, dict):
        raise CacheError(f"cache file {path!r} is missing its entries map")
    for ambient, rows in entries.items():
        if ambient not in _AMBIENT_DIM or not isinstance(rows, list):
            raise CacheError(f"cache file {path!r} has an unknown ambient key {ambient!r}")
        n = _AMBIENT_DIM[ambient]
        for row in rows:
            try:
                key = GWKey(n, int(row["d"]), tuple(int(e) for e in row["insertions"]))
                value = int(row["value"])
            except (KeyError, TypeError, ValueError) as exc:
                raise CacheError(f"cache file {path!r} has a malformed entry: {row!r}") from exc
            staged.append((key, value))
    for key, value in staged:
        table.record(key, value)
    return len(staged)


def _report_json_dict(report: Genus2Report, show_intermediates: bool) -> dict:
    intermediates = (
        {name: str(value) for name, value in sorted(report.intermediates.items())}
        if show_intermediates
        else {}
    )
    return {
        "ambient": "p2" if report.ambient_dim == 2 else "p3",
        "degree": str(report.degree),
        "constraints": {"points": str(report.points), "lines": str(report.lines)},
        "rt": str(report.rt),
        "cr": str(report.cr),
        "n2": str(report.n2),
        "intermediates": intermediates,
    }


_COLUMNS = ("ambient", "degree", "points", "lines", "rt", "cr", "n2")


def _report_row(report: Genus2Report) -> List[str]:
    return [
        "p2" if report.ambient_dim == 2 else "p3",
        str(report.degree),
        str(report.points),
        str(report.lines),
        str(report.rt),
        str(report.cr),
        str(report.n2),
    ]


def _render_table(rows: List[List[str]]) -> str:
    headers = list(_COLUMNS)
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    def fmt(cells: Sequence[str]) -> str:
        return "| " + " | ".join(c.rjust(w) for c, w in zip(cells, widths)) + " |"
    lines = [fmt(headers), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    lines.extend(fmt(row) for row in rows)
    return "\n".join(lines)


def _render_csv(rows: List[List[str]]) -> str:
    lines = [",".join(_COLUMNS)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines)


def _emit_reports(
    reports: List[Genus2Report], fmt: str, show_intermediates: bool, out
) -> None:
    if fmt == "json":
        payload = [_report_json_dict(r, show_intermediates) for r in reports]
        document = payload[0] if len(payload) == 1 else payload
        out.write(json.dumps(document, indent=2, sort_keys=False))
        out.write("\n")
        return
    rows = [_report_row(r) for r in reports]
    out.write(_render_csv(rows) if fmt == "csv" else _render_table(rows))
    out.write("\n")
    if show_intermediates and fmt != "csv":
        for report in reports:
            out.write(
                f"# intermediates d={report.degree} "
                f"({report.points},{report.lines})\n"
            )
            for name, value in sorted(report.intermediates.items()):
                out.write(f"{name} = {value}\n")


def _compute_reports(args: argparse.Namespace, table: GWTable) -> List[Genus2Report]:
    if args.ambient == "p2":
        if args.points is not None or args.lines is not None:
            raise ValueError("plane constraints are fixed at 3d - 2 points; drop --points/--lines")
        return [n2_p2_pipeline(args.degree, table)]
    points = args.points if args.points is not None else 0
    lines = args.lines if args.lines is not None else 0
    if 2 * points + lines != 4 * args.degree - 3:
        raise ValueError("2p+q must equal 4d-3")
    return [n2_p3(args.degree, points, lines, table)]


def _table_reports(args: argparse.Namespace, table: GWTable) -> List[Genus2Report]:
    if args.ambient == "p2":
        if args.max_degree is None:
            raise ValueError("table p2 requires --max-degree")
        return [n2_p2_pipeline(d, table) for d in range(1, args.max_degree + 1)]
    if args.degree is None:
        raise ValueError("table p3 requires --degree")
    d = args.degree
    reports = []
    for points in range((4 * d - 3) // 2, -1, -1):
        lines = 4 * d - 3 - 2 * points
        reports.append(n2_p3(d, points, lines, table))
    return reports


def cmd_compute(args: argparse.Namespace, table: GWTable, out) -> int:
    reports = _compute_reports(args, table)
    _emit_reports(reports, args.format, args.show_intermediates, out)
    return 0


def cmd_table(args: argparse.Namespace, table: GWTable, out) -> int:
    reports = _table_reports(args, table)
    _emit_reports(reports, args.format, getattr(args, "show_intermediates", False), out)
    return 0


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--cache", default=None, help="path of the genus-zero memo cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genus2count",
        description="Exact genus-two curve counts in P^2 and P^3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="one count for a single constraint tuple")
    compute.add_argument("ambient", choices=("p2", "p3"))
    compute.add_argument("--degree", type=int, required=True)
    compute.add_argument("--points", type=int, default=None)
    compute.add_argument("--lines", type=int, default=None)
    compute.add_argument("--show-intermediates", action="store_true")
    _add_common_flags(compute)

    table = sub.add_parser("table", help="a whole table of counts")
    table.add_argument("ambient", choices=("p2", "p3"))
    table.add_argument("--max-degree", type=int, default=None, help="p2: degrees 1..D")
    table.add_argument("--degree", type=int, default=None, help="p3: all admissible (p, q)")
    table.add_argument("--show-intermediates", action="store_true")
    _add_common_flags(table)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    cache_path = os.environ.get(CACHE_ENV_VAR) or args.cache
    table = DEFAULT_TABLE
    if cache_path and os.path.exists(cache_path):
        try:
            loaded = load_cache(cache_path, table)
        except CacheError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"cache: loaded {loaded} entries from {cache_path}", file=sys.stderr)

    try:
        if args.command == "compute":
            status = cmd_compute(args, table, out)
        else:
            status = cmd_table(args, table, out)
    except ConsistencyError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if cache_path:
        store_cache(cache_path, table)
        stats = table.stats()
        print(
            f"cache: stored {stats['entries']} entries to {cache_path} "
            f"({stats['hits']} hits this run)",
            file=sys.stderr,
        )
    return status


if __name__ == "__main__":
    raise SystemExit(main())
