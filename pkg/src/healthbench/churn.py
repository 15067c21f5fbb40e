"""Git history mining: change counts over a trailing one-year window,
hotspot selection, and codebase inception.

History is read by invoking the standard git executable. Renames are
followed so churn accrues to the surviving path; merge commits contribute
no paths (they still participate in the inception scan).
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass, field
from datetime import datetime, timedelta, timezone

from .errors import NoHistoryError, RepoAccessError
from .stats import cumulative_percentile

WINDOW_DAYS = 365
HOTSPOT_PERCENTILE = 0.9
HOTSPOT_MIN_COUNT = 2

_COMMIT_MARK = "\x01"


@dataclass(frozen=True)
class ChurnMap:
    window_start: datetime
    window_end: datetime
    changes: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.window_start >= self.window_end:
            raise ValueError("window_start must precede window_end")

    def to_doc(self) -> dict:
        """Structured export: window plus per-path change counts."""
        return {
            "window_start": self.window_start.isoformat(),
            "window_end": self.window_end.isoformat(),
            "changes": dict(sorted(self.changes.items())),
        }


def _run_git(repo: str, *args: str) -> str:
    try:
        proc = subprocess.run(
            ["git", "-C", repo, *args],
            capture_output=True,
            text=True,
            timeout=300,
        )
    except (OSError, subprocess.TimeoutExpired) as exc:
        raise RepoAccessError(f"repo access: {exc}") from exc
    if proc.returncode != 0:
        stderr = proc.stderr.strip()
        if (
            "does not have any commits" in stderr
            or "bad revision" in stderr
            or "unknown revision" in stderr
        ):
            raise NoHistoryError("no history")
        raise RepoAccessError(f"repo access: {stderr}")
    return proc.stdout


def mine_history(repo: str, as_of: datetime) -> tuple[ChurnMap, datetime]:
    """Change counts in [as_of - 365d, as_of] plus the earliest commit instant.

    Both window ends are inclusive. Each commit increments every path it
    touches; rename entries count against the path's final name.
    """
    if as_of.tzinfo is None:
        raise ValueError("as_of must be timezone-aware")
    _run_git(repo, "rev-parse", "--git-dir")  # distinguishes access from history errors

    log = _run_git(
        repo,
        "log",
        "HEAD",
        "--name-status",
        "--find-renames",
        f"--format={_COMMIT_MARK}%H %ct",
    )

    window_end = as_of
    window_start = as_of - timedelta(days=WINDOW_DAYS)
    counts: dict[str, int] = {}
    final_name: dict[str, str] = {}  # name at the current point of the walk -> name at HEAD
    earliest: datetime | None = None
    in_window = False

    for line in log.splitlines():
        if line.startswith(_COMMIT_MARK):
            _, ts_text = line[1:].split(" ")
            when = datetime.fromtimestamp(int(ts_text), tz=timezone.utc)
            if earliest is None or when < earliest:
                earliest = when
            in_window = window_start <= when <= window_end
            continue
        if not line or "\t" not in line:
            continue
        status, _, rest = line.partition("\t")
        if status.startswith("R"):
            old, _, new = rest.partition("\t")
            resolved = final_name.pop(new, new)
            final_name[old] = resolved
        elif status.startswith("C"):
            _, _, dst = rest.partition("\t")
            resolved = final_name.get(dst, dst)
        else:  # A, M, D, T
            resolved = final_name.get(rest, rest)
        if in_window:
            counts[resolved] = counts.get(resolved, 0) + 1

    if earliest is None:
        raise NoHistoryError("no history")
    return ChurnMap(window_start=window_start, window_end=window_end, changes=counts), earliest


def select_hotspots(
    churn: ChurnMap,
    percentile: float = HOTSPOT_PERCENTILE,
    min_count: int = HOTSPOT_MIN_COUNT,
) -> set[str]:
    """Top-decile-by-count files (count >= min_count), never empty on non-empty churn."""
    if not churn.changes:
        return set()
    values = [float(c) for c in churn.changes.values()]
    cutoff = cumulative_percentile(values, [1.0] * len(values), percentile)
    hot = {p for p, c in churn.changes.items() if c >= min_count and c >= cutoff}
    if hot:
        return hot
    top = max(churn.changes.values())
    return {min(p for p, c in churn.changes.items() if c == top)}
