"""Repository mining: revision history, snapshot analysis, debt deltas.

Talks to git through the system executable (override with the FEATDEBT_GIT
environment variable). History is walked first-parent for an unambiguous
timeline. Snapshots are materialized with ``git archive`` into temporary
directories; the user's work tree is never touched. File renames are not
tracked: a renamed smelly class reads as one debt paid plus one inserted.
"""

from __future__ import annotations

import io
import os
import subprocess
import zipfile
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from fnmatch import fnmatch
from pathlib import Path
from typing import Optional

from featdebt.config import AnalysisConfig
from featdebt.errors import GitError
from featdebt.frontend import build_model, parse_unit
from featdebt.model import CodeModel
from featdebt.smells import SmellFinding, detect_all, finding_key


@dataclass
class Revision:
    id: str
    timestamp: int  # UTC seconds
    author: str
    message: str


@dataclass
class DebtDelta:
    from_rev: str
    to_rev: str
    inserted: set[str]  # finding keys
    paid: set[str]

    def __post_init__(self):
        overlap = self.inserted & self.paid
        if overlap:
            raise GitError(f"delta overlap between inserted and paid: {overlap}")


@dataclass
class LedgerRow:
    revision: str
    date: str  # ISO date of the sample
    inserted: int
    paid: int
    active: int


@dataclass
class DebtLedger:
    interval_days: int
    rows: list[LedgerRow]


def _git_executable() -> str:
    return os.environ.get("FEATDEBT_GIT", "git")


def _run_git(repo_path: str, *args: str) -> bytes:
    cmd = [_git_executable(), "-C", str(repo_path), *args]
    try:
        proc = subprocess.run(cmd, capture_output=True, timeout=120)
    except FileNotFoundError:
        raise GitError(
            f"git executable {_git_executable()!r} not found on PATH"
        ) from None
    if proc.returncode != 0:
        stderr = proc.stderr.decode("utf-8", errors="replace").strip()
        raise GitError(f"git {' '.join(args[:2])} failed: {stderr}")
    return proc.stdout


def _check_repo(repo_path: str) -> None:
    if not Path(repo_path).exists():
        raise GitError(f"repository path {repo_path!r} does not exist")
    try:
        _run_git(repo_path, "rev-parse", "--git-dir")
    except GitError as exc:
        raise GitError(f"{repo_path!r} is not a git repository: {exc}") from None


def _parse_date(value: str, end_of_day: bool = False) -> int:
    try:
        day = datetime.strptime(value, "%Y-%m-%d").replace(tzinfo=timezone.utc)
    except ValueError as exc:
        raise GitError(f"bad date {value!r} (expected YYYY-MM-DD): {exc}") from None
    if end_of_day:
        day = day + timedelta(days=1) - timedelta(seconds=1)
    return int(day.timestamp())


def list_revisions(
    repo_path: str,
    from_date: Optional[str] = None,
    to_date: Optional[str] = None,
    branch: str = "HEAD",
) -> list[Revision]:
    """First-parent history of ``branch``, oldest to newest, filtered to
    the inclusive [from_date, to_date] window of commit timestamps."""
    _check_repo(repo_path)
    fmt = "%H%x1f%ct%x1f%an%x1f%s%x1e"
    try:
        raw = _run_git(
            repo_path,
            "log",
            "--first-parent",
            "--reverse",
            f"--format={fmt}",
            branch,
            "--",
        )
    except GitError as exc:
        if "unknown revision" in str(exc) or "bad revision" in str(exc):
            raise GitError(f"unknown branch or revision {branch!r}") from None
        raise
    lo = _parse_date(from_date) if from_date else None
    hi = _parse_date(to_date, end_of_day=True) if to_date else None
    revisions = []
    for record in raw.decode("utf-8", errors="replace").split("\x1e"):
        record = record.strip()
        if not record:
            continue
        sha, ts, author, message = (record.split("\x1f") + ["", "", ""])[:4]
        ts = int(ts)
        if lo is not None and ts < lo:
            continue
        if hi is not None and ts > hi:
            continue
        revisions.append(Revision(id=sha, timestamp=ts, author=author, message=message))
    return revisions


def _extract_sources(repo_path: str, rev: str, cfg: AnalysisConfig) -> dict[str, str]:
    """Path -> source text for files at ``rev`` matching the configured
    globs, without touching the work tree. Zip format: unlike tar, git's
    zip output of an empty tree is readable."""
    data = _run_git(repo_path, "archive", "--format=zip", rev)
    sources: dict[str, str] = {}
    with zipfile.ZipFile(io.BytesIO(data)) as archive:
        for info in archive.infolist():
            if info.is_dir():
                continue
            rel = info.filename
            if not any(fnmatch(rel, pat) for pat in cfg.frontend.include):
                continue
            if any(fnmatch(rel, pat) for pat in cfg.frontend.exclude):
                continue
            sources[rel] = archive.read(info).decode("utf-8", errors="replace")
    return sources


def snapshot_analyze(
    repo_path: str, rev: str, cfg: AnalysisConfig
) -> tuple[CodeModel, list[SmellFinding]]:
    """Analyze the tree at ``rev`` read-only."""
    _check_repo(repo_path)
    sources = _extract_sources(repo_path, rev, cfg)
    units = [parse_unit(text, path) for path, text in sorted(sources.items())]
    model = build_model(units)
    return model, detect_all(model, cfg)


def debt_diff(
    findings_a: list[SmellFinding],
    findings_b: list[SmellFinding],
    from_rev: str = "",
    to_rev: str = "",
) -> DebtDelta:
    """Set difference over finding keys: appearing = inserted, vanishing
    = paid."""
    keys_a = {finding_key(f) for f in findings_a}
    keys_b = {finding_key(f) for f in findings_b}
    return DebtDelta(
        from_rev=from_rev,
        to_rev=to_rev,
        inserted=keys_b - keys_a,
        paid=keys_a - keys_b,
    )


def debt_series(
    repo_path: str,
    from_date: str,
    to_date: str,
    interval_days: int,
    cfg: AnalysisConfig,
    branch: str = "HEAD",
) -> DebtLedger:
    """Sample the history every ``interval_days``: pick the latest revision
    at or before each sample date, diff consecutive samples, accumulate.
    Samples that bring no new revision are skipped."""
    if interval_days < 1:
        raise GitError(f"interval_days must be >= 1, got {interval_days}")
    revisions = list_revisions(repo_path, None, None, branch)
    lo = _parse_date(from_date)
    hi = _parse_date(to_date, end_of_day=True)

    samples: list[tuple[str, Revision]] = []
    seen_rev: Optional[str] = None
    cursor = lo
    while cursor <= hi:
        eligible = [r for r in revisions if r.timestamp <= cursor + 86399]
        if eligible:
            latest = eligible[-1]
            if latest.id != seen_rev:
                date = datetime.fromtimestamp(cursor, tz=timezone.utc).date().isoformat()
                samples.append((date, latest))
                seen_rev = latest.id
        cursor += interval_days * 86400

    rows: list[LedgerRow] = []
    previous: Optional[list[SmellFinding]] = None
    active = 0
    for date, revision in samples:
        _, findings = snapshot_analyze(repo_path, revision.id, cfg)
        if previous is None:
            inserted, paid = 0, 0
            active = len(findings)
        else:
            delta = debt_diff(previous, findings)
            inserted, paid = len(delta.inserted), len(delta.paid)
            active = active + inserted - paid
        rows.append(
            LedgerRow(
                revision=revision.id,
                date=date,
                inserted=inserted,
                paid=paid,
                active=active,
            )
        )
        previous = findings
    return DebtLedger(interval_days=interval_days, rows=rows)


def ledger_csv(ledger: DebtLedger) -> str:
    """RFC-4180 CSV with header: rev,date,inserted,paid,active."""
    import csv

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["rev", "date", "inserted", "paid", "active"])
    for row in ledger.rows:
        writer.writerow([row.revision, row.date, row.inserted, row.paid, row.active])
    return buf.getvalue()
