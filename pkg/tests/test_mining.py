"""Repository mining against the scripted three-commit fixture repo."""

import os
import subprocess

import pytest

from conftest import GOD_KEY, LONG_KEY, _git
from featdebt.config import AnalysisConfig
from featdebt.errors import GitError
from featdebt.mining import (
    debt_diff,
    debt_series,
    ledger_csv,
    list_revisions,
    snapshot_analyze,
)
from featdebt.smells import finding_key


def keys(findings):
    return {finding_key(f) for f in findings}


def test_list_revisions_three_commits_in_creation_order(history_repo):
    repo, shas = history_repo
    revs = list_revisions(str(repo))
    assert [r.id for r in revs] == shas
    assert [r.message for r in revs] == [
        "initial corpus",
        "add motor service",
        "split motor, add batch job",
    ]
    assert all(r.author == "Fixture Author" for r in revs)
    timestamps = [r.timestamp for r in revs]
    assert timestamps == sorted(timestamps)


def test_list_revisions_window_excluding_all(history_repo):
    repo, _ = history_repo
    assert list_revisions(str(repo), "2030-01-01", "2030-12-31") == []


def test_list_revisions_window_partial(history_repo):
    repo, shas = history_repo
    revs = list_revisions(str(repo), "2024-01-02", "2024-01-02")
    assert [r.id for r in revs] == [shas[1]]


def test_fresh_repo_single_commit(tmp_path):
    repo = tmp_path / "fresh"
    repo.mkdir()
    _git(repo, "init", "-q")
    (repo / "One.java").write_text("class One { }\n")
    _git(repo, "add", "-A")
    _git(repo, "commit", "-q", "-m", "only", date="2024-02-01T00:00:00+00:00")
    revs = list_revisions(str(repo))
    assert len(revs) == 1 and revs[0].message == "only"


def test_not_a_repo_diagnostic(tmp_path):
    plain = tmp_path / "plain"
    plain.mkdir()
    with pytest.raises(GitError) as err:
        list_revisions(str(plain))
    assert "not a git repository" in str(err.value)


def test_missing_path_diagnostic(tmp_path):
    with pytest.raises(GitError) as err:
        list_revisions(str(tmp_path / "nope"))
    assert "does not exist" in str(err.value)


def test_unknown_branch_diagnostic(history_repo):
    repo, _ = history_repo
    with pytest.raises(GitError) as err:
        list_revisions(str(repo), branch="no-such-branch")
    assert "no-such-branch" in str(err.value)


def test_git_executable_override_missing(history_repo, monkeypatch):
    repo, _ = history_repo
    monkeypatch.setenv("FEATDEBT_GIT", "definitely-not-a-git-binary")
    with pytest.raises(GitError) as err:
        list_revisions(str(repo))
    assert "not found" in str(err.value)


def test_snapshot_rev1_is_clean(history_repo, default_config):
    repo, shas = history_repo
    model, findings = snapshot_analyze(str(repo), shas[0], default_config)
    assert set(model.files) == {"hist/Alpha.java", "hist/Beta.java"}
    assert findings == []


def test_snapshot_rev2_has_planted_god_class(history_repo, default_config):
    repo, shas = history_repo
    _, findings = snapshot_analyze(str(repo), shas[1], default_config)
    assert keys(findings) == {GOD_KEY}


def test_snapshot_rev3_swaps_god_for_long_method(history_repo, default_config):
    repo, shas = history_repo
    _, findings = snapshot_analyze(str(repo), shas[2], default_config)
    assert keys(findings) == {LONG_KEY}


def test_snapshot_empty_tree(tmp_path, default_config):
    repo = tmp_path / "empty"
    repo.mkdir()
    _git(repo, "init", "-q")
    _git(
        repo,
        "commit",
        "-q",
        "--allow-empty",
        "-m",
        "empty tree",
        date="2024-03-01T00:00:00+00:00",
    )
    sha = _git(repo, "rev-parse", "HEAD")
    model, findings = snapshot_analyze(str(repo), sha, default_config)
    assert model.files == {} and findings == []


def test_snapshot_does_not_touch_work_tree(history_repo, default_config):
    repo, shas = history_repo
    before = subprocess.run(
        ["git", "-C", str(repo), "status", "--porcelain"],
        capture_output=True,
        text=True,
    ).stdout
    snapshot_analyze(str(repo), shas[0], default_config)
    after = subprocess.run(
        ["git", "-C", str(repo), "status", "--porcelain"],
        capture_output=True,
        text=True,
    ).stdout
    assert before == after == ""


def test_debt_diff_set_differences():
    from featdebt.smells import SmellFinding

    def f(key):
        type_, entity = key.split("|", 1)
        return SmellFinding(type_, entity, "x.java", {"MLOC": 1})

    a = [f("LongMethod|k1"), f("GodClass|k2")]
    b = [f("GodClass|k2"), f("DataClass|k3")]
    delta = debt_diff(a, b)
    assert delta.inserted == {"DataClass|k3"}
    assert delta.paid == {"LongMethod|k1"}
    same = debt_diff(a, a)
    assert same.inserted == set() and same.paid == set()
    swapped = debt_diff(b, a)
    assert swapped.inserted == delta.paid and swapped.paid == delta.inserted


def test_planted_history_diff(history_repo, default_config):
    repo, shas = history_repo
    _, f1 = snapshot_analyze(str(repo), shas[0], default_config)
    _, f2 = snapshot_analyze(str(repo), shas[1], default_config)
    _, f3 = snapshot_analyze(str(repo), shas[2], default_config)

    d12 = debt_diff(f1, f2, shas[0], shas[1])
    assert d12.inserted == {GOD_KEY} and d12.paid == set()

    d23 = debt_diff(f2, f3, shas[1], shas[2])
    assert d23.inserted == {LONG_KEY} and d23.paid == {GOD_KEY}

    # conservation at every step
    for fa, fb in ((f1, f2), (f2, f3)):
        delta = debt_diff(fa, fb)
        assert len(fa) - len(delta.paid) + len(delta.inserted) == len(fb)


def test_debt_series_daily(history_repo, default_config):
    repo, shas = history_repo
    ledger = debt_series(
        str(repo), "2024-01-01", "2024-01-03", 1, default_config
    )
    rows = ledger.rows
    assert [r.revision for r in rows] == shas
    assert [(r.inserted, r.paid, r.active) for r in rows] == [
        (0, 0, 0),
        (1, 0, 1),
        (1, 1, 1),
    ]
    assert [r.date for r in rows] == ["2024-01-01", "2024-01-02", "2024-01-03"]


def test_debt_series_active_matches_independent_recount(
    history_repo, default_config
):
    repo, shas = history_repo
    ledger = debt_series(str(repo), "2024-01-01", "2024-01-03", 1, default_config)
    for row in ledger.rows:
        _, findings = snapshot_analyze(str(repo), row.revision, default_config)
        assert row.active == len(findings)


def test_debt_series_interval_larger_than_window(history_repo, default_config):
    repo, shas = history_repo
    ledger = debt_series(str(repo), "2024-01-03", "2024-01-04", 30, default_config)
    assert len(ledger.rows) == 1
    assert ledger.rows[0].revision == shas[2]
    assert ledger.rows[0].inserted == 0 and ledger.rows[0].paid == 0


def test_debt_series_skips_samples_without_new_revision(
    history_repo, default_config
):
    repo, shas = history_repo
    ledger = debt_series(str(repo), "2024-01-01", "2024-01-10", 1, default_config)
    assert [r.revision for r in ledger.rows] == shas  # later samples skipped


def test_debt_series_rejects_bad_interval(history_repo, default_config):
    repo, _ = history_repo
    with pytest.raises(GitError):
        debt_series(str(repo), "2024-01-01", "2024-01-03", 0, default_config)


def test_ledger_csv_shape(history_repo, default_config):
    repo, shas = history_repo
    ledger = debt_series(str(repo), "2024-01-01", "2024-01-03", 1, default_config)
    text = ledger_csv(ledger)
    lines = text.strip().splitlines()
    assert lines[0] == "rev,date,inserted,paid,active"
    assert len(lines) == 4
    assert lines[1].startswith(shas[0])
    assert lines[2].endswith("1,0,1")
