"""History-window, rename, merge, and hotspot-selection behavior on synthetic repos."""

from datetime import datetime, timedelta, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from healthbench.churn import ChurnMap, mine_history, select_hotspots
from healthbench.errors import NoHistoryError, RepoAccessError
from gitfix import RepoBuilder, at, linear_repo
from oracles import oracle_percentile

AS_OF = at(2026, 1, 1)


def _churn(changes):
    return ChurnMap(
        window_start=AS_OF - timedelta(days=365), window_end=AS_OF, changes=changes
    )


def oracle_hotspots(changes, percentile=0.9, min_count=2):
    if not changes:
        return set()
    values = [float(c) for c in changes.values()]
    cutoff = oracle_percentile(values, [1.0] * len(values), percentile)
    hot = {p for p, c in changes.items() if c >= min_count and c >= cutoff}
    if hot:
        return hot
    top = max(changes.values())
    return {sorted(p for p, c in changes.items() if c == top)[0]}


# --- mine_history ----------------------------------------------------------------


def test_single_commit_366_days_old_is_outside_window(tmp_path):
    when = AS_OF - timedelta(days=366)
    repo = linear_repo(tmp_path / "r", [(when, {"a.py": "x = 1\n"})])
    churn, inception = mine_history(repo, AS_OF)
    assert churn.changes == {}
    assert inception == when


def test_commit_exactly_365_days_old_is_included(tmp_path):
    when = AS_OF - timedelta(days=365)
    repo = linear_repo(tmp_path / "r", [(when, {"a.py": "x = 1\n"})])
    churn, inception = mine_history(repo, AS_OF)
    assert churn.changes == {"a.py": 1}
    assert inception == when


def test_change_counts_per_file(tmp_path):
    commits = [(at(2025, 6, 1 + i), {"a.py": f"x = {i}\n"}) for i in range(5)]
    commits.append((at(2025, 7, 1), {"b.py": "y = 1\n"}))
    repo = linear_repo(tmp_path / "r", commits)
    churn, inception = mine_history(repo, AS_OF)
    assert churn.changes == {"a.py": 5, "b.py": 1}
    assert inception == at(2025, 6, 1)


def test_out_of_window_commits_do_not_change_counts(tmp_path):
    in_window = [(at(2025, 6, 1 + i), {"a.py": f"x = {i}\n"}) for i in range(3)]
    repo1 = linear_repo(tmp_path / "r1", in_window)
    old = [(at(2020, 1, 1), {"a.py": "ancient\n"}), (at(2020, 2, 1), {"z.py": "old\n"})]
    repo2 = linear_repo(tmp_path / "r2", old + in_window)
    churn1, _ = mine_history(repo1, AS_OF)
    churn2, inception2 = mine_history(repo2, AS_OF)
    assert churn1.changes == churn2.changes
    assert inception2 == at(2020, 1, 1)


def test_renames_accrue_to_surviving_path(tmp_path):
    builder = RepoBuilder(tmp_path / "r")
    builder.commit(at(2025, 5, 1), files={"old.py": "v = 1\n"})
    builder.commit(at(2025, 5, 2), files={"old.py": "v = 2\n"})
    builder.commit(at(2025, 5, 3), renames=(("old.py", "new.py"),))
    builder.commit(at(2025, 5, 4), files={"new.py": "v = 3\n"})
    repo = builder.finish()
    churn, _ = mine_history(repo, AS_OF)
    assert churn.changes == {"new.py": 4}


def test_merge_commits_contribute_no_paths(tmp_path):
    builder = RepoBuilder(tmp_path / "r")
    root = builder.commit(at(2025, 5, 1), files={"a.py": "x = 1\n"})
    side = builder.commit(at(2025, 5, 2), files={"b.py": "y = 1\n"}, parent=root)
    main = builder.commit(at(2025, 5, 3), files={"a.py": "x = 2\n"}, parent=root)
    builder.commit(at(2025, 5, 4), parent=main, extra_parents=(side,), message="merge")
    repo = builder.finish()
    churn, _ = mine_history(repo, AS_OF)
    # Three non-merge commits: a.py twice, b.py once; the merge adds nothing.
    assert churn.changes == {"a.py": 2, "b.py": 1}


def test_empty_repository_is_no_history(tmp_path):
    import subprocess

    repo = tmp_path / "empty"
    subprocess.run(["git", "init", "-q", str(repo)], check=True)
    with pytest.raises(NoHistoryError):
        mine_history(str(repo), AS_OF)


def test_non_repository_is_repo_access_error(tmp_path):
    plain = tmp_path / "plain"
    plain.mkdir()
    with pytest.raises(RepoAccessError):
        mine_history(str(plain), AS_OF)
    with pytest.raises(RepoAccessError):
        mine_history(str(tmp_path / "missing"), AS_OF)


def test_naive_as_of_rejected(tmp_path):
    with pytest.raises(ValueError):
        mine_history(str(tmp_path), datetime(2026, 1, 1))


# --- select_hotspots ----------------------------------------------------------------


def test_empty_churn_selects_nothing():
    assert select_hotspots(_churn({})) == set()


def test_churn_map_exports_structured_records():
    doc = _churn({"b.py": 2, "a.py": 5}).to_doc()
    assert doc["changes"] == {"a.py": 5, "b.py": 2}
    assert doc["window_end"] == AS_OF.isoformat()
    assert doc["window_start"] < doc["window_end"]


def test_decile_selection_matches_brute_force():
    changes = {"A": 10, "B": 9, "C": 2}
    changes.update({f"F{i}": 1 for i in range(10)})
    got = select_hotspots(_churn(changes))
    assert got == oracle_hotspots(changes)
    assert got == {"A", "B"}


def test_fallback_single_hotspot_with_tie_break():
    got = select_hotspots(_churn({"A": 1, "B": 1}))
    assert got == {"A"}


def test_fallback_prefers_highest_count():
    assert select_hotspots(_churn({"z.py": 1, "a.py": 1, "m.py": 1})) == {"a.py"}


changes_strategy = st.dictionaries(
    st.text(alphabet="abcdefgh", min_size=1, max_size=6),
    st.integers(min_value=1, max_value=50),
    max_size=30,
)


@settings(max_examples=300)
@given(changes=changes_strategy)
def test_hotspots_match_oracle_and_invariants(changes):
    churn = _churn(dict(changes))
    got = select_hotspots(churn)
    assert got == oracle_hotspots(changes)
    assert got <= set(changes)
    if changes:
        assert got
    assert select_hotspots(churn) == got
