"""Synthetic git repository builder for tests.

Commits are streamed through `git fast-import`, which makes thousand-commit
fixtures cheap and gives exact control over committer timestamps.
"""

import subprocess
from datetime import datetime, timezone


def _git(repo, *args, stdin=None):
    proc = subprocess.run(
        ["git", "-C", str(repo), *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"git {args[0]} failed: {proc.stderr.strip()}")
    return proc.stdout


def at(y, m, d, hh=0):
    return datetime(y, m, d, hh, tzinfo=timezone.utc)


class RepoBuilder:
    """Accumulates commits and materializes them in one fast-import run."""

    def __init__(self, path):
        self.path = str(path)
        _git_init(self.path)
        self._chunks: list[str] = []
        self._next_mark = 1
        self._trees: dict[int, dict[str, str]] = {}
        self._last_mark: int | None = None

    def commit(
        self,
        when: datetime,
        files: dict[str, str] | None = None,
        deletes: tuple[str, ...] = (),
        renames: tuple[tuple[str, str], ...] = (),
        parent: int | None = None,
        extra_parents: tuple[int, ...] = (),
        message: str = "change",
    ) -> int:
        """Append one commit; returns its mark for later parent references."""
        mark = self._next_mark
        self._next_mark += 1
        base = parent if parent is not None else self._last_mark
        tree = dict(self._trees.get(base, {}))

        lines = [
            "commit refs/heads/main",
            f"mark :{mark}",
            f"committer Tester <tester@example.com> {int(when.timestamp())} +0000",
            f"data {len(message.encode())}",
            message,
        ]
        if base is not None:
            lines.append(f"from :{base}")
        for extra in extra_parents:
            lines.append(f"merge :{extra}")
        for old, new in renames:
            content = tree.pop(old)
            tree[new] = content
            lines.append(f"D {old}")
            lines += [f"M 100644 inline {new}", f"data {len(content.encode())}", content]
        for path in deletes:
            tree.pop(path, None)
            lines.append(f"D {path}")
        for path, content in (files or {}).items():
            tree[path] = content
            lines += [f"M 100644 inline {path}", f"data {len(content.encode())}", content]

        self._chunks.append("\n".join(lines) + "\n")
        self._trees[mark] = tree
        self._last_mark = mark
        return mark

    def finish(self):
        _git(self.path, "fast-import", "--quiet", stdin="".join(self._chunks))
        _git(self.path, "reset", "--hard", "main", "-q")
        return self.path


def _git_init(path):
    subprocess.run(
        ["git", "init", "-q", "-b", "main", str(path)],
        check=True,
        capture_output=True,
        timeout=60,
    )


def linear_repo(path, commits):
    """Convenience for builds without branches: [(when, files_dict), ...]."""
    builder = RepoBuilder(path)
    for when, files in commits:
        builder.commit(when, files=files)
    return builder.finish()
