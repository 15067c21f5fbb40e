"""Language profiles, line classification, SLoC counting, and comment/string stripping.

Lexing is line-oriented and heuristic: profiles describe comment and string
syntax as data, and a single forward scan classifies every physical line as
blank, comment, or code. No grammar or AST is involved.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources

REGISTRY_SCHEMA_VERSION = 1

BLANK = "blank"
COMMENT = "comment"
CODE = "code"

# Stands in for stripped string-literal contents; must not collide with any
# comment marker or string delimiter in the registry.
STRING_PLACEHOLDER = "..."


@dataclass(frozen=True)
class StringRule:
    """One string-literal syntax: delimiters, escape character, line span."""

    open: str
    close: str
    escape: str = "\\"
    multiline: bool = False


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    extensions: tuple[str, ...]
    line_comments: tuple[str, ...]
    block_comments: tuple[tuple[str, str], ...]
    strings: tuple[StringRule, ...]
    function_syntax: str  # "brace" | "indent"
    function_patterns: tuple[str, ...]
    branch_keywords: frozenset[str]
    nesting_keywords: frozenset[str]
    bool_operators: tuple[str, ...]

    def __post_init__(self):
        if self.function_syntax not in ("brace", "indent"):
            raise ValueError(f"bad function_syntax for {self.name!r}")
        if not self.extensions:
            raise ValueError(f"profile {self.name!r} has no extensions")
        for opener, closer in self.block_comments:
            if not opener or not closer:
                raise ValueError(f"empty block-comment delimiter in {self.name!r}")
            if opener in self.line_comments:
                raise ValueError(
                    f"block-comment opener {opener!r} collides with a line comment in {self.name!r}"
                )


@dataclass(frozen=True)
class SlocCount:
    """Per-file line breakdown; sloc = total - blank - comment by construction."""

    total_lines: int
    blank_lines: int
    comment_lines: int
    sloc: int


@dataclass
class ScanResult:
    stripped: str
    line_kinds: list[str]
    diagnostics: list[str] = field(default_factory=list)


class Registry:
    """Immutable set of language profiles keyed by filename extension."""

    def __init__(self, profiles: list[LanguageProfile]):
        self.profiles = tuple(profiles)
        self._by_ext: dict[str, LanguageProfile] = {}
        for prof in profiles:
            for ext in prof.extensions:
                if ext in self._by_ext:
                    raise ValueError(f"extension {ext!r} registered twice")
                self._by_ext[ext] = prof
        # Longest extension first so multi-part suffixes win over plain ones.
        self._ext_order = sorted(self._by_ext, key=len, reverse=True)

    def detect_language(self, path: str) -> LanguageProfile | None:
        """Profile whose extension matches the longest suffix of path, else None."""
        if not path:
            raise ValueError("empty path")
        name = path.rsplit("/", 1)[-1].lower()
        for ext in self._ext_order:
            if name.endswith(ext):
                return self._by_ext[ext]
        return None

    def get(self, name: str) -> LanguageProfile:
        for prof in self.profiles:
            if prof.name == name:
                return prof
        raise KeyError(name)


def _profile_from_record(rec: dict) -> LanguageProfile:
    strings = tuple(
        StringRule(
            open=s["open"],
            close=s.get("close", s["open"]),
            escape=s.get("escape", "\\"),
            multiline=bool(s.get("multiline", False)),
        )
        for s in rec.get("strings", [])
    )
    return LanguageProfile(
        name=rec["name"],
        extensions=tuple(rec["extensions"]),
        line_comments=tuple(rec.get("line_comments", [])),
        block_comments=tuple((o, c) for o, c in rec.get("block_comments", [])),
        strings=strings,
        function_syntax=rec["function_syntax"],
        function_patterns=tuple(rec.get("function_patterns", [])),
        branch_keywords=frozenset(rec.get("branch_keywords", [])),
        nesting_keywords=frozenset(rec.get("nesting_keywords", [])),
        bool_operators=tuple(rec.get("bool_operators", [])),
    )


def load_registry(path: str | None = None) -> Registry:
    """Load the language registry from a JSON file (bundled one by default)."""
    if path is None:
        text = resources.files("healthbench.data").joinpath("languages.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if doc.get("schema_version") != REGISTRY_SCHEMA_VERSION:
        raise ValueError(f"unsupported registry schema_version: {doc.get('schema_version')!r}")
    return Registry([_profile_from_record(rec) for rec in doc["languages"]])


_default_registry: Registry | None = None


def default_registry() -> Registry:
    global _default_registry
    if _default_registry is None:
        _default_registry = load_registry()
    return _default_registry


def detect_language(path: str, registry: Registry | None = None) -> LanguageProfile | None:
    return (registry or default_registry()).detect_language(path)


# --- scanner ---------------------------------------------------------------

# Token kinds for the normal-mode lexer.
_NL, _LINE, _BLOCK, _STRING = "nl", "line", "block", "string"

_scanner_cache: dict[int, tuple] = {}


def _compiled(profile: LanguageProfile):
    """Compile the normal-mode token regex and per-rule body regexes (cached)."""
    key = id(profile)
    hit = _scanner_cache.get(key)
    if hit is not None:
        return hit

    actions: dict[str, tuple] = {"\n": (_NL, None)}
    literals = ["\n"]
    for marker in profile.line_comments:
        literals.append(marker)
        actions[marker] = (_LINE, None)
    for opener, closer in profile.block_comments:
        literals.append(opener)
        close_re = re.compile("|".join([re.escape(closer), "\n"]))
        actions[opener] = (_BLOCK, (closer, close_re))
    for rule in profile.strings:
        literals.append(rule.open)
        parts = []
        if rule.escape:
            parts.append(re.escape(rule.escape) + ".")
        parts.append(re.escape(rule.close))
        parts.append("\n")
        actions[rule.open] = (_STRING, (rule, re.compile("|".join(parts))))
    # Longest literal first: alternation picks the first listed match at a
    # position, which emulates longest-match for overlapping delimiters.
    literals.sort(key=len, reverse=True)
    normal_re = re.compile("|".join(re.escape(lit) for lit in literals))
    compiled = (normal_re, actions)
    _scanner_cache[key] = compiled
    return compiled


def scan(source: str, profile: LanguageProfile) -> ScanResult:
    """One pass over source: per-line kinds plus comment/string-stripped text.

    The stripped text keeps every newline of the input, so line numbers in
    downstream reports match the original file.
    """
    normal_re, actions = _compiled(profile)
    out: list[str] = []
    kinds: list[str] = []
    diags: list[str] = []
    pos, n = 0, len(source)
    has_code = has_comment = False

    def end_line():
        nonlocal has_code, has_comment
        if has_code:
            kinds.append(CODE)
        elif has_comment:
            kinds.append(COMMENT)
        else:
            kinds.append(BLANK)
        has_code = has_comment = False

    while pos < n:
        m = normal_re.search(source, pos)
        if m is None:
            gap = source[pos:]
            out.append(gap)
            if gap.strip():
                has_code = True
            pos = n
            break
        if m.start() > pos:
            gap = source[pos : m.start()]
            out.append(gap)
            if gap.strip():
                has_code = True
        token = m.group(0)
        pos = m.end()
        kind, payload = actions[token]

        if kind == _NL:
            end_line()
            out.append("\n")

        elif kind == _LINE:
            has_comment = True
            nl = source.find("\n", pos)
            pos = nl if nl != -1 else n  # newline handled by the main loop

        elif kind == _BLOCK:
            has_comment = True
            closer, close_re = payload
            while True:
                m2 = close_re.search(source, pos)
                if m2 is None:
                    pos = n
                    diags.append("unterminated block comment")
                    break
                pos = m2.end()
                if m2.group(0) == "\n":
                    end_line()
                    out.append("\n")
                    has_comment = True  # still inside the block
                else:
                    break

        else:  # _STRING
            rule, body_re = payload
            has_code = True
            out.append(rule.open)
            while True:
                m2 = body_re.search(source, pos)
                if m2 is None:
                    pos = n
                    diags.append("unterminated string")
                    if not source.endswith("\n"):  # placeholder only on a real line
                        out.append(STRING_PLACEHOLDER)
                    break
                token2 = m2.group(0)
                if token2 == "\n":
                    if rule.multiline:
                        out.append(STRING_PLACEHOLDER)
                        end_line()
                        out.append("\n")
                        has_code = True  # next line is still literal content
                        pos = m2.end()
                    else:
                        diags.append("unterminated string")
                        out.append(STRING_PLACEHOLDER)
                        pos = m2.start()  # newline handled by the main loop
                        break
                elif token2 == rule.close:
                    out.append(STRING_PLACEHOLDER)
                    out.append(rule.close)
                    pos = m2.end()
                    break
                else:
                    pos = m2.end()  # escape sequence consumed

    trailing_line = bool(source) and not source.endswith("\n")
    if trailing_line:
        end_line()

    stripped = "".join(out)
    # A fully stripped final line must still exist as a line in the output.
    if trailing_line and (not stripped or stripped.endswith("\n")):
        stripped += "\n"
    return ScanResult(stripped=stripped, line_kinds=kinds, diagnostics=diags)


def count_sloc(
    source: str, profile: LanguageProfile, diagnostics: list[str] | None = None
) -> SlocCount:
    """Classify each physical line exactly once; mixed code+comment counts as code."""
    res = scan(source, profile)
    if diagnostics is not None:
        diagnostics.extend(res.diagnostics)
    blank = res.line_kinds.count(BLANK)
    comment = res.line_kinds.count(COMMENT)
    total = len(res.line_kinds)
    return SlocCount(
        total_lines=total,
        blank_lines=blank,
        comment_lines=comment,
        sloc=total - blank - comment,
    )


def strip_comments_and_strings(
    source: str, profile: LanguageProfile, diagnostics: list[str] | None = None
) -> str:
    """Drop comments and replace string contents with a placeholder, keeping line structure."""
    res = scan(source, profile)
    if diagnostics is not None:
        diagnostics.extend(res.diagnostics)
    return res.stripped
