"""File-level code-smell detection and conversion into a 1-10 health score.

Detectors run on comment/string-stripped source so markers inside literals
never trigger. Thresholds and the penalty table are data (smell_config.json);
recalibration never touches this module.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .lang import LanguageProfile, SlocCount

SMELL_CONFIG_SCHEMA_VERSION = 1

LONG_FILE = "LongFile"
LONG_FUNCTION = "LongFunction"
MANY_PARAMETERS = "ManyParameters"
DEEP_NESTING = "DeepNesting"
COMPLEX_CONDITIONAL = "ComplexConditional"
HIGH_CYCLOMATIC = "HighCyclomaticComplexity"
DUPLICATED_BLOCK = "DuplicatedBlock"

SMELL_KINDS = (
    LONG_FILE,
    LONG_FUNCTION,
    MANY_PARAMETERS,
    DEEP_NESTING,
    COMPLEX_CONDITIONAL,
    HIGH_CYCLOMATIC,
    DUPLICATED_BLOCK,
)

HEALTHY = "healthy"
WARNING = "warning"
ALERT = "alert"

ALERT_THRESHOLD = 4.0
HEALTHY_THRESHOLD = 8.0


@dataclass(frozen=True)
class FunctionInfo:
    """Shape facts about one extracted function; inputs to the smell rules."""

    name: str
    start_line: int
    end_line: int
    param_count: int
    max_nesting: int
    cyclomatic: int
    span_sloc: int


@dataclass(frozen=True)
class SmellReport:
    counts: dict[str, int]

    def __post_init__(self):
        for kind in SMELL_KINDS:
            self.counts.setdefault(kind, 0)

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class CodeHealth:
    score: float
    band: str


@dataclass(frozen=True)
class SmellConfig:
    long_function_sloc: int
    many_parameters: int
    deep_nesting: int
    high_cyclomatic: int
    complex_conditional_bool_ops: int
    duplicate_window_lines: int
    long_file_sloc: int
    long_file_double_sloc: int
    penalties: dict[str, tuple[float, float]]  # kind -> (weight, cap)


def load_smell_config(path: str | None = None) -> SmellConfig:
    if path is None:
        text = resources.files("healthbench.data").joinpath("smell_config.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    doc = json.loads(text)
    if doc.get("schema_version") != SMELL_CONFIG_SCHEMA_VERSION:
        raise ValueError(f"unsupported smell config schema_version: {doc.get('schema_version')!r}")
    thr = doc["thresholds"]
    return SmellConfig(
        long_function_sloc=thr["long_function_sloc"],
        many_parameters=thr["many_parameters"],
        deep_nesting=thr["deep_nesting"],
        high_cyclomatic=thr["high_cyclomatic"],
        complex_conditional_bool_ops=thr["complex_conditional_bool_ops"],
        duplicate_window_lines=thr["duplicate_window_lines"],
        long_file_sloc=thr["long_file_sloc"],
        long_file_double_sloc=thr["long_file_double_sloc"],
        penalties={k: (float(w), float(c)) for k, (w, c) in doc["penalties"].items()},
    )


_default_config: SmellConfig | None = None


def default_smell_config() -> SmellConfig:
    global _default_config
    if _default_config is None:
        _default_config = load_smell_config()
    return _default_config


# --- function extraction -----------------------------------------------------

_WORD_RE = re.compile(r"[A-Za-z_]\w*")
_FIRST_WORD_RE = re.compile(r"^\s*([A-Za-z_]\w*)")


def _keyword_re(words: frozenset[str]) -> re.Pattern | None:
    if not words:
        return None
    return re.compile(r"\b(?:" + "|".join(sorted(words)) + r")\b")


def _count_params(lines: list[str], intro_idx: int, search_from: int) -> int:
    """Count top-level commas in the parameter list opened at/after search_from."""
    text = lines[intro_idx]
    start = text.find("(", search_from)
    row = intro_idx
    while start == -1 and row + 1 < len(lines) and row - intro_idx < 3:
        row += 1
        text = lines[row]
        start = text.find("(")
    if start == -1:
        return 0
    depth = 0
    parts: list[str] = []
    buf: list[str] = []
    pos = start
    while row < len(lines):
        for ch in text[pos:]:
            if ch == "(":
                depth += 1
                if depth == 1:
                    continue
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    parts.append("".join(buf))
                    inner = [p.strip() for p in parts]
                    inner = [p for p in inner if p and p != "void"]
                    return len(inner)
            if depth >= 1:
                if ch == "," and depth == 1:
                    parts.append("".join(buf))
                    buf = []
                else:
                    buf.append(ch)
        row += 1
        if row - intro_idx > 50:  # runaway parameter list; give up
            break
        if row < len(lines):
            text = lines[row]
            pos = 0
    return 0


def _brace_span(lines: list[str], intro_idx: int) -> tuple[int, bool]:
    """Index of the line holding the close brace matching the introducer's open."""
    depth = 0
    opened = False
    for idx in range(intro_idx, len(lines)):
        for ch in lines[idx]:
            if ch == "{":
                depth += 1
                opened = True
            elif ch == "}":
                depth -= 1
                if opened and depth == 0:
                    return idx, True
        if not opened and idx - intro_idx > 10:
            return intro_idx, True  # introducer never opened a body
    return len(lines) - 1, not opened


def _indent_of(line: str) -> int:
    expanded = line.expandtabs(4)
    return len(expanded) - len(expanded.lstrip(" "))


def _indent_span(lines: list[str], intro_idx: int) -> int:
    base = _indent_of(lines[intro_idx])
    end = intro_idx
    for idx in range(intro_idx + 1, len(lines)):
        if not lines[idx].strip():
            continue
        if _indent_of(lines[idx]) <= base:
            break
        end = idx
    return end


def _brace_nesting(lines: list[str], lo: int, hi: int, nesting_re: re.Pattern | None) -> int:
    stack: list[bool] = []
    depth = max_depth = 0
    pending = False
    for idx in range(lo, hi + 1):
        line = lines[idx]
        has_kw = bool(nesting_re.search(line)) if nesting_re else False
        if has_kw:
            pending = True
        saw_brace = False
        for ch in line:
            if ch == "{":
                saw_brace = True
                is_construct = pending
                pending = False
                stack.append(is_construct)
                if is_construct:
                    depth += 1
                    max_depth = max(max_depth, depth)
            elif ch == "}":
                if stack and stack.pop():
                    depth -= 1
        # A plain statement line between a keyword and its brace cancels the flag.
        if pending and not has_kw and not saw_brace and line.strip():
            pending = False
    return max_depth


def _indent_nesting(lines: list[str], lo: int, hi: int, keywords: frozenset[str]) -> int:
    stack: list[int] = []
    max_depth = 0
    for idx in range(lo + 1, hi + 1):
        line = lines[idx]
        if not line.strip():
            continue
        indent = _indent_of(line)
        while stack and stack[-1] >= indent:
            stack.pop()
        m = _FIRST_WORD_RE.match(line)
        if m and m.group(1) in keywords:
            stack.append(indent)
            max_depth = max(max_depth, len(stack))
    return max_depth


def extract_functions(
    stripped_source: str,
    profile: LanguageProfile,
    diagnostics: list[str] | None = None,
) -> list[FunctionInfo]:
    """Locate function spans in stripped source and measure their shape.

    Brace syntax: a function runs from its introducer line to the matching
    close brace. Indentation syntax: it ends where indentation returns to the
    introducer's level. Unbalanced braces close at end of file.
    """
    lines = stripped_source.split("\n")
    patterns = [re.compile(p) for p in profile.function_patterns]
    branch_re = _keyword_re(profile.branch_keywords)
    nesting_re = _keyword_re(profile.nesting_keywords)
    out: list[FunctionInfo] = []

    for idx, line in enumerate(lines):
        match = None
        for pat in patterns:
            match = pat.match(line)
            if match:
                break
        if not match:
            continue

        name = match.group(1) if match.re.groups >= 1 else None
        if profile.function_syntax == "brace":
            end_idx, balanced = _brace_span(lines, idx)
            if not balanced and diagnostics is not None:
                diagnostics.append(f"unbalanced braces after line {idx + 1}")
            max_nesting = _brace_nesting(lines, idx, end_idx, nesting_re)
        else:
            end_idx = _indent_span(lines, idx)
            max_nesting = _indent_nesting(lines, idx, end_idx, profile.nesting_keywords)

        span = lines[idx : end_idx + 1]
        span_text = "\n".join(span)
        cyclomatic = 1 + (len(branch_re.findall(span_text)) if branch_re else 0)
        if name is not None:
            param_from = match.end(1)
        else:
            param_from = max(match.start(0), match.end(0) - 1)
        out.append(
            FunctionInfo(
                name=name or f"<anonymous:{idx + 1}>",
                start_line=idx + 1,
                end_line=end_idx + 1,
                param_count=_count_params(lines, idx, param_from),
                max_nesting=max_nesting,
                cyclomatic=cyclomatic,
                span_sloc=sum(1 for ln in span if ln.strip()),
            )
        )
    return out


# --- smell detection ----------------------------------------------------------


def _normalized_code_lines(stripped_source: str) -> list[str]:
    out = []
    for line in stripped_source.split("\n"):
        squeezed = " ".join(line.split())
        if squeezed:
            out.append(squeezed)
    return out


def _count_duplicated_blocks(stripped_source: str, window: int) -> int:
    """Greedy count of disjoint windows repeating an earlier disjoint window."""
    lines = _normalized_code_lines(stripped_source)
    first_pos: dict[tuple[str, ...], int] = {}
    count = 0
    i = 0
    while i + window <= len(lines):
        key = tuple(lines[i : i + window])
        seen = first_pos.get(key)
        if seen is not None and seen + window <= i:
            count += 1
            i += window
            continue
        if seen is None:
            first_pos[key] = i
        i += 1
    return count


def _count_bool_ops(line: str, operators: tuple[str, ...]) -> int:
    total = 0
    for op in operators:
        if op[0].isalpha():
            total += len(re.findall(r"\b" + re.escape(op) + r"\b", line))
        else:
            total += line.count(op)
    return total


def _count_complex_conditionals(
    stripped_source: str, profile: LanguageProfile, min_ops: int
) -> int:
    branch_re = _keyword_re(profile.branch_keywords)
    if branch_re is None or not profile.bool_operators:
        return 0
    count = 0
    for line in stripped_source.split("\n"):
        if branch_re.search(line) and _count_bool_ops(line, profile.bool_operators) >= min_ops:
            count += 1
    return count


def detect_smells(
    sloc_count: SlocCount,
    functions: list[FunctionInfo],
    stripped_source: str,
    profile: LanguageProfile,
    config: SmellConfig | None = None,
) -> SmellReport:
    """Apply the threshold catalog to one file's measurements."""
    cfg = config or default_smell_config()
    counts = {kind: 0 for kind in SMELL_KINDS}
    counts[LONG_FILE] = 1 if sloc_count.sloc > cfg.long_file_sloc else 0
    for fn in functions:
        if fn.span_sloc > cfg.long_function_sloc:
            counts[LONG_FUNCTION] += 1
        if fn.param_count > cfg.many_parameters:
            counts[MANY_PARAMETERS] += 1
        if fn.max_nesting >= cfg.deep_nesting:
            counts[DEEP_NESTING] += 1
        if fn.cyclomatic > cfg.high_cyclomatic:
            counts[HIGH_CYCLOMATIC] += 1
    counts[COMPLEX_CONDITIONAL] = _count_complex_conditionals(
        stripped_source, profile, cfg.complex_conditional_bool_ops
    )
    counts[DUPLICATED_BLOCK] = _count_duplicated_blocks(
        stripped_source, cfg.duplicate_window_lines
    )
    return SmellReport(counts=counts)


def score_code_health(
    report: SmellReport, sloc: int, config: SmellConfig | None = None
) -> CodeHealth:
    """Additive capped penalties subtracted from 10, clamped to [1, 10]."""
    cfg = config or default_smell_config()
    penalty = 0.0
    for kind, (weight, cap) in cfg.penalties.items():
        count = report.counts.get(kind, 0)
        if kind == LONG_FILE:
            # Counts once; the penalty doubles for very long files.
            factor = 2.0 if sloc > cfg.long_file_double_sloc else 1.0
            penalty += min(count * weight * factor, cap)
        else:
            penalty += min(count * weight, cap)
    score = min(10.0, max(1.0, 10.0 - penalty))
    if score < ALERT_THRESHOLD:
        band = ALERT
    elif score >= HEALTHY_THRESHOLD:
        band = HEALTHY
    else:
        band = WARNING
    return CodeHealth(score=score, band=band)
