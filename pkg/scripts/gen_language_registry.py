#!/usr/bin/env python3
"""Regenerate the bundled language registry (src/healthbench/data/languages.json).

The registry is plain data; edit this script and re-run it rather than
hand-editing the JSON (regex escaping is error-prone).
"""

import json
from pathlib import Path

C_KEYWORD_GUARD = r"(?!\s*(?:if|for|while|switch|return|else|do|case|sizeof)\b)"
JAVAISH_GUARD = r"(?!\s*(?:if|for|while|switch|return|else|do|case|new|catch|try|throw|using|lock|foreach|synchronized)\b)"

LANGUAGES = [
    {
        "name": "c",
        "extensions": [".c", ".h"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [{"open": "\""}, {"open": "'"}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^(?!.*[;=])" + C_KEYWORD_GUARD + r"\s*[A-Za-z_][\w\*\s]*[\s\*]([A-Za-z_]\w*)\s*\(",
        ],
        "branch_keywords": ["if", "while", "case"],
        "nesting_keywords": ["if", "else", "for", "while", "switch", "do"],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "cpp",
        "extensions": [".cpp", ".cc", ".cxx", ".hpp", ".hh"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [{"open": "\""}, {"open": "'"}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^(?!.*[;=])" + C_KEYWORD_GUARD
            + r"\s*[A-Za-z_~][\w\*\s:<>,&~]*[\s\*&:]([A-Za-z_~]\w*)\s*\(",
        ],
        "branch_keywords": ["if", "while", "case", "catch"],
        "nesting_keywords": ["if", "else", "for", "while", "switch", "do", "try", "catch"],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "csharp",
        "extensions": [".cs"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [{"open": "\""}, {"open": "'"}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^(?!.*[;=])" + JAVAISH_GUARD + r"\s*(?:[\w<>\[\],\.\?]+\s+)+([A-Za-z_]\w*)\s*\(",
        ],
        "branch_keywords": ["if", "while", "case", "catch"],
        "nesting_keywords": [
            "if", "else", "for", "foreach", "while", "switch", "do", "try", "catch",
            "finally", "using", "lock",
        ],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "java",
        "extensions": [".java"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [{"open": "\"\"\"", "multiline": True}, {"open": "\""}, {"open": "'"}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^(?!.*[;=])" + JAVAISH_GUARD + r"\s*(?:[\w<>\[\],\.]+\s+)+([A-Za-z_]\w*)\s*\(",
        ],
        "branch_keywords": ["if", "while", "case", "catch"],
        "nesting_keywords": [
            "if", "else", "for", "while", "switch", "do", "try", "catch", "finally",
        ],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "javascript",
        "extensions": [".js", ".jsx", ".mjs", ".cjs"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [
            {"open": "`", "multiline": True},
            {"open": "\""},
            {"open": "'"},
        ],
        "function_syntax": "brace",
        "function_patterns": [
            r"^\s*(?:export\s+)?(?:default\s+)?(?:async\s+)?function\s*\*?\s*([A-Za-z_$][\w$]*)?\s*\(",
            r"^\s*(?:export\s+)?(?:const|let|var)\s+([A-Za-z_$][\w$]*)\s*=\s*(?:async\s*)?(?:function\b|\([^)]*\)\s*=>|[\w$]+\s*=>)",
        ],
        "branch_keywords": ["if", "while", "case", "catch"],
        "nesting_keywords": [
            "if", "else", "for", "while", "switch", "do", "try", "catch", "finally",
        ],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "typescript",
        "extensions": [".ts", ".tsx"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [
            {"open": "`", "multiline": True},
            {"open": "\""},
            {"open": "'"},
        ],
        "function_syntax": "brace",
        "function_patterns": [
            r"^\s*(?:export\s+)?(?:default\s+)?(?:async\s+)?function\s*\*?\s*([A-Za-z_$][\w$]*)?\s*\(",
            r"^\s*(?:export\s+)?(?:const|let|var)\s+([A-Za-z_$][\w$]*)\s*=\s*(?:async\s*)?(?:function\b|\([^)]*\)\s*=>|[\w$]+\s*=>)",
        ],
        "branch_keywords": ["if", "while", "case", "catch"],
        "nesting_keywords": [
            "if", "else", "for", "while", "switch", "do", "try", "catch", "finally",
        ],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "python",
        "extensions": [".py", ".pyw"],
        "line_comments": ["#"],
        "block_comments": [],
        "strings": [
            {"open": "\"\"\"", "multiline": True},
            {"open": "'''", "multiline": True},
            {"open": "\""},
            {"open": "'"},
        ],
        "function_syntax": "indent",
        "function_patterns": [r"^\s*(?:async\s+)?def\s+([A-Za-z_]\w*)\s*\("],
        "branch_keywords": ["if", "elif", "while", "except", "case"],
        "nesting_keywords": [
            "if", "elif", "else", "for", "while", "try", "except", "finally", "with",
            "match", "case",
        ],
        "bool_operators": ["and", "or"],
    },
    {
        "name": "php",
        "extensions": [".php"],
        "line_comments": ["//", "#"],
        "block_comments": [["/*", "*/"]],
        "strings": [{"open": "\""}, {"open": "'"}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^\s*(?:(?:public|private|protected|static|abstract|final)\s+)*function\s+&?([A-Za-z_]\w*)\s*\(",
        ],
        "branch_keywords": ["if", "elseif", "while", "case", "catch"],
        "nesting_keywords": [
            "if", "else", "elseif", "for", "foreach", "while", "switch", "do", "try",
            "catch", "finally",
        ],
        "bool_operators": ["&&", "||", "and", "or"],
    },
    {
        "name": "go",
        "extensions": [".go"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        "strings": [
            {"open": "`", "escape": "", "multiline": True},
            {"open": "\""},
            {"open": "'"},
        ],
        "function_syntax": "brace",
        "function_patterns": [r"^\s*func\s+(?:\([^)]*\)\s*)?([A-Za-z_]\w*)\s*\("],
        "branch_keywords": ["if", "case"],
        "nesting_keywords": ["if", "else", "for", "switch", "select"],
        "bool_operators": ["&&", "||"],
    },
    {
        "name": "rust",
        "extensions": [".rs"],
        "line_comments": ["//"],
        "block_comments": [["/*", "*/"]],
        # Single quotes are omitted: lifetimes ('a) would be misread as char
        # literals far more often than real char literals appear.
        "strings": [{"open": "\""}],
        "function_syntax": "brace",
        "function_patterns": [
            r"^\s*(?:pub(?:\([^)]*\))?\s+)?(?:async\s+)?(?:unsafe\s+)?(?:extern\s+\"[^\"]*\"\s+)?fn\s+([A-Za-z_]\w*)",
        ],
        "branch_keywords": ["if", "while", "match"],
        "nesting_keywords": ["if", "else", "for", "while", "loop", "match"],
        "bool_operators": ["&&", "||"],
    },
]


def main():
    doc = {"schema_version": 1, "languages": LANGUAGES}
    out = Path(__file__).resolve().parent.parent / "src" / "healthbench" / "data" / "languages.json"
    out.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(LANGUAGES)} profiles)")


if __name__ == "__main__":
    main()
