"""
Reader for the sectioned input files.

Grammar (one statement per line, ``#`` starts a comment)::

    [section arg ...]
    key = token token ...

Tokens are whitespace separated; commas and parentheses are ignored, and
``;`` separates matrix rows.  Section order does not matter.  A JSON file
with the same shape (``{"section arg": {"key": [...]}}``) is accepted too.
"""

import json
import re

from .diagram import DiagramError

_HEADER = re.compile(r"^\[\s*([^\]]+?)\s*\]$")


def _tokenize(value):
    value = value.replace(",", " ").replace("(", " ").replace(")", " ")
    value = value.replace(";", " ; ")
    return value.split()


def parse_sections(text, fmt="text"):
    """Return {(section, args...): {key: [tokens]}}."""
    if fmt == "json":
        return _parse_json(text)
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            key = tuple(m.group(1).split())
            if key in sections:
                raise DiagramError(f"line {lineno}: duplicate section [{m.group(1)}]")
            current = sections[key] = {}
            continue
        if current is None:
            raise DiagramError(f"line {lineno}: statement outside of a section")
        if "=" not in line:
            raise DiagramError(f"line {lineno}: expected 'key = value'")
        k, v = line.split("=", 1)
        current[k.strip()] = _tokenize(v)
    return sections


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DiagramError(f"invalid JSON: {e}") from None
    sections = {}
    for head, body in data.items():
        key = tuple(head.split())
        sec = {}
        for k, v in body.items():
            if isinstance(v, str):
                sec[k] = _tokenize(v)
            elif v and isinstance(v[0], list):
                toks = []
                for row in v:
                    toks.extend(str(x) for x in row)
                    toks.append(";")
                sec[k] = toks[:-1]
            else:
                sec[k] = [x if isinstance(x, str) else str(x) for x in v]
        sections[key] = sec
    return sections


def read_sections(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_sections(text, "json" if str(path).endswith(".json") else "text")


def require(section, key, where):
    if key not in section:
        raise DiagramError(f"[{where}] is missing '{key}'")
    return section[key]


def matrix_tokens(tokens):
    """Turn 'a b ; c d' tokens into an integer matrix (list of rows)."""
    rows, row = [], []
    for tok in tokens:
        if tok == ";":
            rows.append(row)
            row = []
        else:
            try:
                row.append(int(tok))
            except ValueError:
                raise DiagramError(f"invalid matrix entry {tok!r}") from None
    if row or rows:
        rows.append(row)
    if any(len(r) != len(rows[0]) for r in rows):
        raise DiagramError("ragged matrix rows")
    return rows
