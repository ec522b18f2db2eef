"""Reading and writing presentation files.

Two formats are supported.  The line-based text format:

    generators 5
    x5*x2 = x2*x1
    x5*x1 = 0

with ``#`` comments and blank lines ignored, and a JSON object

    {"n": 5, "relations": [{"zero": [5, 1]}, {"equal": [[5, 2], [2, 1]]}]}

``parse_presentation`` sniffs the format from the first non-blank character.
Parsing canonicalises: ``x1*x1 = x2*x2`` and ``x2*x2 = x1*x1`` denote the
same relation, and repeating one is a duplicate error.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .model import Presentation, Relation, from_json_dict, presentation, to_json_dict


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


_HEADER_RE = re.compile(r"generators\s+(\d+)\s*$")
_RELATION_RE = re.compile(
    r"x(\d+)\s*\*\s*x(\d+)\s*=\s*(?:0|x(\d+)\s*\*\s*x(\d+))\s*$"
)


def parse_presentation(text: str) -> Presentation:
    """Parse either supported format, raising errors with line numbers."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_json(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationSyntaxError(f"invalid JSON: {exc}", exc.lineno) from None
    try:
        return from_json_dict(data)
    except ValueError as exc:
        raise PresentationSyntaxError(str(exc)) from None


def _parse_text(text: str) -> Presentation:
    n = None
    relations: list[Relation] = []
    seen: set = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER_RE.fullmatch(line)
            if m is None:
                raise PresentationSyntaxError(
                    "expected a 'generators N' header before any relation", lineno
                )
            n = int(m.group(1))
            if n < 1:
                raise PresentationSyntaxError("generator count must be at least 1", lineno)
            continue
        m = _RELATION_RE.fullmatch(line)
        if m is None:
            raise PresentationSyntaxError(f"malformed relation {line!r}", lineno)
        a, b = int(m.group(1)), int(m.group(2))
        for letter in (a, b):
            if not 1 <= letter <= n:
                raise PresentationSyntaxError(
                    f"generator index {letter} exceeds alphabet x1..x{n}", lineno
                )
        if m.group(3) is None:
            rel = Relation.zero(a, b)
        else:
            c, d = int(m.group(3)), int(m.group(4))
            for letter in (c, d):
                if not 1 <= letter <= n:
                    raise PresentationSyntaxError(
                        f"generator index {letter} exceeds alphabet x1..x{n}", lineno
                    )
            if (c, d) == (a, b):
                raise PresentationSyntaxError(
                    "a binomial relation needs two distinct monomials", lineno
                )
            rel = Relation.equal((a, b), (c, d))
        if rel in seen:
            raise PresentationSyntaxError(f"duplicate relation {rel}", lineno)
        seen.add(rel)
        relations.append(rel)
    if n is None:
        raise PresentationSyntaxError("empty input: expected a 'generators N' header")
    return presentation(n, relations)


def render_presentation(p: Presentation) -> str:
    lines = [f"generators {p.n}"]
    lines.extend(str(rel) for rel in p.relations)
    return "\n".join(lines) + "\n"


def render_json(p: Presentation) -> str:
    return json.dumps(to_json_dict(p), indent=2) + "\n"


def load_presentation(path) -> Presentation:
    return parse_presentation(Path(path).read_text())


def save_presentation(p: Presentation, path, as_json: bool = False) -> None:
    text = render_json(p) if as_json else render_presentation(p)
    Path(path).write_text(text)
