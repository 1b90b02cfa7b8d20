"""Plain-text complex files, version line "cfk v1".

    cfk v1
    # positions are (i, j), then the Maslov grading
    gen x0 0 1 0
    gen x1 1 1 1
    gen x2 1 0 0
    dif x1 x0 x2

One generator per gen line; one source per dif line with its targets as
either a bare name or U^<n>.<name>.  "#" starts a comment (full line or
trailing).  Writing is canonical: generators in declared order, dif lines
sorted by source, targets sorted by (U power, name); reading a canonical
file back is byte-identical under dumps().
"""
from __future__ import annotations

import re
from pathlib import Path

from .complexes import BifilteredComplex, DiffTerm, Generator
from .errors import FormatError

HEADER = "cfk v1"
_RESERVED = re.compile(r"^U\^\d+\.")
_TERM = re.compile(r"^U\^(\d+)\.(.+)$")


def _check_name(name: str, lineno: int) -> str:
    if _RESERVED.match(name):
        raise FormatError(f"line {lineno}: name {name!r} collides with term syntax")
    if "#" in name:
        raise FormatError(f"line {lineno}: name {name!r} may not contain '#'")
    return name


def loads(text: str, label: str = "") -> BifilteredComplex:
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows or rows[0][1] != HEADER.split():
        found = " ".join(rows[0][1]) if rows else "empty file"
        raise FormatError(f"missing '{HEADER}' header (found {found!r})")
    generators: list[Generator] = []
    declared: set[str] = set()
    terms: list[DiffTerm] = []
    seen_terms: set[DiffTerm] = set()
    for lineno, fields in rows[1:]:
        directive = fields[0]
        if directive == "gen":
            if len(fields) != 5:
                raise FormatError(
                    f"line {lineno}: gen needs name, i, j, maslov ({len(fields) - 1} fields given)")
            name = _check_name(fields[1], lineno)
            try:
                i, j, maslov = (int(v) for v in fields[2:5])
            except ValueError:
                raise FormatError(f"line {lineno}: gen positions must be integers") from None
            generators.append(Generator(name, i, j, maslov))
            declared.add(name)
        elif directive == "dif":
            if len(fields) < 3:
                raise FormatError(f"line {lineno}: dif needs a source and at least one target")
            source = fields[1]
            if source not in declared:
                raise FormatError(
                    f"line {lineno}: dif references undeclared generator {source!r}")
            for token in fields[2:]:
                m = _TERM.match(token)
                if m is None and token.startswith("U^"):
                    raise FormatError(f"line {lineno}: malformed term {token!r}")
                upower, target = (int(m.group(1)), m.group(2)) if m else (0, token)
                if target not in declared:
                    raise FormatError(
                        f"line {lineno}: dif references undeclared generator {target!r}")
                term = DiffTerm(source, target, upower)
                if term in seen_terms:
                    raise FormatError(
                        f"line {lineno}: term {token!r} repeated for source {source!r}")
                seen_terms.add(term)
                terms.append(term)
        else:
            raise FormatError(f"line {lineno}: unknown directive {directive!r}")
    return BifilteredComplex(generators, terms, label)


def dumps(C: BifilteredComplex) -> str:
    lines = [HEADER]
    for g in C.generators:
        _check_name(g.name, 0)
        lines.append(f"gen {g.name} {g.i} {g.j} {g.maslov}")
    by_source: dict[str, list[DiffTerm]] = {}
    for t in C.terms:
        by_source.setdefault(t.source, []).append(t)
    for source in sorted(by_source):
        parts = []
        for t in sorted(by_source[source], key=lambda t: (t.upower, t.target)):
            parts.append(t.target if t.upower == 0 else f"U^{t.upower}.{t.target}")
        lines.append(f"dif {source} {' '.join(parts)}")
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> BifilteredComplex:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {p}: {exc}") from None
    return loads(text, label=str(path))


def write_complex(C: BifilteredComplex, path: str | Path) -> None:
    Path(path).write_text(dumps(C))
