"""Line-based instance files for torus maps and Reidemeister-class queries.

See FORMATS.md at the repository root for the grammar.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Optional

from .classes import TwistedSetting
from .errors import ParseError, ReidtraceError
from .groups import FreeAbelian, FreeGroup, GroupElement, Homomorphism, parse_element
from .linalg import identity
from .torus import AdmissibleTuple, AffineTorusMap, Region
from .wedge import parse_wedge

_HEADER = re.compile(r"^(torus|coincidence)\s+n\s*=\s*(\d+)$")
_KEYVAL = re.compile(r"^([A-Za-z_]+)\s*=\s*(.*)$")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_matrix(value: str, n: int, key: str, lineno: int):
    try:
        m = ast.literal_eval(value)
        rows = [[int(x) for x in row] for row in m]
    except (ValueError, SyntaxError, TypeError) as exc:
        raise ParseError(f"{key}: expected an integer matrix like [[1,0],[0,1]], got {value!r}", lineno) from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"{key}: expected a {n}x{n} matrix", lineno)
    return rows


def _parse_vector(value: str, n: int, key: str, lineno: int, rational: bool):
    value = value.strip()
    if not (value.startswith("(") and value.endswith(")")):
        raise ParseError(f"{key}: expected a vector like (0,1/2), got {value!r}", lineno)
    parts = [p.strip() for p in value[1:-1].split(",") if p.strip()]
    try:
        out = [Fraction(p) if rational else int(p) for p in parts]
    except ValueError as exc:
        raise ParseError(f"{key}: bad entry in {value!r}", lineno) from exc
    if len(out) != n:
        raise ParseError(f"{key}: expected {n} entries, got {len(out)}", lineno)
    return out


def _parse_region(value: str, lineno: int) -> Region:
    value = value.strip()
    if value == "whole":
        return Region.whole()
    if value.startswith("points"):
        body = value[len("points"):].strip()
        try:
            return Region.select(int(x) for x in body.split(",") if x.strip())
        except ValueError as exc:
            raise ParseError(f"region: bad point list {body!r}", lineno) from exc
    raise ParseError(f"region: expected 'whole' or 'points 0,2,5', got {value!r}", lineno)


def parse_torus(text: str) -> AdmissibleTuple:
    """Read a torus fixed-point or coincidence instance."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty instance")
    lineno, first = lines[0]
    m = _HEADER.match(first)
    if not m:
        raise ParseError(f"expected header 'torus n=<dim>', got {first!r}", lineno)
    n = int(m.group(2))
    if n < 1:
        raise ParseError("torus dimension must be positive", lineno)
    fields: dict[str, tuple[int, str]] = {}
    for lineno, line in lines[1:]:
        kv = _KEYVAL.match(line)
        if not kv:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        key = kv.group(1)
        if key not in ("A", "B", "c", "d", "twist_f", "twist_g", "region"):
            raise ParseError(f"unknown field {key!r}", lineno)
        if key in fields:
            raise ParseError(f"field {key!r} given twice", lineno)
        fields[key] = (lineno, kv.group(2))
    if "A" not in fields:
        raise ParseError("missing field 'A'")

    def get(key, kind):
        if key not in fields:
            return None
        ln, val = fields[key]
        if kind == "matrix":
            return _parse_matrix(val, n, key, ln)
        return _parse_vector(val, n, key, ln, rational=(kind == "rational"))

    A = get("A", "matrix")
    B = get("B", "matrix")
    c = get("c", "rational") or [0] * n
    d = get("d", "rational") or [0] * n
    if B is None:
        if "d" in fields:
            raise ParseError("field 'd' given without 'B'", fields["d"][0])
        B = identity(n)
    try:
        f = AffineTorusMap(A, c)
    except ValueError as exc:
        raise ParseError(f"c: {exc}", fields.get("c", fields["A"])[0]) from exc
    try:
        g = AffineTorusMap(B, d)
    except ValueError as exc:
        raise ParseError(f"d: {exc}", fields.get("d", fields.get("B", fields["A"]))[0]) from exc
    region = _parse_region(*reversed(fields["region"])) if "region" in fields else Region.whole()
    try:
        return AdmissibleTuple(f, g, get("twist_f", "int"), get("twist_g", "int"), region)
    except ReidtraceError:
        raise
    except ValueError as exc:
        where = fields["region"][0] if "region" in fields else None
        raise ParseError(str(exc), where) from exc


def format_torus(t: AdmissibleTuple) -> str:
    vec = lambda v: "(" + ",".join(str(x) for x in v) + ")"
    mat = lambda m: "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m) + "]"
    lines = [
        f"torus n={t.n}",
        f"A = {mat(t.f.A)}",
        f"c = {vec(t.f.c)}",
        f"B = {mat(t.g.A)}",
        f"d = {vec(t.g.c)}",
        f"twist_f = {vec(t.twist_f)}",
        f"twist_g = {vec(t.twist_g)}",
        f"region = {t.region}",
    ]
    return "\n".join(lines) + "\n"


_CLASSES_HEADER = re.compile(r"^classes\s+(abelian|free)\s+n\s*=\s*(\d+)$")
_HOM_LINE = re.compile(r"^(phi|psi)\s+x(\d+)\s*->\s*(.*)$")


def parse_classes(text: str) -> tuple[TwistedSetting, Optional[tuple[GroupElement, GroupElement]]]:
    """Read a twisted setting and an optional pair of elements to compare.

    Torus instance files and wedge files are accepted too; they stand for
    the settings ``(A, B)`` and ``(endo, id)``.
    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty input")
    lineno, first = lines[0]
    if _HEADER.match(first):
        t = parse_torus(text)
        return t.setting, None
    m = _CLASSES_HEADER.match(first)
    if not m:
        if "->" in first:
            return parse_wedge(text).setting(), None
        raise ParseError(f"expected header 'classes abelian n=<rank>' or 'classes free n=<rank>', got {first!r}", lineno)
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ParseError("rank must be positive", lineno)
    group = FreeAbelian(n) if kind == "abelian" else FreeGroup(n)
    homs: dict[str, object] = {}
    words: dict[str, dict[int, tuple[int, str]]] = {"phi": {}, "psi": {}}
    pair = None
    for lineno, line in lines[1:]:
        if kind == "free" and (hm := _HOM_LINE.match(line)):
            words[hm.group(1)][int(hm.group(2))] = (lineno, hm.group(3))
            continue
        kv = _KEYVAL.match(line)
        if not kv:
            raise ParseError(f"cannot read {line!r}", lineno)
        key, val = kv.group(1), kv.group(2)
        if key in ("phi", "psi") and kind == "abelian":
            homs[key] = Homomorphism.from_matrix(_parse_matrix(val, n, key, lineno))
        elif key == "pair":
            parts = val.split("|")
            if len(parts) != 2:
                raise ParseError("pair: expected two elements separated by '|'", lineno)
            try:
                pair = tuple(parse_element(p, group) for p in parts)
            except ReidtraceError as exc:
                raise ParseError(f"pair: {exc}", lineno) from exc
        else:
            raise ParseError(f"unknown field {key!r}", lineno)
    if kind == "free":
        for name, table in words.items():
            if not table:
                continue
            missing = [i for i in range(1, n + 1) if i not in table]
            if missing:
                raise ParseError(f"{name}: missing image of x{missing[0]}")
            images = []
            for i in range(1, n + 1):
                ln, body = table[i]
                try:
                    images.append(parse_element(body, group))
                except ReidtraceError as exc:
                    raise ParseError(f"{name}: {exc}", ln) from exc
            homs[name] = Homomorphism(group, group, tuple(images))
    if "phi" not in homs:
        raise ParseError("missing phi")
    psi = homs.get("psi", Homomorphism.identity(group))
    return TwistedSetting(group, group, homs["phi"], psi), pair
