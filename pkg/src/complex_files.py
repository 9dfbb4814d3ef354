# complex_files.py
#
# Μορφές αρχείων:
#   .cplx   v <id> <x> <y> / e <id> <vid> <vid> / t <id> <vid> <vid> <vid>
#   .poly   "outer:" και μετά ζεύγη "x y", επαναλαμβανόμενα "hole:" sections
# Σχόλια με '#'. Η σειρά των γραμμών δεν έχει σημασία (order-free),
# τα ids πρέπει να είναι μοναδικά ανά section.

from __future__ import annotations

import os

from simplicial_complex import Complex, ComplexError, DuplicateSimplex, build_complex
from triangulate_polygon import PolygonWithHoles

ARITY = {"v": 3, "e": 3, "t": 4}


class ComplexSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(raw: str):
    """(token, 1-based column) pairs, comment stripped."""
    text = raw.split("#", 1)[0]
    out = []
    col = 0
    for tok in text.split():
        col = text.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok, line, column, what):
    try:
        return int(tok)
    except ValueError:
        raise ComplexSyntaxError(f"{what} must be an integer, got {tok!r}", line, column) from None


def _float(tok, line, column, what):
    try:
        return float(tok)
    except ValueError:
        raise ComplexSyntaxError(f"{what} must be a decimal number, got {tok!r}", line, column) from None


def parse_complex_file(text: str) -> Complex:
    """
    Parse .cplx text into a validated Complex; errors carry line/column.

    Line order is free: a "t" line may come before the "e" lines it needs.
    MissingTriangleEdge is raised only when an edge is absent from the whole
    file, and it points at the "t" line.
    """
    records: dict[str, list] = {"v": [], "e": [], "t": []}
    where: dict[tuple[str, int], tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        (kind, kcol), rest = toks[0], toks[1:]
        if kind not in ARITY:
            raise ComplexSyntaxError(f"unknown record type {kind!r} (expected v, e or t)", lineno, kcol)
        if len(rest) != ARITY[kind]:
            col = rest[ARITY[kind]][1] if len(rest) > ARITY[kind] else kcol
            raise ComplexSyntaxError(
                f"'{kind}' needs {ARITY[kind]} fields, got {len(rest)}", lineno, col
            )
        sid = _int(rest[0][0], lineno, rest[0][1], "id")
        if (kind, sid) in where:
            first = where[(kind, sid)][0]
            exc = DuplicateSimplex(
                f"line {lineno}: {kind} id {sid} already declared on line {first}", kind=kind, simplex_id=sid
            )
            exc.line, exc.column = lineno, rest[0][1]
            raise exc
        where[(kind, sid)] = (lineno, kcol)
        if kind == "v":
            x = _float(rest[1][0], lineno, rest[1][1], "x")
            y = _float(rest[2][0], lineno, rest[2][1], "y")
            records["v"].append((sid, x, y))
        else:
            vids = tuple(_int(tok, lineno, col, "vertex id") for tok, col in rest[1:])
            records[kind].append((sid, *vids))

    try:
        return build_complex(records["v"], records["e"], records["t"])
    except ComplexError as exc:
        loc = where.get((exc.kind, exc.simplex_id))
        if loc is not None:
            exc.line, exc.column = loc
            exc.args = (f"line {loc[0]}: {exc.args[0]}",)
        raise


def serialize_complex(complex_: Complex) -> str:
    """Canonical .cplx text; parse_complex_file(serialize_complex(K)) == K."""
    lines = [f"# {len(complex_.vertices)} vertices, {len(complex_.edges)} edges, {len(complex_.triangles)} triangles"]
    lines += [f"v {v.id} {v.x!r} {v.y!r}" for v in complex_.vertices]
    lines += [f"e {e.id} {e.endpoints[0]} {e.endpoints[1]}" for e in complex_.edges]
    lines += [f"t {t.id} {t.corners[0]} {t.corners[1]} {t.corners[2]}" for t in complex_.triangles]
    return "\n".join(lines) + "\n"


def parse_polygon_file(text: str) -> PolygonWithHoles:
    """Parse .poly text (outer ring, then hole sections); validation happens in PolygonWithHoles."""
    outer: list[tuple[float, float]] | None = None
    holes: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        head = toks[0][0].lower()
        if head in ("outer:", "hole:"):
            if len(toks) > 1:
                raise ComplexSyntaxError(f"unexpected text after {head!r}", lineno, toks[1][1])
            if head == "outer:":
                if outer is not None:
                    raise ComplexSyntaxError("only one 'outer:' section is allowed", lineno, toks[0][1])
                outer = []
                current = outer
            else:
                if outer is None:
                    raise ComplexSyntaxError("'hole:' before 'outer:'", lineno, toks[0][1])
                holes.append([])
                current = holes[-1]
            continue
        if current is None:
            raise ComplexSyntaxError("coordinates before any 'outer:' section", lineno, toks[0][1])
        if len(toks) != 2:
            raise ComplexSyntaxError(f"expected 'x y', got {len(toks)} fields", lineno, toks[0][1])
        current.append((
            _float(toks[0][0], lineno, toks[0][1], "x"),
            _float(toks[1][0], lineno, toks[1][1], "y"),
        ))

    if outer is None:
        raise ComplexSyntaxError("missing 'outer:' section", 1, 1)
    return PolygonWithHoles(outer=tuple(outer), holes=tuple(tuple(h) for h in holes))


def serialize_polygon(polygon: PolygonWithHoles) -> str:
    lines = ["outer:"] + [f"{x!r} {y!r}" for x, y in polygon.outer]
    for hole in polygon.holes:
        lines += ["hole:"] + [f"{x!r} {y!r}" for x, y in hole]
    return "\n".join(lines) + "\n"


def read_complex(path: str) -> Complex:
    with open(path, "r", encoding="utf-8") as f:
        return parse_complex_file(f.read())


def write_complex(path: str, complex_: Complex) -> str:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_complex(complex_))
    return path


def read_polygon(path: str) -> PolygonWithHoles:
    with open(path, "r", encoding="utf-8") as f:
        return parse_polygon_file(f.read())
