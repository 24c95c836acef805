"""Text and JSON formats for clutters, ideals, complexes and Betti tables."""

import json
import re
from typing import Iterator, List, Optional, Tuple, Union

from clutter_sdk import (
    BettiTable,
    Face,
    ParseError,
    PreconditionError,
    RemovalSequence,
    SimplicialComplex,
    SquarefreeMonomialIdeal,
    UniformClutter,
    encode_table,
)
from clutter_sdk.faces import MAX_VERTEX, sort_masks, vertices_of

Subject = Union[UniformClutter, SquarefreeMonomialIdeal, SimplicialComplex]

# Kinds, in the words used by fixtures and JSON documents
CLUTTER = "clutter"
IDEAL = "ideal"
COMPLEX = "complex"

_TOKEN = re.compile(r"\S+")


def _lines(text: str) -> Iterator[Tuple[int, List[Tuple[str, int]]]]:
    """(line number, [(token, column)]) for every non-blank line, comments stripped."""
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if tokens:
            yield number, tokens


def _integer(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a nonnegative integer, got {token!r}", line, column)
    return int(token)


def _face(tokens: List[Tuple[str, int]], n: int, line: int) -> int:
    mask = 0
    for token, column in tokens:
        v = _integer(token, line, column)
        if v < 1 or v > n:
            raise ParseError(f"vertex {v} out of range 1..{n}", line, column)
        if mask >> (v - 1) & 1:
            raise ParseError(f"repeated vertex {v}", line, column)
        mask |= 1 << (v - 1)
    return mask


def _ground_size(token: str, line: int, column: int) -> int:
    n = _integer(token, line, column)
    if n < 1 or n > MAX_VERTEX:
        raise ParseError(f"n must lie in 1..{MAX_VERTEX}, got {n}", line, column)
    return n


def _terse(text: str, header_size: int, kind: str) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Header integers and (line, mask) rows of a terse document."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError(f"empty {kind} input", 1, 1)
    number, header = lines[0]
    if len(header) != header_size:
        expected = "n d" if header_size == 2 else "n"
        raise ParseError(f"{kind} header must be {expected!r}", number, header[0][1])
    values = [_ground_size(header[0][0], number, header[0][1])]
    if header_size == 2:
        values.append(_integer(header[1][0], number, header[1][1]))
    rows = [(line, _face(tokens, values[0], line)) for line, tokens in lines[1:]]
    return values, rows


def _reject_duplicates(rows: List[Tuple[int, int]], what: str) -> None:
    seen = {}
    for line, mask in rows:
        if mask in seen:
            raise ParseError(f"duplicate {what} {Face(mask)} (first on line {seen[mask]})", line, 1)
        seen[mask] = line


def _json_document(text: str) -> dict:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(document, dict):
        raise ParseError("JSON input must be an object", 1, 1)
    return document


def _json_faces(document: dict, key: str, n: int) -> List[int]:
    faces = document.get(key)
    if not isinstance(faces, list):
        raise ParseError(f"JSON input needs a {key!r} list")
    masks = []
    for face in faces:
        if not isinstance(face, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in face):
            raise ParseError(f"{key} entries must be lists of integers, got {face!r}")
        mask = 0
        for v in face:
            if v < 1 or v > n:
                raise ParseError(f"vertex {v} out of range 1..{n}")
            if mask >> (v - 1) & 1:
                raise ParseError(f"repeated vertex {v} in {face}")
            mask |= 1 << (v - 1)
        masks.append(mask)
    return masks


def _json_int(document: dict, key: str) -> int:
    value = document.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"JSON input needs an integer {key!r}")
    return value


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _wrap(build, *args):
    """Re-raise SDK precondition errors from constructors as parse errors."""
    try:
        return build(*args)
    except PreconditionError as exc:
        raise ParseError(exc.message) from exc


def _clutter_from_json(document: dict) -> UniformClutter:
    n, d = _json_int(document, "n"), _json_int(document, "d")
    masks = _json_faces(document, "circuits", n)
    if len(set(masks)) != len(masks):
        raise ParseError("duplicate circuit")
    for mask in masks:
        if mask.bit_count() != d:
            raise ParseError(f"circuit {Face(mask)} does not have d={d} vertices")
    return _wrap(UniformClutter, n, d, frozenset(masks))


def _ideal_from_json(document: dict) -> SquarefreeMonomialIdeal:
    n = _json_int(document, "n")
    return _wrap(SquarefreeMonomialIdeal.from_generators, n, _json_faces(document, "generators", n))


def _complex_from_json(document: dict) -> SimplicialComplex:
    n = _json_int(document, "n")
    return _wrap(SimplicialComplex.from_faces, n, [vertices_of(m) for m in _json_faces(document, "facets", n)])


def parse_clutter(text: str) -> UniformClutter:
    """Parse a clutter from terse ("n d" then circuits) or JSON text.

    Raises:
        ParseError: With the line and column of the offending token
    """
    if _is_json(text):
        return _clutter_from_json(_json_document(text))
    (n, d), rows = _terse(text, 2, CLUTTER)
    if d < 1:
        raise ParseError("d must be positive", 1, 1)
    for line, mask in rows:
        if mask.bit_count() != d:
            raise ParseError(f"circuit has {mask.bit_count()} vertices, expected d={d}", line, 1)
    _reject_duplicates(rows, "circuit")
    return _wrap(UniformClutter, n, d, frozenset(mask for _, mask in rows))


def parse_ideal(text: str) -> SquarefreeMonomialIdeal:
    """Parse an ideal from terse ("n" then generators) or JSON text; generators are minimalized."""
    if _is_json(text):
        return _ideal_from_json(_json_document(text))
    (n,), rows = _terse(text, 1, IDEAL)
    _reject_duplicates(rows, "generator")
    return _wrap(SquarefreeMonomialIdeal.from_generators, n, [m for _, m in rows])


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a complex from terse ("n" then faces) or JSON text.

    The listed faces are maximalized into facets. The terse form has no way
    to write {∅}; use JSON ``"facets": [[]]`` for it.
    """
    if _is_json(text):
        return _complex_from_json(_json_document(text))
    (n,), rows = _terse(text, 1, COMPLEX)
    return _wrap(SimplicialComplex.from_faces, n, [vertices_of(m) for _, m in rows])


def parse_subject(text: str, complex_hint: bool = False) -> Subject:
    """Parse any input, telling the kind from JSON keys or the terse header.

    A one-number terse header means an ideal, or a complex when
    ``complex_hint`` is set.
    """
    if _is_json(text):
        document = _json_document(text)
        if "circuits" in document:
            return _clutter_from_json(document)
        if "generators" in document:
            return _ideal_from_json(document)
        if "facets" in document:
            return _complex_from_json(document)
        raise ParseError("JSON input needs 'circuits', 'generators' or 'facets'")
    lines = list(_lines(text))
    if lines and len(lines[0][1]) == 2:
        return parse_clutter(text)
    return parse_complex(text) if complex_hint else parse_ideal(text)


def parse_face(text: str) -> Face:
    """A face written as digits or separated vertices: "1 4", "1,4" or "14" (n < 10)."""
    tokens = re.findall(r"\d+", text)
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        return Face.from_vertices(int(t) for t in tokens)
    except PreconditionError as exc:
        raise ParseError(exc.message) from exc


def parse_sequence(text: str, base: UniformClutter) -> RemovalSequence:
    """Removal steps as JSON ``{"steps": [{"e": [...], "A": [[...], ...]}, ...]}``."""
    document = _json_document(text)
    steps = document.get("steps")
    if not isinstance(steps, list):
        raise ParseError("removal sequence needs a 'steps' list")
    pairs = []
    for k, step in enumerate(steps, 1):
        if not isinstance(step, dict) or "e" not in step or "A" not in step:
            raise ParseError(f"step {k} needs 'e' and 'A'")
        pairs.append((step["e"], step["A"]))
    return _wrap(RemovalSequence.from_pairs, base, pairs)


def _rows(masks) -> str:
    return "".join(" ".join(map(str, vertices_of(m))) + "\n" for m in sort_masks(masks))


def dump_clutter(C: UniformClutter) -> str:
    """Canonical terse form: header, then circuits in lexicographic order."""
    return f"{C.n} {C.d}\n" + _rows(C.masks)


def dump_ideal(I: SquarefreeMonomialIdeal) -> str:
    return f"{I.n}\n" + _rows(I.generators)


def dump_complex(D: SimplicialComplex) -> str:
    return f"{D.n}\n" + _rows(D.facets)


def kind_of(subject: Subject) -> str:
    if isinstance(subject, UniformClutter):
        return CLUTTER
    if isinstance(subject, SquarefreeMonomialIdeal):
        return IDEAL
    return COMPLEX


def dump_subject(subject: Subject) -> str:
    return {CLUTTER: dump_clutter, IDEAL: dump_ideal, COMPLEX: dump_complex}[kind_of(subject)](subject)


def subject_to_json(subject: Subject) -> dict:
    """JSON document of any subject; ``parse_subject`` reads it back."""
    if isinstance(subject, UniformClutter):
        return {"n": subject.n, "d": subject.d, "circuits": [list(c.vertices) for c in subject.circuits]}
    if isinstance(subject, SquarefreeMonomialIdeal):
        return {"n": subject.n, "generators": [list(vertices_of(g)) for g in sort_masks(subject.generators)]}
    return {"n": subject.n, "facets": [list(vertices_of(f)) for f in sort_masks(subject.facets)]}


def betti_diagram(table: BettiTable) -> List[List[int]]:
    """Rows j - i, columns i of the Betti diagram of S/I (β_0 = 1 included)."""
    pd = table.pd
    top = max((w.bit_count() - i - 1 for i, w in table.entries), default=0)
    rows = [[0] * (pd + 1) for _ in range(top + 1)]
    rows[0][0] = 1
    for (i, w), count in table.entries.items():
        rows[w.bit_count() - i - 1][i + 1] += count
    return rows


def table_to_json(table: BettiTable) -> dict:
    return {
        "n": table.n,
        "field": table.field,
        "reg": table.reg,
        "pd": table.pd,
        "triples": [[i, list(w), c] for i, w, c in table.triples()],
    }


def emit_betti_table(table: BettiTable, fmt: str = "tsv") -> Union[str, bytes]:
    """Serialize a Betti table; every format is byte-stable for a given table.

    tsv: the Betti diagram of S/I, rows j - i and columns i, with n, field,
    reg(I) and pd(S/I) on a leading comment line. json: the (i, W, count)
    triples of I. cbor: the canonical CBOR of the same triples.
    """
    if fmt == "json":
        return json.dumps(table_to_json(table), sort_keys=True) + "\n"
    if fmt == "cbor":
        return encode_table(table)
    if fmt != "tsv":
        raise PreconditionError(f"unknown table format {fmt!r}")
    reg = "-" if table.reg is None else table.reg
    lines = [f"# n={table.n} field={table.field} reg={reg} pd={table.pd}"]
    if table.is_empty:
        lines.append("# empty")
        return "\n".join(lines) + "\n"
    rows = betti_diagram(table)
    lines.append("\t".join(["j-i"] + [str(i) for i in range(len(rows[0]))]))
    for r, row in enumerate(rows):
        lines.append("\t".join([str(r)] + [str(c) for c in row]))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> BettiTable:
    """Read back the JSON form written by ``emit_betti_table``."""
    document = _json_document(text)
    n = _json_int(document, "n")
    triples = document.get("triples")
    if not isinstance(triples, list):
        raise ParseError("table needs a 'triples' list")
    entries = {}
    for triple in triples:
        if not isinstance(triple, list) or len(triple) != 3:
            raise ParseError(f"bad triple {triple!r}")
        i, w, count = triple
        (mask,) = _json_faces({"W": [w]}, "W", n)
        entries[(i, mask)] = count
    return BettiTable(n, str(document.get("field", "q")), entries)

