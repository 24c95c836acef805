"""Canonical CBOR encoding of Betti tables and clutters."""

from typing import Any

import cbor2

from .betti import BettiTable
from .clutter import UniformClutter
from .errors import ParseError
from .faces import Face


def _dump(document: dict) -> bytes:
    return cbor2.dumps(document, canonical=True)


def _load(message: bytes, kind: str) -> Any:
    try:
        document = cbor2.loads(message)
    except cbor2.CBORDecodeError as exc:
        raise ParseError(f"invalid CBOR: {exc}") from exc
    if not isinstance(document, dict) or document.get("kind") != kind:
        raise ParseError(f"expected a CBOR {kind} document")
    return document


def encode_table(table: BettiTable) -> bytes:
    """CBOR map with the (i, W, count) triples; byte-stable per table."""
    return _dump(
        {
            "kind": "betti",
            "n": table.n,
            "field": table.field,
            "triples": [[i, list(w), c] for i, w, c in table.triples()],
        }
    )


def decode_table(message: bytes) -> BettiTable:
    document = _load(message, "betti")
    entries = {(i, Face.from_vertices(w).mask): c for i, w, c in document["triples"]}
    return BettiTable(document["n"], document["field"], entries)


def encode_clutter(C: UniformClutter) -> bytes:
    return _dump(
        {
            "kind": "clutter",
            "n": C.n,
            "d": C.d,
            "circuits": [list(c.vertices) for c in C.circuits],
        }
    )


def decode_clutter(message: bytes) -> UniformClutter:
    document = _load(message, "clutter")
    return UniformClutter.from_circuits(document["n"], document["d"], document["circuits"])
