"""Catalog of the named example inputs, embedded as JSON data with checksums."""

import hashlib
import json
import logging
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional

from clutter_sdk import ZZ, ParseError, free_faces, homology_profile

from .formats import COMPLEX, Subject, dump_subject, kind_of, parse_subject, subject_to_json

FIXTURE_PREFIX = "fixtures:"

# Structural checks a fixture may declare under "gate"
GATE_ACYCLIC_NO_FREE_FACE = "acyclic-no-free-face"


@dataclass
class Fixture:
    name: str
    kind: str
    description: str
    subject: Subject
    sha256: str
    gate: Optional[str] = None

    @property
    def text(self) -> str:
        return dump_subject(self.subject)

    def as_dict(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "description": self.description, "sha256": self.sha256}
        if self.gate:
            out["gate"] = self.gate
        return out


class FixtureError(ParseError):
    """A fixture failed its self-validation."""


class FixtureCatalog:
    """Named fixtures, each validated when the catalog loads.

    Every entry is checked against its declared n, d and face count, the
    SHA-256 digest of its canonical terse form, and its structural gate.
    """

    def __init__(self, fixtures: Dict[str, Fixture]):
        self.fixtures = fixtures

    @classmethod
    def load(cls, document: Optional[dict] = None) -> "FixtureCatalog":
        """Load and validate the embedded catalog (or a given catalog document).

        Raises:
            FixtureError: If any fixture fails validation
        """
        logger = logging.getLogger(f"clutter_cli.{cls.__name__}")
        if document is None:
            data = resources.files("clutter_cli").joinpath("data", "fixtures.json").read_text(encoding="utf-8")
            document = json.loads(data)
        fixtures = {}
        for name, entry in document["fixtures"].items():
            fixtures[name] = cls._validate(name, entry)
            logger.debug(f"✓ fixture {name} ({entry['kind']}, {entry['count']} faces)")
        logger.debug(f"loaded {len(fixtures)} fixtures")
        return cls(fixtures)

    @staticmethod
    def _validate(name: str, entry: dict) -> Fixture:
        kind = entry["kind"]
        key = {"clutter": "circuits", "ideal": "generators", "complex": "facets"}[kind]
        body = {k: entry[k] for k in ("n", "d", key) if k in entry}
        try:
            subject = parse_subject(json.dumps(body))
        except ParseError as exc:
            raise FixtureError(f"fixture {name}: {exc.message}") from exc

        faces = {"circuits": "masks", "generators": "generators", "facets": "facets"}[key]
        if len(getattr(subject, faces)) != entry["count"] or len(entry[key]) != entry["count"]:
            raise FixtureError(f"fixture {name}: expected {entry['count']} faces")
        digest = hashlib.sha256(dump_subject(subject).encode("utf-8")).hexdigest()
        if digest != entry["sha256"]:
            raise FixtureError(f"fixture {name}: checksum mismatch ({digest})")

        gate = entry.get("gate")
        if gate == GATE_ACYCLIC_NO_FREE_FACE:
            if kind != COMPLEX or not subject.is_pure:
                raise FixtureError(f"fixture {name}: gate needs a pure complex")
            if free_faces(subject):
                raise FixtureError(f"fixture {name}: has a free face")
            if not homology_profile(subject, ZZ).is_acyclic:
                raise FixtureError(f"fixture {name}: integral reduced homology is not trivial")
        elif gate is not None:
            raise FixtureError(f"fixture {name}: unknown gate {gate!r}")
        return Fixture(name, kind, entry["description"], subject, entry["sha256"], gate)

    @property
    def names(self) -> List[str]:
        return list(self.fixtures)

    def get(self, name: str) -> Fixture:
        """Raises ParseError for unknown names."""
        if name.startswith(FIXTURE_PREFIX):
            name = name[len(FIXTURE_PREFIX):]
        try:
            return self.fixtures[name]
        except KeyError:
            raise ParseError(f"unknown fixture {name!r} (known: {', '.join(self.names)})") from None


def fixture_entry(name: str, description: str, subject: Subject) -> dict:
    """A catalog entry for ``subject``, in the shape ``FixtureCatalog.load`` reads."""
    body = subject_to_json(subject)
    key = next(k for k in ("circuits", "generators", "facets") if k in body)
    entry = {"kind": kind_of(subject), "description": description, **body, "count": len(body[key])}
    entry["sha256"] = hashlib.sha256(dump_subject(subject).encode("utf-8")).hexdigest()
    return {"fixtures": {name: entry}}
