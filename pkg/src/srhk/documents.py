"""Reading and writing complexes.

Two formats are understood:

* facet text: one facet per line, whitespace-separated vertex labels,
  ``#`` starts a comment. Vertices are numbered in order of first use
  unless a ``# vertices: a b c`` line fixes the order.
* structured: a JSON object ``{"vertices": [...], "facets": [[...], ...]}``
  with optional ``"name"`` and ``"metadata"`` keys.
"""

from __future__ import annotations

import json
import re
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ComplexError, ParseError, ValidationError
from .simplicial import SimplicialComplex, from_facets

DOCUMENT_SCHEMA = "srhk.complex/1"
_VERTEX_HEADER = re.compile(r"^\s*#\s*vertices:(.*)$")


class NonMaximalFacetWarning(UserWarning):
    pass


@dataclass
class ComplexDocument:
    complex: SimplicialComplex
    format: str = "facet-text"
    name: str | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def dumps(self, fmt: str | None = None) -> str:
        fmt = fmt or self.format
        K = self.complex
        if fmt == "structured":
            doc: dict[str, Any] = {"schema": DOCUMENT_SCHEMA}
            if self.name:
                doc["name"] = self.name
            doc["vertices"] = list(K.vertices)
            doc["facets"] = K.facet_labels()
            if self.metadata:
                doc["metadata"] = self.metadata
            return json.dumps(doc, indent=2) + "\n"
        if fmt != "facet-text":
            raise ValueError(f"unknown format {fmt!r}")
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        facets = K.facet_labels()
        first_use = list(dict.fromkeys(v for f in facets for v in f))
        if first_use != list(K.vertices):
            lines.append("# vertices: " + " ".join(K.vertices))
        lines.extend(" ".join(f) for f in facets)
        return "\n".join(lines) + "\n"


def _parse_facet_text(text: str) -> tuple[list[str], list[list[str]]]:
    vertices: dict[str, None] = {}
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        header = _VERTEX_HEADER.match(raw)
        if header:
            for v in header.group(1).split():
                vertices.setdefault(v)
            continue
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        labels = []
        for m in re.finditer(r"\S+", line):
            if m.group() in labels:
                raise ParseError(lineno, m.start() + 1, f"vertex {m.group()!r} repeated within a facet")
            labels.append(m.group())
        for v in labels:
            vertices.setdefault(v)
        facets.append(labels)
    return list(vertices), facets


def _parse_structured(text: str) -> tuple[list[str], list[list[str]], str | None, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError(1, 1, "structured document must be a JSON object")
    for key in ("vertices", "facets"):
        if key not in doc:
            raise ParseError(1, 1, f"missing key {key!r}")
    vertices, facets = doc["vertices"], doc["facets"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError(1, 1, "'vertices' must be a list of strings")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError(1, 1, "'facets' must be a list of lists")
    return vertices, facets, doc.get("name"), doc.get("metadata") or {}


def loads(text: str) -> ComplexDocument:
    """Parse either format; the structured one is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        vertices, facets, name, metadata = _parse_structured(text)
        fmt = "structured"
    else:
        vertices, facets = _parse_facet_text(text)
        name, metadata, fmt = None, {}, "facet-text"
    try:
        K = from_facets(vertices, facets)
    except ComplexError as exc:
        raise ValidationError(str(exc)) from exc
    for mask in K.dropped:
        warnings.warn(f"facet {sorted(K.labels(mask))} is contained in another facet and was dropped",
                      NonMaximalFacetWarning, stacklevel=2)
    return ComplexDocument(K, fmt, name, metadata)


def read_document(path: str | Path) -> ComplexDocument:
    return loads(Path(path).read_text())


def parse_complex(path: str | Path) -> SimplicialComplex:
    return read_document(path).complex


def write_document(doc: ComplexDocument, path: str | Path, fmt: str | None = None) -> None:
    Path(path).write_text(doc.dumps(fmt))
