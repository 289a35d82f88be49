"""Structured-document rendering: deterministic JSON in, typed objects out.

Every report type serializes through a self-describing dict with a "kind"
key; integers that can grow without bound are rendered as decimal strings.
Rendering is byte-deterministic for a given object, and parse(render(x))
reconstructs an object equal to x (per-entry timings are diagnostic fields,
excluded from both serialization and equality).
"""

from __future__ import annotations

import json

from .errors import DomainError
from .gfmatrix import SingerReport
from .pathtable import PathTable
from .recurrence import RecurrenceReport, RowComboReport
from .suite import VerifyReport

_PARSERS = {
    "path_table": PathTable.from_doc,
    "recurrence_report": RecurrenceReport.from_doc,
    "row_combo_report": RowComboReport.from_doc,
    "singer_report": SingerReport.from_doc,
    "verify_report": VerifyReport.from_doc,
}


def render_document(obj) -> str:
    """Deterministic JSON text for any report object with a to_doc()."""
    return json.dumps(obj.to_doc(), sort_keys=True, indent=2) + "\n"


def parse_document(text: str):
    """Inverse of render_document; dispatches on the document's kind."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"not a valid document: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DomainError("document has no kind field")
    kind = doc["kind"]
    if kind not in _PARSERS:
        raise DomainError(f"unknown document kind {kind!r}")
    return _PARSERS[kind](doc)
