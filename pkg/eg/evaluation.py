"""Gold-standard coverage: recall of ontology classes against repository schemata.

Mapping file format (UTF-8, one entry per line)::

    # schema: OER Commons
    Course<TAB>ec:EducationalResource
    Rubric<TAB>-

The second column is an ontology class (``ec:Name`` or bare ``Name``) or ``-``
for a gold class the ontology does not cover. ``#`` lines and blank lines are
skipped; the ``# schema:`` header names the schema (default: file stem).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from eg import vocab as v
from eg.errors import EduGraphError, ParseDiagnostic, SyntaxDiagnosticError

UNCOVERED = "-"

_SCHEMA_RE = re.compile(r"^#\s*schema:\s*(?P<name>.+?)\s*$", re.IGNORECASE)


class MappingSyntaxError(SyntaxDiagnosticError):
    pass


class DuplicateGoldClass(EduGraphError):
    pass


class EmptySchema(EduGraphError):
    pass


class UnknownEducorClass(EduGraphError):
    pass


@dataclass(frozen=True)
class MappingEntry:
    gold_class: str
    covered_by: Optional[str] = None

    @property
    def covered(self) -> bool:
        return self.covered_by is not None


@dataclass
class SchemaMapping:
    schema: str
    entries: list[MappingEntry] = field(default_factory=list)


@dataclass(frozen=True)
class RecallReport:
    schema: str
    tp: int
    fn: int
    recall: float

    @property
    def recall_text(self) -> str:
        return f"{self.recall:.3f}"


def _educor_class(name: str, path: Path, lineno: int) -> str:
    local = name[3:] if name.startswith("ec:") else name
    if local.startswith(v.EC_NS):
        local = local[len(v.EC_NS):]
    if local not in v.EDUCOR_CLASSES:
        raise UnknownEducorClass(f"{path}:{lineno}: unknown ontology class '{name}'")
    return v.ec(local)


def parse_mapping(text: str, path: Path) -> SchemaMapping:
    """Parse mapping text. Raises MappingSyntaxError, DuplicateGoldClass,
    UnknownEducorClass, EmptySchema."""
    mapping = SchemaMapping(schema=path.stem)
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            m = _SCHEMA_RE.match(line.strip())
            if m:
                mapping.schema = m.group("name")
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise MappingSyntaxError(ParseDiagnostic(
                lineno, 1, "expected 'goldClass<TAB>ontologyClass' or 'goldClass<TAB>-'",
                line.strip(),
            ))
        gold, target = parts[0].strip(), parts[1].strip()
        if gold in seen:
            raise DuplicateGoldClass(
                f"{path}:{lineno}: gold class '{gold}' already mapped on line {seen[gold]}"
            )
        seen[gold] = lineno
        covered = None if target == UNCOVERED else _educor_class(target, path, lineno)
        mapping.entries.append(MappingEntry(gold, covered))
    if not mapping.entries:
        raise EmptySchema(f"{path}: no mapping entries")
    return mapping


def load_mapping(path: Path) -> SchemaMapping:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise EduGraphError(f"{path}: {e.strerror or e}") from e
    return parse_mapping(text, path)


def compute_recall(m: SchemaMapping) -> RecallReport:
    """recall = TP / (TP + FN). Raises EmptySchema when there are no entries."""
    tp = sum(1 for e in m.entries if e.covered)
    fn = len(m.entries) - tp
    if tp + fn == 0:
        raise EmptySchema(f"schema '{m.schema}' has no mapping entries")
    return RecallReport(m.schema, tp, fn, tp / (tp + fn))


def evaluate_dir(directory: Path) -> list[RecallReport]:
    """One report per ``*.tsv`` mapping, in file-name order."""
    files = sorted(Path(directory).glob("*.tsv"))
    if not files:
        raise EmptySchema(f"{directory}: no *.tsv mapping files")
    return [compute_recall(load_mapping(f)) for f in files]
