"""Workspace: the single Turtle file every command reads and writes."""

from __future__ import annotations

import hashlib
import os
from pathlib import Path
from typing import Iterable, Optional

from eg import vocab as v
from eg.app_config import cfg
from eg.errors import EduGraphError
from eg.graph import BNode, Graph, Iri, MalformedIri, Term, Triple
from eg.interop import FOREIGN_SUFFIXES, read_foreign
from eg.logger import Logger
from eg.model import UserProfile, profile_for_user, profile_nodes
from eg.turtle import (
    PrefixMap,
    TurtleSyntaxError,
    UnknownPrefix,
    parse_turtle,
    serialize_turtle,
    standard_prefixes,
)


class WorkspaceMissing(EduGraphError):
    pass


class IngestError(EduGraphError):
    """An input file could not be read or parsed."""


def resolve_log_dir(workspace: Path) -> Path:
    log_dir = Path(cfg.paths.log_dir)
    if not log_dir.is_absolute():
        log_dir = workspace.resolve().parent / log_dir
    return log_dir


def _scope_bnodes(graph: Graph, tag: str) -> Graph:
    """Prefix blank node labels so two inputs never share a blank node."""
    def scoped(term: Term) -> Term:
        return BNode(f"{tag}{term}") if isinstance(term, BNode) else term

    if not any(isinstance(t.subject, BNode) or isinstance(t.object, BNode) for t in graph):
        return graph
    return Graph(Triple(scoped(t.subject), t.predicate, scoped(t.object)) for t in graph)


def read_graph_file(path: Path) -> tuple[Graph, PrefixMap]:
    """Read one input: Turtle natively, other RDF syntaxes through rdflib.

    Raises IngestError with the file name and the first diagnostic.
    """
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise IngestError(f"{path}: {e.strerror or e}") from e
    if path.suffix.lower() in FOREIGN_SUFFIXES:
        graph, prefixes = read_foreign(path)
    else:
        try:
            graph, prefixes = parse_turtle(raw.decode("utf-8"))
        except UnicodeDecodeError as e:
            raise IngestError(f"{path}: not UTF-8 ({e.reason})") from e
        except TurtleSyntaxError as e:
            raise IngestError(f"{path}:{e.diagnostic}") from e
    tag = "f" + hashlib.sha1(raw).hexdigest()[:8] + "x"
    return _scope_bnodes(graph, tag), prefixes


class Workspace:
    """Loads, merges and persists the workspace graph; logs every change."""

    def __init__(
        self,
        path: Path,
        *,
        debug: bool = False,
        log: Optional[Logger] = None,
    ) -> None:
        self.path = Path(path)
        if log:
            self.log = log
        else:
            self.log = Logger(resolve_log_dir(self.path) / cfg.paths.main_log, debug=debug)
        self.graph = Graph().seal()
        self.prefixes = standard_prefixes()

    @property
    def exists(self) -> bool:
        return self.path.is_file()

    def load(self) -> Graph:
        """Read the workspace file into a sealed graph. Raises WorkspaceMissing."""
        if not self.exists:
            raise WorkspaceMissing(f"workspace not found: {self.path} (run 'ingest' first)")
        graph, prefixes = parse_turtle(self.path.read_text(encoding="utf-8"))
        self.graph = graph.seal()
        self.prefixes = prefixes
        self.log.log("DEBUG", f"Loaded {len(graph)} triples from {self.path}")
        return self.graph

    def save(self, graph: Graph, prefixes: Optional[PrefixMap] = None) -> None:
        """Write ``graph`` and make it the current sealed snapshot."""
        if prefixes is not None:
            self.prefixes = prefixes
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_name(self.path.name + ".tmp")
        tmp.write_text(serialize_turtle(graph, self.prefixes), encoding="utf-8")
        os.replace(tmp, self.path)
        self.graph = graph.seal() if not graph.sealed else graph
        self.log.log("DEBUG", f"Saved {len(graph)} triples to {self.path}")

    # --- Commands that change the graph ---

    def ingest(self, files: Iterable[Path], *, fresh: bool = False) -> int:
        """Merge input files into the workspace (set union). Returns the triple count.

        Nothing is written if any input fails.
        """
        if fresh or not self.exists:
            merged, prefixes = Graph(), standard_prefixes()
        else:
            merged, prefixes = self.load().copy(), self.prefixes.copy()
        for f in files:
            graph, file_prefixes = read_graph_file(Path(f))
            added = merged.update(graph)
            for label, ns in sorted(file_prefixes.items()):
                prefixes.setdefault(label, ns)
            self.log.log("INGEST", f"{f}: {len(graph)} triples, {added} new")
        self.save(merged, prefixes)
        self.log.log("INGEST", f"Workspace now holds {len(merged)} triples")
        return len(merged)

    def replace_profile(self, old: UserProfile, new: UserProfile) -> None:
        """Swap a user's profile triples for ``new`` and persist."""
        graph = self.graph.copy()
        stale = profile_nodes(graph, old.id)
        stale.update(r.id for r in old.results)
        for t in graph.triples():
            if t.subject in stale:
                graph.remove(t)
            elif t.subject == old.user and t.predicate in (v.HAS_PROFILE, v.SOLVES):
                graph.remove(t)
        graph.update(new.triples())
        self.save(graph)
        self.log.log("INFO", f"Profile {new.id} updated ({len(graph)} triples)")

    # --- Lookups ---

    def expand(self, name: str) -> Iri:
        """``label:local`` with a workspace prefix, ``<iri>`` or an absolute IRI."""
        text = name.strip()
        if text.startswith("<") and text.endswith(">"):
            text = text[1:-1]
        label, sep, _ = text.partition(":")
        if sep and label in self.prefixes:
            try:
                return self.prefixes.expand(text)
            except (UnknownPrefix, MalformedIri):
                pass
        return Iri(text)

    def profile(self, user: str) -> UserProfile:
        return profile_for_user(self.graph, self.expand(user))

    def compact(self, iri: str) -> str:
        return self.prefixes.compact(iri) or str(iri)
