#!/usr/bin/env python3
"""edugraph - educational knowledge graph: paths, recommendations, queries."""

from __future__ import annotations

import dataclasses
import datetime
import sys
import traceback
from pathlib import Path
from typing import Callable, Optional, Sequence

from eg import config, i18n, ui
from eg import defaults as defaults_mod
from eg import vocab as v
from eg.app_config import cfg
from eg.defaults import PsychModel
from eg.errors import EduGraphError
from eg.evaluation import evaluate_dir
from eg.graph import Graph, Iri, Literal, Term
from eg.i18n import t
from eg.logger import Logger
from eg.model import EducationalResource, LearningPath, Recommendation, Test, typed_view
from eg.planner import RecommendationRequirements, enumerate_paths
from eg.query import execute, parse_query
from eg.recommender import RatingEvent, grade_test, recommend, score_constructs, update_preferences
from eg.turtle import PrefixMap, render_term, serialize_turtle, standard_prefixes
from eg.validate import ERROR, validate_graph
from eg.workspace import Workspace

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_WARNINGS = 2

_log: Logger | None = None  # module-level for crash handler


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _rationale(rec: Recommendation) -> str:
    return " ".join(f"{name}={value:.3f}" for name, value in rec.rationale)


# --- Commands ---


def cmd_ingest(ws: Workspace, args, psych: PsychModel) -> int:
    files = args.files or [Path(p) for p in cfg.paths.data]
    if not files:
        raise EduGraphError(t("ingest.no_files"))
    count = ws.ingest(files, fresh=args.fresh)
    ui.ok(t("ingest.done", count=count, path=ws.path))
    ui.print_table([t("col.workspace"), t("col.triples")], [[ws.path, count]], numeric=[1])
    return EXIT_OK


def cmd_validate(ws: Workspace, args, psych: PsychModel) -> int:
    diags = validate_graph(ws.load())
    errors = [d for d in diags if d.severity == ERROR]
    warnings = [d for d in diags if d.severity != ERROR]
    ws.log.log("INFO", f"Validation: {len(errors)} errors, {len(warnings)} warnings")
    for d in diags:
        ws.log.log("ERROR" if d.severity == ERROR else "WARN", f"{d.code} {d.subject}: {d.message}")
    if diags:
        ui.print_table(
            [t("col.severity"), t("col.code"), t("col.subject"), t("col.message")],
            [[d.severity, d.code, ws.compact(d.subject), d.message] for d in diags],
        )
    if errors:
        ui.fail(t("validate.errors", errors=len(errors), warnings=len(warnings)))
        return EXIT_ERROR
    if warnings:
        ui.warn(t("validate.warnings_only", warnings=len(warnings)))
        return EXIT_WARNINGS
    ui.ok(t("validate.clean", count=len(ws.graph)))
    return EXIT_OK


def cmd_path(ws: Workspace, args, psych: PsychModel) -> int:
    graph = ws.load()
    profile = ws.profile(args.user)
    goal = ws.expand(args.goal)
    req = RecommendationRequirements.from_config(args.k)
    paths = enumerate_paths(goal, profile, req, graph, strict=args.strict)
    for p in paths:
        ws.log.log("PLAN", f"{p.id} weight={p.weight:.6f} topics={' '.join(p.topics)}")

    if cfg.display.format == "turtle":
        out = Graph()
        for p in paths:
            out.update(p.triples())
        ui.print_text(serialize_turtle(out, ws.prefixes))
    else:
        ui.print_table(
            [t("col.path"), t("col.weight"), t("col.step"), t("col.topic"),
             t("col.resource"), t("col.score")],
            _path_rows(ws, paths),
            numeric=[0, 1, 2, 5],
        )

    if paths and paths[0].relaxed:
        ui.warn(t("path.relaxed", goal=ws.compact(goal)))
        return EXIT_WARNINGS
    ui.ok(t("path.found", count=len(paths), goal=ws.compact(goal)))
    return EXIT_OK


def _path_rows(ws: Workspace, paths: list[LearningPath]) -> list[list[object]]:
    rows: list[list[object]] = []
    for rank, p in enumerate(paths, 1):
        for pos, topic in enumerate(p.topics, 1):
            recs = p.recommendations.get(topic, [])
            top = recs[0] if recs else None
            rows.append([
                rank,
                f"{p.weight:.6f}",
                pos,
                ws.compact(topic),
                ws.compact(top.resource) if top else "-",
                f"{top.score:.3f}" if top else "-",
            ])
    return rows


def cmd_recommend(ws: Workspace, args, psych: PsychModel) -> int:
    graph = ws.load()
    profile = ws.profile(args.user)
    topic = ws.expand(args.topic)
    n = args.n or cfg.profile.recommendations_per_topic
    recs = recommend(topic, profile, n, graph)
    ws.log.log("INFO", f"recommend {topic} for {profile.user}: {len(recs)} resources")
    ui.print_table(
        [t("col.rank"), t("col.resource"), t("col.score"), t("col.rationale")],
        [[i, ws.compact(r.resource), f"{r.score:.3f}", _rationale(r)] for i, r in enumerate(recs, 1)],
        numeric=[0, 2],
    )
    if not recs:
        ui.warn(t("recommend.none", topic=ws.compact(topic)))
    return EXIT_OK


def _cell(term: Term, prefixes: PrefixMap) -> str:
    if isinstance(term, Literal) and term.is_numeric and term.well_formed():
        return term.lexical
    return render_term(term, prefixes)


def cmd_query(ws: Workspace, args, psych: PsychModel) -> int:
    path = Path(args.file)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise EduGraphError(f"{path}: {e.strerror or e}") from e
    graph = ws.load()
    q = parse_query(text)
    table = execute(q, graph)
    ws.log.log("QUERY", f"{path}: {len(q.patterns)} patterns, {len(table)} rows")
    shown = standard_prefixes()
    shown.update(ws.prefixes)
    shown.update(q.prefixes)
    ui.print_table(
        [str(var) for var in table.header],
        [[_cell(row[var], shown) for var in table.header] for row in table.rows],
    )
    ui.info(t("query.rows", count=len(table)))
    return EXIT_OK


def cmd_eval(ws: Workspace, args, psych: PsychModel) -> int:
    reports = evaluate_dir(args.mappings)
    for r in reports:
        ws.log.log("INFO", f"eval {r.schema}: tp={r.tp} fn={r.fn} recall={r.recall_text}")
    ui.print_table(
        [t("col.schema"), "TP", "FN", t("col.recall")],
        [[r.schema, r.tp, r.fn, r.recall_text] for r in reports],
        numeric=[1, 2, 3],
    )
    return EXIT_OK


def cmd_stats(ws: Workspace, args, psych: PsychModel) -> int:
    graph = ws.load()
    classes = sorted({
        tr.object for tr in graph.match(None, Iri(v.RDF_TYPE), None) if isinstance(tr.object, Iri)
    })
    rows: list[list[object]] = [
        [t("stats.triples"), len(graph)],
        [t("stats.subjects"), len({tr.subject for tr in graph})],
    ]
    rows += [[ws.compact(cls), len(graph.instances(cls))] for cls in classes]
    ui.print_table([t("col.item"), t("col.count")], rows, numeric=[1])
    return EXIT_OK


def cmd_rate(ws: Workspace, args, psych: PsychModel) -> int:
    graph = ws.load()
    profile = ws.profile(args.user)
    event = RatingEvent(profile.user, ws.expand(args.resource), args.rating, _now())
    updated = update_preferences(profile, event, graph)
    media = typed_view(graph, event.resource, EducationalResource).media_type
    ws.replace_profile(profile, updated)
    before = profile.preferences.get(media, cfg.profile.neutral_preference)
    ui.print_table(
        [t("col.media"), t("col.before"), t("col.after")],
        [[media, f"{before:.3f}", f"{updated.preferences[media]:.3f}"]],
        numeric=[1, 2],
    )
    ui.ok(t("rate.saved", user=ws.compact(profile.user)))
    return EXIT_OK


def cmd_grade(ws: Workspace, args, psych: PsychModel) -> int:
    graph = ws.load()
    profile = ws.profile(args.user)
    test = typed_view(graph, ws.expand(args.test), Test)
    answers: dict[str, str] = {}
    for ex, given in args.answer:
        answers[ws.expand(ex)] = given
    result, updated = grade_test(test, answers, profile, args.at or _now())
    ws.replace_profile(profile, updated)
    ws.log.log(
        "INFO",
        f"grade {test.id} for {profile.user}: score={result.score:.3f} attempt={result.attempt}",
    )
    ui.print_table(
        [t("col.result"), t("col.score"), t("col.timestamp"), t("col.attempt")],
        [[ws.compact(result.id), f"{result.score:.3f}", result.timestamp, result.attempt]],
        numeric=[1, 3],
    )
    return EXIT_OK


def cmd_constructs(ws: Workspace, args, psych: PsychModel) -> int:
    ws.load()
    profile = ws.profile(args.user)
    if not psych.constructs:
        ui.warn(t("constructs.none_defined"))
        return EXIT_WARNINGS
    values = score_constructs(profile, psych.constructs, psych.indicators)
    updated = dataclasses.replace(profile, constructs=values)
    ws.replace_profile(profile, updated)
    ui.print_table(
        [t("col.construct"), t("col.value")],
        [[c.id, f"{values[c.id]:.3f}"] for c in psych.constructs],
        numeric=[1],
    )
    return EXIT_OK


_COMMANDS: dict[str, Callable[[Workspace, object, PsychModel], int]] = {
    "ingest": cmd_ingest,
    "validate": cmd_validate,
    "path": cmd_path,
    "recommend": cmd_recommend,
    "query": cmd_query,
    "eval": cmd_eval,
    "stats": cmd_stats,
    "rate": cmd_rate,
    "grade": cmd_grade,
    "constructs": cmd_constructs,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    global _log
    argv = list(sys.argv[1:] if argv is None else argv)
    args = config.parse_args(argv)
    try:
        config_path = config.find_config(args.config)
        psych = defaults_mod.load(config_path)
    except EduGraphError as e:
        ui.fail(t("main.config_error", error=e))
        return EXIT_ERROR

    if cfg.locale:
        i18n.init(cfg.locale)
    # CLI flags override config
    if args.log_level:
        cfg.logging.level = args.log_level
    if args.format:
        cfg.display.format = args.format

    ws = Workspace(config.workspace_path(args.workspace), debug=args.debug)
    _log = ws.log
    ws.log.log_run(" ".join(["edugraph", *argv]), ws.path, config_path)
    try:
        code = _COMMANDS[args.command](ws, args, psych)
    except EduGraphError as e:
        ws.log.log("ERROR", f"{type(e).__name__}: {e}")
        ui.fail(str(e))
        code = EXIT_ERROR
    ws.log.log("INFO", f"exit {code}")
    ws.log.close()
    _log = None
    return code


def _crash_diagnostics(log: Logger | None, exc: BaseException) -> None:
    """Log crash state for post-mortem debugging."""
    print(f"\n  {ui.RED}{ui.BOLD}💥 {t('main.crashed')}{ui.NC}", file=sys.stderr)
    print(f"  {ui.RED}├─ {type(exc).__name__}: {exc}{ui.NC}", file=sys.stderr)
    if log:
        print(f"  {ui.RED}└─ {t('main.log_colon', path=log.log_path)}{ui.NC}", file=sys.stderr)
        log.log("FATAL", f"{type(exc).__name__}: {exc}")
        log.log_lines("FATAL", traceback.format_exc())


if __name__ == "__main__":
    try:
        sys.exit(main())
    except SystemExit:
        raise
    except BaseException as e:
        _crash_diagnostics(_log, e)
        sys.exit(1)
