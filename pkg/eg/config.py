"""CLI arguments and config file discovery."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Optional, Sequence

from eg.app_config import ConfigError, cfg
from eg.i18n import t

LOG_LEVELS = ["DEBUG", "INFO", "INGEST", "PLAN", "QUERY", "WARN", "ERROR", "FATAL"]
FORMATS = ["table", "tsv", "turtle"]


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(t("cli.not_an_integer", value=text))
    if n < 1:
        raise argparse.ArgumentTypeError(t("cli.must_be_positive", value=text))
    return n


def _answer(text: str) -> tuple[str, str]:
    ex, sep, given = text.partition("=")
    if not sep or not ex.strip():
        raise argparse.ArgumentTypeError(t("cli.bad_answer", value=text))
    return ex.strip(), given


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edugraph", description=t("cli.desc"))
    p.add_argument("--workspace", type=Path, default=None, help=t("cli.workspace"))
    p.add_argument("--config", type=Path, default=None, help=t("cli.config"))
    p.add_argument("--format", choices=FORMATS, default=None, help=t("cli.format"))
    p.add_argument("--debug", action="store_true", help=t("cli.debug"))
    p.add_argument("--log-level", choices=LOG_LEVELS, default=None, help=t("cli.log_level"))
    sub = p.add_subparsers(dest="command", metavar="COMMAND", required=True)

    s = sub.add_parser("ingest", help=t("cli.ingest"))
    s.add_argument("files", nargs="*", type=Path, help=t("cli.files"))
    s.add_argument("--fresh", action="store_true", help=t("cli.fresh"))

    sub.add_parser("validate", help=t("cli.validate"))

    s = sub.add_parser("path", help=t("cli.path"))
    s.add_argument("--goal", required=True)
    s.add_argument("--user", required=True)
    s.add_argument("--k", type=_positive, default=None, help=t("cli.k"))
    s.add_argument("--strict", action="store_true", help=t("cli.strict"))

    s = sub.add_parser("recommend", help=t("cli.recommend"))
    s.add_argument("--topic", required=True)
    s.add_argument("--user", required=True)
    s.add_argument("--n", type=_positive, default=None, help=t("cli.n"))

    s = sub.add_parser("query", help=t("cli.query"))
    s.add_argument("file", type=Path)

    s = sub.add_parser("eval", help=t("cli.eval"))
    s.add_argument("--mappings", type=Path, default=Path("mappings"))

    sub.add_parser("stats", help=t("cli.stats"))

    s = sub.add_parser("rate", help=t("cli.rate"))
    s.add_argument("--user", required=True)
    s.add_argument("--resource", required=True)
    s.add_argument("--rating", type=float, required=True)

    s = sub.add_parser("grade", help=t("cli.grade"))
    s.add_argument("--user", required=True)
    s.add_argument("--test", required=True)
    s.add_argument(
        "--answer", type=_answer, action="append", default=[], metavar="EXERCISE=TEXT",
    )
    s.add_argument("--at", default=None, help=t("cli.at"))

    s = sub.add_parser("constructs", help=t("cli.constructs"))
    s.add_argument("--user", required=True)
    return p


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def find_config(explicit: Optional[Path]) -> Optional[Path]:
    """--config wins; otherwise edugraph.toml in the working directory, if present."""
    if explicit is not None:
        if not explicit.is_file():
            raise ConfigError(t("cli.config_missing", path=explicit))
        return explicit
    candidate = Path(cfg.paths.config_file)
    return candidate if candidate.is_file() else None


def workspace_path(explicit: Optional[Path]) -> Path:
    return explicit if explicit is not None else Path(cfg.paths.workspace)
