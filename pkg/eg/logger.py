"""Run log: one file per workspace, optionally mirrored to stderr with --debug.

Lines look like ``[2026-02-22 14:30:45.123] [PLAN] demo:DataScience-path-1 ...``.
Graph-changing and planning events get their own levels so ``[logging] level``
can keep, say, only PLAN and above.
"""

from __future__ import annotations

import logging
import platform
import sys
from pathlib import Path
from typing import Optional

from eg.app_config import cfg

INGEST = 21
PLAN = 22
QUERY = 23

for _level, _name in ((INGEST, "INGEST"), (PLAN, "PLAN"), (QUERY, "QUERY")):
    logging.addLevelName(_level, _name)

LEVELS: dict[str, int] = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "INGEST": INGEST,
    "PLAN": PLAN,
    "QUERY": QUERY,
    "WARN": logging.WARNING,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "FATAL": logging.CRITICAL,
    "CRITICAL": logging.CRITICAL,
}

# names written to the file where they differ from stdlib's
_SHOWN = {logging.WARNING: "WARN", logging.CRITICAL: "FATAL"}


def level_number(name: str) -> int:
    """Unknown names count as INFO."""
    return LEVELS.get(name.upper(), logging.INFO)


class _ShownLevel(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        record.shown = _SHOWN.get(record.levelno, record.levelname)
        return True


class _LineFormatter(logging.Formatter):
    default_time_format = "%Y-%m-%d %H:%M:%S"
    default_msec_format = "%s.%03d"

    def __init__(self, dim: bool = False) -> None:
        super().__init__("[%(asctime)s] [%(shown)s] %(message)s")
        self.dim = dim

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        return f"\033[2m{line}\033[0m" if self.dim else line


class Logger:
    """File log for one workspace.

    Each instance owns a private stdlib logger, so tests can open several
    logs side by side.
    """

    def __init__(self, log_path: Path, debug: bool = False) -> None:
        self.log_path = Path(log_path)
        self.debug = debug
        self.log_path.parent.mkdir(parents=True, exist_ok=True)

        self._logger = logging.getLogger(f"edugraph.{self.log_path.stem}.{id(self)}")
        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False

        file_handler = logging.FileHandler(
            self.log_path,
            mode="w" if cfg.logging.truncate_on_start else "a",
            encoding="utf-8",
        )
        file_handler.setLevel(level_number(cfg.logging.level))
        self._attach(file_handler, _LineFormatter())
        if debug:
            self._attach(logging.StreamHandler(sys.stderr), _LineFormatter(dim=True))

    def _attach(self, handler: logging.Handler, formatter: logging.Formatter) -> None:
        handler.addFilter(_ShownLevel())
        handler.setFormatter(formatter)
        self._logger.addHandler(handler)

    def log(self, level: str, msg: str) -> None:
        self._logger.log(level_number(level), msg)

    def log_lines(self, level: str, text: str) -> None:
        for line in text.splitlines():
            self.log(level, f"  {line}")

    def log_run(self, command: str, workspace: Path, config_path: Optional[Path]) -> None:
        """Header written at the start of every command."""
        self.log("INFO", "=== Run ===")
        self.log("INFO", f"command: {command}")
        self.log("INFO", f"python: {platform.python_version()} ({platform.system()})")
        self.log("INFO", f"workspace: {workspace}")
        self.log("INFO", f"config: {config_path or '(defaults)'}")
        s, r = cfg.scoring, cfg.requirements
        self.log(
            "DEBUG",
            f"scoring: difficulty={s.difficulty} media={s.media} "
            f"quality={s.quality} duration={s.duration}",
        )
        self.log(
            "DEBUG",
            f"requirements: difficulty_fit={r.difficulty_fit} preference_fit={r.preference_fit} "
            f"quality={r.quality} path_length={r.path_length} k={r.max_paths}",
        )

    def close(self) -> None:
        for handler in list(self._logger.handlers):
            handler.close()
            self._logger.removeHandler(handler)
