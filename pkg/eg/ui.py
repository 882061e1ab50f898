"""Terminal UI: colored status lines on stderr, tables and TSV on stdout."""

from __future__ import annotations

import sys
from typing import Sequence

from rich import box
from rich.console import Console
from rich.table import Table

# ANSI colors
RED = "\033[0;31m"
GREEN = "\033[0;32m"
YELLOW = "\033[1;33m"
CYAN = "\033[0;36m"
BOLD = "\033[1m"
DIM = "\033[2m"
NC = "\033[0m"

from eg.app_config import cfg


# --- Status messages (stderr; stdout carries command output only) ---

def _err(line: str) -> None:
    print(line, file=sys.stderr)


def section(title: str) -> None:
    _err(f"\n  {CYAN}{BOLD}━━━ {title} ━━━{NC}")


def ok(msg: str) -> None:
    _err(f"  {GREEN}✅ {msg}{NC}")


def fail(msg: str) -> None:
    _err(f"  {RED}❌ {msg}{NC}")


def warn(msg: str) -> None:
    _err(f"  {YELLOW}⚠{NC}  {msg}")


def info(msg: str) -> None:
    _err(f"  {msg}")


def error_tree(lines: Sequence[str]) -> None:
    """Print indented details under a fail/warn line."""
    for i, msg in enumerate(lines):
        connector = "└─" if i == len(lines) - 1 else "├─"
        _err(f"  {YELLOW}{connector}{NC} {msg}")


# --- Data output ---

def _tsv_cell(value: object) -> str:
    return str(value).replace("\t", " ").replace("\n", " ")


def print_tsv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    out = sys.stdout
    out.write("\t".join(_tsv_cell(h) for h in header) + "\n")
    for row in rows:
        out.write("\t".join(_tsv_cell(c) for c in row) + "\n")


def print_table(
    header: Sequence[str],
    rows: Sequence[Sequence[object]],
    *,
    title: str = "",
    numeric: Sequence[int] = (),
    fmt: str = "",
) -> None:
    """Render rows as a rich table, or TSV when the output format says so."""
    fmt = fmt or cfg.display.format
    if fmt != "table":
        print_tsv(header, rows)
        return
    table = Table(
        title=title or None,
        box=box.SIMPLE_HEAVY,
        header_style="bold",
        title_justify="left",
    )
    for i, h in enumerate(header):
        table.add_column(h, justify="right" if i in numeric else "left", overflow="fold")
    for row in rows:
        table.add_row(*(str(c) for c in row))
    Console(width=cfg.display.table_width, highlight=False, soft_wrap=False).print(table)


def print_text(text: str) -> None:
    sys.stdout.write(text)
