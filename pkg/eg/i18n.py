"""Message catalogs for CLI output and validator diagnostics.

    from eg.i18n import t
    t("ingest.done", count=3, path="workspace.ttl")

The locale is taken from LC_ALL / LC_MESSAGES / LANG on first use; ``init("ru")``
pins it (the CLI does this from ``locale`` in edugraph.toml). A key missing from
the Russian table falls back to the English text, then to the key itself.
"""

from __future__ import annotations

import importlib
import locale
import os
from collections import ChainMap
from typing import Mapping, Optional

SUPPORTED = ("en", "ru")
FALLBACK = "en"

_current_lang: Optional[str] = None
_catalog: Mapping[str, str] = {}


def _table(code: str) -> dict[str, str]:
    return importlib.import_module(f"eg.lang.{code}").STRINGS


def _language_of(value: str) -> str:
    """'ru_RU.UTF-8' -> 'ru'; 'C' -> 'c'."""
    return value.partition(".")[0].partition("_")[0].lower()


def _detect_locale() -> str:
    for var in ("LC_ALL", "LC_MESSAGES", "LANG"):
        value = os.environ.get(var)
        if not value:
            continue
        lang = _language_of(value)
        if lang in SUPPORTED:
            return lang
        if lang in ("c", "posix"):
            return FALLBACK
    try:
        lang = _language_of(locale.getlocale()[0] or "")
    except (ValueError, AttributeError):
        return FALLBACK
    return lang if lang in SUPPORTED else FALLBACK


def init(lang: str = "") -> None:
    """Select a catalog. Empty = detect; unsupported codes get English."""
    global _current_lang, _catalog
    code = lang.strip().lower() if lang else _detect_locale()
    if code not in SUPPORTED:
        code = FALLBACK
    if code == FALLBACK:
        _catalog = _table(FALLBACK)
    else:
        _catalog = ChainMap(_table(code), _table(FALLBACK))
    _current_lang = code


def t(key: str, **params: object) -> str:
    """Message for ``key`` with ``params`` filled in.

    A template whose placeholders are not all supplied is returned unformatted.
    """
    if _current_lang is None:
        init()
    template = _catalog.get(key, key)
    if not params:
        return template
    try:
        return template.format(**params)
    except (KeyError, IndexError):
        return template


def current() -> str:
    if _current_lang is None:
        init()
    assert _current_lang is not None
    return _current_lang


def reset() -> None:
    """Forget the selected locale (tests)."""
    global _current_lang, _catalog
    _current_lang = None
    _catalog = {}
