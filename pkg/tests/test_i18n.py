"""Tests for eg.i18n: locale detection, translation, key parity."""

from __future__ import annotations

import re
from unittest.mock import patch

import pytest

from eg import i18n
from eg.lang import en, ru
from eg.validate import CATALOG


@pytest.fixture(autouse=True)
def _reset_i18n():
    """Reset i18n state between tests."""
    i18n.reset()
    yield
    i18n.reset()
    i18n.init("en")  # restore default for other tests


class TestDetectLocale:
    def test_lc_all_ru(self):
        with patch.dict("os.environ", {"LC_ALL": "ru_RU.UTF-8"}, clear=False):
            i18n.init()
            assert i18n.current() == "ru"

    def test_lc_all_en(self):
        with patch.dict("os.environ", {"LC_ALL": "en_US.UTF-8"}, clear=False):
            i18n.init()
            assert i18n.current() == "en"

    def test_lang_ru(self):
        env = {"LC_ALL": "", "LC_MESSAGES": "", "LANG": "ru_RU.UTF-8"}
        with patch.dict("os.environ", env, clear=False):
            i18n.init()
            assert i18n.current() == "ru"

    @pytest.mark.parametrize("value", ["C", "POSIX"])
    def test_c_and_posix_default_to_en(self, value):
        env = {"LC_ALL": value, "LC_MESSAGES": "", "LANG": ""}
        with patch.dict("os.environ", env, clear=False):
            i18n.init()
            assert i18n.current() == "en"

    def test_unsupported_falls_back_to_en(self):
        i18n.init("de")
        assert i18n.current() == "en"

    def test_explicit_init_overrides_env(self):
        with patch.dict("os.environ", {"LC_ALL": "ru_RU.UTF-8"}, clear=False):
            i18n.init("en")
            assert i18n.current() == "en"


class TestTranslate:
    def test_en_translation(self):
        i18n.init("en")
        assert i18n.t("stats.triples") == "triples"

    def test_ru_translation(self):
        i18n.init("ru")
        assert i18n.t("stats.triples") == "триплеты"

    def test_format_params(self):
        i18n.init("en")
        assert i18n.t("main.log_colon", path="/tmp/test.log") == "Log: /tmp/test.log"

    def test_missing_param_returns_template(self):
        i18n.init("en")
        assert i18n.t("query.rows") == "{count} row(s)"
        assert i18n.t("query.rows", other=1) == "{count} row(s)"

    def test_missing_key_returns_key(self):
        i18n.init("en")
        assert i18n.t("nonexistent.key") == "nonexistent.key"

    def test_lazy_init_on_first_call(self):
        """t() сам инициализирует локаль при первом вызове."""
        with patch.dict("os.environ", {"LC_ALL": "en_US.UTF-8"}, clear=False):
            result = i18n.t("stats.subjects")
        assert result == "subjects"
        assert i18n.current() == "en"


class TestKeyParity:
    def test_en_and_ru_have_same_keys(self):
        """Both language files must have identical key sets."""
        missing_in_ru = set(en.STRINGS) - set(ru.STRINGS)
        missing_in_en = set(ru.STRINGS) - set(en.STRINGS)
        assert not missing_in_ru, f"Missing in ru.py: {sorted(missing_in_ru)}"
        assert not missing_in_en, f"Missing in en.py: {sorted(missing_in_en)}"

    def test_no_empty_values(self):
        for lang in (en, ru):
            for key, val in lang.STRINGS.items():
                assert val, f"{lang.__name__}: empty value for '{key}'"

    def test_same_placeholders(self):
        """Переводы используют те же {параметры}, что и английский текст."""
        field = re.compile(r"\{(\w+)\}")
        for key, val in en.STRINGS.items():
            assert set(field.findall(val)) == set(field.findall(ru.STRINGS[key])), key

    def test_every_diagnostic_has_message(self):
        for code in CATALOG:
            assert f"diag.{code}" in en.STRINGS
