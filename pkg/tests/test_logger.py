"""Tests for eg.logger."""

from __future__ import annotations

from pathlib import Path

from eg.app_config import cfg
from eg.logger import Logger


# =========================================================================
# Positive
# =========================================================================

class TestLogger:
    def test_creates_log_and_parent(self, tmp_path: Path):
        log = Logger(tmp_path / "logs" / "test.log")
        assert log.log_path.exists()
        log.close()

    def test_log_appends(self, logger: Logger):
        logger.log("INFO", "first")
        logger.log("WARN", "second")
        content = logger.log_path.read_text()
        assert "[INFO] first" in content
        assert "[WARN] second" in content
        assert content.index("first") < content.index("second")

    def test_log_has_timestamp(self, logger: Logger):
        logger.log("INFO", "timestamped")
        line = logger.log_path.read_text().strip()
        # [2026-02-20 12:31:18.123] [INFO] ...
        assert line.startswith("[20")
        assert "] [INFO]" in line

    def test_log_lines(self, logger: Logger):
        logger.log_lines("DEBUG", "line1\nline2\nline3")
        assert logger.log_path.read_text().count("[DEBUG]   line") == 3

    def test_log_run(self, logger: Logger, tmp_path: Path):
        logger.log_run("edugraph stats", tmp_path / "ws.ttl", None)
        content = logger.log_path.read_text()
        assert "=== Run ===" in content
        assert "command: edugraph stats" in content
        assert "config: (defaults)" in content


# =========================================================================
# Negative / inverse
# =========================================================================

class TestLoggerInverse:
    def test_appends_by_default(self, tmp_path: Path):
        """По умолчанию лог дописывается, старые записи остаются."""
        path = tmp_path / "test.log"
        path.write_text("old content\n")
        Logger(path).close()
        assert path.read_text() == "old content\n"

    def test_truncate_on_start(self, tmp_path: Path):
        cfg.logging.truncate_on_start = True
        path = tmp_path / "test.log"
        path.write_text("old content\n")
        Logger(path).close()
        assert path.read_text() == ""

    def test_empty_message(self, logger: Logger):
        """Пустое сообщение - не падает."""
        logger.log("INFO", "")
        assert "[INFO]" in logger.log_path.read_text()

    def test_unknown_level_logged_as_info(self, logger: Logger):
        logger.log("CHATTER", "hello")
        assert "[INFO] hello" in logger.log_path.read_text()


# =========================================================================
# Log level filtering
# =========================================================================

class TestLogLevelFiltering:
    def test_default_info_drops_debug(self, logger: Logger):
        logger.log("DEBUG", "debug msg")
        logger.log("INFO", "info msg")
        content = logger.log_path.read_text()
        assert "debug msg" not in content
        assert "info msg" in content

    def test_level_error_filters_info(self, tmp_path: Path):
        """level=ERROR -> INFO не попадает в файл."""
        cfg.logging.level = "ERROR"
        log = Logger(tmp_path / "test.log")
        log.log("INFO", "should be filtered")
        log.log("ERROR", "should appear")
        content = log.log_path.read_text()
        assert "should be filtered" not in content
        assert "should appear" in content
        log.close()

    def test_level_plan_sits_between(self, tmp_path: Path):
        """level=PLAN -> INGEST отфильтрован, PLAN и QUERY проходят."""
        cfg.logging.level = "PLAN"
        log = Logger(tmp_path / "test.log")
        log.log("INGEST", "ingest msg")
        log.log("PLAN", "plan msg")
        log.log("QUERY", "query msg")
        content = log.log_path.read_text()
        assert "ingest msg" not in content
        assert "plan msg" in content
        assert "query msg" in content
        log.close()

    def test_debug_mirrors_to_stderr(self, tmp_path: Path, capsys):
        log = Logger(tmp_path / "test.log", debug=True)
        log.log("DEBUG", "mirrored")
        log.close()
        assert "mirrored" in capsys.readouterr().err


# =========================================================================
# Format preservation
# =========================================================================

class TestFormatPreservation:
    def test_warn_format_not_warning(self, logger: Logger):
        """Формат [WARN] а не [WARNING]."""
        logger.log("WARN", "test warning")
        content = logger.log_path.read_text()
        assert "[WARN]" in content
        assert "[WARNING]" not in content

    def test_fatal_format_not_critical(self, logger: Logger):
        """Формат [FATAL] а не [CRITICAL]."""
        logger.log("FATAL", "test fatal")
        content = logger.log_path.read_text()
        assert "[FATAL]" in content
        assert "[CRITICAL]" not in content

    def test_custom_levels_written(self, logger: Logger):
        """Custom levels INGEST/PLAN/QUERY попадают в файл."""
        logger.log("INGEST", "merged")
        logger.log("PLAN", "ranked")
        logger.log("QUERY", "selected")
        content = logger.log_path.read_text()
        assert "[INGEST]" in content
        assert "[PLAN]" in content
        assert "[QUERY]" in content
