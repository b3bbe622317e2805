import json
import logging
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from eqos_package.infra.config import EngineSettings, load_settings, override_settings, reset_settings
from eqos_package.infra.execution_logs import (
    clear_execution_logs,
    get_execution_logs,
    get_execution_stats,
    log_execution,
    track_execution,
)
from eqos_package.reports import FAIL, PASS, Report, render_json, render_text


# --- Settings ---

def test_defaults():
    settings = load_settings()
    assert settings == EngineSettings()
    assert settings.max_fm_rows == 50_000
    assert settings.log_level == "WARNING"
    assert load_settings() is settings


def test_environment_overrides():
    with patch.dict("os.environ", {"EQOS_MAX_FM_ROWS": "10", "EQOS_LOG_LEVEL": "info", "EQOS_SAMPLE_SEED": " "}):
        reset_settings()
        settings = load_settings()
    assert settings.max_fm_rows == 10
    assert settings.log_level == "INFO"
    assert settings.sample_seed == 0


def test_invalid_values_fall_back_per_field(caplog):
    env = {"EQOS_FINGERPRINT_WORKERS": "0", "EQOS_CORPUS_SIZE": "7", "EQOS_LOG_LEVEL": "chatty"}
    with patch.dict("os.environ", env), caplog.at_level(logging.WARNING):
        reset_settings()
        settings = load_settings()
    assert settings.fingerprint_workers == 1
    assert settings.log_level == "WARNING"
    assert settings.corpus_size == 7
    assert "EQOS_FINGERPRINT_WORKERS" in caplog.text
    assert "EQOS_LOG_LEVEL" in caplog.text


def test_override_settings():
    updated = override_settings(log_level="debug", max_fm_rows=5)
    assert updated.log_level == "DEBUG"
    assert load_settings().max_fm_rows == 5
    with pytest.raises(ValidationError):
        override_settings(max_fm_rows=0)


# --- Execution logs ---

@track_execution("square")
def _square(v):
    return v * v


@track_execution()
def _explode():
    raise RuntimeError("boom")


def test_track_execution_records_success_and_error():
    assert _square(3) == 9
    with pytest.raises(RuntimeError):
        _explode()
    [ok] = get_execution_logs("square")
    assert ok.status == "success"
    assert ok.latency >= 0
    [bad] = get_execution_logs("_explode")
    assert bad.status == "error"
    assert bad.error == "boom"
    assert get_execution_logs(status="error") == [bad]


def test_execution_stats():
    log_execution("task", "success", 0, 10, 0.25)
    log_execution("task", "error", 10, 20, 0.75, error="bad")
    stats = get_execution_stats("task")
    assert stats["total_count"] == 2
    assert stats["success_count"] == 1
    assert stats["error_count"] == 1
    assert stats["avg_latency"] == pytest.approx(0.5)
    clear_execution_logs()
    assert get_execution_stats()["total_count"] == 0


# --- Reports ---

def test_report_verdicts_and_exit_code():
    report = Report(command="demo")
    assert report.exit_code == 0
    assert report.verdict("ok", True)
    assert report.exit_code == 0
    assert not report.verdict("broken", False)
    assert report.verdicts == {"ok": PASS, "broken": FAIL}
    assert report.exit_code == 3


def test_render_text(tmp_path):
    path = tmp_path / "in.arr"
    path.write_text("1 1\n1 0\n", encoding="utf-8")
    report = Report(command="demo", degree=3)
    report.add_input(path)
    report.note("first")
    report.note("first")
    report.section("hilbert")["hf"] = [1, 2, 0]
    report.section("generators")["generators"] = ["e1^2", "e1*x"]
    report.section("distinction")["left"] = {"1,1": 2}
    report.verdict("ok", True)
    text = render_text(report)
    assert text.startswith("== report ==\ncommand: demo\ndegree: 3\n")
    assert f"input: {path} sha256=" in text
    assert text.count("note: first") == 1
    assert "== hilbert ==\nhf: 1 2 0\n" in text
    assert "generators:\n  e1^2\n  e1*x\n" in text
    assert 'left: {"1,1": 2}' in text
    assert text.endswith("== verdicts ==\nok: PASS\n")


def test_render_json_and_timing():
    _square(2)
    report = Report(command="demo")
    report.section("s")["value"] = 1
    report.attach_timing()
    data = json.loads(render_json(report))
    assert data["command"] == "demo"
    assert data["sections"] == {"s": {"value": 1}}
    assert set(data["timing"]) == {"square", "total"}


def test_timing_totals_per_task_and_overall():
    log_execution("groebner", "success", 0, 10, 0.25)
    log_execution("groebner", "error", 10, 20, 0.5, error="bad")
    log_execution("faces", "success", 20, 30, 1.0)
    report = Report(command="demo")
    report.attach_timing()
    assert report.timing == {"faces": 1.0, "groebner": 0.75, "total": 1.75}
    assert render_text(report).endswith("== timing ==\ntiming faces: 1.000s\ntiming groebner: 0.750s\ntiming total: 1.750s\n")


def test_no_timing_without_tracked_work():
    report = Report(command="demo")
    report.attach_timing()
    assert report.timing == {}
