"""Scripted reproductions of the worked examples and the corpus property suite."""

from pathlib import Path

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / name
