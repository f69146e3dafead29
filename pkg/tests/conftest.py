from pathlib import Path

import hypothesis
import pytest

hypothesis.settings.register_profile("default", deadline=None, max_examples=100)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"
CALENDAR = FIXTURES / "calendar"
BLACKJACK = FIXTURES / "blackjack"
PROJECT_FIXTURES = (CALENDAR, BLACKJACK, FIXTURES / "snippets")
FIXED_EPOCH = 1576033442  # 2019-12-11 03:04:02 UTC


def fixture_sources():
    return sorted(p for p in FIXTURES.rglob("*.java"))


@pytest.fixture
def calendar_root():
    return CALENDAR


@pytest.fixture
def fixed_clock(monkeypatch):
    monkeypatch.setenv("EPIT_FIXED_CLOCK", str(FIXED_EPOCH))
    from epit.report import Clock

    return Clock(FIXED_EPOCH)


@pytest.fixture
def write_tree(tmp_path):
    """Write {relative path: source} into a fresh directory and return it."""

    def _write(files, root=None):
        root = Path(root or tmp_path / "proj")
        for rel, text in files.items():
            p = root / rel
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(text, encoding="utf-8")
        root.mkdir(parents=True, exist_ok=True)
        return root

    return _write


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and (rep.when == "call" or rep.failed):
                lines.append((props["criterion"], "PASS" if rep.passed else "FAIL", props.get("title", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, verdict, title in sorted(set(lines)):
            terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
