"""Console report, project summary and JSON rendering."""

from __future__ import annotations

import json
import os
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Mapping, Sequence

from epit.model import MethodRecord, ProjectModel
from epit.smells import CloneGroup
from epit.testgen import TestSuite

FIXED_CLOCK_ENV = "EPIT_FIXED_CLOCK"
TIMESTAMP_FORMAT = "%Y/%m/%d %H:%M:%S"


class Clock:
    """Wall and monotonic clocks, optionally pinned for reproducible output.

    A pinned clock reports the fixed epoch (rendered in UTC) for every wall
    reading and never advances the monotonic reading.
    """

    def __init__(self, fixed_epoch: float | None = None):
        self.fixed_epoch = fixed_epoch

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Clock":
        environ = os.environ if environ is None else environ
        value = environ.get(FIXED_CLOCK_ENV)
        if value in (None, ""):
            return cls()
        return cls(float(value))

    @property
    def pinned(self) -> bool:
        return self.fixed_epoch is not None

    def wall(self) -> datetime:
        if self.pinned:
            return datetime.fromtimestamp(self.fixed_epoch, tz=timezone.utc)
        return datetime.now().astimezone()

    def monotonic(self) -> float:
        return 0.0 if self.pinned else time.monotonic()


@dataclass(frozen=True)
class PhaseTimings:
    start: datetime
    end: datetime
    elapsed_ms: int
    phases_ms: dict[str, int] = field(default_factory=dict)

    @property
    def start_timestamp(self) -> str:
        return self.start.strftime(TIMESTAMP_FORMAT)

    @property
    def end_timestamp(self) -> str:
        return self.end.strftime(TIMESTAMP_FORMAT)


class PhaseTimer:
    def __init__(self, clock: Clock | None = None):
        self.clock = clock or Clock()
        self.start = self.clock.wall()
        self._t0 = self.clock.monotonic()
        self.phases_ms: dict[str, int] = {}

    @contextmanager
    def phase(self, name: str):
        t = self.clock.monotonic()
        try:
            yield
        finally:
            ms = _to_ms(self.clock.monotonic() - t)
            self.phases_ms[name] = self.phases_ms.get(name, 0) + ms

    def finish(self) -> PhaseTimings:
        total = _to_ms(self.clock.monotonic() - self._t0)
        # rounding per phase can push a phase over the rounded total
        total = max([total, *self.phases_ms.values()])
        return PhaseTimings(self.start, self.clock.wall(), total, dict(self.phases_ms))


def _to_ms(seconds: float) -> int:
    return max(0, round(seconds * 1000))


def time_phases(stages: Sequence[tuple[str, Callable[[], object]]], clock: Clock | None = None):
    """Run ``stages`` in order, timing each. Returns (results by name, PhaseTimings)."""
    timer = PhaseTimer(clock)
    results = {}
    for name, fn in stages:
        with timer.phase(name):
            results[name] = fn()
    return results, timer.finish()


def compute_optimization(without: int, with_: int) -> int:
    """Percent reduction in cases from clone collapsing, rounded half up."""
    if without < 0 or with_ < 0:
        raise ValueError("case counts must be non-negative")
    if with_ > without:
        raise ValueError(f"with-refactoring count {with_} exceeds without-refactoring count {without}")
    if without == 0:
        return 0
    return (200 * (without - with_) + without) // (2 * without)


@dataclass(frozen=True)
class ProjectSummary:
    project_name: str
    unique_package_names: tuple[str, ...]
    package_occurrences: tuple[str, ...]
    file_names: tuple[str, ...]
    total_loc: int
    cases_without_refactoring: int
    cases_with_refactoring: int
    optimization_percent: int
    junit_builder: bool
    timings: PhaseTimings
    parse_error_count: int = 0
    refactoring_enabled: bool = False

    @property
    def total_packages(self) -> int:
        return len(self.unique_package_names)

    @property
    def total_files(self) -> int:
        return len(self.file_names)


def build_summary(model: ProjectModel, suite: TestSuite, timings: PhaseTimings, junit_builder: bool = False) -> ProjectSummary:
    return ProjectSummary(
        project_name=model.project_name,
        unique_package_names=tuple(model.unique_package_names),
        package_occurrences=tuple(model.package_occurrences),
        file_names=tuple(f.file_name for f in model.files),
        total_loc=model.total_loc,
        cases_without_refactoring=suite.count_without_refactoring,
        cases_with_refactoring=suite.count_with_refactoring,
        optimization_percent=compute_optimization(suite.count_without_refactoring, suite.count_with_refactoring),
        junit_builder=junit_builder,
        timings=timings,
        parse_error_count=model.parse_error_count,
        refactoring_enabled=suite.refactoring_enabled,
    )


def _representatives(groups: Sequence[CloneGroup] | None) -> dict[tuple, MethodRecord]:
    if not groups:
        return {}
    return {m.key: g.representative for g in groups for m in g.members}


def render_analysis_report(
    model: ProjectModel,
    suite: TestSuite,
    timings: PhaseTimings,
    paper_compat: bool = False,
    groups: Sequence[CloneGroup] | None = None,
) -> str:
    reps = _representatives(groups)
    cases_by_key: dict[tuple, list] = {}
    for c in suite.cases:
        cases_by_key.setdefault(c.method.key, []).append(c)

    out = [
        f"Start Time: {timings.start_timestamp}",
        f"### Analyzing project :{model.project_name} ###",
        "",
    ]
    for f in model.files:
        out += [
            f"Details <Packages> :{f.package_name}",
            "-----",
            f"Source file {f.file_name}",
            "",
            f"FullPath /{model.project_name}/{f.file_path}",
            f"Has number of lines: {f.line_count}",
        ]
        if f.parse_error_count:
            out.append(f"Parse errors: {f.parse_error_count}")
            out += [f"    {e}" for e in f.errors]
        out += ["Details are :-", ""]
        for m in f.methods:
            out += [
                f"Method name :{m.method_name}",
                f"Signature :{m.signature}",
                f"Return Type :{m.return_descriptor}",
                "Input variable :",
                "\t".join(m.param_names),
                "Generate Possible Test Scenario:",
            ]
            cases = cases_by_key.get(m.key)
            if cases:
                out += [c.render(paper_compat) for c in cases]
            elif f.is_test:
                out.append("(test file: no scenarios generated)")
            elif m.key in reps and reps[m.key].key != m.key:
                rep = reps[m.key]
                out.append(f"(redundant: covered by {rep.class_name}.{rep.method_name} in {rep.file_path})")
            out.append("")
        out += ["-File analyzed End-", ""]
    for err in model.unreadable:
        out += [f"Unreadable file {err.file_path}: {err.message}", ""]
    return "\n".join(out)


def render_summary(summary: ProjectSummary, paper_compat: bool = False) -> str:
    packages = summary.package_occurrences if paper_compat else summary.unique_package_names
    loc = f"{summary.total_loc:.1f}" if paper_compat else str(summary.total_loc)
    out = [
        "##### Summary #####",
        "",
        f"Project Name :{summary.project_name}",
        f"Total Package :{len(packages)}",
        "Package Name :",
        *[f"    <{p}>" for p in packages],
        f"Total Files :{summary.total_files}",
        "File Name :",
        *[f"    [{n}]" for n in summary.file_names],
        f"Total LOC :{loc}",
        f"Total Test Cases Without Refactoring:{summary.cases_without_refactoring}",
        f"Total Test Cases With Refactoring: {summary.cases_with_refactoring}",
        f"Optimization After Refactoring: {summary.optimization_percent}%",
        f"JUnit Builder: {'Yes' if summary.junit_builder else 'No'}",
        "",
        "#####",
        "",
        f"Start Time: {summary.timings.start_timestamp}",
        f"End Time: {summary.timings.end_timestamp}",
        f"Time Elapsed: {summary.timings.elapsed_ms}ms",
        "",
    ]
    return "\n".join(out)


def render_text(model, suite, summary, paper_compat=False, groups=None) -> str:
    return render_analysis_report(model, suite, summary.timings, paper_compat, groups) + "\n" + render_summary(summary, paper_compat)


_BOUNDARY_JSON = {"1": 1, "-1": -1, "null": None}


def report_dict(model: ProjectModel, suite: TestSuite, summary: ProjectSummary, groups: Sequence[CloneGroup] | None = None) -> dict:
    group_ids = {m.key: g.group_id for g in groups or () for m in g.members}
    t = summary.timings
    return {
        "project": model.project_name,
        "files": [
            {
                "path": f.file_path,
                "package": f.package_name,
                "loc": f.line_count,
                "isTestFile": f.is_test,
                "parseErrorCount": f.parse_error_count,
                "errors": list(f.errors),
                "methods": [
                    {
                        "class": m.class_name,
                        "name": m.method_name,
                        "signature": m.signature,
                        "returnType": m.return_descriptor,
                        "params": list(m.param_names),
                        "startLine": m.start_line,
                        "endLine": m.end_line,
                        "cloneGroupId": group_ids.get(m.key),
                    }
                    for m in f.methods
                ],
            }
            for f in model.files
        ],
        "unreadableFiles": [{"path": e.file_path, "error": e.message} for e in model.unreadable],
        "testCases": [
            {
                "file": c.method.file_path,
                "class": c.method.class_name,
                "method": c.method.method_name,
                "kind": c.kind.word,
                "params": list(c.param_names),
                "boundary": _BOUNDARY_JSON[c.kind.boundary],
            }
            for c in suite.cases
        ],
        "summary": {
            "projectName": summary.project_name,
            "totalPackages": summary.total_packages,
            "packageNames": list(summary.unique_package_names),
            "packageOccurrences": list(summary.package_occurrences),
            "totalFiles": summary.total_files,
            "fileNames": list(summary.file_names),
            "totalLoc": summary.total_loc,
            "casesWithoutRefactoring": summary.cases_without_refactoring,
            "casesWithRefactoring": summary.cases_with_refactoring,
            "optimizationPercent": summary.optimization_percent,
            "refactoringEnabled": summary.refactoring_enabled,
            "junitBuilder": "Yes" if summary.junit_builder else "No",
            "parseErrorCount": summary.parse_error_count,
            "startTime": t.start.isoformat(timespec="seconds"),
            "endTime": t.end.isoformat(timespec="seconds"),
            "elapsedMs": t.elapsed_ms,
            "phasesMs": dict(t.phases_ms),
        },
    }


def render_json(model, suite, summary, groups=None) -> str:
    return json.dumps(report_dict(model, suite, summary, groups), indent=2, ensure_ascii=False) + "\n"
