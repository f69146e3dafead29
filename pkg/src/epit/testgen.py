"""Three-scenario test case generation and JUnit-style stub emission."""

from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

from epit.model import MethodRecord, ProjectModel
from epit.smells import CloneGroup


class ScenarioKind(enum.Enum):
    VALID = (1, "valid", "1")
    INVALID = (2, "invalid", "-1")
    NULL = (3, "null", "null")

    def __init__(self, ordinal: int, word: str, boundary: str):
        self.ordinal = ordinal
        self.word = word
        self.boundary = boundary


def render_case_line(kind: ScenarioKind, param_names: Sequence[str], paper_compat: bool = False) -> str:
    params = ", ".join(param_names)
    if paper_compat:
        # spacing as printed by the original console
        return f"Test Case {kind.ordinal} : {kind.word} [{params}]are input with :{kind.boundary}"
    return f"Test Case {kind.ordinal} : {kind.word} [{params}] are input with : {kind.boundary}"


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # keep pytest from collecting this

    method: MethodRecord
    kind: ScenarioKind
    param_names: tuple[str, ...]

    @property
    def rendered_line(self) -> str:
        return render_case_line(self.kind, self.param_names)

    def render(self, paper_compat: bool = False) -> str:
        return render_case_line(self.kind, self.param_names, paper_compat)


@dataclass(frozen=True)
class TestSuite:
    __test__ = False

    cases: tuple[TestCase, ...]
    count_without_refactoring: int
    count_with_refactoring: int
    refactoring_enabled: bool = False

    def cases_for(self, method: MethodRecord) -> list[TestCase]:
        return [c for c in self.cases if c.method.key == method.key]


def generate_scenarios(m: MethodRecord) -> list[TestCase]:
    return [TestCase(m, kind, m.param_names) for kind in ScenarioKind]


def generate_project_testcases(
    model: ProjectModel,
    groups: Sequence[CloneGroup],
    refactor: bool = False,
    include_test_files: bool = False,
) -> TestSuite:
    eligible = model.eligible_methods(include_test_files)
    eligible_keys = {m.key for m in eligible}
    rep_keys = {g.representative.key for g in groups} & eligible_keys
    # methods missing from every group still count as their own representative
    grouped = {m.key for g in groups for m in g.members}
    rep_keys |= eligible_keys - grouped

    chosen = [m for m in eligible if m.key in rep_keys] if refactor else eligible
    cases = tuple(c for m in chosen for c in generate_scenarios(m))
    n_kinds = len(ScenarioKind)
    return TestSuite(
        cases=cases,
        count_without_refactoring=n_kinds * len(eligible),
        count_with_refactoring=n_kinds * len(rep_keys),
        refactoring_enabled=refactor,
    )


# --------------------------------------------------------------------------
# stub emission


def stub_class_name(class_name: str) -> str:
    return class_name.replace(".", "_") + "GeneratedTest"


def _test_method_names(methods: Sequence[MethodRecord]) -> list[str]:
    """Base names for each method's tests; overloads get a 1-based index suffix."""
    counts = Counter(m.method_name for m in methods)
    seen: Counter = Counter()
    names = []
    for m in methods:
        if counts[m.method_name] > 1:
            seen[m.method_name] += 1
            names.append(f"test_{m.method_name}_{seen[m.method_name]}")
        else:
            names.append(f"test_{m.method_name}")
    return names


def render_test_class(package: str, class_name: str, entries: Sequence[tuple[MethodRecord, Sequence[TestCase]]]) -> str:
    lines = []
    if package:
        lines += [f"package {package};", ""]
    lines += [
        "import static org.junit.Assert.fail;",
        "",
        "import org.junit.Test;",
        "",
        f"public class {class_name} {{",
    ]
    bases = _test_method_names([m for m, _ in entries])
    for base, (m, cases) in zip(bases, entries):
        for case in cases:
            lines += [
                "",
                "    @Test",
                f"    public void {base}_{case.kind.word}() {{",
                f"        // {m.class_name}.{m.method_name}{m.signature}",
                f"        // {case.rendered_line}",
                '        fail("Not yet implemented");',
                "    }",
            ]
    lines += ["}", ""]
    return "\n".join(lines)


def emit_junit_stub(m: MethodRecord, cases: Sequence[TestCase]) -> str:
    return render_test_class(m.package_name, stub_class_name(m.class_name), [(m, cases)])


def emit_junit_stubs(suite: TestSuite) -> dict[str, str]:
    """Stub sources keyed by output path relative to the stub root (package dirs mirrored)."""
    by_class: dict[tuple[str, str], list[tuple[MethodRecord, list[TestCase]]]] = defaultdict(list)
    index: dict[tuple, list[TestCase]] = {}
    for case in suite.cases:
        key = case.method.key
        if key not in index:
            index[key] = []
            by_class[(case.method.package_name, stub_class_name(case.method.class_name))].append((case.method, index[key]))
        index[key].append(case)

    out = {}
    for (package, cls), entries in by_class.items():
        rel = "/".join(package.split(".") + [f"{cls}.java"]) if package else f"{cls}.java"
        out[rel] = render_test_class(package, cls, entries)
    return dict(sorted(out.items()))
