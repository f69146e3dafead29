"""Test scenario generation from Java sources with duplicate-method collapsing."""

from epit.java_frontend import (
    LexError,
    SourceUnit,
    Token,
    TokenKind,
    parse_compilation_unit,
    parse_source,
    reconstruct_source,
    tokenize,
)
from epit.model import (
    FileRecord,
    MethodRecord,
    ProjectModel,
    build_project_model,
    count_loc,
    encode_signature,
    extract_methods,
)
from epit.report import compute_optimization, render_analysis_report, render_json, render_summary
from epit.smells import CloneGroup, CloneLevel, detect_clone_groups, normalize_body, select_representatives
from epit.testgen import ScenarioKind, TestCase, TestSuite, emit_junit_stub, generate_project_testcases, generate_scenarios

__version__ = "0.1.0"
