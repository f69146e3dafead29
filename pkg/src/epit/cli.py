"""``epit analyze`` command line entry point.

Exit codes: 0 success, 1 completed with parse or read errors (reports are
still written), 2 usage or I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from epit.model import DEFAULT_TEST_PATTERNS, build_project_model
from epit.report import Clock, PhaseTimer, build_summary, render_json, render_text
from epit.smells import CloneLevel, detect_clone_groups
from epit.testgen import emit_junit_stubs, generate_project_testcases

log = logging.getLogger("epit")

EXIT_OK, EXIT_PARSE_ERRORS, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    root: Path
    project_name: str | None = None
    refactor: bool = False
    clone_level: CloneLevel = CloneLevel.TYPE1
    junit: bool = False
    format: str = "text"
    paper_compat: bool = False
    out_dir: Path | None = None
    include_test_files: bool = False
    exclusions: tuple[str, ...] = ()


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="epit", description="Generate test scenarios from Java sources.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    p = sub.add_parser("analyze", help="analyze a project tree")
    p.add_argument("root", type=Path)
    p.add_argument("--project", dest="project_name", help="project name (default: root directory name)")
    p.add_argument("--refactor", action="store_true", help="generate cases for clone representatives only")
    p.add_argument("--clone-level", type=int, choices=(1, 2), default=1)
    p.add_argument("--junit", action="store_true", help="emit JUnit-style stub files (needs --out)")
    p.add_argument("--out", dest="out_dir", type=Path)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--paper-compat", action="store_true", help="reproduce the original console spacing")
    p.add_argument("--include-test-files", action="store_true")
    p.add_argument("--exclude", dest="exclusions", action="append", default=[], metavar="GLOB")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def parse_config(argv: Sequence[str]) -> tuple[RunConfig, bool]:
    args = build_parser().parse_args(list(argv))
    if args.junit and args.out_dir is None:
        raise _UsageError("epit: error: --junit requires --out DIR")
    config = RunConfig(
        root=args.root,
        project_name=args.project_name,
        refactor=args.refactor,
        clone_level=CloneLevel(args.clone_level),
        junit=args.junit,
        format=args.format,
        paper_compat=args.paper_compat,
        out_dir=args.out_dir,
        include_test_files=args.include_test_files,
        exclusions=tuple(args.exclusions),
    )
    return config, args.verbose


def analyze(config: RunConfig, clock: Clock | None = None):
    """Run the pipeline. Returns (model, groups, suite, summary, stubs)."""
    timer = PhaseTimer(clock or Clock.from_env())
    with timer.phase("parse"):
        model = build_project_model(config.root, config.project_name, config.exclusions, DEFAULT_TEST_PATTERNS)
    with timer.phase("detect"):
        eligible = model.eligible_methods(config.include_test_files)
        groups = detect_clone_groups(eligible, config.clone_level)
    with timer.phase("generate"):
        suite = generate_project_testcases(model, groups, config.refactor, config.include_test_files)
    stubs = {}
    if config.junit:
        with timer.phase("emit"):
            stubs = emit_junit_stubs(suite)
    summary = build_summary(model, suite, timer.finish(), junit_builder=config.junit)
    return model, groups, suite, summary, stubs


def _write_outputs(config: RunConfig, json_text: str, stubs: dict[str, str]):
    out = config.out_dir
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(json_text, encoding="utf-8")
    for rel, text in stubs.items():
        path = out / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def run(argv: Sequence[str], stdout=None, stderr=None, clock: Clock | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config, verbose = parse_config(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING, stream=stderr, format="%(levelname)s %(message)s")

    if not config.root.is_dir():
        print(f"epit: error: {config.root} is not a directory", file=stderr)
        return EXIT_USAGE
    try:
        model, groups, suite, summary, stubs = analyze(config, clock)
    except OSError as exc:
        print(f"epit: error: {exc}", file=stderr)
        return EXIT_USAGE

    json_text = render_json(model, suite, summary, groups)
    if config.format == "json":
        stdout.write(json_text)
    else:
        stdout.write(render_text(model, suite, summary, config.paper_compat, groups))
    if config.out_dir is not None:
        try:
            _write_outputs(config, json_text, stubs)
        except OSError as exc:
            print(f"epit: error: cannot write output: {exc}", file=stderr)
            return EXIT_USAGE

    for f in model.files:
        for err in f.errors:
            log.warning("%s:%s", f.file_path, err)
    for err in model.unreadable:
        log.warning("%s: %s", err.file_path, err.message)
    log.debug("phases: %s", summary.timings.phases_ms)
    return EXIT_PARSE_ERRORS if model.parse_error_count else EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
