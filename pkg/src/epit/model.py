"""Project walking and the flat method/metrics model."""

from __future__ import annotations

import fnmatch
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from epit.java_frontend import (
    LexError,
    MethodDecl,
    SourceUnit,
    Token,
    TypeDecl,
    TypeRef,
    decode_source,
    parse_compilation_unit,
    tokenize,
)
from epit.smells import digest_sequence, normalize_body

DEFAULT_TEST_PATTERNS = ("*Test.java",)

_PRIMITIVE_CODES = {
    "int": "I",
    "void": "V",
    "boolean": "Z",
    "byte": "B",
    "char": "C",
    "short": "S",
    "long": "J",
    "float": "F",
    "double": "D",
}


@dataclass(frozen=True)
class MethodRecord:
    file_path: str
    package_name: str
    class_name: str
    method_name: str
    signature: str
    return_descriptor: str
    param_names: tuple[str, ...]
    body_fingerprint: str
    start_line: int
    end_line: int
    start_column: int = 1
    body_tokens: tuple[Token, ...] = field(default=(), repr=False, compare=False)

    @property
    def param_count(self) -> int:
        return len(self.param_names)

    @property
    def key(self) -> tuple[str, str, str, str]:
        return (self.file_path, self.class_name, self.method_name, self.signature)

    @property
    def simple_class_name(self) -> str:
        return self.class_name.rsplit(".", 1)[-1]


@dataclass(frozen=True)
class FileRecord:
    file_path: str
    package_name: str
    line_count: int
    methods: tuple[MethodRecord, ...] = ()
    parse_error_count: int = 0
    errors: tuple[str, ...] = ()
    is_test: bool = False

    @property
    def file_name(self) -> str:
        return self.file_path.rsplit("/", 1)[-1]


@dataclass(frozen=True)
class FileError:
    file_path: str
    message: str


@dataclass(frozen=True)
class ProjectModel:
    project_name: str
    files: tuple[FileRecord, ...] = ()
    unreadable: tuple[FileError, ...] = ()

    @property
    def total_loc(self) -> int:
        return sum(f.line_count for f in self.files)

    @property
    def unique_package_names(self) -> list[str]:
        return sorted({f.package_name for f in self.files if f.package_name})

    @property
    def package_occurrences(self) -> list[str]:
        return [f.package_name for f in self.files if f.package_name]

    @property
    def methods(self) -> list[MethodRecord]:
        return [m for f in self.files for m in f.methods]

    def eligible_methods(self, include_test_files: bool = False) -> list[MethodRecord]:
        return [m for f in self.files if include_test_files or not f.is_test for m in f.methods]

    @property
    def parse_error_count(self) -> int:
        return sum(f.parse_error_count for f in self.files) + len(self.unreadable)


def count_loc(source: str) -> int:
    """Physical line count: newlines, plus one for an unterminated last line."""
    n = source.count("\n")
    if source and not source.endswith("\n"):
        n += 1
    return n


def type_descriptor(t: TypeRef) -> str:
    base = _PRIMITIVE_CODES[t.base_name] if t.is_primitive else f"Q{t.base_name};"
    return "[" * t.array_dims + base


def encode_signature(m: MethodDecl) -> str:
    """JDT-style source signature, e.g. ``([QString;)V`` for ``void main(String[] args)``."""
    params = "".join(type_descriptor(p.type) for p in m.params)
    return f"({params}){type_descriptor(m.return_type)}"


def _walk_types(types: Sequence[TypeDecl], prefix: str = ""):
    for t in types:
        name = f"{prefix}.{t.name}" if prefix else t.name
        for m in t.methods:
            yield name, m
        yield from _walk_types(t.nested_types, name)


def extract_methods(unit: SourceUnit) -> list[MethodRecord]:
    records = []
    for class_name, m in _walk_types(unit.types):
        seq = normalize_body(m.body_tokens)
        records.append(
            MethodRecord(
                file_path=unit.file_path,
                package_name=unit.package_name,
                class_name=class_name,
                method_name=m.name,
                signature=encode_signature(m),
                return_descriptor=type_descriptor(m.return_type),
                param_names=tuple(p.name for p in m.params),
                body_fingerprint=digest_sequence(seq) if seq else "",
                start_line=m.start_line,
                end_line=m.end_line,
                start_column=m.start_column,
                body_tokens=m.body_tokens,
            )
        )
    # nested types are collected per type; restore textual order
    records.sort(key=lambda r: (r.start_line, r.start_column))
    return records


def _matches(rel_path: str, patterns: Iterable[str]) -> bool:
    name = rel_path.rsplit("/", 1)[-1]
    return any(fnmatch.fnmatchcase(rel_path, p) or fnmatch.fnmatchcase(name, p) for p in patterns)


def iter_java_files(root: Path, exclusions: Iterable[str] = ()) -> list[str]:
    """Project-relative posix paths of ``.java`` files, sorted, hidden entries skipped."""
    exclusions = tuple(exclusions)
    found = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames[:] = [d for d in dirnames if not d.startswith(".")]
        rel_dir = Path(dirpath).relative_to(root).as_posix()
        for name in filenames:
            if name.startswith(".") or not name.endswith(".java"):
                continue
            rel = name if rel_dir == "." else f"{rel_dir}/{name}"
            if not _matches(rel, exclusions):
                found.append(rel)
    found.sort()
    return found


def analyze_file(rel_path: str, data: bytes, is_test: bool = False) -> FileRecord:
    """Lex, parse and extract one file. Never raises on malformed input."""
    try:
        source = decode_source(data)
        tokens = tokenize(source)
    except LexError as exc:
        loc = data.count(b"\n") + (1 if data and not data.endswith(b"\n") else 0)
        return FileRecord(rel_path, "", loc, (), 1, (str(exc),), is_test)
    unit = parse_compilation_unit(tokens, rel_path)
    return FileRecord(
        file_path=rel_path,
        package_name=unit.package_name,
        line_count=unit.line_count,
        methods=tuple(extract_methods(unit)),
        parse_error_count=len(unit.errors),
        errors=tuple(str(e) for e in unit.errors),
        is_test=is_test,
    )


def build_project_model(
    root,
    project_name: str | None = None,
    exclusions: Iterable[str] = (),
    test_patterns: Iterable[str] = DEFAULT_TEST_PATTERNS,
) -> ProjectModel:
    """Walk ``root`` and analyze every non-excluded ``.java`` file.

    Files matching ``test_patterns`` are analyzed and counted but flagged as
    test files. Raises OSError if ``root`` is not a readable directory.
    """
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"not a directory: {root}")
    os.listdir(root)  # surfaces PermissionError early
    test_patterns = tuple(test_patterns)
    files, unreadable = [], []
    for rel in iter_java_files(root, exclusions):
        try:
            data = (root / rel).read_bytes()
        except OSError as exc:
            unreadable.append(FileError(rel, exc.strerror or str(exc)))
            continue
        files.append(analyze_file(rel, data, _matches(rel, test_patterns)))
    name = project_name or root.resolve().name
    return ProjectModel(name, tuple(files), tuple(unreadable))
