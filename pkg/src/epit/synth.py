"""Random Java project generator for property tests and benchmarks.

Generated sources stay inside the grammar subset the parser accepts and
carry their own ground truth (method counts, injected clones), so tests can
check the pipeline against numbers computed independently of it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

_PARAM_TYPES = [
    "int", "long", "double", "boolean", "char", "String", "int[]", "String[][]",
    "List<String>", "Map<String, List<Integer>>", "Optional<Map<String, Integer>>", "Object",
]
_RETURN_TYPES = ["void", "int", "boolean", "String", "double", "int[]", "List<String>"]
_RETURN_VALUES = {
    "int": ["0", "1", "-1", "42"],
    "boolean": ["true", "false"],
    "String": ['"done"', "null", '""'],
    "double": ["0.0", "1.5e3", "2d"],
    "int[]": ["new int[0]", "null"],
    "List<String>": ["new ArrayList<>()", "null"],
}
_WORDS = [
    "alpha", "beta", "gamma", "delta", "total", "count", "value", "index", "limit", "name",
    "score", "level", "cache", "buffer", "result", "offset", "width", "height", "queue", "floor",
]
_CLASS_WORDS = ["Card", "Deck", "Player", "Recipe", "Inventory", "Elevator", "Floor", "Queue", "Hand", "Coffee", "Game", "Timer"]

_PUNCT = set("(){}[];,.")


@dataclass
class Body:
    """A method body as (lexeme, is_identifier, is_literal) triples, braces excluded."""

    tokens: list[tuple[str, bool, bool]] = field(default_factory=list)

    def renamed(self, rng: random.Random) -> "Body":
        """Consistent identifier renaming plus literal replacement: a type-2 clone."""
        mapping: dict[str, str] = {}
        out = []
        for lex, is_id, is_lit in self.tokens:
            if is_id:
                if lex not in mapping:
                    mapping[lex] = f"r{len(mapping)}_{rng.randrange(1000)}"
                out.append((mapping[lex], True, False))
            elif is_lit:
                sign = "-" if lex.startswith("-") else ""
                out.append((sign + str(rng.randrange(10_000)), False, True))
            else:
                out.append((lex, False, False))
        return Body(out)


def _id(name):
    return (name, True, False)


def _kw(lex):
    return (lex, False, False)


def _lit(lex):
    return (lex, False, True)


def _statement(rng: random.Random, names: list[str]) -> list[tuple[str, bool, bool]]:
    v = rng.choice(names)
    w = rng.choice(_WORDS)
    n = _lit(str(rng.randrange(100)))
    kind = rng.randrange(8)
    if kind == 0:
        names.append(w)
        return [_kw("int"), _id(w), _kw("="), n, _kw(";")]
    if kind == 1:
        return [_id(v), _kw("="), _id(v), _kw(rng.choice("+-*")), n, _kw(";")]
    if kind == 2:
        return [_kw("if"), _kw("("), _id(v), _kw(">"), n, _kw(")"), _kw("{"), _id(v), _kw("-="), n, _kw(";"), _kw("}")]
    if kind == 3:
        return [
            _kw("for"), _kw("("), _kw("int"), _id("i"), _kw("="), _lit("0"), _kw(";"), _id("i"), _kw("<"), _id(v), _kw(";"),
            _id("i"), _kw("++"), _kw(")"), _kw("{"), _id(v), _kw("+="), _id("i"), _kw(";"), _kw("}"),
        ]
    if kind == 4:
        return [_id("System"), _kw("."), _id("out"), _kw("."), _id("println"), _kw("("), _lit(f'"{w} {{}}"'), _kw("+"), _id(v), _kw(")"), _kw(";")]
    if kind == 5:
        return [
            _id("List"), _kw("<"), _id("Integer"), _kw(">"), _id("xs"), _kw("="), _kw("new"), _id("ArrayList"), _kw("<"), _kw(">"),
            _kw("("), _kw(")"), _kw(";"), _id("xs"), _kw("."), _id("forEach"), _kw("("), _id("x"), _kw("->"), _id(v),
            _kw("+="), _id("x"), _kw(")"), _kw(";"),
        ]
    if kind == 6:
        return [_kw("while"), _kw("("), _id(v), _kw("<"), n, _kw(")"), _kw("{"), _id(v), _kw("++"), _kw(";"), _kw("}")]
    return [_kw("char"), _id("c" + w), _kw("="), _lit("'x'"), _kw(";")]


def random_body(rng: random.Random, n_statements: int, return_type: str = "void") -> Body:
    names = [rng.choice(_WORDS)]
    toks = [_kw("int"), _id(names[0]), _kw("="), _lit(str(rng.randrange(1000))), _kw(";")]
    for _ in range(n_statements):
        toks += _statement(rng, names)
    if return_type != "void":
        value = rng.choice(_RETURN_VALUES[return_type])
        if value.startswith('"') or value[0].isdigit() or value[0] == "-":
            toks += [_kw("return"), _lit(value), _kw(";")]
        else:
            toks += [_kw("return"), *[_kw(part) for part in value.split()], _kw(";")]
    return Body(toks)


def render_body(body: Body, rng: random.Random, indent: str = "        ", noise: float = 0.0) -> list[str]:
    """Render ``{ ... }`` as lines; ``noise`` adds random comments and spacing (type-1 variation)."""
    lines = ["{"]
    cur: list[str] = []
    depth = 0
    prev = None
    for lex, _, _ in body.tokens:
        if cur and prev is not None:
            glue = "" if (lex in _PUNCT or prev in _PUNCT) and lex != "{" else " "
            if noise and rng.random() < noise:
                glue = rng.choice([" ", "  ", " /* n */ ", "\t"])
            cur.append(glue)
        cur.append(lex)
        prev = lex
        if lex in (";", "{", "}"):
            if lex == "}":
                depth -= 1
            if lex == "{":
                depth += 1
            if lex == ";" and _in_for_header(cur):
                continue
            text = "".join(cur).strip()
            pad = indent + "    " * max(depth - (1 if lex == "{" else 0), 0)
            if noise and rng.random() < noise:
                text += " // step"
            lines.append(pad + text)
            cur, prev = [], None
    if cur:
        lines.append(indent + "".join(cur))
    lines.append(indent[:-4] + "}")
    return lines


def _in_for_header(cur: list[str]) -> bool:
    text = "".join(cur)
    return text.count("(") > text.count(")")


@dataclass
class SyntheticProject:
    files: dict[str, str] = field(default_factory=dict)
    eligible_methods: int = 0
    total_methods: int = 0
    bodied_eligible: int = 0

    @property
    def total_loc(self) -> int:
        return sum(text.count("\n") for text in self.files.values())

    def write(self, root) -> Path:
        root = Path(root)
        for rel, text in self.files.items():
            path = root / rel
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        return root


class _ClassWriter:
    def __init__(self, rng: random.Random, name: str, noise: float, bodiless: bool, min_statements: int = 0, max_statements: int = 5):
        self.rng = rng
        self.name = name
        self.noise = noise
        self.bodiless = bodiless
        self.min_statements = min_statements
        self.max_statements = max_statements
        self.used: set[str] = set()
        self.methods = 0
        self.bodied = 0
        self.bodies: list[tuple[str, str, Body]] = []  # (params text, return type, body)

    def method_name(self) -> str:
        while True:
            name = self.rng.choice(["get", "set", "compute", "update", "check", "find", "load"]) + self.rng.choice(_CLASS_WORDS)
            if name not in self.used:
                self.used.add(name)
                return name

    def params(self) -> str:
        rng = self.rng
        n = rng.randrange(4)
        names = rng.sample(_WORDS, n)
        parts = []
        for i, pname in enumerate(names):
            ptype = rng.choice(_PARAM_TYPES)
            if i == n - 1 and rng.random() < 0.15:
                ptype = rng.choice(["String", "int"]) + "..."
            prefix = "final " if rng.random() < 0.2 else ""
            parts.append(f"{prefix}{ptype} {pname}")
        return ", ".join(parts)

    def method(self, indent: str, body: Body | None = None, params: str | None = None, rtype: str | None = None) -> list[str]:
        rng = self.rng
        rtype = rtype or rng.choice(_RETURN_TYPES)
        params = self.params() if params is None else params
        mods = rng.choice(["public ", "private ", "protected ", "", "public static ", "static "])
        tparams = "<T extends Comparable<T>> " if rng.random() < 0.1 else ""
        throws = " throws IOException, IllegalStateException" if rng.random() < 0.15 else ""
        lines = []
        if rng.random() < 0.15:
            lines.append(f"{indent}@Deprecated")
        if rng.random() < 0.3:
            lines += [f"{indent}/**", f"{indent} * {rng.choice(_WORDS)} helper.", f"{indent} */"]
        header = f"{indent}{mods}{tparams}{rtype} {self.method_name()}({params}){throws} "
        self.methods += 1
        if self.bodiless and body is None and rng.random() < 0.1:
            return lines + [f"{indent}abstract {rtype} {self.method_name()}({params});"]
        if body is None:
            body = random_body(rng, rng.randint(self.min_statements, self.max_statements), rtype)
        self.bodied += 1
        self.bodies.append((params, rtype, body))
        rendered = render_body(body, rng, indent + "    ", self.noise)
        return lines + [header + rendered[0], *rendered[1:-1], indent + "}"]

    def constructor(self, indent: str) -> list[str]:
        self.methods += 1
        self.bodied += 1
        params = self.params()
        body = random_body(self.rng, self.rng.randint(self.min_statements, 2))
        self.bodies.append((params, self.name, body))
        rendered = render_body(body, self.rng, indent + "    ", self.noise)
        return [f"{indent}public {self.name}({params}) " + rendered[0], *rendered[1:-1], indent + "}"]


def _class_lines(rng: random.Random, w: _ClassWriter, n_methods: int, indent: str = "    ", nested: bool = True) -> list[str]:
    lines = []
    for _ in range(rng.randrange(3)):
        ftype = rng.choice(["int", "String", "List<String>", "double[]"])
        init = rng.choice(["", " = 0", ' = "x"', " = null"]) if ftype != "int" else rng.choice(["", " = 7"])
        if ftype == "String" and init == " = 0":
            init = ""
        lines.append(f"{indent}private {ftype} {rng.choice(_WORDS)}Field{init};")
    if rng.random() < 0.3:
        lines.append("")
        lines += w.constructor(indent)
        n_methods -= 1
    for _ in range(max(n_methods, 0)):
        lines.append("")
        lines += w.method(indent)
    if nested and rng.random() < 0.2:
        inner = _ClassWriter(rng, w.name + "Node", w.noise, w.bodiless, w.min_statements, w.max_statements)
        lines += ["", f"{indent}static class {inner.name} {{"]
        lines += _class_lines(rng, inner, rng.randint(1, 2), indent + "    ", nested=False)
        lines.append(f"{indent}}}")
        w.methods += inner.methods
        w.bodied += inner.bodied
        w.bodies += inner.bodies
    return lines


def generate_project(
    seed: int,
    n_files: int | None = None,
    methods_per_file: tuple[int, int] = (1, 5),
    test_files: bool = True,
    interfaces: bool = True,
    noise: float = 0.1,
    bodiless: bool = True,
    statements: tuple[int, int] = (0, 5),
) -> SyntheticProject:
    """A random multi-package project. Counts in the result are by construction."""
    rng = random.Random(seed)
    n_files = n_files if n_files is not None else rng.randint(1, 6)
    proj = SyntheticProject()
    class_names = set()
    for i in range(n_files):
        pkg = rng.choice(["", "app", "app.model", "org.example.core"])
        base = rng.choice(_CLASS_WORDS)
        name = f"{base}{i}"
        while name in class_names:
            name += "X"
        class_names.add(name)
        w = _ClassWriter(rng, name, noise, bodiless, *statements)
        lines = []
        if pkg:
            lines += [f"package {pkg};", ""]
        lines += ["import java.io.IOException;", "import java.util.*;", ""]
        if interfaces and rng.random() < 0.15:
            lines.append(f"public interface {name} {{")
            for _ in range(rng.randint(*methods_per_file)):
                rtype = rng.choice(_RETURN_TYPES)
                lines.append(f"    {rtype} {w.method_name()}({w.params()});")
                w.methods += 1
            lines.append("}")
        else:
            abstract = "abstract " if bodiless else ""
            lines.append(f"public {abstract}class {name} extends Object implements Comparable<{name}> {{")
            lines += _class_lines(rng, w, rng.randint(*methods_per_file))
            lines.append("}")
        rel = "/".join(pkg.split(".") + [f"{name}.java"]) if pkg else f"{name}.java"
        proj.files[rel] = "\n".join(lines) + "\n"
        proj.total_methods += w.methods
        proj.eligible_methods += w.methods
        proj.bodied_eligible += w.bodied

        if test_files and rng.random() < 0.25:
            t = _ClassWriter(rng, name + "Test", noise, False)
            tl = ["import org.junit.Test;", "", f"public class {name}Test {{"]
            for _ in range(rng.randint(1, 3)):
                tl += ["", "    @Test"]
                tl += t.method("    ", rtype="void", params="")
            tl.append("}")
            trel = rel[: -len(".java")] + "Test.java"
            proj.files[trel] = "\n".join(tl) + "\n"
            proj.total_methods += t.methods
    return proj


def generate_clone_corpus(seed: int, n_methods: int = 50, clone_rate: float = 0.3, level: int = 1):
    """Flat corpus of ``n_methods`` methods where a share are injected copies.

    Type-1 copies re-render the same lexemes with different layout and
    comments; type-2 copies also rename identifiers and replace literals.
    Returns (SyntheticProject, list of (copy index, source index)).
    """
    rng = random.Random(seed)
    proj = SyntheticProject()
    originals: list[tuple[str, str, Body]] = []
    injected = []
    per_file = 5
    idx = 0
    file_no = 0
    while idx < n_methods:
        name = f"Unit{file_no}"
        w = _ClassWriter(rng, name, noise=0.2, bodiless=False)
        lines = ["package corpus;", "", f"public class {name} {{"]
        for _ in range(min(per_file, n_methods - idx)):
            lines.append("")
            if originals and rng.random() < clone_rate:
                src = rng.randrange(len(originals))
                params, rtype, body = originals[src]
                kind = level if level in (1, 2) else rng.choice((1, 2))
                if kind == 2:
                    body = body.renamed(rng)
                lines += w.method("    ", body=body, params=params, rtype=rtype)
                injected.append((idx, src))
            else:
                lines += w.method("    ", rtype="void" if rng.random() < 0.5 else "int")
            originals.append(w.bodies[-1])
            idx += 1
        lines.append("}")
        proj.files[f"corpus/{name}.java"] = "\n".join(lines) + "\n"
        proj.total_methods += w.methods
        proj.eligible_methods += w.methods
        proj.bodied_eligible += w.bodied
        file_no += 1
    return proj, injected


def generate_loc_corpus(target_loc: int, seed: int = 0) -> SyntheticProject:
    """Keep adding random files until the corpus has at least ``target_loc`` lines."""
    proj = SyntheticProject()
    i = 0
    while proj.total_loc < target_loc:
        part = generate_project(seed * 100_003 + i, n_files=4, methods_per_file=(3, 8), statements=(2, 8))
        for rel, text in part.files.items():
            proj.files[f"m{i}/{rel}"] = text
        proj.eligible_methods += part.eligible_methods
        proj.total_methods += part.total_methods
        proj.bodied_eligible += part.bodied_eligible
        i += 1
    return proj
