"""Lexer and declaration-level parser for a subset of Java.

The lexer is lossless: every character of the input lands in exactly one
token, trivia included, so ``reconstruct_source(tokenize(s)) == s``.

The parser structures packages, imports, type declarations and method
headers. Method bodies are kept as balanced token spans rather than
statement trees.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


class TokenKind(enum.Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    INTEGER = "integer-literal"
    FLOAT = "float-literal"
    STRING = "string-literal"
    CHAR = "char-literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    COMMENT = "comment"
    WHITESPACE = "whitespace"
    EOF = "end-of-input"


TRIVIA = frozenset({TokenKind.COMMENT, TokenKind.WHITESPACE})
LITERALS = frozenset({TokenKind.INTEGER, TokenKind.FLOAT, TokenKind.STRING, TokenKind.CHAR})


class Token(NamedTuple):
    kind: TokenKind
    lexeme: str
    line: int
    column: int

    def __repr__(self):
        return f"Token({self.kind.value}, {self.lexeme!r}, {self.line}:{self.column})"


class LexError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class SyntaxErrorInfo(NamedTuple):
    message: str
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}: {self.message}"


KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized this
    throw throws transient try void volatile while true false null""".split()
)

PRIMITIVES = frozenset({"boolean", "byte", "char", "short", "int", "long", "float", "double", "void"})

MODIFIERS = frozenset(
    {
        "public", "protected", "private", "static", "abstract", "final", "native",
        "synchronized", "transient", "volatile", "strictfp", "default",
    }
)
# contextual modifiers, only when followed by more declaration tokens
_CONTEXTUAL_MODIFIERS = frozenset({"sealed"})

_OPERATORS = sorted(
    """>>>= <<= >>= >>> -> ++ -- && || == != <= >= += -= *= /= &= |= ^= %= << >>
    = > < ! ~ ? : + - * / & | ^ %""".split(),
    key=len,
    reverse=True,
)

_TOKEN_RE = re.compile(
    "|".join(
        [
            r"(?P<ws>[ \t\f\r\n]+)",
            r"(?P<comment>//[^\n]*|/\*[\s\S]*?\*/)",
            r"(?P<badcomment>/\*)",
            r'(?P<textblock>"""[ \t\f]*\r?\n(?:[^"\\]|\\[\s\S]|"(?!""))*""")',
            r'(?P<badtextblock>""")',
            r'(?P<string>"(?:[^"\\\n\r]|\\[^\n\r])*")',
            r'(?P<badstring>")',
            r"(?P<char>'(?:[^'\\\n\r]|\\(?:u+[0-9a-fA-F]{4}|[0-7]{1,3}|[^\n\r]))')",
            r"(?P<badchar>')",
            r"(?P<float>"
            r"0[xX](?:[0-9a-fA-F_]*\.[0-9a-fA-F_]*|[0-9a-fA-F_]+)[pP][+-]?\d[\d_]*[fFdD]?"
            r"|(?:\d[\d_]*\.(?:\d[\d_]*)?|\.\d[\d_]*)(?:[eE][+-]?\d[\d_]*)?[fFdD]?"
            r"|\d[\d_]*(?:[eE][+-]?\d[\d_]*[fFdD]?|[fFdD]))",
            r"(?P<int>0[xX][0-9a-fA-F_]+[lL]?|0[bB][01_]+[lL]?|\d[\d_]*[lL]?)",
            r"(?P<ident>(?:[^\W\d]|\$)(?:\w|\$)*)",
            r"(?P<punct>\.\.\.|::|[(){}\[\];,.@])",
            "(?P<op>" + "|".join(re.escape(op) for op in _OPERATORS) + ")",
            r"(?P<bad>[\s\S])",
        ]
    )
)

_GROUP_KIND = {
    "ws": TokenKind.WHITESPACE,
    "comment": TokenKind.COMMENT,
    "textblock": TokenKind.STRING,
    "string": TokenKind.STRING,
    "char": TokenKind.CHAR,
    "float": TokenKind.FLOAT,
    "int": TokenKind.INTEGER,
    "punct": TokenKind.PUNCTUATION,
    "op": TokenKind.OPERATOR,
}

_LEX_ERRORS = {
    "badcomment": "unterminated block comment",
    "badtextblock": "unterminated text block",
    "badstring": "unterminated string literal",
    "badchar": "unterminated or malformed char literal",
    "bad": "unexpected character",
}


def tokenize(source: str) -> list[Token]:
    """Split ``source`` into tokens, trivia included, ending with an EOF token.

    Raises LexError with the position of the offending character.
    """
    tokens: list[Token] = []
    append = tokens.append
    line, col = 1, 1
    pos, end = 0, len(source)
    match = _TOKEN_RE.match
    while pos < end:
        m = match(source, pos)
        group = m.lastgroup
        text = m.group()
        if group in _LEX_ERRORS:
            message = _LEX_ERRORS[group]
            if group == "bad":
                message += f" {text!r}"
            raise LexError(message, line, col)
        if group == "ident":
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
        else:
            kind = _GROUP_KIND[group]
        append(Token(kind, text, line, col))
        nl = text.count("\n")
        if nl:
            line += nl
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    append(Token(TokenKind.EOF, "", line, col))
    return tokens


def decode_source(data: bytes) -> str:
    """Strict UTF-8 decode; invalid bytes become a LexError."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        prefix = data[: exc.start]
        line = prefix.count(b"\n") + 1
        col = exc.start - (prefix.rfind(b"\n") + 1) + 1
        raise LexError(f"invalid UTF-8 byte 0x{data[exc.start]:02x}", line, col) from None


def reconstruct_source(tokens: Sequence[Token]) -> str:
    return "".join(t.lexeme for t in tokens)


# --------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class TypeRef:
    base_name: str
    array_dims: int = 0
    is_primitive: bool = False

    def __post_init__(self):
        if self.array_dims < 0:
            raise ValueError("array_dims must be non-negative")
        if self.is_primitive and self.base_name not in PRIMITIVES:
            raise ValueError(f"{self.base_name!r} is not a primitive type")

    def __str__(self):
        return self.base_name + "[]" * self.array_dims


@dataclass(frozen=True)
class ParamDecl:
    type: TypeRef
    name: str


@dataclass(frozen=True)
class MethodDecl:
    name: str
    modifiers: frozenset[str]
    return_type: TypeRef
    params: tuple[ParamDecl, ...]
    body_tokens: tuple[Token, ...] = field(repr=False)
    start_line: int
    end_line: int
    start_column: int = 1
    is_constructor: bool = False


@dataclass(frozen=True)
class TypeDecl:
    name: str
    kind: str  # class | interface | enum
    methods: tuple[MethodDecl, ...] = ()
    nested_types: tuple["TypeDecl", ...] = ()
    start_line: int = 1


@dataclass(frozen=True)
class SourceUnit:
    file_path: str
    package_name: str
    imports: tuple[str, ...]
    types: tuple[TypeDecl, ...]
    line_count: int
    errors: tuple[SyntaxErrorInfo, ...] = ()


class _ParseError(Exception):
    def __init__(self, message: str, token: Token):
        super().__init__(message)
        self.info = SyntaxErrorInfo(message, token.line, token.column)


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        if not tokens or tokens[-1].kind is not TokenKind.EOF:
            tokens = list(tokens) + [Token(TokenKind.EOF, "", 1, 1)]
        self.tokens = tokens
        # indices of significant tokens; the last one is EOF
        self.sig = [i for i, t in enumerate(tokens) if t.kind not in TRIVIA]
        self.pos = 0
        self.errors: list[SyntaxErrorInfo] = []

    # -- cursor helpers ---------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        i = min(self.pos + ahead, len(self.sig) - 1)
        return self.tokens[self.sig[i]]

    def at(self, lexeme: str, ahead: int = 0) -> bool:
        t = self.peek(ahead)
        return t.lexeme == lexeme and t.kind in (TokenKind.PUNCTUATION, TokenKind.OPERATOR, TokenKind.KEYWORD)

    def at_eof(self) -> bool:
        return self.peek().kind is TokenKind.EOF

    def advance(self) -> Token:
        t = self.peek()
        if t.kind is not TokenKind.EOF:
            self.pos += 1
        return t

    def expect(self, lexeme: str) -> Token:
        if not self.at(lexeme):
            t = self.peek()
            raise _ParseError(f"expected '{lexeme}' but found {_describe(t)}", t)
        return self.advance()

    def expect_ident(self) -> Token:
        t = self.peek()
        if t.kind is not TokenKind.IDENTIFIER:
            raise _ParseError(f"expected identifier but found {_describe(t)}", t)
        return self.advance()

    # -- compilation unit ---------------------------------------------------

    def compilation_unit(self, file_path: str, line_count: int) -> SourceUnit:
        package = ""
        imports: list[str] = []
        types: list[TypeDecl] = []

        start = self.pos
        try:
            self.skip_annotations()
            if self.at("package"):
                self.advance()
                package = self.qualified_name()
                self.expect(";")
            else:
                self.pos = start
        except _ParseError as exc:
            self.errors.append(exc.info)
            self.pos = start
            self.recover()

        while self.at("import"):
            start = self.pos
            try:
                self.advance()
                static = self.at("static")
                if static:
                    self.advance()
                name = self.qualified_name(allow_star=True)
                self.expect(";")
                imports.append(("static " if static else "") + name)
            except _ParseError as exc:
                self.errors.append(exc.info)
                self.pos = start
                self.recover()

        while not self.at_eof():
            if self.at(";"):
                self.advance()
                continue
            if self.at("}"):
                t = self.advance()
                self.errors.append(SyntaxErrorInfo("unexpected '}'", t.line, t.column))
                continue
            start = self.pos
            try:
                decl = self.type_declaration()
                types.append(decl)
            except _ParseError as exc:
                self.errors.append(exc.info)
                self.pos = start
                self.recover()

        return SourceUnit(file_path, package, tuple(imports), tuple(types), line_count, tuple(self.errors))

    def recover(self):
        """Skip to just past the next ``;`` or balanced ``{...}`` at the current level.

        Stops before an unmatched ``}`` so the enclosing body can close; callers
        consume stray ``}`` themselves so recovery always makes progress.
        """
        depth = 0
        while not self.at_eof():
            t = self.peek()
            if t.kind is TokenKind.PUNCTUATION:
                if t.lexeme == "{":
                    depth += 1
                elif t.lexeme == "}":
                    if depth == 0:
                        return
                    depth -= 1
                    if depth == 0:
                        self.advance()
                        return
                elif t.lexeme == ";" and depth == 0:
                    self.advance()
                    return
            self.advance()

    def qualified_name(self, allow_star: bool = False) -> str:
        parts = [self.expect_ident().lexeme]
        while self.at("."):
            self.advance()
            if allow_star and self.at("*"):
                self.advance()
                parts.append("*")
                break
            parts.append(self.expect_ident().lexeme)
        return ".".join(parts)

    # -- modifiers and annotations ------------------------------------------

    def skip_annotations(self):
        while self.at("@") and not self.at("interface", 1):
            self.annotation()

    def annotation(self):
        self.expect("@")
        self.qualified_name()
        if self.at("("):
            self.skip_balanced("(", ")")

    def modifiers(self) -> tuple[frozenset[str], Token]:
        mods = set()
        first = self.peek()
        while True:
            t = self.peek()
            if self.at("@") and not self.at("interface", 1):
                self.annotation()
            elif t.kind is TokenKind.KEYWORD and t.lexeme in MODIFIERS:
                # `default:` inside annotation bodies never reaches here
                mods.add(self.advance().lexeme)
            elif (
                t.kind is TokenKind.IDENTIFIER
                and t.lexeme in _CONTEXTUAL_MODIFIERS
                and self.peek(1).kind in (TokenKind.KEYWORD, TokenKind.IDENTIFIER)
            ):
                mods.add(self.advance().lexeme)
            elif t.kind is TokenKind.IDENTIFIER and t.lexeme == "non" and self.at("-", 1) and self.peek(2).lexeme == "sealed":
                for _ in range(3):
                    self.advance()
                mods.add("non-sealed")
            else:
                return frozenset(mods), first

    def skip_balanced(self, open_: str, close: str) -> int:
        """Skip a balanced ``open_ ... close`` group; return index of the closing token."""
        self.expect(open_)
        depth = 1
        while True:
            t = self.peek()
            if t.kind is TokenKind.EOF:
                raise _ParseError(f"expected '{close}' but found end of input", t)
            self.advance()
            if t.kind is TokenKind.PUNCTUATION:
                if t.lexeme == open_:
                    depth += 1
                elif t.lexeme == close:
                    depth -= 1
                    if depth == 0:
                        return self.sig[self.pos - 1]

    def skip_type_arguments(self):
        """Skip ``<...>`` counting angle characters inside compound operators like ``>>``."""
        depth = 0
        while True:
            t = self.peek()
            if t.kind is TokenKind.EOF:
                raise _ParseError("unterminated type argument list", t)
            lex = t.lexeme
            if t.kind is TokenKind.OPERATOR and set(lex) <= {"<", ">"}:
                depth += lex.count("<") - lex.count(">")
                self.advance()
                if depth <= 0:
                    if depth < 0:
                        raise _ParseError("unbalanced '>' in type arguments", t)
                    return
            elif t.kind is TokenKind.PUNCTUATION and lex in ";{}()":
                raise _ParseError(f"unexpected {_describe(t)} in type arguments", t)
            else:
                self.advance()

    # -- types --------------------------------------------------------------

    def type_ref(self) -> TypeRef:
        self.skip_annotations()
        t = self.peek()
        if t.kind is TokenKind.KEYWORD and t.lexeme in PRIMITIVES:
            self.advance()
            base, primitive = t.lexeme, True
        elif t.kind is TokenKind.IDENTIFIER:
            self.advance()
            base, primitive = t.lexeme, False
            if self.at("<"):
                self.skip_type_arguments()
            while self.at(".") and (self.peek(1).kind is TokenKind.IDENTIFIER or self.at("@", 1)):
                self.advance()
                self.skip_annotations()
                base = self.expect_ident().lexeme
                if self.at("<"):
                    self.skip_type_arguments()
        elif self.at("?"):
            raise _ParseError("wildcard type outside type arguments", t)
        else:
            raise _ParseError(f"expected type but found {_describe(t)}", t)
        dims = self.dims()
        return TypeRef(base, dims, primitive)

    def dims(self) -> int:
        n = 0
        while True:
            save = self.pos
            self.skip_annotations()
            if self.at("[") and self.at("]", 1):
                self.advance()
                self.advance()
                n += 1
            else:
                self.pos = save
                return n

    # -- declarations -------------------------------------------------------

    def at_record(self) -> bool:
        # `record` is contextual: only a declaration when followed by a name and a header
        t = self.peek()
        return (
            t.kind is TokenKind.IDENTIFIER
            and t.lexeme == "record"
            and self.peek(1).kind is TokenKind.IDENTIFIER
            and (self.at("(", 2) or self.at("<", 2))
        )

    def type_declaration(self, mods_done: bool = False) -> TypeDecl:
        if not mods_done:
            self.modifiers()
        head = self.peek()
        if self.at("class"):
            kind = "class"
        elif self.at("interface"):
            kind = "interface"
        elif self.at("enum"):
            kind = "enum"
        elif self.at("@") and self.at("interface", 1):
            self.advance()
            kind = "interface"
        elif self.at_record():
            kind = "record"
        else:
            raise _ParseError(f"expected class, interface or enum but found {_describe(head)}", head)
        self.advance()
        name = self.expect_ident().lexeme
        if self.at("<"):
            self.skip_type_arguments()
        if kind == "record":
            # components become implicit accessors, which are not declared methods
            self.skip_balanced("(", ")")
            kind = "class"
        # extends / implements / permits clauses
        while not self.at("{"):
            t = self.peek()
            if t.kind is TokenKind.EOF or self.at(";") or self.at("}"):
                raise _ParseError(f"expected '{{' but found {_describe(t)}", t)
            if self.at("<"):
                self.skip_type_arguments()
            else:
                self.advance()
        return self.class_body(name, kind, head.line)

    def class_body(self, name: str, kind: str, start_line: int) -> TypeDecl:
        self.expect("{")
        methods: list[MethodDecl] = []
        nested: list[TypeDecl] = []
        if kind == "enum":
            self.enum_constants()
        while True:
            if self.at("}"):
                self.advance()
                break
            if self.at_eof():
                self.errors.append(SyntaxErrorInfo("expected '}' but found end of input", self.peek().line, self.peek().column))
                break
            if self.at(";"):
                self.advance()
                continue
            start = self.pos
            try:
                self.member(name, methods, nested)
            except _ParseError as exc:
                self.errors.append(exc.info)
                self.pos = start
                self.recover()
        return TypeDecl(name, kind, tuple(methods), tuple(nested), start_line)

    def enum_constants(self):
        while True:
            if self.at(";"):
                self.advance()
                return
            if self.at("}"):
                return
            self.skip_annotations()
            self.expect_ident()
            if self.at("("):
                self.skip_balanced("(", ")")
            if self.at("{"):
                self.skip_balanced("{", "}")
            if self.at(","):
                self.advance()
            elif not (self.at(";") or self.at("}")):
                t = self.peek()
                raise _ParseError(f"expected ',', ';' or '}}' in enum but found {_describe(t)}", t)

    def member(self, class_name: str, methods: list, nested: list):
        first = self.peek()
        if self.at("{") or (self.at("static") and self.at("{", 1)):
            # initializer block
            if self.at("static"):
                self.advance()
            self.skip_balanced("{", "}")
            return
        mods, first = self.modifiers()
        if self.at("class") or self.at("interface") or self.at("enum") or (self.at("@") and self.at("interface", 1)) or self.at_record():
            nested.append(self.type_declaration(mods_done=True))
            return
        if self.at("<"):
            self.skip_type_arguments()
        t = self.peek()
        if t.kind is TokenKind.IDENTIFIER and t.lexeme == class_name and self.at("{", 1):
            # compact record constructor
            self.advance()
            methods.append(self.method_rest(t.lexeme, mods, TypeRef(class_name), first, constructor=True, compact=True))
            return
        if t.kind is TokenKind.IDENTIFIER and self.at("(", 1):
            if t.lexeme != class_name:
                raise _ParseError(f"invalid method declaration; return type required for '{t.lexeme}'", t)
            self.advance()
            methods.append(self.method_rest(t.lexeme, mods, TypeRef(class_name), first, constructor=True))
            return
        rtype = self.type_ref()
        name_tok = self.expect_ident()
        if self.at("("):
            methods.append(self.method_rest(name_tok.lexeme, mods, rtype, first))
            return
        # field declaration: skip initializers up to ';'
        self.skip_field_rest()

    def skip_field_rest(self):
        while True:
            t = self.peek()
            if t.kind is TokenKind.EOF:
                raise _ParseError("expected ';' but found end of input", t)
            if t.kind is TokenKind.PUNCTUATION:
                if t.lexeme == ";":
                    self.advance()
                    return
                if t.lexeme == "{":
                    self.skip_balanced("{", "}")
                    continue
                if t.lexeme == "(":
                    self.skip_balanced("(", ")")
                    continue
                if t.lexeme == "}":
                    raise _ParseError("expected ';' but found '}'", t)
            self.advance()

    def method_rest(
        self, name: str, mods, rtype: TypeRef, first: Token, constructor: bool = False, compact: bool = False
    ) -> MethodDecl:
        params = [] if compact else self.parameters()
        extra = self.dims()
        if extra:
            rtype = TypeRef(rtype.base_name, rtype.array_dims + extra, rtype.is_primitive)
        if self.at("throws"):
            self.advance()
            self.type_ref()
            while self.at(","):
                self.advance()
                self.type_ref()
        if self.at("default"):
            # annotation member default value
            self.advance()
            self.skip_field_rest()
            end = self.tokens[self.sig[self.pos - 1]]
            body: tuple[Token, ...] = ()
        elif self.at(";"):
            end = self.advance()
            body = ()
        elif self.at("{"):
            open_idx = self.sig[self.pos]
            close_idx = self.skip_balanced("{", "}")
            body = tuple(self.tokens[open_idx : close_idx + 1])
            end = self.tokens[close_idx]
        else:
            t = self.peek()
            raise _ParseError(f"expected '{{' or ';' but found {_describe(t)}", t)
        end_line = end.line + end.lexeme.count("\n")
        return MethodDecl(
            name=name,
            modifiers=mods,
            return_type=rtype,
            params=tuple(params),
            body_tokens=body,
            start_line=first.line,
            end_line=end_line,
            start_column=first.column,
            is_constructor=constructor,
        )

    def parameters(self) -> list[ParamDecl]:
        self.expect("(")
        params: list[ParamDecl] = []
        if self.at(")"):
            self.advance()
            return params
        while True:
            self.modifiers()
            ptype = self.type_ref()
            if self.at("..."):
                self.advance()
                ptype = TypeRef(ptype.base_name, ptype.array_dims + 1, ptype.is_primitive)
            if self.at("this"):
                # receiver parameter
                self.advance()
            else:
                pname = self.expect_ident().lexeme
                extra = self.dims()
                if extra:
                    ptype = TypeRef(ptype.base_name, ptype.array_dims + extra, ptype.is_primitive)
                params.append(ParamDecl(ptype, pname))
            if self.at(","):
                self.advance()
                continue
            self.expect(")")
            return params


def _describe(t: Token) -> str:
    if t.kind is TokenKind.EOF:
        return "end of input"
    return f"{t.kind.value} '{t.lexeme}'"


def parse_compilation_unit(tokens: Sequence[Token], file_path: str = "") -> SourceUnit:
    """Parse a token stream from ``tokenize`` into a SourceUnit.

    Syntax errors never raise; they are collected in ``SourceUnit.errors``
    and parsing resumes at the next member boundary.
    """
    from epit.model import count_loc

    line_count = count_loc(reconstruct_source(tokens))
    parser = _Parser(tokens)
    try:
        return parser.compilation_unit(file_path, line_count)
    except RecursionError:
        t = parser.peek()
        return SourceUnit(file_path, "", (), (), line_count, (SyntaxErrorInfo("nesting too deep", t.line, t.column),))


def parse_source(source: str, file_path: str = "") -> SourceUnit:
    return parse_compilation_unit(tokenize(source), file_path)
