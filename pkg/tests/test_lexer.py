import pytest
from hypothesis import given
from hypothesis import strategies as st

from epit.java_frontend import LexError, TokenKind, decode_source, reconstruct_source, tokenize

from conftest import fixture_sources

K = TokenKind


def kinds(src):
    return [(t.kind, t.lexeme) for t in tokenize(src)]


def test_simple_declaration():
    assert kinds("int total = 0;") == [
        (K.KEYWORD, "int"),
        (K.WHITESPACE, " "),
        (K.IDENTIFIER, "total"),
        (K.WHITESPACE, " "),
        (K.OPERATOR, "="),
        (K.WHITESPACE, " "),
        (K.INTEGER, "0"),
        (K.PUNCTUATION, ";"),
        (K.EOF, ""),
    ]


def test_empty_input_is_just_eof():
    assert kinds("") == [(K.EOF, "")]


def test_unterminated_block_comment():
    with pytest.raises(LexError) as exc:
        tokenize("/* open")
    assert exc.value.line == 1
    assert "block comment" in exc.value.message


@pytest.mark.parametrize(
    "src, line, col",
    [
        ('x = "abc', 1, 5),
        ("a\nb = 'c", 2, 5),
        ("a\n  #", 2, 3),
        ("s = \"a\nb\";", 1, 5),
    ],
)
def test_lex_error_positions(src, line, col):
    with pytest.raises(LexError) as exc:
        tokenize(src)
    assert (exc.value.line, exc.value.column) == (line, col)


@pytest.mark.parametrize(
    "lexeme, kind",
    [
        ("0x1F", K.INTEGER),
        ("0b1010L", K.INTEGER),
        ("1_000_000", K.INTEGER),
        ("42L", K.INTEGER),
        ("3.14", K.FLOAT),
        ("1e10", K.FLOAT),
        ("2.5f", K.FLOAT),
        (".5", K.FLOAT),
        ("1.", K.FLOAT),
        ("7d", K.FLOAT),
        ("0x1.8p1", K.FLOAT),
        ('"a \\" b"', K.STRING),
        ("'\\n'", K.CHAR),
        ("'\\u0041'", K.CHAR),
        ("// line", K.COMMENT),
        ("/* a\n b */", K.COMMENT),
        ("$name_1", K.IDENTIFIER),
        ("ünïcode", K.IDENTIFIER),
        ("null", K.KEYWORD),
    ],
)
def test_single_token_kinds(lexeme, kind):
    toks = tokenize(lexeme)
    assert [(t.kind, t.lexeme) for t in toks[:-1]] == [(kind, lexeme)]


def test_operators_use_longest_match():
    ops = [t.lexeme for t in tokenize("a >>>= b >> c -> d :: e ... f") if t.kind in (K.OPERATOR, K.PUNCTUATION)]
    assert ops == [">>>=", ">>", "->", "::", "..."]


def test_text_block():
    src = 'String s = """\n  hello "quoted"\n  """;'
    toks = tokenize(src)
    strings = [t for t in toks if t.kind is K.STRING]
    assert len(strings) == 1
    assert strings[0].lexeme.startswith('"""') and strings[0].lexeme.endswith('"""')


def test_positions_track_newlines():
    toks = tokenize("a\n  b /* x\ny */ c")
    sig = {t.lexeme: (t.line, t.column) for t in toks if t.kind is K.IDENTIFIER}
    assert sig == {"a": (1, 1), "b": (2, 3), "c": (3, 6)}


def test_invalid_utf8_is_lex_error():
    with pytest.raises(LexError) as exc:
        decode_source(b"class A {}\n\xff")
    assert exc.value.line == 2


@pytest.mark.parametrize("src", ["int x;", "", "class A {\r\n  void f() {}\r\n}\r\n"])
def test_reconstruct_examples(src):
    assert reconstruct_source(tokenize(src)) == src


@pytest.mark.parametrize("path", fixture_sources(), ids=lambda p: p.name)
def test_round_trip_fixture_files(path):
    text = path.read_text(encoding="utf-8")
    assert reconstruct_source(tokenize(text)) == text


def _check_positions(src, toks):
    line, col = 1, 1
    for t in toks:
        assert (t.line, t.column) == (line, col)
        nl = t.lexeme.count("\n")
        if nl:
            line += nl
            col = len(t.lexeme) - t.lexeme.rfind("\n")
        else:
            col += len(t.lexeme)


java_chars = st.lists(
    st.sampled_from(list("abcxyz019_$ \t\n{}()[];,.<>=+-*/%!&|^~?:@'\"\\#") + ["/*", "*/", "//", "0x", "1.5e3", "class", "int"]),
    max_size=60,
).map("".join)


@given(java_chars)
def test_round_trip_or_lex_error(src):
    try:
        toks = tokenize(src)
    except LexError as exc:
        assert exc.line >= 1 and exc.column >= 1
        return
    assert reconstruct_source(toks) == src
    assert toks[-1].kind is K.EOF
    _check_positions(src, toks)


@given(st.text(max_size=60))
def test_arbitrary_text_never_crashes(src):
    try:
        toks = tokenize(src)
    except LexError:
        return
    assert reconstruct_source(toks) == src
