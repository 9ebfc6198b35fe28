"""Tokenizer: kinds, comment handling, hand-counted totals, LOC oracle."""

import json

import pytest
from hypothesis import given, strategies as st

from conftest import MINI, load_corpus
from featdebt.errors import LexError
from featdebt.frontend.tokens import code_line_set, tokenize


def kinds(tokens):
    return [(t.kind, t.text) for t in tokens]


def test_minimal_class():
    assert kinds(tokenize("class A {}")) == [
        ("keyword", "class"),
        ("identifier", "A"),
        ("punctuation", "{"),
        ("punctuation", "}"),
    ]


def test_line_comment_stripped_with_line_numbers():
    toks = tokenize("// hi\nint x;")
    assert [(t.text, t.line) for t in toks] == [("int", 2), ("x", 2), (";", 2)]


def test_block_comment_spans_lines():
    toks = tokenize("/* a\nb */ int x;")
    assert [t.text for t in toks] == ["int", "x", ";"]
    assert toks[0].line == 2


def test_string_and_char_literals():
    toks = tokenize('String s = "a // not comment"; char c = \'\\n\';')
    texts = [t.text for t in toks if t.kind == "literal"]
    assert texts == ['"a // not comment"', "'\\n'"]


def test_true_false_null_are_literals():
    assert all(t.kind == "literal" for t in tokenize("true false null"))


def test_numbers():
    toks = tokenize("0x1F 12_000 3.14 1e9 2f 7L")
    assert all(t.kind == "literal" for t in toks)
    assert len(toks) == 6


def test_multichar_operators_longest_match():
    toks = tokenize("a >>= b >>> c != d && e")
    ops = [t.text for t in toks if t.kind == "operator"]
    assert ops == [">>=", ">>>", "!=", "&&"]


def test_unterminated_string_raises_with_line():
    with pytest.raises(LexError) as err:
        tokenize('int x;\nString s = "oops;\n')
    assert err.value.line == 2


def test_unterminated_block_comment_raises_with_line():
    with pytest.raises(LexError) as err:
        tokenize("int x;\n/* never closed")
    assert err.value.line == 2


def test_illegal_character():
    with pytest.raises(LexError):
        tokenize("int x = #;")


def test_mini_fixture_hand_counted_totals():
    expected = json.loads((MINI / "expected_tokens.json").read_text())
    sources = load_corpus(MINI)
    for path, text in sources.items():
        toks = tokenize(text)  # zero lexical errors by virtue of not raising
        want = expected[path]
        assert len(toks) == want["tokens"], path
        assert len(code_line_set(toks)) == want["loc"], path


def _textual_loc(source: str) -> int:
    """Independent line-based LOC oracle: strip comments with a character
    state machine, then count lines with any non-whitespace left."""
    out = []
    i, n = 0, len(source)
    state = "code"
    while i < n:
        ch = source[i]
        nxt = source[i + 1] if i + 1 < n else ""
        if state == "code":
            if ch == "/" and nxt == "/":
                state = "line"
                i += 2
                continue
            if ch == "/" and nxt == "*":
                state = "block"
                i += 2
                continue
            if ch == '"':
                state = "str"
            elif ch == "'":
                state = "char"
            out.append(ch)
            i += 1
            continue
        if state == "line":
            if ch == "\n":
                state = "code"
                out.append(ch)
            i += 1
            continue
        if state == "block":
            if ch == "*" and nxt == "/":
                state = "code"
                i += 2
                continue
            if ch == "\n":
                out.append(ch)
            i += 1
            continue
        # string or char literal
        out.append(ch)
        if ch == "\\":
            if nxt:
                out.append(nxt)
            i += 2
            continue
        if state == "str" and ch == '"':
            state = "code"
        elif state == "char" and ch == "'":
            state = "code"
        i += 1
    return sum(1 for line in "".join(out).splitlines() if line.strip())


def test_loc_matches_textual_oracle_on_fixture_corpus():
    for path, text in load_corpus(MINI).items():
        assert len(code_line_set(tokenize(text))) == _textual_loc(text), path


@given(st.integers(1, 30), st.integers(0, 5))
def test_loc_oracle_on_generated_snippets(n_lines, n_comments):
    lines = [f"int v{i} = {i};" for i in range(n_lines)]
    for c in range(n_comments):
        lines.insert(c, "// comment only")
    src = "\n".join(lines)
    assert len(code_line_set(tokenize(src))) == _textual_loc(src) == n_lines


@given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=200))
def test_token_lines_monotonic(text):
    try:
        toks = tokenize(text)
    except LexError:
        return
    lines = [t.line for t in toks]
    assert lines == sorted(lines)
