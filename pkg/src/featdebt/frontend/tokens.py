"""Java tokenizer.

Whitespace and comments are consumed; comment line spans are retained so
LOC can exclude comment-only lines. ``true``/``false``/``null`` are
classified as literals, reserved words as keywords, everything else as
identifier/operator/punctuation.
"""

from __future__ import annotations

from dataclasses import dataclass

from featdebt.errors import LexError

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while""".split()
)

LITERAL_WORDS = frozenset({"true", "false", "null"})

PUNCTUATION = frozenset("(){}[];,.@")

# Longest-match operator table.
OPERATORS = sorted(
    [
        ">>>=", ">>>", ">>=", "<<=", ">>", "<<", "->", "::",
        "==", "!=", "<=", ">=", "&&", "||", "++", "--",
        "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
        "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|", "^", "?", ":",
    ],
    key=len,
    reverse=True,
)


@dataclass
class Token:
    kind: str  # keyword | identifier | literal | operator | punctuation
    text: str
    line: int

    def __repr__(self) -> str:
        return f"Token({self.kind}, {self.text!r}, line={self.line})"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def tokenize(source: str) -> list[Token]:
    """Tokenize Java source; raises LexError with a line number on
    unterminated strings, chars or block comments."""
    tokens: list[Token] = []
    i = 0
    line = 1
    n = len(source)

    while i < n:
        ch = source[i]

        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            continue

        # Line comment.
        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            continue

        # Block comment (may span lines).
        if ch == "/" and i + 1 < n and source[i + 1] == "*":
            start_line = line
            i += 2
            while True:
                if i + 1 >= n:
                    raise LexError("unterminated block comment", start_line)
                if source[i] == "\n":
                    line += 1
                    i += 1
                elif source[i] == "*" and source[i + 1] == "/":
                    i += 2
                    break
                else:
                    i += 1
            continue

        # String literal.
        if ch == '"':
            start_line = line
            j = i + 1
            while True:
                if j >= n or source[j] == "\n":
                    raise LexError("unterminated string literal", start_line)
                if source[j] == "\\":
                    j += 2
                    continue
                if source[j] == '"':
                    break
                j += 1
            tokens.append(Token("literal", source[i : j + 1], line))
            i = j + 1
            continue

        # Char literal.
        if ch == "'":
            start_line = line
            j = i + 1
            while True:
                if j >= n or source[j] == "\n":
                    raise LexError("unterminated char literal", start_line)
                if source[j] == "\\":
                    j += 2
                    continue
                if source[j] == "'":
                    break
                j += 1
            tokens.append(Token("literal", source[i : j + 1], line))
            i = j + 1
            continue

        # Number literal (also leading-dot floats like .5).
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            j = i
            if ch == "0" and i + 1 < n and source[i + 1] in "xXbB":
                j = i + 2
                while j < n and (source[j].isalnum() or source[j] == "_"):
                    j += 1
            else:
                seen_dot = False
                while j < n:
                    c = source[j]
                    if c.isdigit() or c == "_":
                        j += 1
                    elif c == "." and not seen_dot and j + 1 < n and source[j + 1].isdigit():
                        seen_dot = True
                        j += 1
                    elif c in "eE" and j + 1 < n and (
                        source[j + 1].isdigit() or source[j + 1] in "+-"
                    ):
                        j += 2
                    elif c in "fFdDlL":
                        j += 1
                        break
                    else:
                        break
            tokens.append(Token("literal", source[i:j], line))
            i = j
            continue

        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_part(source[j]):
                j += 1
            word = source[i:j]
            if word in KEYWORDS:
                kind = "keyword"
            elif word in LITERAL_WORDS:
                kind = "literal"
            else:
                kind = "identifier"
            tokens.append(Token(kind, word, line))
            i = j
            continue

        if ch in PUNCTUATION:
            tokens.append(Token("punctuation", ch, line))
            i += 1
            continue

        for op in OPERATORS:
            if source.startswith(op, i):
                tokens.append(Token("operator", op, line))
                i += len(op)
                break
        else:
            raise LexError(f"illegal character {ch!r}", line)

    return tokens


def code_line_set(tokens: list[Token]) -> frozenset[int]:
    """Lines carrying at least one token: the physical-LOC line set."""
    return frozenset(t.line for t in tokens)
