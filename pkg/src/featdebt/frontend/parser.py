"""Recursive-descent parser for the supported Java subset.

Supported: package/import declarations; class/interface/enum declarations;
fields; methods/constructors with modifiers; if/else, for, while, do,
switch/case, try/catch/finally, return, local declarations and expression
statements; expressions with invocations, field accesses, instantiations,
casts, unary/binary/ternary operators. Generics are parsed but type
arguments are discarded.

Anything else (annotations, lambdas, method references, inner-class and
anonymous-class bodies, initializer blocks, ...) is skipped to a safe
point and counted in ``parse_gaps``; parsing never aborts a file. The one
hard error is a top-level brace imbalance.
"""

from __future__ import annotations

from featdebt.errors import ParseError
from featdebt.frontend.syntax import (
    CompilationUnit,
    FieldAccess,
    Invocation,
    RawField,
    RawMethod,
    RawType,
    Stmt,
)
from featdebt.frontend.tokens import Token, code_line_set, tokenize

MODIFIERS = frozenset(
    """public protected private static final abstract synchronized native
    strictfp transient volatile default""".split()
)

PRIMITIVES = frozenset(
    "boolean byte char short int long float double void".split()
)

VISIBILITY_MODIFIERS = frozenset({"public", "protected", "private"})

ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="}
)

_MAX_DEPTH = 300

_EOF = Token("eof", "<eof>", 0)


class _Unsupported(Exception):
    """Internal signal: current construct is outside the subset."""


class _Parser:
    def __init__(self, tokens: list[Token], path: str):
        self.toks = tokens
        self.pos = 0
        self.path = path
        self.gaps = 0
        self.depth = 0

    # -- token stream helpers ---------------------------------------------

    def peek(self, offset: int = 0) -> Token:
        i = self.pos + offset
        return self.toks[i] if i < len(self.toks) else _EOF

    def at(self, text: str) -> bool:
        return self.peek().text == text

    def advance(self) -> Token:
        tok = self.peek()
        if self.pos < len(self.toks):
            self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text:
            raise _Unsupported(f"expected {text!r}, found {tok.text!r}")
        return self.advance()

    def _enter(self):
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError("nesting too deep", self.path)

    def _leave(self):
        self.depth -= 1

    # -- recovery -----------------------------------------------------------

    def skip_balanced(self, open_text: str, close_text: str) -> None:
        """Consume from the opening token through its matching close."""
        depth = 0
        while True:
            tok = self.advance()
            if tok is _EOF:
                raise ParseError(
                    f"unbalanced {open_text!r} while recovering", self.path
                )
            if tok.text == open_text:
                depth += 1
            elif tok.text == close_text:
                depth -= 1
                if depth == 0:
                    return

    def skip_statement(self) -> None:
        """Abandon the current statement: consume through the next ';' at
        bracket depth 0, or stop before the '}' closing the enclosing block.
        Nested braces (lambda bodies, anonymous classes) are consumed whole;
        stray closers left over from the abandoned expression are consumed
        too, since recovery may start mid-expression."""
        depth = 0
        while True:
            tok = self.peek()
            if tok is _EOF:
                return
            if tok.text in "([":
                depth += 1
            elif tok.text in ")]":
                depth = max(0, depth - 1)
            elif tok.text == "{":
                self.skip_balanced("{", "}")
                if depth == 0:
                    if self.at(";"):
                        self.advance()
                        return
                    # Inside an expression the brace body is an argument;
                    # otherwise it terminated the construct.
                    if self.peek().text not in (")", "]", ","):
                        return
                continue
            elif tok.text == "}":
                return
            elif tok.text == ";" and depth == 0:
                self.advance()
                return
            self.advance()

    def gap(self) -> None:
        self.gaps += 1

    # -- names and types ------------------------------------------------------

    def skip_type_args(self) -> None:
        """Skip a balanced ``<...>`` run; type arguments are discarded."""
        depth = 0
        while True:
            tok = self.peek()
            if tok is _EOF:
                raise _Unsupported("unbalanced type arguments")
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
            elif tok.text == ">>":
                depth -= 2
            elif tok.text == ">>>":
                depth -= 3
            elif tok.text in ";{}" or depth > 40:
                raise _Unsupported("unbalanced type arguments")
            self.advance()
            if depth <= 0:
                return

    def looks_like_type_start(self) -> bool:
        tok = self.peek()
        return tok.text in PRIMITIVES or tok.kind == "identifier"

    def parse_type_name(self) -> str:
        """Consume a type: primitive or dotted name, generics and array
        brackets discarded. Returns the base dotted name."""
        tok = self.peek()
        if tok.text in PRIMITIVES:
            name = self.advance().text
        elif tok.kind == "identifier":
            parts = [self.advance().text]
            while self.at(".") and self.peek(1).kind == "identifier":
                self.advance()
                parts.append(self.advance().text)
            name = ".".join(parts)
        else:
            raise _Unsupported(f"expected type name, found {tok.text!r}")
        if self.at("<"):
            self.skip_type_args()
        while self.at("[") and self.peek(1).text == "]":
            self.advance()
            self.advance()
        return name

    def _scan_type_end(self, i: int) -> int:
        """Return the token index just past a type starting at ``i``,
        or -1 when the tokens cannot begin a type. Pure lookahead."""
        if i >= len(self.toks):
            return -1
        tok = self.toks[i]
        if tok.text in PRIMITIVES:
            i += 1
        elif tok.kind == "identifier":
            i += 1
            while (
                i + 1 < len(self.toks)
                and self.toks[i].text == "."
                and self.toks[i + 1].kind == "identifier"
            ):
                i += 2
        else:
            return -1
        if i < len(self.toks) and self.toks[i].text == "<":
            depth = 0
            while i < len(self.toks):
                t = self.toks[i].text
                if t == "<":
                    depth += 1
                elif t == ">":
                    depth -= 1
                elif t == ">>":
                    depth -= 2
                elif t == ">>>":
                    depth -= 3
                elif t in ";{}()":
                    return -1
                i += 1
                if depth <= 0:
                    break
            else:
                return -1
        while (
            i + 1 < len(self.toks)
            and self.toks[i].text == "["
            and self.toks[i + 1].text == "]"
        ):
            i += 2
        return i

    def looks_like_local_decl(self) -> bool:
        """True when the statement ahead reads ``Type name (= | ; | ,)``."""
        if self.at("final"):
            return True
        end = self._scan_type_end(self.pos)
        if end < 0 or end >= len(self.toks):
            return False
        if self.toks[end].kind != "identifier":
            return False
        if end + 1 >= len(self.toks):
            return False
        nxt = self.toks[end + 1].text
        return nxt in {"=", ";", ",", "["}

    # -- compilation unit ---------------------------------------------------

    def parse_unit(self) -> CompilationUnit:
        package = ""
        single_imports: list[str] = []
        ondemand_imports: list[str] = []
        types: list[RawType] = []

        if self.at("package"):
            self.advance()
            parts = [self.expect_identifier()]
            while self.at("."):
                self.advance()
                parts.append(self.expect_identifier())
            self.expect(";")
            package = ".".join(parts)

        while self.at("import"):
            self.advance()
            if self.at("static"):
                self.advance()
            parts = [self.expect_identifier()]
            star = False
            while self.at("."):
                self.advance()
                if self.at("*"):
                    self.advance()
                    star = True
                    break
                parts.append(self.expect_identifier())
            self.expect(";")
            if star:
                ondemand_imports.append(".".join(parts))
            else:
                single_imports.append(".".join(parts))

        while self.peek() is not _EOF:
            before = self.pos
            decl = self.parse_type_decl_or_gap()
            if decl is not None:
                types.append(decl)
            if self.pos == before:  # safety: never loop in place
                self.advance()
                self.gap()

        return CompilationUnit(
            path=self.path,
            package=package,
            single_imports=single_imports,
            ondemand_imports=ondemand_imports,
            types=types,
            parse_gaps=self.gaps,
            code_lines=code_line_set(self.toks),
        )

    def expect_identifier(self) -> str:
        tok = self.peek()
        if tok.kind != "identifier":
            raise _Unsupported(f"expected identifier, found {tok.text!r}")
        return self.advance().text

    def skip_annotation(self) -> None:
        """Consume ``@Name`` or ``@pkg.Name(...)``; counts as one gap."""
        self.expect("@")
        if self.peek().kind == "identifier":
            self.advance()
            while self.at(".") and self.peek(1).kind == "identifier":
                self.advance()
                self.advance()
            if self.at("("):
                self.skip_balanced("(", ")")
        self.gap()

    def parse_type_decl_or_gap(self):
        try:
            return self.parse_type_decl()
        except _Unsupported:
            self.gap()
            self.skip_statement()
            return None

    def parse_type_decl(self) -> RawType | None:
        while self.at("@"):
            if self.peek(1).text == "interface":  # annotation type decl
                self.advance()
                self.advance()
                if self.peek().kind == "identifier":
                    self.advance()
                while not self.at("{") and self.peek() is not _EOF:
                    self.advance()
                if self.at("{"):
                    self.skip_balanced("{", "}")
                self.gap()
                return None
            self.skip_annotation()
        while self.peek().text in MODIFIERS:
            self.advance()
        tok = self.peek()
        if tok.text not in ("class", "interface", "enum"):
            if tok.text == ";":
                self.advance()
                return None
            raise _Unsupported(f"expected type declaration, found {tok.text!r}")
        kind = self.advance().text
        name = self.expect_identifier()
        start_line = tok.line
        if self.at("<"):
            self.skip_type_args()
        supertypes: list[str] = []
        if self.at("extends"):
            self.advance()
            supertypes.append(self.parse_type_name())
            while self.at(","):
                self.advance()
                supertypes.append(self.parse_type_name())
        if self.at("implements"):
            self.advance()
            supertypes.append(self.parse_type_name())
            while self.at(","):
                self.advance()
                supertypes.append(self.parse_type_name())
        self.expect("{")
        if kind == "enum":
            fields, methods = self.parse_enum_body(name)
        else:
            fields, methods = self.parse_class_body(name)
        end_line = self.peek(-1).line if self.pos > 0 else start_line
        return RawType(
            name=name,
            kind=kind,
            supertype_names=supertypes,
            fields=fields,
            methods=methods,
            start_line=start_line,
            end_line=end_line,
        )

    # -- type bodies ----------------------------------------------------------

    def parse_enum_body(self, type_name: str):
        fields: list[RawField] = []
        methods: list[RawMethod] = []
        # Constant list first; each constant becomes a public field of the
        # enum's own type (so static accesses like Status.OPEN resolve).
        while self.peek().kind == "identifier":
            line = self.peek().line
            const = self.advance().text
            fields.append(
                RawField(name=const, type_name=type_name, visibility="public", line=line)
            )
            if self.at("("):
                self.skip_balanced("(", ")")
            if self.at("{"):
                self.skip_balanced("{", "}")
                self.gap()
            if self.at(","):
                self.advance()
                continue
            break
        if self.at(";"):
            self.advance()
            f2, m2 = self.parse_class_body(type_name)
            fields.extend(f2)
            methods.extend(m2)
            return fields, methods
        self.expect("}")
        return fields, methods

    def parse_class_body(self, type_name: str):
        fields: list[RawField] = []
        methods: list[RawMethod] = []
        while True:
            tok = self.peek()
            if tok is _EOF:
                raise ParseError("unexpected end of file in type body", self.path)
            if tok.text == "}":
                self.advance()
                return fields, methods
            before = self.pos
            try:
                self.parse_member(type_name, fields, methods)
            except _Unsupported:
                self.gap()
                self.skip_statement()
            if self.pos == before:
                self.advance()
                self.gap()

    def parse_member(self, type_name, fields, methods) -> None:
        while self.at("@"):
            self.skip_annotation()
        modifiers: list[str] = []
        while self.peek().text in MODIFIERS:
            modifiers.append(self.advance().text)
        tok = self.peek()
        if tok.text == ";":
            self.advance()
            return
        if tok.text == "{":  # instance/static initializer block
            self.skip_balanced("{", "}")
            self.gap()
            return
        if tok.text in ("class", "interface", "enum"):  # nested type
            while not self.at("{") and self.peek() is not _EOF:
                self.advance()
            if self.at("{"):
                self.skip_balanced("{", "}")
            self.gap()
            return
        if tok.text == "<":  # generic method type parameters
            self.skip_type_args()

        visibility = "package"
        for m in modifiers:
            if m in VISIBILITY_MODIFIERS:
                visibility = m

        # Constructor: identifier matching the type name, then '('.
        if (
            self.peek().kind == "identifier"
            and self.peek().text == type_name
            and self.peek(1).text == "("
        ):
            name_tok = self.advance()
            methods.append(
                self.parse_method_rest(
                    name_tok.text, "", visibility, name_tok.line, is_constructor=True
                )
            )
            return

        return_type = self.parse_type_name()
        name_tok = self.peek()
        name = self.expect_identifier()
        if self.at("("):
            methods.append(
                self.parse_method_rest(
                    name, return_type, visibility, name_tok.line, is_constructor=False
                )
            )
            return

        # Field declarators.
        while True:
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                self.advance()
            fields.append(
                RawField(
                    name=name,
                    type_name=return_type,
                    visibility=visibility,
                    line=name_tok.line,
                )
            )
            if self.at("="):
                self.advance()
                if self.at("{"):
                    self.skip_balanced("{", "}")
                else:
                    scratch = Stmt(kind="expr-stmt", line=self.peek().line)
                    self.parse_expression(scratch)  # initializer events dropped
            if self.at(","):
                self.advance()
                name_tok = self.peek()
                name = self.expect_identifier()
                continue
            self.expect(";")
            return

    def parse_method_rest(
        self, name, return_type, visibility, start_line, is_constructor
    ) -> RawMethod:
        self.expect("(")
        params: list[tuple[str, str]] = []
        if not self.at(")"):
            while True:
                while self.at("@"):
                    self.skip_annotation()
                if self.at("final"):
                    self.advance()
                ptype = self.parse_type_name()
                # varargs: three '.' punctuation tokens
                if self.at(".") and self.peek(1).text == "." and self.peek(2).text == ".":
                    self.advance()
                    self.advance()
                    self.advance()
                pname = self.expect_identifier()
                while self.at("[") and self.peek(1).text == "]":
                    self.advance()
                    self.advance()
                params.append((pname, ptype))
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")
        if self.at("throws"):
            self.advance()
            self.parse_type_name()
            while self.at(","):
                self.advance()
                self.parse_type_name()
        if self.at(";"):
            end = self.advance().line
            body = None
        elif self.at("{"):
            body = self.parse_block()
            end = self.peek(-1).line
        else:
            raise _Unsupported(f"expected method body, found {self.peek().text!r}")
        return RawMethod(
            name=name,
            visibility=visibility,
            params=params,
            return_type=return_type,
            body=body,
            is_constructor=is_constructor,
            start_line=start_line,
            end_line=end,
        )

    # -- statements -----------------------------------------------------------

    def parse_block(self) -> Stmt:
        self._enter()
        try:
            open_tok = self.expect("{")
            node = Stmt(kind="block", line=open_tok.line)
            while True:
                tok = self.peek()
                if tok is _EOF:
                    raise ParseError("unexpected end of file in block", self.path)
                if tok.text == "}":
                    self.advance()
                    return node
                before = self.pos
                try:
                    node.children.append(self.parse_statement())
                except _Unsupported:
                    self.gap()
                    self.skip_statement()
                if self.pos == before:
                    self.advance()
                    self.gap()
        finally:
            self._leave()

    def parse_statement(self) -> Stmt:
        self._enter()
        try:
            return self._parse_statement_inner()
        finally:
            self._leave()

    def _parse_statement_inner(self) -> Stmt:
        tok = self.peek()
        text = tok.text

        if text == "{":
            return self.parse_block()

        if text == "if":
            self.advance()
            node = Stmt(kind="if", line=tok.line)
            self.expect("(")
            self.parse_expression(node)
            self.expect(")")
            node.children.append(self.parse_statement())
            if self.at("else"):
                else_tok = self.advance()
                arm = Stmt(kind="else-arm", line=else_tok.line)
                arm.children.append(self.parse_statement())
                node.children.append(arm)
            return node

        if text == "while":
            self.advance()
            node = Stmt(kind="while", line=tok.line)
            self.expect("(")
            self.parse_expression(node)
            self.expect(")")
            node.children.append(self.parse_statement())
            return node

        if text == "do":
            self.advance()
            node = Stmt(kind="do", line=tok.line)
            node.children.append(self.parse_statement())
            self.expect("while")
            self.expect("(")
            self.parse_expression(node)
            self.expect(")")
            self.expect(";")
            return node

        if text == "for":
            self.advance()
            node = Stmt(kind="for", line=tok.line)
            self.expect("(")
            # Enhanced for: Type name : expr
            end = self._scan_type_end(self.pos)
            enhanced = (
                end > 0
                and end + 1 < len(self.toks)
                and self.toks[end].kind == "identifier"
                and self.toks[end + 1].text == ":"
            )
            if enhanced:
                vtype = self.parse_type_name()
                vname = self.expect_identifier()
                node.locals.append((vname, vtype))
                self.expect(":")
                self.parse_expression(node)
            else:
                if not self.at(";"):
                    if self.looks_like_local_decl():
                        init = self.parse_local_decl(consume_semi=False)
                        node.locals.extend(init.locals)
                        self._merge_events(node, init)
                    else:
                        self.parse_expression(node)
                        while self.at(","):
                            self.advance()
                            self.parse_expression(node)
                self.expect(";")
                if not self.at(";"):
                    self.parse_expression(node)
                self.expect(";")
                if not self.at(")"):
                    self.parse_expression(node)
                    while self.at(","):
                        self.advance()
                        self.parse_expression(node)
            self.expect(")")
            node.children.append(self.parse_statement())
            return node

        if text == "switch":
            self.advance()
            node = Stmt(kind="switch", line=tok.line)
            self.expect("(")
            self.parse_expression(node)
            self.expect(")")
            self.expect("{")
            arm: Stmt | None = None
            while True:
                t = self.peek()
                if t is _EOF:
                    raise ParseError("unexpected end of file in switch", self.path)
                if t.text == "}":
                    self.advance()
                    return node
                if t.text == "case":
                    self.advance()
                    arm = Stmt(kind="case-arm", line=t.line)
                    self.parse_or_expression(arm)
                    if self.at("->"):
                        raise _Unsupported("switch arrow arm")
                    self.expect(":")
                    node.children.append(arm)
                    continue
                if t.text == "default":
                    self.advance()
                    arm = Stmt(kind="else-arm", line=t.line)
                    if self.at("->"):
                        raise _Unsupported("switch arrow arm")
                    self.expect(":")
                    node.children.append(arm)
                    continue
                if arm is None:
                    raise _Unsupported("statement before first switch label")
                before = self.pos
                try:
                    arm.children.append(self.parse_statement())
                except _Unsupported:
                    self.gap()
                    self.skip_statement()
                if self.pos == before:
                    self.advance()
                    self.gap()

        if text == "try":
            self.advance()
            node = Stmt(kind="try", line=tok.line)
            if self.at("("):  # try-with-resources: outside the subset
                self.skip_balanced("(", ")")
                self.gap()
            node.children.append(self.parse_block())
            while self.at("catch"):
                catch_tok = self.advance()
                arm = Stmt(kind="catch", line=catch_tok.line)
                self.expect("(")
                ctype = self.parse_type_name()
                while self.at("|"):  # multi-catch
                    self.advance()
                    self.parse_type_name()
                cname = self.expect_identifier()
                arm.locals.append((cname, ctype))
                self.expect(")")
                arm.children.append(self.parse_block())
                node.children.append(arm)
            if self.at("finally"):
                self.advance()
                node.children.append(self.parse_block())
            return node

        if text == "return":
            self.advance()
            node = Stmt(kind="return", line=tok.line)
            if not self.at(";"):
                self.parse_expression(node)
            self.expect(";")
            return node

        if text in ("break", "continue"):
            self.advance()
            node = Stmt(kind="expr-stmt", line=tok.line)
            if self.peek().kind == "identifier":  # label
                self.advance()
            self.expect(";")
            return node

        if text == "throw":
            self.advance()
            node = Stmt(kind="expr-stmt", line=tok.line)
            self.parse_expression(node)
            self.expect(";")
            return node

        if text == ";":
            self.advance()
            return Stmt(kind="expr-stmt", line=tok.line)

        if text in ("synchronized", "assert"):
            raise _Unsupported(f"{text} statement")

        if self.looks_like_local_decl():
            return self.parse_local_decl(consume_semi=True)

        node = Stmt(kind="expr-stmt", line=tok.line)
        self.parse_expression(node)
        self.expect(";")
        return node

    def parse_local_decl(self, consume_semi: bool) -> Stmt:
        tok = self.peek()
        node = Stmt(kind="local-decl", line=tok.line)
        if self.at("final"):
            self.advance()
        vtype = self.parse_type_name()
        while True:
            name = self.expect_identifier()
            while self.at("[") and self.peek(1).text == "]":
                self.advance()
                self.advance()
            node.locals.append((name, vtype))
            if self.at("="):
                self.advance()
                if self.at("{"):
                    self.skip_balanced("{", "}")
                else:
                    self.parse_expression(node)
            if self.at(","):
                self.advance()
                continue
            break
        if consume_semi:
            self.expect(";")
        return node

    @staticmethod
    def _merge_events(dst: Stmt, src: Stmt) -> None:
        dst.invocations.extend(src.invocations)
        dst.field_accesses.extend(src.field_accesses)
        dst.instantiations.extend(src.instantiations)
        dst.name_uses.extend(src.name_uses)
        dst.bool_ops += src.bool_ops
        dst.ternaries += src.ternaries

    # -- expressions ------------------------------------------------------
    # Events are recorded onto the statement node passed down; no
    # expression tree is materialized.

    def parse_expression(self, node: Stmt) -> None:
        self._enter()
        try:
            self.parse_ternary(node)
            if self.peek().text in ASSIGN_OPS:
                self.advance()
                self.parse_expression(node)
        finally:
            self._leave()

    def parse_ternary(self, node: Stmt) -> None:
        self.parse_or_expression(node)
        if self.at("?"):
            self.advance()
            node.ternaries += 1
            self.parse_expression(node)
            self.expect(":")
            self.parse_ternary(node)

    def parse_or_expression(self, node: Stmt) -> None:
        self.parse_and_expression(node)
        while self.at("||"):
            self.advance()
            node.bool_ops += 1
            self.parse_and_expression(node)

    def parse_and_expression(self, node: Stmt) -> None:
        self.parse_binary(node, 0)
        while self.at("&&"):
            self.advance()
            node.bool_ops += 1
            self.parse_binary(node, 0)

    _BINARY_LEVELS = [
        {"|"},
        {"^"},
        {"&"},
        {"==", "!="},
        {"<", ">", "<=", ">=", "instanceof"},
        {"<<", ">>", ">>>"},
        {"+", "-"},
        {"*", "/", "%"},
    ]

    def parse_binary(self, node: Stmt, level: int) -> None:
        if level >= len(self._BINARY_LEVELS):
            self.parse_unary(node)
            return
        ops = self._BINARY_LEVELS[level]
        self.parse_binary(node, level + 1)
        while self.peek().text in ops:
            op = self.advance()
            if op.text == "instanceof":
                self.parse_type_name()
                continue
            self.parse_binary(node, level + 1)

    def parse_unary(self, node: Stmt) -> None:
        self._enter()
        try:
            tok = self.peek()
            if tok.text in ("!", "~", "+", "-", "++", "--"):
                self.advance()
                self.parse_unary(node)
                return
            if tok.text == "(" and self._looks_like_cast():
                self.advance()
                self.parse_type_name()
                self.expect(")")
                self.parse_unary(node)
                return
            self.parse_postfix(node)
        finally:
            self._leave()

    def _looks_like_cast(self) -> bool:
        """``( Type )`` followed by something a cast can apply to."""
        end = self._scan_type_end(self.pos + 1)
        if end < 0 or end >= len(self.toks) or self.toks[end].text != ")":
            return False
        if end + 1 >= len(self.toks):
            return False
        nxt = self.toks[end + 1]
        if nxt.kind in ("identifier", "literal"):
            return True
        return nxt.text in ("(", "this", "new", "super", "!", "~")

    def parse_arguments(self, node: Stmt) -> None:
        self.expect("(")
        if not self.at(")"):
            while True:
                self.parse_expression(node)
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")

    def parse_postfix(self, node: Stmt) -> None:
        tok = self.peek()

        if tok.text in ("->", "::"):
            raise _Unsupported("lambda or method reference")

        if tok.kind == "literal":
            self.advance()
            self._parse_chain(node, receiver="<expr>")
            return

        if tok.text == "(":
            self.advance()
            self.parse_expression(node)
            self.expect(")")
            self._parse_chain(node, receiver="<expr>")
            return

        if tok.text == "new":
            self.advance()
            new_type = self.parse_type_name()
            node.instantiations.append(new_type)
            if self.at("("):
                self.parse_arguments(node)
                if self.at("{"):  # anonymous class body
                    self.skip_balanced("{", "}")
                    raise _Unsupported("anonymous class body")
            else:
                while self.at("["):
                    self.advance()
                    if not self.at("]"):
                        self.parse_expression(node)
                    self.expect("]")
                if self.at("{"):
                    self.skip_balanced("{", "}")
            self._parse_chain(node, receiver="<expr>")
            return

        if tok.text in ("this", "super"):
            base = self.advance().text
            if self.at("("):  # constructor chaining
                self.parse_arguments(node)
                return
            self._parse_chain(node, receiver=base, pending_name=None)
            return

        if tok.kind == "identifier":
            name = self.advance().text
            if self.at("("):
                inv = Invocation(receiver=None, name=name, line=tok.line)
                node.invocations.append(inv)
                self.parse_arguments(node)
                self._parse_chain(node, receiver="<expr>")
                return
            if self.at("->") or self.at("::"):
                raise _Unsupported("lambda or method reference")
            if self.at(".") or self.at("["):
                self._parse_chain(node, receiver=name, first_use=tok)
                return
            node.name_uses.append(name)
            if self.peek().text in ("++", "--"):
                self.advance()
            return

        if tok.text in PRIMITIVES:  # e.g. int.class — outside the subset
            raise _Unsupported("primitive in expression position")

        raise _Unsupported(f"unexpected token {tok.text!r} in expression")

    def _parse_chain(self, node: Stmt, receiver, pending_name=None, first_use=None):
        """Continue a postfix chain of ``.name``, calls and indexing.

        ``receiver`` is the attributable receiver for the *next* selector:
        a simple identifier, "this"/"super", or "<expr>" once the chain has
        gone through a call/indexing/literal. ``first_use``: token of a
        leading identifier that becomes a plain name use if the chain turns
        out to index it (``a[i]``) rather than select from it.
        """
        current = receiver
        while True:
            if self.at("."):
                self.advance()
                if self.at("new") or self.at("<"):
                    raise _Unsupported("qualified new / explicit type args")
                if self.peek().text == "class":
                    self.advance()
                    current = "<expr>"
                    continue
                sel_tok = self.peek()
                sel = self.expect_identifier()
                if self.at("("):
                    node.invocations.append(
                        Invocation(receiver=current, name=sel, line=sel_tok.line)
                    )
                    self.parse_arguments(node)
                    current = "<expr>"
                else:
                    node.field_accesses.append(
                        FieldAccess(receiver=current, name=sel, line=sel_tok.line)
                    )
                    current = "<expr>"
                first_use = None
                continue
            if self.at("["):
                if first_use is not None:
                    node.name_uses.append(first_use.text)
                    first_use = None
                self.advance()
                self.parse_expression(node)
                self.expect("]")
                current = "<expr>"
                continue
            if self.peek().text in ("++", "--"):
                if first_use is not None:
                    node.name_uses.append(first_use.text)
                    first_use = None
                self.advance()
                current = "<expr>"
                continue
            if self.at("->") or self.at("::"):
                raise _Unsupported("lambda or method reference")
            return


def parse_unit(source: str, path: str) -> CompilationUnit:
    """Tokenize and parse one file. Raises LexError on lexical failures and
    ParseError on a top-level brace imbalance; everything else recovers."""
    tokens = tokenize(source)
    opens = sum(1 for t in tokens if t.text == "{")
    closes = sum(1 for t in tokens if t.text == "}")
    if opens != closes:
        raise ParseError(
            f"top-level brace imbalance ({opens} '{{' vs {closes} '}}')", path
        )
    return _Parser(tokens, path).parse_unit()
