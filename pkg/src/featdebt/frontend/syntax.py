"""Unresolved syntax carriers produced by the parser.

A method body is a tree of ``Stmt`` nodes. Expressions are not kept as
trees; instead each statement records the events the analyses need:
invocations, field accesses, instantiations, bare identifier uses, and
decision-point counts (``&&``/``||``/ternary). Receivers are raw source
text: ``None`` for bare calls, ``"this"``, a simple identifier, or the
``"<expr>"`` sentinel when the receiver is itself a compound expression
(such receivers are never attributed to a type).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

# Statement node kinds. ``break``/``continue``/``throw`` are carried as
# expr-stmt nodes: they add no decision points and no nesting.
STMT_KINDS = frozenset(
    {
        "block",
        "if",
        "else-arm",
        "for",
        "while",
        "do",
        "switch",
        "case-arm",
        "try",
        "catch",
        "return",
        "local-decl",
        "expr-stmt",
    }
)

# Kinds that add a nesting level for MAXNESTING. Arms (else/case/catch)
# belong to their parent construct and do not nest by themselves.
NESTING_KINDS = frozenset({"if", "for", "while", "do", "switch", "try"})

# Kinds that contribute a decision point to CYCLO (plus ternary/&&/||
# which are counted on the expression events, and catch arms).
DECISION_KINDS = frozenset({"if", "for", "while", "do", "case-arm", "catch"})


@dataclass
class Invocation:
    receiver: Optional[str]  # None = bare call on the enclosing instance
    name: str
    line: int


@dataclass
class FieldAccess:
    receiver: Optional[str]
    name: str
    line: int


@dataclass
class Stmt:
    """One statement-tree node; always acyclic, always line-stamped."""

    kind: str
    line: int
    children: list["Stmt"] = field(default_factory=list)
    invocations: list[Invocation] = field(default_factory=list)
    field_accesses: list[FieldAccess] = field(default_factory=list)
    instantiations: list[str] = field(default_factory=list)
    name_uses: list[str] = field(default_factory=list)
    # (name, type_name) pairs for local-decl nodes.
    locals: list[tuple[str, str]] = field(default_factory=list)
    bool_ops: int = 0  # && and || occurrences in this node's expressions
    ternaries: int = 0

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()


@dataclass
class RawField:
    name: str
    type_name: str
    visibility: str
    line: int


@dataclass
class RawMethod:
    name: str
    visibility: str
    params: list[tuple[str, str]]  # (name, type_name)
    return_type: str
    body: Optional[Stmt]  # None for abstract/interface methods
    is_constructor: bool
    start_line: int
    end_line: int

    @property
    def signature(self) -> str:
        return "%s(%s)" % (self.name, ",".join(t for _, t in self.params))


@dataclass
class RawType:
    name: str  # simple name
    kind: str  # class | interface | enum
    supertype_names: list[str]
    fields: list[RawField]
    methods: list[RawMethod]
    start_line: int
    end_line: int


@dataclass
class CompilationUnit:
    """Parsed but unresolved view of one source file."""

    path: str
    package: str
    single_imports: list[str]  # dotted names, e.g. "fx.Turma"
    ondemand_imports: list[str]  # package prefixes, e.g. "fx"
    types: list[RawType]
    parse_gaps: int
    code_lines: frozenset[int]  # 1-based lines carrying at least one token
