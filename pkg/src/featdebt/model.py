"""Resolved project-wide code model.

The model is the contract between the Java frontend and every analysis:
files, types, methods, fields, and resolved cross-file references. It is
immutable after construction and safe for concurrent reads.

Design notes:
- References are file-to-file; a file never references itself (dropped).
- LOC counts physical lines that are neither blank nor comment-only.
- Ids are dense integers assigned in sorted-name order so serialized
  output is reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from featdebt.errors import ModelError
from featdebt.frontend.syntax import Stmt

REFERENCE_KINDS = frozenset(
    {
        "import",
        "supertype",
        "field-type",
        "param-type",
        "return-type",
        "invocation",
        "field-access",
        "instantiation",
    }
)


@dataclass(frozen=True, order=True)
class Reference:
    from_file: str
    to_file: str
    kind: str


@dataclass
class FieldRef:
    """One attribute-access occurrence, resolved to its owning class.

    ``owner`` is a qualified project-type name. ``via_accessor`` marks
    accesses derived from get*/set*/is* invocations rather than direct
    field reads/writes.
    """

    owner: str
    name: str
    own: bool
    via_accessor: bool
    line: int


@dataclass
class InvocationRef:
    """One method invocation; ``owner`` resolves the receiver's declared
    type to a project class, or None for external/unattributable calls."""

    receiver: Optional[str]
    name: str
    owner: Optional[str]
    line: int


@dataclass
class FieldEntity:
    id: int
    owner: int  # TypeEntity id
    name: str
    type_name: str
    visibility: str


@dataclass
class MethodEntity:
    id: int
    owner: int  # TypeEntity id
    name: str
    signature: str  # "name(Type1,Type2)"
    visibility: str
    params: list[tuple[str, str]]
    return_type: str
    body: Optional[Stmt]
    accessed_fields: list[FieldRef] = field(default_factory=list)
    invoked: list[InvocationRef] = field(default_factory=list)
    is_constructor: bool = False
    start_line: int = 0
    end_line: int = 0


@dataclass
class TypeEntity:
    id: int
    qualified_name: str
    kind: str  # class | interface | enum
    file: str
    field_ids: list[int] = field(default_factory=list)
    method_ids: list[int] = field(default_factory=list)
    supertype_names: list[str] = field(default_factory=list)
    start_line: int = 0
    end_line: int = 0

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]


@dataclass
class SourceFile:
    path: str
    package: str
    type_ids: list[int] = field(default_factory=list)
    loc: int = 0
    parse_gaps: int = 0
    # 1-based lines carrying code tokens; kept for method/class line counts.
    code_lines: frozenset[int] = frozenset()


class CodeModel:
    """Immutable-by-convention container with deterministic iteration.

    ``files`` is keyed by repo-relative path, ``types`` by qualified name;
    both iterate in sorted-key order. ``references`` is deduplicated per
    (from_file, to_file, kind) and sorted.
    """

    def __init__(
        self,
        files: dict[str, SourceFile],
        types: dict[str, TypeEntity],
        references: list[Reference],
        methods: dict[int, MethodEntity],
        fields: dict[int, FieldEntity],
    ):
        self.files = dict(sorted(files.items()))
        self.types = dict(sorted(types.items()))
        self.references = sorted(set(references))
        self.methods = dict(sorted(methods.items()))
        self.fields = dict(sorted(fields.items()))
        self._types_by_id = {t.id: t for t in self.types.values()}
        self.validate()

    # -- lookups ---------------------------------------------------------

    def entity_lookup(self, qualified_name: str) -> Optional[TypeEntity]:
        """Return the type with that qualified name, or None. Never raises
        on unknown names."""
        return self.types.get(qualified_name)

    def type_by_id(self, type_id: int) -> TypeEntity:
        try:
            return self._types_by_id[type_id]
        except KeyError:
            raise ModelError(f"dangling type id {type_id}") from None

    def methods_of(self, entity: TypeEntity) -> list[MethodEntity]:
        return [self.methods[mid] for mid in entity.method_ids]

    def fields_of(self, entity: TypeEntity) -> list[FieldEntity]:
        return [self.fields[fid] for fid in entity.field_ids]

    def types_in_file(self, path: str) -> list[TypeEntity]:
        return [self.type_by_id(tid) for tid in self.files[path].type_ids]

    def methods_in_file(self, path: str) -> list[MethodEntity]:
        out: list[MethodEntity] = []
        for entity in self.types_in_file(path):
            out.extend(self.methods_of(entity))
        return out

    # -- invariants ------------------------------------------------------

    def validate(self) -> None:
        for ref in self.references:
            if ref.from_file == ref.to_file:
                raise ModelError(f"self-reference kept: {ref}")
            if ref.from_file not in self.files or ref.to_file not in self.files:
                raise ModelError(f"reference endpoint outside model: {ref}")
            if ref.kind not in REFERENCE_KINDS:
                raise ModelError(f"unknown reference kind: {ref.kind}")
        total_type_ids = sum(len(f.type_ids) for f in self.files.values())
        if total_type_ids != len(self.types):
            raise ModelError(
                "type_ids/type table mismatch: %d vs %d"
                % (total_type_ids, len(self.types))
            )
        for t in self.types.values():
            if t.file not in self.files:
                raise ModelError(f"{t.qualified_name}: file {t.file} not in model")
            if t.id not in self.files[t.file].type_ids:
                raise ModelError(f"{t.qualified_name}: missing file backlink")
            for mid in t.method_ids:
                if self.methods[mid].owner != t.id:
                    raise ModelError(f"method {mid}: owner backlink broken")
            for fid in t.field_ids:
                if self.fields[fid].owner != t.id:
                    raise ModelError(f"field {fid}: owner backlink broken")
        for m in self.methods.values():
            if m.body is None and (m.accessed_fields or m.invoked):
                raise ModelError(
                    f"bodiless method {m.signature} carries access records"
                )

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        """Canonical plain-dict view; serializing it twice is byte-identical."""
        return {
            "files": {
                path: {
                    "package": f.package,
                    "types": sorted(
                        self._types_by_id[tid].qualified_name for tid in f.type_ids
                    ),
                    "loc": f.loc,
                    "parse_gaps": f.parse_gaps,
                }
                for path, f in self.files.items()
            },
            "types": {
                qname: {
                    "kind": t.kind,
                    "file": t.file,
                    "supertypes": list(t.supertype_names),
                    "fields": [self.fields[fid].name for fid in t.field_ids],
                    "methods": [self.methods[mid].signature for mid in t.method_ids],
                }
                for qname, t in self.types.items()
            },
            "references": [
                {"from": r.from_file, "to": r.to_file, "kind": r.kind}
                for r in self.references
            ],
        }


def method_qualified_name(method: MethodEntity, model: CodeModel) -> str:
    """``<owner qualified name>#<name>(<comma-joined param type names>)``;
    injective within a valid model. Raises ModelError on a dangling owner."""
    owner = model.type_by_id(method.owner)
    return "%s#%s(%s)" % (
        owner.qualified_name,
        method.name,
        ",".join(t for _, t in method.params),
    )


def entity_lookup(model: CodeModel, qualified_name: str) -> Optional[TypeEntity]:
    return model.entity_lookup(qualified_name)
