"""Cross-file name resolution: compilation units -> CodeModel.

Type names resolve with the precedence: same file, single-type import,
same package, on-demand import; anything left is external and produces no
reference edge. Receiver attribution for invocations and field accesses
uses declared types of params, locals and own fields only (no flow
analysis); compound receivers stay unattributed.
"""

from __future__ import annotations

from typing import Optional

from featdebt.errors import AmbiguityError, ModelError
from featdebt.frontend.syntax import CompilationUnit, RawMethod, RawType
from featdebt.model import (
    CodeModel,
    FieldEntity,
    FieldRef,
    InvocationRef,
    MethodEntity,
    Reference,
    SourceFile,
    TypeEntity,
)

ACCESSOR_PREFIXES = ("get", "set", "is")


def accessor_attr_name(method_name: str) -> Optional[str]:
    """The attribute a get*/set*/is* method name exposes, or None."""
    for prefix in ACCESSOR_PREFIXES:
        if method_name.startswith(prefix) and len(method_name) > len(prefix):
            rest = method_name[len(prefix) :]
            return rest[0].lower() + rest[1:]
    return None


class _Scope:
    """Name-resolution context of one compilation unit."""

    def __init__(self, unit: CompilationUnit, qnames: set[str], by_package: dict):
        self.unit = unit
        self.qnames = qnames
        self.by_package = by_package  # package -> {simple: qname}
        self.declared = {t.name for t in unit.types}
        self.single = {}  # simple -> dotted import
        for imp in unit.single_imports:
            self.single[imp.rsplit(".", 1)[-1]] = imp

    def resolve(self, name: str) -> Optional[str]:
        if not name:
            return None
        if "." in name:
            return name if name in self.qnames else None
        if name in self.declared:
            qname = f"{self.unit.package}.{name}" if self.unit.package else name
            return qname if qname in self.qnames else None
        if name in self.single:
            target = self.single[name]
            return target if target in self.qnames else None
        pkg_types = self.by_package.get(self.unit.package, {})
        if name in pkg_types:
            return pkg_types[name]
        candidates = []
        for pkg in self.unit.ondemand_imports:
            hit = self.by_package.get(pkg, {}).get(name)
            if hit is not None:
                candidates.append(hit)
        if len(candidates) > 1:
            raise AmbiguityError(name, candidates)
        if candidates:
            return candidates[0]
        return None


def resolve_type_name(
    unit: CompilationUnit, name: str, model: CodeModel
) -> Optional[str]:
    """Resolve ``name`` as seen from ``unit`` against a built model.
    Returns the qualified project-type name, or None for external types.
    Raises AmbiguityError when two on-demand imports both provide it."""
    by_package: dict[str, dict[str, str]] = {}
    for qname, t in model.types.items():
        pkg, _, simple = qname.rpartition(".")
        by_package.setdefault(pkg, {})[simple] = qname
    return _Scope(unit, set(model.types), by_package).resolve(name)


def _qualified(unit: CompilationUnit, raw: RawType) -> str:
    return f"{unit.package}.{raw.name}" if unit.package else raw.name


def build_model(units: list[CompilationUnit]) -> CodeModel:
    """Link parsed units into an immutable CodeModel. Output is independent
    of input order. Duplicate qualified type names are a hard error."""
    units = sorted(units, key=lambda u: u.path)
    seen_paths: dict[str, CompilationUnit] = {}
    for unit in units:
        if unit.path in seen_paths:
            raise ModelError(f"duplicate file path {unit.path!r}")
        seen_paths[unit.path] = unit

    declared: dict[str, str] = {}  # qname -> path
    for unit in units:
        for raw in unit.types:
            qname = _qualified(unit, raw)
            if qname in declared:
                raise ModelError(
                    f"duplicate type {qname!r} in {declared[qname]} and {unit.path}"
                )
            declared[qname] = unit.path

    qnames = set(declared)
    by_package: dict[str, dict[str, str]] = {}
    for qname in qnames:
        pkg, _, simple = qname.rpartition(".")
        by_package.setdefault(pkg, {})[simple] = qname

    # Entity construction with dense ids in sorted-name order.
    raw_by_qname: dict[str, tuple[CompilationUnit, RawType]] = {}
    for unit in units:
        for raw in unit.types:
            raw_by_qname[_qualified(unit, raw)] = (unit, raw)

    types: dict[str, TypeEntity] = {}
    fields: dict[int, FieldEntity] = {}
    methods: dict[int, MethodEntity] = {}
    next_field = 0
    next_method = 0
    for tid, qname in enumerate(sorted(raw_by_qname)):
        unit, raw = raw_by_qname[qname]
        entity = TypeEntity(
            id=tid,
            qualified_name=qname,
            kind=raw.kind,
            file=unit.path,
            supertype_names=list(raw.supertype_names),
            start_line=raw.start_line,
            end_line=raw.end_line,
        )
        field_names = set()
        for rf in raw.fields:
            if rf.name in field_names:
                raise ModelError(f"{qname}: duplicate field {rf.name!r}")
            field_names.add(rf.name)
            fields[next_field] = FieldEntity(
                id=next_field,
                owner=tid,
                name=rf.name,
                type_name=rf.type_name,
                visibility=rf.visibility,
            )
            entity.field_ids.append(next_field)
            next_field += 1
        signatures = set()
        for rm in raw.methods:
            if rm.signature in signatures:
                raise ModelError(f"{qname}: duplicate method {rm.signature!r}")
            signatures.add(rm.signature)
            methods[next_method] = MethodEntity(
                id=next_method,
                owner=tid,
                name=rm.name,
                signature=rm.signature,
                visibility=rm.visibility,
                params=list(rm.params),
                return_type=rm.return_type,
                body=rm.body,
                is_constructor=rm.is_constructor,
                start_line=rm.start_line,
                end_line=rm.end_line,
            )
            entity.method_ids.append(next_method)
            next_method += 1
        types[qname] = entity

    files: dict[str, SourceFile] = {}
    for unit in units:
        files[unit.path] = SourceFile(
            path=unit.path,
            package=unit.package,
            type_ids=[types[_qualified(unit, raw)].id for raw in unit.types],
            loc=len(unit.code_lines),
            parse_gaps=unit.parse_gaps,
            code_lines=unit.code_lines,
        )

    # Resolution pass: references plus per-method access records.
    references: list[Reference] = []

    def add_ref(from_path: str, target_qname: Optional[str], kind: str) -> None:
        if target_qname is None:
            return
        to_path = types[target_qname].file
        if to_path != from_path:
            references.append(Reference(from_path, to_path, kind))

    for unit in units:
        scope = _Scope(unit, qnames, by_package)
        path = unit.path
        for imp in unit.single_imports:
            if imp in qnames:
                add_ref(path, imp, "import")
        for raw in unit.types:
            qname = _qualified(unit, raw)
            entity = types[qname]
            for sup in raw.supertype_names:
                add_ref(path, scope.resolve(sup), "supertype")
            for fid in entity.field_ids:
                add_ref(path, scope.resolve(fields[fid].type_name), "field-type")
            own_fields = {fields[fid].name: fields[fid] for fid in entity.field_ids}
            for mid in entity.method_ids:
                method = methods[mid]
                for _, ptype in method.params:
                    add_ref(path, scope.resolve(ptype), "param-type")
                if method.return_type:
                    add_ref(path, scope.resolve(method.return_type), "return-type")
                if method.body is None:
                    continue
                _resolve_body(method, qname, own_fields, scope, add_ref, path)

    return CodeModel(
        files=files, types=types, references=references, methods=methods, fields=fields
    )


def _resolve_body(
    method: MethodEntity,
    own_qname: str,
    own_fields: dict[str, FieldEntity],
    scope: _Scope,
    add_ref,
    path: str,
) -> None:
    params = {name: ptype for name, ptype in method.params}
    locals_map: dict[str, str] = {}
    for node in method.body.walk():
        for name, vtype in node.locals:
            locals_map[name] = vtype

    def receiver_type(recv: Optional[str]) -> Optional[str]:
        """Declared type of a receiver; records an own-field read when the
        receiver is itself a field of the enclosing class."""
        if recv is None or recv == "this":
            return own_qname
        if recv in ("<expr>", "super"):
            return None
        if recv in params:
            return scope.resolve(params[recv])
        if recv in locals_map:
            return scope.resolve(locals_map[recv])
        if recv in own_fields:
            return scope.resolve(own_fields[recv].type_name)
        return scope.resolve(recv)  # static access via a type name

    def note_receiver_field(recv: Optional[str], line: int) -> None:
        if recv and recv not in ("this", "<expr>", "super"):
            if recv not in params and recv not in locals_map and recv in own_fields:
                method.accessed_fields.append(
                    FieldRef(
                        owner=own_qname,
                        name=recv,
                        own=True,
                        via_accessor=False,
                        line=line,
                    )
                )

    for node in method.body.walk():
        for fa in node.field_accesses:
            note_receiver_field(fa.receiver, fa.line)
            owner = receiver_type(fa.receiver)
            if fa.receiver in (None, "this"):
                if fa.name in own_fields:
                    method.accessed_fields.append(
                        FieldRef(own_qname, fa.name, True, False, fa.line)
                    )
                continue
            if owner is not None:
                method.accessed_fields.append(
                    FieldRef(owner, fa.name, owner == own_qname, False, fa.line)
                )
                add_ref(path, owner, "field-access")
        for inv in node.invocations:
            note_receiver_field(inv.receiver, inv.line)
            owner = receiver_type(inv.receiver)
            method.invoked.append(
                InvocationRef(
                    receiver=inv.receiver, name=inv.name, owner=owner, line=inv.line
                )
            )
            if owner is not None:
                add_ref(path, owner, "invocation")
            attr = accessor_attr_name(inv.name)
            if attr is not None and owner is not None:
                method.accessed_fields.append(
                    FieldRef(owner, attr, owner == own_qname, True, inv.line)
                )
        for inst in node.instantiations:
            add_ref(path, scope.resolve(inst), "instantiation")
        for name in node.name_uses:
            if name in params or name in locals_map:
                continue
            if name in own_fields:
                method.accessed_fields.append(
                    FieldRef(own_qname, name, True, False, node.line)
                )
