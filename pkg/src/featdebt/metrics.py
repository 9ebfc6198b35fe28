"""Object-oriented metric catalog over the code model.

Method scope: MLOC, CYCLO, MAXNESTING, NOAV, NOP, ATFD, FDP, LAA, FANOUT.
Class scope: CLOC, WMC, NOM, NOA, NOPA, NOAM, TCC, WOC, AMW. Class vectors
additionally carry ATFD (the union of their methods' foreign-attribute
sets) because the god-class strategy tests it at class level.

Counting rules that the definitions leave open are fixed as follows:
- ATFD/FDP count *distinct* foreign attributes/providers; accesses through
  accessor-named methods (get*/set*/is*) count as attribute accesses.
- LAA is occurrence-based: own attribute accesses over all attribute
  accesses, accessor-derived occurrences included; 1.0 with no accesses.
- NOAV counts distinct params, locals and *directly* accessed attributes.
- An accessor is a get*/set*/is* method with at most one body statement.
- TCC pairs two visible (non-private, non-accessor, non-constructor)
  methods iff they directly access a common own field; WOC excludes
  constructors on both sides; NOM and WMC include them.
- Bodiless (abstract/interface) methods get an all-zero vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from featdebt.errors import ModelError
from featdebt.frontend.syntax import DECISION_KINDS, NESTING_KINDS, Stmt
from featdebt.model import CodeModel, MethodEntity, TypeEntity, method_qualified_name
from featdebt.frontend.resolver import accessor_attr_name

METHOD_METRICS = (
    "MLOC",
    "CYCLO",
    "MAXNESTING",
    "NOAV",
    "NOP",
    "ATFD",
    "FDP",
    "LAA",
    "FANOUT",
)

CLASS_METRICS = (
    "CLOC",
    "WMC",
    "NOM",
    "NOA",
    "NOPA",
    "NOAM",
    "TCC",
    "WOC",
    "AMW",
)

#: The full 18-name metric vocabulary used in reports and config.
CATALOG = METHOD_METRICS + CLASS_METRICS


@dataclass
class MetricVector:
    scope: str  # "method" | "class"
    values: dict[str, float]

    def __getitem__(self, name: str) -> float:
        try:
            return self.values[name]
        except KeyError:
            raise ModelError(f"metric {name!r} missing from {self.scope} vector") from None


def compute_cyclo(body: Stmt) -> int:
    """1 + decision points: if, for, while, do, case arms, catch arms,
    ternaries, && and ||."""
    count = 1
    for node in body.walk():
        if node.kind in DECISION_KINDS:
            count += 1
        count += node.bool_ops + node.ternaries
    return count


def compute_max_nesting(body: Stmt) -> int:
    """Deepest nesting of control structures; 0 for straight-line code."""

    def depth(node: Stmt, level: int) -> int:
        here = level + 1 if node.kind in NESTING_KINDS else level
        best = here if node.kind in NESTING_KINDS else 0
        for child in node.children:
            best = max(best, depth(child, here))
        return best

    return depth(body, 0)


def is_accessor(method: MethodEntity) -> bool:
    """get*/set*/is* name with at most one body statement; constructors
    never qualify."""
    if method.is_constructor:
        return False
    if accessor_attr_name(method.name) is None:
        return False
    if method.body is None:
        return True
    statements = sum(1 for node in method.body.walk() if node.kind != "block")
    return statements <= 1


def _span_loc(model: CodeModel, path: str, start: int, end: int) -> int:
    lines = model.files[path].code_lines
    return sum(1 for ln in lines if start <= ln <= end)


def _body_var_names(method: MethodEntity) -> tuple[set[str], set[str]]:
    """(declared local names, names referenced in expressions incl. receivers)."""
    locals_declared: set[str] = set()
    used: set[str] = set()
    for node in method.body.walk():
        for name, _ in node.locals:
            locals_declared.add(name)
        used.update(node.name_uses)
        for inv in node.invocations:
            if inv.receiver and inv.receiver not in ("this", "<expr>", "super"):
                used.add(inv.receiver)
        for fa in node.field_accesses:
            if fa.receiver and fa.receiver not in ("this", "<expr>", "super"):
                used.add(fa.receiver)
    return locals_declared, used


def compute_method_metrics(model: CodeModel, method: MethodEntity) -> MetricVector:
    owner = model.type_by_id(method.owner)
    if method.body is None:
        return MetricVector("method", {name: 0 for name in METHOD_METRICS})

    mloc = _span_loc(model, owner.file, method.start_line, method.end_line)
    cyclo = compute_cyclo(method.body)
    nesting = compute_max_nesting(method.body)

    locals_declared, used = _body_var_names(method)
    param_names = {name for name, _ in method.params}
    direct_attrs = {
        (ref.owner, ref.name)
        for ref in method.accessed_fields
        if not ref.via_accessor
    }
    noav = (
        len(param_names & used)
        + len(locals_declared & used - param_names)
        + len(direct_attrs)
    )

    foreign = [ref for ref in method.accessed_fields if not ref.own]
    own = [ref for ref in method.accessed_fields if ref.own]
    atfd = len({(ref.owner, ref.name) for ref in foreign})
    fdp = len({ref.owner for ref in foreign})
    total_accesses = len(own) + len(foreign)
    laa = len(own) / total_accesses if total_accesses else 1.0

    fanout = len(
        {
            inv.owner
            for inv in method.invoked
            if inv.owner is not None and inv.owner != owner.qualified_name
        }
    )

    return MetricVector(
        "method",
        {
            "MLOC": mloc,
            "CYCLO": cyclo,
            "MAXNESTING": nesting,
            "NOAV": noav,
            "NOP": len(method.params),
            "ATFD": atfd,
            "FDP": fdp,
            "LAA": laa,
            "FANOUT": fanout,
        },
    )


def compute_class_metrics(
    model: CodeModel, entity: TypeEntity, tcc_visible_only: bool = True
) -> MetricVector:
    methods = model.methods_of(entity)
    fields = model.fields_of(entity)

    cloc = _span_loc(model, entity.file, entity.start_line, entity.end_line)
    wmc = sum(compute_cyclo(m.body) for m in methods if m.body is not None)
    nom = len(methods)
    noa = len(fields)
    nopa = sum(1 for f in fields if f.visibility == "public")
    noam = sum(1 for m in methods if is_accessor(m))

    if tcc_visible_only:
        cohesive = [
            m
            for m in methods
            if m.visibility != "private" and not is_accessor(m) and not m.is_constructor
        ]
    else:
        cohesive = [m for m in methods if not m.is_constructor]
    own_touch = {
        m.id: {
            ref.name
            for ref in m.accessed_fields
            if ref.own and not ref.via_accessor
        }
        for m in cohesive
    }
    if len(cohesive) < 2:
        tcc = 0.0
    else:
        pairs = list(combinations(cohesive, 2))
        connected = sum(
            1 for a, b in pairs if own_touch[a.id] & own_touch[b.id]
        )
        tcc = connected / len(pairs)

    public_methods = [
        m for m in methods if m.visibility == "public" and not m.is_constructor
    ]
    public_members = len(public_methods) + nopa
    functional = sum(1 for m in public_methods if not is_accessor(m))
    woc = functional / public_members if public_members else 0.0

    amw = wmc / nom if nom else 0.0

    atfd_class = len(
        {
            (ref.owner, ref.name)
            for m in methods
            for ref in m.accessed_fields
            if not ref.own
        }
    )

    return MetricVector(
        "class",
        {
            "CLOC": cloc,
            "WMC": wmc,
            "NOM": nom,
            "NOA": noa,
            "NOPA": nopa,
            "NOAM": noam,
            "TCC": tcc,
            "WOC": woc,
            "AMW": amw,
            "ATFD": atfd_class,
        },
    )


def compute_all(
    model: CodeModel, tcc_visible_only: bool = True
) -> tuple[dict[str, MetricVector], dict[str, MetricVector]]:
    """(class vectors by qualified name, method vectors by qualified name),
    both in deterministic sorted order."""
    class_vectors: dict[str, MetricVector] = {}
    method_vectors: dict[str, MetricVector] = {}
    for qname, entity in model.types.items():
        class_vectors[qname] = compute_class_metrics(model, entity, tcc_visible_only)
        for method in model.methods_of(entity):
            method_vectors[method_qualified_name(method, model)] = (
                compute_method_metrics(model, method)
            )
    return class_vectors, dict(sorted(method_vectors.items()))
