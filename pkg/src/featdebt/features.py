"""Feature identification over the file-reference digraph.

Controllers are entry-point files: nothing references them, they reference
others (in-degree 0, out-degree >= 1). A controller's main methods are its
public methods that make calls and receive none from the same file. One
feature per (controller, main method): the controller plus every file
transitively reachable from it along reference edges.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from featdebt.config import FeatureMapperConfig
from featdebt.metrics import is_accessor
from featdebt.model import CodeModel, MethodEntity, method_qualified_name

logger = logging.getLogger(__name__)

_CAMEL = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]+[a-z0-9]*|[a-z0-9]+")


@dataclass
class ReferenceGraph:
    """Simple digraph over file paths: no self-loops, no parallel edges."""

    nodes: list[str]
    edges: list[tuple[str, str]]
    out: dict[str, list[str]] = field(default_factory=dict)
    in_degree: dict[str, int] = field(default_factory=dict)

    @staticmethod
    def build(nodes, edge_pairs) -> "ReferenceGraph":
        nodes = sorted(nodes)
        edges = sorted(set(edge_pairs))
        out = {n: [] for n in nodes}
        indeg = {n: 0 for n in nodes}
        for src, dst in edges:
            out[src].append(dst)
            indeg[dst] += 1
        return ReferenceGraph(nodes=nodes, edges=edges, out=out, in_degree=indeg)


@dataclass
class Feature:
    id: str
    name: str
    controller: str  # file path
    main_method: str  # method qualified name
    files: list[str]  # sorted, closed under outgoing edges


def build_reference_graph(model: CodeModel) -> ReferenceGraph:
    """One edge per distinct (from, to) pair regardless of how many
    references connect the two files."""
    return ReferenceGraph.build(
        model.files.keys(), ((r.from_file, r.to_file) for r in model.references)
    )


def find_controllers(graph: ReferenceGraph) -> list[str]:
    return sorted(
        n for n in graph.nodes if graph.in_degree[n] == 0 and len(graph.out[n]) >= 1
    )


def find_main_methods(
    model: CodeModel, controller: str, cfg: FeatureMapperConfig | None = None
) -> list[MethodEntity]:
    """Entry points of a controller file: public, make at least one call,
    receive none from sibling methods in the same file."""
    cfg = cfg or FeatureMapperConfig()
    file_types = model.types_in_file(controller)
    file_qnames = {t.qualified_name for t in file_types}
    all_methods = model.methods_in_file(controller)

    def calls_made(method: MethodEntity) -> bool:
        own = model.type_by_id(method.owner).qualified_name
        return any(
            not (inv.owner == own and inv.name == method.name)
            for inv in method.invoked
        )

    def called_in_file(method: MethodEntity) -> bool:
        for other in all_methods:
            if other.id == method.id:
                continue
            for inv in other.invoked:
                if inv.name == method.name and inv.owner in file_qnames:
                    return True
        return False

    mains = []
    for method in all_methods:
        if cfg.exclude_constructors and method.is_constructor:
            continue
        if cfg.exclude_accessors and is_accessor(method):
            continue
        if cfg.require_public and method.visibility != "public":
            continue
        if cfg.require_calls_made and not calls_made(method):
            continue
        if cfg.exclude_called_in_file and called_in_file(method):
            continue
        mains.append(method)
    mains.sort(key=lambda m: m.signature)
    return mains


def feature_closure(
    model: CodeModel,
    graph: ReferenceGraph,
    controller: str,
    main_method: MethodEntity,
) -> list[str]:
    """Controller plus files of types the main method touches, extended by
    transitive reachability along outgoing edges. Sorted."""
    seed = {controller}
    for qname in _method_referenced_types(model, main_method):
        seed.add(model.types[qname].file)
    visited = set(seed)
    frontier = sorted(seed)
    while frontier:
        current = frontier.pop()
        for nxt in graph.out.get(current, ()):
            if nxt not in visited:
                visited.add(nxt)
                frontier.append(nxt)
    return sorted(visited)


def _method_referenced_types(model: CodeModel, method: MethodEntity) -> set[str]:
    """Project types named in the method's signature or touched by its body."""
    out: set[str] = set()
    owner = model.type_by_id(method.owner)
    scope_types = {t.simple_name: t.qualified_name for t in model.types.values()}

    def resolve_raw(name: str):
        # Signature types were stored raw; prefer same package, then a
        # unique simple-name match anywhere in the project.
        if name in model.types:
            return name
        pkg = owner.qualified_name.rsplit(".", 1)[0] if "." in owner.qualified_name else ""
        candidate = f"{pkg}.{name}" if pkg else name
        if candidate in model.types:
            return candidate
        return scope_types.get(name)

    for _, ptype in method.params:
        hit = resolve_raw(ptype)
        if hit:
            out.add(hit)
    if method.return_type:
        hit = resolve_raw(method.return_type)
        if hit:
            out.add(hit)
    for ref in method.accessed_fields:
        out.add(ref.owner)
    for inv in method.invoked:
        if inv.owner is not None:
            out.add(inv.owner)
    if method.body is not None:
        for node in method.body.walk():
            for inst in node.instantiations:
                hit = resolve_raw(inst)
                if hit:
                    out.add(hit)
    out.discard(owner.qualified_name)
    return {q for q in out if q in model.types}


def feature_name(
    controller_class: str,
    method_name: str,
    many_mains: bool,
    strip_suffixes: list[str] | None = None,
) -> str:
    """Human label: controller simple name minus its role suffix, camel
    case split to words; the method name is appended when the controller
    hosts more than one main method."""
    suffixes = strip_suffixes if strip_suffixes is not None else [
        "MBean",
        "Controller",
        "Servlet",
        "Action",
        "Resource",
    ]
    base = controller_class
    for suffix in sorted(suffixes, key=len, reverse=True):
        if base.endswith(suffix) and len(base) > len(suffix):
            base = base[: -len(suffix)]
            break
    words = _CAMEL.findall(base)
    label = " ".join(words) if words else base
    if many_mains:
        label = f"{label} – {method_name}"
    return label


def _slug(name: str) -> str:
    slug = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    return slug or "feature"


def identify_features(
    model: CodeModel, cfg: FeatureMapperConfig | None = None
) -> list[Feature]:
    """One feature per (controller, main method), deduplicated and sorted
    by name. A fully cyclic system has no controllers and no features."""
    cfg = cfg or FeatureMapperConfig()
    graph = build_reference_graph(model)
    controllers = find_controllers(graph)
    if not controllers and graph.edges:
        logger.warning(
            "no controller files found (every file is referenced); "
            "feature set is empty"
        )
    raw: list[tuple[str, str, str, tuple[str, ...]]] = []
    for controller in controllers:
        mains = find_main_methods(model, controller, cfg)
        many = len(mains) > 1
        for method in mains:
            owner = model.type_by_id(method.owner)
            name = feature_name(
                owner.simple_name, method.name, many, cfg.strip_suffixes
            )
            files = tuple(feature_closure(model, graph, controller, method))
            raw.append((name, controller, method_qualified_name(method, model), files))

    seen: set[tuple[str, str, tuple[str, ...]]] = set()
    features: list[Feature] = []
    used_ids: set[str] = set()
    for name, controller, mqname, files in sorted(raw):
        dedup_key = (name, controller, files)
        if dedup_key in seen:
            continue
        seen.add(dedup_key)
        fid = _slug(name)
        serial = 2
        while fid in used_ids:
            fid = f"{_slug(name)}-{serial}"
            serial += 1
        used_ids.add(fid)
        features.append(
            Feature(
                id=fid,
                name=name,
                controller=controller,
                main_method=mqname,
                files=list(files),
            )
        )
    return features
