"""Feature mapping: graph, controllers, main methods, closures, names."""

import json

from conftest import MINI
from featdebt.config import FeatureMapperConfig
from featdebt.features import (
    ReferenceGraph,
    build_reference_graph,
    feature_closure,
    feature_name,
    find_controllers,
    find_main_methods,
    identify_features,
)
from featdebt.frontend import build_model, parse_unit
from featdebt.model import method_qualified_name


def model_of(**files):
    return build_model([parse_unit(text, path) for path, text in files.items()])


def test_graph_deduplicates_parallel_edges():
    graph = ReferenceGraph.build(
        ["A", "B", "C"], [("A", "B"), ("A", "B"), ("B", "C")]
    )
    assert graph.edges == [("A", "B"), ("B", "C")]


def test_empty_model_empty_graph():
    graph = build_reference_graph(build_model([]))
    assert graph.nodes == [] and graph.edges == []


def test_mini_graph_matches_hand_diagram(mini_model):
    expected = json.loads((MINI / "expected_graph.json").read_text())
    graph = build_reference_graph(mini_model)
    assert graph.edges == [tuple(e) for e in expected["edges"]]


def test_controllers_chain():
    graph = ReferenceGraph.build(["A", "B", "C"], [("A", "B"), ("B", "C")])
    assert find_controllers(graph) == ["A"]


def test_controllers_pure_cycle_has_none():
    graph = ReferenceGraph.build(["A", "B"], [("A", "B"), ("B", "A")])
    assert find_controllers(graph) == []


def test_mini_controllers(mini_model):
    expected = json.loads((MINI / "expected_graph.json").read_text())
    graph = build_reference_graph(mini_model)
    assert find_controllers(graph) == expected["controllers"]
    for controller in expected["controllers"]:
        assert graph.in_degree[controller] == 0


def test_main_method_public_orchestrator():
    model = model_of(
        **{
            "C.java": """class C {
                private Helper h;
                public void run() { prepare(); h.work(); }
                private void prepare() { }
            }""",
            "Helper.java": "class Helper { public void work() { } }",
        }
    )
    mains = find_main_methods(model, "C.java")
    assert [m.name for m in mains] == ["run"]


def test_main_method_excluded_when_called_in_same_file():
    model = model_of(
        **{
            "C.java": """class C {
                private Other o;
                public void entry() { stage(); }
                public void stage() { o.go(); }
            }""",
            "Other.java": "class Other { public void go() { } }",
        }
    )
    mains = find_main_methods(model, "C.java")
    assert [m.name for m in mains] == ["entry"]


def test_mini_main_methods(mini_model):
    expected = json.loads((MINI / "expected_graph.json").read_text())
    for controller, want in expected["main_methods"].items():
        mains = find_main_methods(mini_model, controller)
        assert [method_qualified_name(m, mini_model) for m in mains] == want


def test_closure_controller_only():
    model = model_of(
        **{"C.java": "class C { public void run() { helper(); } private void helper() { } }"}
    )
    graph = build_reference_graph(model)
    main = find_main_methods(model, "C.java")[0]
    assert feature_closure(model, graph, "C.java", main) == ["C.java"]


def test_closure_linear_chain():
    model = model_of(
        **{
            "C.java": "class C { Dao dao; public void run() { dao.save(); } }",
            "Dao.java": "class Dao { Entity e; public void save() { e.touch(); } }",
            "Entity.java": "class Entity { public void touch() { } }",
        }
    )
    graph = build_reference_graph(model)
    main = find_main_methods(model, "C.java")[0]
    assert feature_closure(model, graph, "C.java", main) == [
        "C.java",
        "Dao.java",
        "Entity.java",
    ]


def test_mini_closures(mini_model):
    expected = json.loads((MINI / "expected_features.json").read_text())
    graph = build_reference_graph(mini_model)
    for feat in expected["features"]:
        mains = find_main_methods(mini_model, feat["controller"])
        match = [
            m
            for m in mains
            if method_qualified_name(m, mini_model) == feat["main_method"]
        ]
        assert match, feat["main_method"]
        files = feature_closure(mini_model, graph, feat["controller"], match[0])
        assert files == feat["files"]


def test_closure_is_closed_under_edges(mini_model):
    graph = build_reference_graph(mini_model)
    for feat in identify_features(mini_model):
        member = set(feat.files)
        for src in feat.files:
            for dst in graph.out.get(src, ()):
                assert dst in member


def test_identify_features_no_controllers():
    model = model_of(
        **{
            "A.java": "class A { B b; public void x() { b.y(); } }",
            "B.java": "class B { A a; public void y() { a.x(); } }",
        }
    )
    assert identify_features(model) == []


def test_identify_features_mini(mini_model):
    expected = json.loads((MINI / "expected_features.json").read_text())
    feats = identify_features(mini_model)
    got = [
        {
            "id": f.id,
            "name": f.name,
            "controller": f.controller,
            "main_method": f.main_method,
            "files": f.files,
        }
        for f in feats
    ]
    assert got == expected["features"]


def test_unreferenced_utility_changes_no_feature(mini_model, mini_sources):
    with_util = dict(mini_sources)
    with_util["fx/Util.java"] = "package fx;\n\npublic class Util {\n}\n"
    model = build_model([parse_unit(t, p) for p, t in with_util.items()])
    before = {f.name: f.files for f in identify_features(mini_model)}
    after = {f.name: f.files for f in identify_features(model)}
    assert before == after


def test_feature_files_subset_of_model_and_sharing_allowed(mini_model):
    feats = identify_features(mini_model)
    all_files = set(mini_model.files)
    for f in feats:
        assert set(f.files) <= all_files
    shared = set(feats[0].files) & set(feats[1].files)
    assert "fx/Turma.java" in shared  # entities may belong to several features


def test_feature_name_suffix_stripping_and_split():
    assert feature_name("MatriculaComponenteMBean", "salvar", False) == "Matricula Componente"
    assert feature_name("RelatorioController", "gerar", False) == "Relatorio"
    assert feature_name("XYZ", "run", False) == "XYZ"


def test_feature_name_with_multiple_mains_appends_method():
    assert feature_name("RelatorioMBean", "gerar", True) == "Relatorio – gerar"
    assert feature_name("RelatorioMBean", "exportar", True) == "Relatorio – exportar"


def test_two_main_methods_two_features():
    model = model_of(
        **{
            "RelMBean.java": """class RelMBean {
                Dao dao;
                public void gerar() { dao.load(); }
                public void exportar() { dao.dump(); }
            }""",
            "Dao.java": "class Dao { public void load() { } public void dump() { } }",
        }
    )
    feats = identify_features(model)
    assert [f.name for f in feats] == ["Rel – exportar", "Rel – gerar"]
    assert feats[0].files == feats[1].files == ["Dao.java", "RelMBean.java"]


def test_main_method_toggles():
    model = model_of(
        **{
            "C.java": """class C {
                Other o;
                void hidden() { o.go(); }
                public void shown() { o.go(); }
            }""",
            "Other.java": "class Other { public void go() { } }",
        }
    )
    default_cfg = FeatureMapperConfig()
    assert [m.name for m in find_main_methods(model, "C.java", default_cfg)] == [
        "shown"
    ]
    open_cfg = FeatureMapperConfig(require_public=False)
    assert [m.name for m in find_main_methods(model, "C.java", open_cfg)] == [
        "hidden",
        "shown",
    ]
