"""Report document: self-consistency and serialization determinism."""

import json

from conftest import MINI, model_from
from featdebt.config import AnalysisConfig
from featdebt.report import build_report, export_json
from featdebt.smells import detect_all


def build_mini_report():
    cfg = AnalysisConfig()
    model = model_from(MINI)
    return build_report(model, detect_all(model, cfg), cfg)


def test_report_is_self_consistent():
    report = build_mini_report()
    file_paths = {f["path"] for f in report["files"]}
    entity_keys = set(report["entities"])

    for feature in report["features"]:
        for path in feature["files"]:
            assert path in file_paths
        assert set(feature["per_file"]) == set(feature["files"])
        assert feature["total"] == sum(feature["per_file"].values())
        assert feature["total"] == sum(feature["per_type"].values())

    for finding in report["findings"]:
        assert finding["file"] in file_paths
        assert finding["entity_key"] in entity_keys

    for qname in report["metrics"]["classes"]:
        assert qname in entity_keys
    for mqname in report["metrics"]["methods"]:
        assert mqname in entity_keys


def test_features_array_carries_ranking_order():
    report = build_mini_report()
    totals = [f["total"] for f in report["features"]]
    assert totals == sorted(totals, reverse=True)
    names = [f["name"] for f in report["features"]]
    assert names == ["Relatorio", "Matricula"]


def test_export_json_twice_is_byte_identical():
    report = build_mini_report()
    assert export_json(report) == export_json(report)


def test_export_json_sorted_keys():
    data = json.loads(export_json(build_mini_report()))
    keys = list(data)
    assert keys == sorted(keys)


def test_summary_counts_match_sections():
    report = build_mini_report()
    assert report["summary"]["files"] == len(report["files"])
    assert report["summary"]["findings"] == len(report["findings"])
    assert report["summary"]["features"] == len(report["features"])
    assert report["summary"]["types"] == len(report["metrics"]["classes"])
    assert report["summary"]["methods"] == len(report["metrics"]["methods"])
