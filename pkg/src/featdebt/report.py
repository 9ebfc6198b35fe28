"""Analysis report assembly and deterministic JSON serialization.

The report is the file-first contract between the analyzer, the HTTP API
and the UI: everything the screens show is in here, already computed.
Serialization sorts keys and reuses the deterministic orders established
upstream, so identical inputs produce byte-identical output. The metadata
timestamp is the analyzed commit's time (never the wall clock), or null
for plain directory trees.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from datetime import datetime, timezone
from fnmatch import fnmatch
from pathlib import Path
from typing import Optional

from featdebt import __version__
from featdebt.config import AnalysisConfig
from featdebt.errors import FeatdebtError
from featdebt.features import identify_features
from featdebt.frontend import build_model, parse_unit
from featdebt.metrics import compute_all
from featdebt.mining import DebtLedger
from featdebt.model import CodeModel
from featdebt.rollup import feature_debts
from featdebt.smells import SmellFinding, detect_all

SCHEMA_VERSION = 1


def discover_sources(root: str | Path, cfg: AnalysisConfig) -> dict[str, str]:
    """Repo-relative path -> text for files matching the configured globs.
    Hidden directories (.git and friends) are skipped."""
    base = Path(root)
    if not base.is_dir():
        raise FeatdebtError(f"source path {base} is not a directory")
    sources: dict[str, str] = {}
    for path in sorted(base.rglob("*")):
        if not path.is_file():
            continue
        rel = path.relative_to(base).as_posix()
        if any(part.startswith(".") for part in Path(rel).parts):
            continue
        if not any(fnmatch(rel, pat) for pat in cfg.frontend.include):
            continue
        if any(fnmatch(rel, pat) for pat in cfg.frontend.exclude):
            continue
        sources[rel] = path.read_text(encoding="utf-8", errors="replace")
    return sources


def analyze_sources(
    sources: dict[str, str], cfg: AnalysisConfig
) -> tuple[CodeModel, list[SmellFinding]]:
    units = [parse_unit(text, path) for path, text in sorted(sources.items())]
    model = build_model(units)
    return model, detect_all(model, cfg)


def build_report(
    model: CodeModel,
    findings: list[SmellFinding],
    cfg: AnalysisConfig,
    revision: Optional[str] = None,
    revision_timestamp: Optional[int] = None,
    ledger: Optional[DebtLedger] = None,
) -> dict:
    """Assemble the self-consistent report document."""
    features = identify_features(model, cfg.feature_mapper)
    ranking = feature_debts(features, findings)
    class_vectors, method_vectors = compute_all(
        model, tcc_visible_only=cfg.metrics.tcc_visible_only
    )
    features_by_id = {f.id: f for f in features}

    timestamp = None
    if revision_timestamp is not None:
        timestamp = datetime.fromtimestamp(
            revision_timestamp, tz=timezone.utc
        ).isoformat()

    feature_entries = []
    for debt in ranking:
        feature = features_by_id[debt.feature_id]
        feature_entries.append(
            {
                "id": feature.id,
                "name": feature.name,
                "controller": feature.controller,
                "main_method": feature.main_method,
                "files": list(feature.files),
                "total": debt.total,
                "per_file": debt.per_file,
                "per_type": debt.per_type,
            }
        )

    entity_files: dict[str, str] = {}
    entity_kinds: dict[str, str] = {}
    for qname, entity in model.types.items():
        entity_files[qname] = entity.file
        entity_kinds[qname] = entity.kind
    for mqname in method_vectors:
        owner = mqname.split("#", 1)[0]
        entity_files[mqname] = entity_files.get(owner, "")
        entity_kinds[mqname] = "method"

    return {
        "schema_version": SCHEMA_VERSION,
        "metadata": {
            "tool": "featdebt",
            "version": __version__,
            "revision": revision,
            "timestamp": timestamp,
            "renames_tracked": False,
            "config": cfg.to_dict(),
        },
        "summary": {
            "files": len(model.files),
            "types": len(model.types),
            "methods": len(model.methods),
            "findings": len(findings),
            "features": len(features),
        },
        "features": feature_entries,
        "findings": [
            {
                "type": f.type,
                "entity_key": f.entity_key,
                "file": f.file,
                "evidence": f.evidence,
            }
            for f in findings
        ],
        "metrics": {
            "classes": {
                qname: vec.values for qname, vec in class_vectors.items()
            },
            "methods": {
                mqname: vec.values for mqname, vec in method_vectors.items()
            },
        },
        "entities": {
            key: {"file": entity_files[key], "kind": entity_kinds[key]}
            for key in sorted(entity_files)
        },
        "files": [
            {
                "path": f.path,
                "package": f.package,
                "loc": f.loc,
                "parse_gaps": f.parse_gaps,
                "types": sorted(
                    t.qualified_name for t in model.types_in_file(f.path)
                ),
            }
            for f in model.files.values()
        ],
        "ledger": None if ledger is None else {
            "interval_days": ledger.interval_days,
            "rows": [asdict(row) for row in ledger.rows],
        },
    }


def export_json(report: dict) -> bytes:
    """UTF-8 JSON, keys sorted, byte-identical across runs on equal input."""
    return (
        json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    ).encode("utf-8")


def export_delta_json(delta) -> bytes:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "from_rev": delta.from_rev,
        "to_rev": delta.to_rev,
        "inserted": sorted(delta.inserted),
        "paid": sorted(delta.paid),
    }
    return (
        json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    ).encode("utf-8")


def load_report(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise FeatdebtError(f"cannot load report {path}: {exc}") from exc
