"""Threshold detection strategies for the seven smell types.

Method strategies fire independently of each other (a brain method is by
construction also a long method, and the counts stay separate). Brain
class excludes god class so class-level "intelligence" is not counted
twice. Every fired strategy records the metrics it tested as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from featdebt.config import AnalysisConfig, ThresholdConfig
from featdebt.metrics import MetricVector, compute_all
from featdebt.model import CodeModel, method_qualified_name

CLASS_SMELLS = ("GodClass", "BrainClass", "DataClass")
METHOD_SMELLS = ("BrainMethod", "ConditionalComplexity", "LongMethod", "FeatureEnvy")
SMELL_TYPES = CLASS_SMELLS + METHOD_SMELLS


@dataclass
class SmellFinding:
    type: str
    entity_key: str  # qualified class name or method qualified name
    file: str
    evidence: dict[str, float]


def finding_key(finding: SmellFinding) -> str:
    """Stable identity: ``<type>|<entity_key>``. The file path is excluded
    deliberately so moving an entity within a file keeps its identity."""
    return f"{finding.type}|{finding.entity_key}"


def detect_method_smells(
    mv: MetricVector,
    cfg: ThresholdConfig,
    entity_key: str = "",
    file: str = "",
) -> list[SmellFinding]:
    """All method strategies against one vector; several may co-fire."""
    findings: list[SmellFinding] = []

    if (
        mv["MLOC"] > cfg.brain_method_mloc
        and mv["CYCLO"] >= cfg.brain_method_cyclo
        and mv["MAXNESTING"] >= cfg.brain_method_nesting
        and mv["NOAV"] > cfg.brain_method_noav
    ):
        findings.append(
            SmellFinding(
                "BrainMethod",
                entity_key,
                file,
                {
                    "MLOC": mv["MLOC"],
                    "CYCLO": mv["CYCLO"],
                    "MAXNESTING": mv["MAXNESTING"],
                    "NOAV": mv["NOAV"],
                },
            )
        )

    if mv["CYCLO"] >= cfg.conditional_complexity_cyclo:
        findings.append(
            SmellFinding(
                "ConditionalComplexity", entity_key, file, {"CYCLO": mv["CYCLO"]}
            )
        )

    if mv["MLOC"] > cfg.long_method_mloc:
        findings.append(
            SmellFinding("LongMethod", entity_key, file, {"MLOC": mv["MLOC"]})
        )

    if (
        mv["ATFD"] > cfg.feature_envy_atfd
        and mv["LAA"] < cfg.feature_envy_laa
        and mv["FDP"] <= cfg.feature_envy_fdp
    ):
        findings.append(
            SmellFinding(
                "FeatureEnvy",
                entity_key,
                file,
                {"ATFD": mv["ATFD"], "LAA": mv["LAA"], "FDP": mv["FDP"]},
            )
        )

    return findings


def detect_class_smells(
    cv: MetricVector,
    method_findings: list[SmellFinding],
    cfg: ThresholdConfig,
    entity_key: str = "",
    file: str = "",
) -> list[SmellFinding]:
    """Class strategies; ``method_findings`` are this class's own."""
    findings: list[SmellFinding] = []

    is_god = (
        cv["ATFD"] > cfg.god_class_atfd
        and cv["WMC"] >= cfg.god_class_wmc
        and cv["TCC"] < cfg.god_class_tcc
    )
    if is_god:
        findings.append(
            SmellFinding(
                "GodClass",
                entity_key,
                file,
                {"ATFD": cv["ATFD"], "WMC": cv["WMC"], "TCC": cv["TCC"]},
            )
        )

    brain_methods = sum(1 for f in method_findings if f.type == "BrainMethod")
    many_route = (
        brain_methods > 1
        and cv["CLOC"] >= cfg.brain_class_cloc
        and cv["WMC"] >= cfg.brain_class_wmc
    )
    single_route = (
        brain_methods == 1
        and cv["CLOC"] >= cfg.brain_class_single_cloc
        and cv["WMC"] >= cfg.brain_class_single_wmc
    )
    if not is_god and cv["TCC"] < cfg.brain_class_tcc and (many_route or single_route):
        findings.append(
            SmellFinding(
                "BrainClass",
                entity_key,
                file,
                {
                    "TCC": cv["TCC"],
                    "CLOC": cv["CLOC"],
                    "WMC": cv["WMC"],
                    "BRAIN_METHODS": brain_methods,
                },
            )
        )

    accessors = cv["NOPA"] + cv["NOAM"]
    if cv["WOC"] < cfg.data_class_woc and (
        (accessors > cfg.data_class_accessors and cv["WMC"] < cfg.data_class_wmc)
        or (
            accessors > cfg.data_class_accessors_high
            and cv["WMC"] < cfg.data_class_wmc_high
        )
    ):
        findings.append(
            SmellFinding(
                "DataClass",
                entity_key,
                file,
                {
                    "WOC": cv["WOC"],
                    "NOPA": cv["NOPA"],
                    "NOAM": cv["NOAM"],
                    "WMC": cv["WMC"],
                },
            )
        )

    return findings


def detect_all(model: CodeModel, cfg: AnalysisConfig) -> list[SmellFinding]:
    """Union over all classes and methods, sorted by (file, entity_key,
    type); a pure function of (model, cfg)."""
    class_vectors, method_vectors = compute_all(
        model, tcc_visible_only=cfg.metrics.tcc_visible_only
    )
    findings: list[SmellFinding] = []
    for qname, entity in model.types.items():
        class_method_findings: list[SmellFinding] = []
        for method in model.methods_of(entity):
            mqname = method_qualified_name(method, model)
            class_method_findings.extend(
                detect_method_smells(
                    method_vectors[mqname], cfg.thresholds, mqname, entity.file
                )
            )
        findings.extend(class_method_findings)
        findings.extend(
            detect_class_smells(
                class_vectors[qname],
                class_method_findings,
                cfg.thresholds,
                qname,
                entity.file,
            )
        )
    findings.sort(key=lambda f: (f.file, f.entity_key, f.type))
    return findings
