"""Debt accounting: findings per file, totals per feature, ranking.

Zero-count files stay in the per-file breakdown so a feature's full
composition is visible. Feature totals sum over file memberships, so a
smelly file shared by two features contributes to both.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from featdebt.errors import ModelError
from featdebt.features import Feature
from featdebt.smells import SMELL_TYPES, SmellFinding


@dataclass
class FeatureDebt:
    feature_id: str
    name: str
    total: int
    per_file: dict[str, int]  # every feature file, zeros included
    per_type: Optional[dict[str, int]] = None  # all seven types when present

    def __post_init__(self):
        if self.total != sum(self.per_file.values()):
            raise ModelError(
                f"feature {self.name!r}: total {self.total} != per-file sum"
            )
        if self.per_type is not None:
            if set(self.per_type) != set(SMELL_TYPES):
                raise ModelError(f"feature {self.name!r}: per_type must cover all types")
            if self.total != sum(self.per_type.values()):
                raise ModelError(
                    f"feature {self.name!r}: total {self.total} != per-type sum"
                )


@dataclass
class DebtRanking:
    entries: list[FeatureDebt] = field(default_factory=list)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def file_debt_counts(findings: list[SmellFinding]) -> dict[str, int]:
    """Findings per file; files without findings are absent (callers
    default to zero)."""
    counts = Counter(f.file for f in findings)
    return dict(sorted(counts.items()))


def rollup_feature(feature: Feature, counts: dict[str, int]) -> FeatureDebt:
    """Sum the per-file counts over the feature's files."""
    per_file = {path: counts.get(path, 0) for path in feature.files}
    return FeatureDebt(
        feature_id=feature.id,
        name=feature.name,
        total=sum(per_file.values()),
        per_file=per_file,
    )


def type_breakdown(
    feature: Feature, findings: list[SmellFinding]
) -> dict[str, int]:
    """Counts per smell type restricted to this feature's files; all seven
    types present, zeros included."""
    member = set(feature.files)
    breakdown = {t: 0 for t in SMELL_TYPES}
    for f in findings:
        if f.file in member:
            breakdown[f.type] += 1
    return breakdown


def rank(debts: list[FeatureDebt]) -> DebtRanking:
    """Descending by total, ties broken by ascending feature name."""
    return DebtRanking(entries=sorted(debts, key=lambda d: (-d.total, d.name)))


def feature_debts(
    features: list[Feature], findings: list[SmellFinding]
) -> DebtRanking:
    """Full rollup: per-file counts, per-type breakdowns, ranking."""
    counts = file_debt_counts(findings)
    debts = []
    for feature in features:
        per_file = {path: counts.get(path, 0) for path in feature.files}
        debts.append(
            FeatureDebt(
                feature_id=feature.id,
                name=feature.name,
                total=sum(per_file.values()),
                per_file=per_file,
                per_type=type_breakdown(feature, findings),
            )
        )
    return rank(debts)
