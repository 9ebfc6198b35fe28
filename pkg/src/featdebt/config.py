"""Analysis configuration: detection thresholds, source globs, feature
mapper toggles. Loaded from a single JSON document with sections
``thresholds`` / ``frontend`` / ``feature_mapper`` / ``metrics``; unknown
keys are hard errors so threshold experiments cannot be corrupted by a
silent typo.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields as dc_fields
from pathlib import Path

from featdebt.errors import ConfigError

ONE_THIRD = 1.0 / 3.0


@dataclass
class ThresholdConfig:
    """One named number per strategy term.

    Defaults are the Lanza-Marinescu statistical values. Each knob fires on
    one side of its comparison; ``THRESHOLD_ORIENTATION`` records which, so
    tests can tighten any knob programmatically.
    """

    brain_method_mloc: float = 65.0  # MLOC >
    brain_method_cyclo: float = 7.0  # CYCLO >=
    brain_method_nesting: float = 5.0  # MAXNESTING >=
    brain_method_noav: float = 7.0  # NOAV >
    conditional_complexity_cyclo: float = 10.0  # CYCLO >=
    long_method_mloc: float = 65.0  # MLOC >
    feature_envy_atfd: float = 5.0  # ATFD >
    feature_envy_laa: float = ONE_THIRD  # LAA <
    feature_envy_fdp: float = 3.0  # FDP <=
    god_class_atfd: float = 5.0  # ATFD >
    god_class_wmc: float = 47.0  # WMC >=
    god_class_tcc: float = ONE_THIRD  # TCC <
    brain_class_tcc: float = 0.5  # TCC <
    brain_class_cloc: float = 195.0  # CLOC >=   (more than one brain method)
    brain_class_wmc: float = 47.0  # WMC >=
    brain_class_single_cloc: float = 390.0  # CLOC >=  (exactly one brain method)
    brain_class_single_wmc: float = 94.0  # WMC >=
    data_class_woc: float = ONE_THIRD  # WOC <
    data_class_accessors: float = 5.0  # NOPA+NOAM >
    data_class_wmc: float = 31.0  # WMC <
    data_class_accessors_high: float = 10.0  # NOPA+NOAM >
    data_class_wmc_high: float = 47.0  # WMC <

    _RATIO_KNOBS = (
        "feature_envy_laa",
        "god_class_tcc",
        "brain_class_tcc",
        "data_class_woc",
    )

    def validate(self) -> None:
        for f in dc_fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"threshold {f.name} must be a number")
            if value <= 0:
                raise ConfigError(f"threshold {f.name} must be > 0, got {value}")
        for name in self._RATIO_KNOBS:
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise ConfigError(f"threshold {name} must be in (0,1], got {value}")


#: Which side of the comparison each knob fires on. "lower" knobs fire when
#: the metric exceeds them (tighten by raising); "upper" knobs fire when the
#: metric falls below/at them (tighten by lowering).
THRESHOLD_ORIENTATION = {
    "brain_method_mloc": "lower",
    "brain_method_cyclo": "lower",
    "brain_method_nesting": "lower",
    "brain_method_noav": "lower",
    "conditional_complexity_cyclo": "lower",
    "long_method_mloc": "lower",
    "feature_envy_atfd": "lower",
    "feature_envy_laa": "upper",
    "feature_envy_fdp": "upper",
    "god_class_atfd": "lower",
    "god_class_wmc": "lower",
    "god_class_tcc": "upper",
    "brain_class_tcc": "upper",
    "brain_class_cloc": "lower",
    "brain_class_wmc": "lower",
    "brain_class_single_cloc": "lower",
    "brain_class_single_wmc": "lower",
    "data_class_woc": "upper",
    "data_class_accessors": "lower",
    "data_class_wmc": "upper",
    "data_class_accessors_high": "lower",
    "data_class_wmc_high": "upper",
}


@dataclass
class FrontendConfig:
    """Source discovery: fnmatch-style patterns against repo-relative
    posix paths."""

    include: list[str] = field(default_factory=lambda: ["*.java"])
    exclude: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if not self.include:
            raise ConfigError("frontend.include must list at least one pattern")
        for pats in (self.include, self.exclude):
            for p in pats:
                if not isinstance(p, str) or not p:
                    raise ConfigError(f"bad glob pattern {p!r}")


DEFAULT_STRIP_SUFFIXES = ["MBean", "Controller", "Servlet", "Action", "Resource"]


@dataclass
class FeatureMapperConfig:
    strip_suffixes: list[str] = field(
        default_factory=lambda: list(DEFAULT_STRIP_SUFFIXES)
    )
    require_public: bool = True
    require_calls_made: bool = True
    exclude_called_in_file: bool = True
    exclude_accessors: bool = True
    exclude_constructors: bool = True

    def validate(self) -> None:
        for s in self.strip_suffixes:
            if not isinstance(s, str) or not s:
                raise ConfigError(f"bad controller suffix {s!r}")
        for name in (
            "require_public",
            "require_calls_made",
            "exclude_called_in_file",
            "exclude_accessors",
            "exclude_constructors",
        ):
            if not isinstance(getattr(self, name), bool):
                raise ConfigError(f"feature_mapper.{name} must be a boolean")


@dataclass
class MetricsConfig:
    tcc_visible_only: bool = True

    def validate(self) -> None:
        if not isinstance(self.tcc_visible_only, bool):
            raise ConfigError("metrics.tcc_visible_only must be a boolean")


@dataclass
class AnalysisConfig:
    thresholds: ThresholdConfig = field(default_factory=ThresholdConfig)
    frontend: FrontendConfig = field(default_factory=FrontendConfig)
    feature_mapper: FeatureMapperConfig = field(default_factory=FeatureMapperConfig)
    metrics: MetricsConfig = field(default_factory=MetricsConfig)

    def validate(self) -> None:
        self.thresholds.validate()
        self.frontend.validate()
        self.feature_mapper.validate()
        self.metrics.validate()

    def to_dict(self) -> dict:
        out = asdict(self)
        return out


_SECTIONS = {
    "thresholds": ThresholdConfig,
    "frontend": FrontendConfig,
    "feature_mapper": FeatureMapperConfig,
    "metrics": MetricsConfig,
}


def config_from_dict(data: dict) -> AnalysisConfig:
    if not isinstance(data, dict):
        raise ConfigError("config document must be a JSON object")
    unknown = set(data) - set(_SECTIONS)
    if unknown:
        raise ConfigError(f"unknown config sections: {sorted(unknown)}")
    kwargs = {}
    for section, cls in _SECTIONS.items():
        raw = data.get(section, {})
        if not isinstance(raw, dict):
            raise ConfigError(f"config section {section!r} must be an object")
        allowed = {f.name for f in dc_fields(cls) if not f.name.startswith("_")}
        bad = set(raw) - allowed
        if bad:
            raise ConfigError(f"unknown keys in {section!r}: {sorted(bad)}")
        kwargs[section] = cls(**raw)
    cfg = AnalysisConfig(**kwargs)
    cfg.validate()
    return cfg


def load_config(path: str | Path) -> AnalysisConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return config_from_dict(data)
