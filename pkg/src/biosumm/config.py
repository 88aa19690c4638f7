"""Run configuration: built-in defaults < key=value config file < command-line flags."""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

from .classify import FeatureConfig, TaskKind
from .extract import DEFAULT_BUDGET


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    task: str = "two"
    features: str = "unigram"
    pos: bool = False
    hypernyms: Optional[str] = None
    hypernym_weight: float = 0.1
    unit: str = "phrase"
    classifier: str = "nb"
    train_fraction: float = 100 / 130
    budget: int = DEFAULT_BUDGET
    pool_k: Optional[int] = None
    min_similarity: Optional[float] = None
    seed: int = 0
    world: Optional[str] = None
    model: Optional[str] = None
    stopwords: Optional[str] = None
    resamples: int = 1000

    def __post_init__(self):
        if self.budget < 1:
            raise ConfigError("budget must be at least 1")
        if self.pool_k is not None and self.pool_k < 1:
            raise ConfigError("pool-k must be at least 1")
        try:
            TaskKind(self.task)
        except ValueError:
            raise ConfigError(f"unknown task {self.task!r} (expected ten or two)") from None

    @property
    def task_kind(self) -> TaskKind:
        return TaskKind(self.task)

    def feature_config(self) -> FeatureConfig:
        try:
            return FeatureConfig(self.features, self.pos, self.hypernyms, self.hypernym_weight)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def check_files(self, *names: str) -> None:
        for name in names:
            value = getattr(self, name)
            if value is not None and not Path(value).is_file():
                raise FileNotFoundError(f"{name} file not found: {value}")

    def as_dict(self) -> dict:
        return asdict(self)


_FIELDS = {f.name: f for f in fields(RunConfig)}


def _coerce(name: str, raw: str):
    default = _FIELDS[name].default
    kind = _FIELDS[name].type
    if raw in ("", "none", "None") and "Optional" in str(kind):
        return None
    if isinstance(default, bool) or kind == "bool":
        if raw.lower() in ("1", "true", "yes", "on"):
            return True
        if raw.lower() in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{name}: expected a boolean, got {raw!r}")
    try:
        if "int" in str(kind):
            return int(raw)
        if "float" in str(kind):
            return float(raw)
    except ValueError:
        raise ConfigError(f"{name}: cannot parse {raw!r}") from None
    return raw


def read_config_file(path: str | Path) -> dict:
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in _FIELDS:
            raise ConfigError(f"{path}:{lineno}: unknown or malformed setting {line!r}")
        values[key] = _coerce(key, raw.strip())
    return values


def resolve(cli_values: dict, config_file: Optional[str] = None) -> RunConfig:
    """Merge settings; ``None`` in ``cli_values`` means "not given on the command line"."""
    merged = read_config_file(config_file) if config_file else {}
    merged.update({k: v for k, v in cli_values.items() if k in _FIELDS and v is not None})
    return RunConfig(**merged)
