"""SweepConfig: what a harness run covers, loaded from JSON or built from flags."""

import json
import logging
from dataclasses import asdict, dataclass, field

from awdaha.config import (
    DEFAULT_D_RANGE,
    DEFAULT_Q_VALUES,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
)
from awdaha.errors import AwDahaError, ConfigError
from awdaha.scalar_field import ScalarField

logger = logging.getLogger(__name__)

FAMILIES = ("Vd", "E", "O")
BOUNDARY_MIN_D = {"Vd": 1, "E": 1, "O": 2}


@dataclass(frozen=True)
class SweepConfig:
    suites: tuple
    families: tuple = FAMILIES
    d_values: dict = field(default_factory=lambda: dict(DEFAULT_D_RANGE))
    q_values: tuple = DEFAULT_Q_VALUES
    samples: int = DEFAULT_SAMPLES
    params: dict = field(default_factory=dict)
    twists: tuple = (0, 1, 2, 3)
    seed: int = DEFAULT_SEED
    boundary: bool = True
    workers: int = 1

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ConfigError("sweep config must be a JSON object")
        known = set(cls.__dataclass_fields__)
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown sweep config keys: {', '.join(unknown)}")
        if "suites" not in data:
            raise ConfigError("sweep config needs a 'suites' list")
        values = dict(data)
        for key in ("suites", "families", "q_values", "twists"):
            if key in values:
                values[key] = tuple(values[key])
        if "d_values" in values:
            values["d_values"] = {k: tuple(v) for k, v in values["d_values"].items()}
        if "params" in values:
            values["params"] = {
                k: [tuple(str(p) for p in row) for row in rows]
                for k, rows in values["params"].items()
            }
        values["q_values"] = tuple(str(q) for q in values.get("q_values", DEFAULT_Q_VALUES))
        return cls(**values)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as handle:
                data = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read sweep config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"sweep config {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self):
        data = asdict(self)
        data["params"] = {k: [list(row) for row in rows] for k, rows in self.params.items()}
        data["d_values"] = {k: list(v) for k, v in self.d_values.items()}
        for key in ("suites", "families", "q_values", "twists"):
            data[key] = list(data[key])
        return data

    def d_range(self, family):
        return tuple(self.d_values.get(family, DEFAULT_D_RANGE[family]))

    def validate(self):
        # imported here: the suite registry imports this module
        from awdaha.harness.suites import CRITERION_SUITES, SUITES

        if not self.suites:
            raise ConfigError("sweep config lists no suites")
        for name in self.suites:
            if name not in SUITES:
                raise ConfigError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
        for family in self.families:
            if family not in FAMILIES:
                raise ConfigError(f"unknown family {family!r}")
        for family, ds in self.d_values.items():
            if family not in FAMILIES:
                raise ConfigError(f"d_values names unknown family {family!r}")
            for d in ds:
                if not isinstance(d, int) or d < 0:
                    raise ConfigError(f"d values must be nonnegative integers, got {d!r}")
                if family == "E" and d % 2 != 1:
                    raise ConfigError(f"E family needs odd d, got {d}")
                if family == "O" and d % 2 != 0:
                    raise ConfigError(f"O family needs even d, got {d}")
        for q in self.q_values:
            try:
                ScalarField.from_text(q)
            except AwDahaError as exc:
                raise ConfigError(f"bad q value {q!r}: {exc}") from exc
        for eps in self.twists:
            if eps not in (0, 1, 2, 3):
                raise ConfigError(f"twist labels must be 0..3, got {eps!r}")
        if not isinstance(self.samples, int) or self.samples < 0:
            raise ConfigError(f"samples must be a nonnegative integer, got {self.samples!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError(f"workers must be a positive integer, got {self.workers!r}")

        criterion_runs = [s for s in self.suites if s in CRITERION_SUITES]
        if criterion_runs and not self.boundary:
            raise ConfigError(
                f"suites {', '.join(criterion_runs)} need constructed boundary points; "
                "set boundary to true"
            )
        for name in criterion_runs:
            families = [f for f in self.families if f in SUITES[name].families]
            for family in families:
                if not any(d >= BOUNDARY_MIN_D[family] for d in self.d_range(family)):
                    raise ConfigError(
                        f"suite {name} on family {family} needs some d >= "
                        f"{BOUNDARY_MIN_D[family]} to host a predicate-false point"
                    )
