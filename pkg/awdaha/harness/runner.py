"""
Running suites over a sweep grid.

Grid points are generated per (suite, family, d, q) cell from a seeded
generator keyed on the cell, so adding a suite or a q value never moves
the points of another cell. Points are evaluated independently (in a
process pool when workers > 1) and the results are sorted before they
are reported.
"""

import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field

from awdaha import __version__
from awdaha.analysis.predicates import criterion
from awdaha.errors import AwDahaError, ConfigError, UnknownPoint
from awdaha.harness.grid import (
    GridPoint,
    parse_point_id,
    point_from_spec,
    sample_spec,
)
from awdaha.harness.suites import SUITES, evaluate_point
from awdaha.realizations import make_spec
from awdaha.reports import VerificationReport
from awdaha.scalar_field import ScalarField

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    config: dict
    points: list
    wall_time: float = 0.0
    summary: dict = dataclass_field(default_factory=dict)

    @property
    def passed(self):
        return all(entry["report"]["pass"] for entry in self.points)

    @property
    def failures(self):
        return [entry for entry in self.points if not entry["report"]["pass"]]

    def to_dict(self, include_timing=True):
        data = {
            "version": __version__,
            "config": self.config,
            "summary": self.summary,
            "points": self.points,
        }
        if include_timing:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def to_json(self, include_timing=True):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def write(self, path):
        with open(path, "w") as handle:
            handle.write(self.to_json())
            handle.write("\n")
        logger.info("wrote %d point reports to %s", len(self.points), path)


def cell_rng(seed, suite, family, d, q):
    return random.Random(f"{seed}|{suite}|{family}|{d}|{q}")


def _explicit_specs(config, family, d, field, used):
    """Explicit parameter rows that describe a valid module at this d."""
    specs = []
    for index, row in enumerate(config.params.get(family, [])):
        try:
            spec = make_spec(family, d, [field.parse(p) for p in row], field)
        except AwDahaError as exc:
            logger.debug("explicit %s row %s skipped at d=%d: %s", family, row, d, exc)
            continue
        used.add((family, index))
        specs.append(spec)
    return specs


def _cell_specs(suite, config, family, d, field, rng, used):
    """(origin, spec) pairs for one grid cell."""
    if suite.constructor is not None:
        return [("constructed", spec) for spec in suite.constructor(d, field, rng)]
    accept = criterion if suite.irreducible_only else None
    cell = [("explicit", spec) for spec in _explicit_specs(config, family, d, field, used)
            if accept is None or accept(spec)]
    cell += [("sampled", sample_spec(family, d, field, rng, accept))
             for _ in range(config.samples)]
    if suite.boundary is not None and config.boundary:
        cell += [("constructed", spec) for spec in suite.boundary(family, d, field, rng)]
    return cell


def generate_grid(config):
    """Every GridPoint the config asks for, sorted."""
    points = []
    used = set()
    for name in config.suites:
        suite = SUITES[name]
        for family in config.families:
            if family not in suite.families:
                continue
            constructed = 0
            for d in config.d_range(family):
                if not suite.accepts_d(family, d):
                    continue
                for q in config.q_values:
                    field = ScalarField.from_text(q)
                    rng = cell_rng(config.seed, name, family, d, q)
                    if family == "Vd":
                        twists = (0,)
                    elif suite.twisted:
                        twists = tuple(config.twists)
                    else:
                        twists = (suite.fixed_twist,)
                    for origin, spec in _cell_specs(suite, config, family, d, field, rng, used):
                        constructed += origin == "constructed"
                        points.extend(point_from_spec(name, spec, eps, origin) for eps in twists)
            if suite.boundary is not None and config.boundary and not constructed:
                raise ConfigError(
                    f"suite {name} on family {family}: no d in {config.d_range(family)} "
                    "admits a constructed predicate-false point"
                )
    for family, rows in sorted(config.params.items()):
        for index, row in enumerate(rows):
            if (family, index) not in used and any(
                family in SUITES[name].families and SUITES[name].constructor is None
                for name in config.suites
            ):
                raise ConfigError(f"explicit {family} parameters {list(row)} are valid at no configured d")
    return sorted(points, key=GridPoint.sort_key)


def _evaluate_id(text):
    # process-pool entry point: ids are plain strings
    return replay(text).to_dict()


def _has_known_exception(report):
    return any(entry.get("known_exception") for entry in report["detail"].get("entries", ()))


def _summarise(entries):
    summary = {"points": len(entries), "passed": 0, "failed": 0, "known_exceptions": 0,
               "by_suite": {}}
    for entry in entries:
        suite = entry["id"].split("|", 1)[0]
        bucket = summary["by_suite"].setdefault(
            suite, {"points": 0, "passed": 0, "failed": 0, "known_exceptions": 0})
        key = "passed" if entry["report"]["pass"] else "failed"
        for counts in (summary, bucket):
            counts[key] += 1
            if _has_known_exception(entry["report"]):
                counts["known_exceptions"] += 1
        bucket["points"] += 1
    return summary


def run_suite(config):
    """
    Evaluate every requested suite at every grid point of config.

    Raises:
        ConfigError: the grid cannot be built from config
    """
    start = time.perf_counter()
    points = generate_grid(config)
    ids = [point.id for point in points]
    logger.info("running %d grid points for suites %s", len(ids), ", ".join(config.suites))

    if config.workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(_evaluate_id, ids))
    else:
        reports = [evaluate_point(point).to_dict() for point in points]

    entries = [
        {"id": point.id, "origin": point.origin, "report": report}
        for point, report in zip(points, reports)
    ]
    summary = _summarise(entries)
    for suite, counts in sorted(summary["by_suite"].items()):
        logger.info("%s: %d/%d passed, %d known exceptions", suite, counts["passed"],
                    counts["points"], counts["known_exceptions"])
    return SuiteResult(config.to_dict(), entries, time.perf_counter() - start, summary)


def replay(text):
    """
    Recompute exactly one grid point from its id.

    Raises:
        UnknownPoint: the id is malformed, names an unknown suite, or its
            parameters do not describe a valid module
    """
    point = parse_point_id(text)
    suite = SUITES.get(point.suite)
    if suite is None:
        raise UnknownPoint(f"point id {text!r} names unknown suite {point.suite!r}")
    if point.family not in suite.families:
        raise UnknownPoint(f"suite {point.suite} does not run on family {point.family}")
    if point.eps not in (0, 1, 2, 3):
        raise UnknownPoint(f"point id {text!r}: twist label must be 0..3")
    try:
        point.spec()
    except AwDahaError as exc:
        raise UnknownPoint(f"point id {text!r} does not describe a module: {exc}") from exc
    return evaluate_point(point)


def load_result(path):
    """Point reports of a saved SuiteResult, keyed by point id."""
    with open(path) as handle:
        data = json.load(handle)
    return {entry["id"]: VerificationReport.from_dict(entry["report"]) for entry in data["points"]}
