import json
import random

import pytest

from awdaha import linalg
from awdaha.analysis.predicates import criterion
from awdaha.errors import ConfigError, UnknownPoint
from awdaha.harness import SweepConfig, generate_grid, load_result, replay, run_suite
from awdaha.harness import grid, suites
from awdaha.realizations import build, make_spec, push_to_aw


def config(**overrides):
    data = {
        "suites": ["daha_relations"],
        "families": ["E"],
        "d_values": {"E": [1, 3]},
        "q_values": ["2"],
        "samples": 5,
        "twists": [0],
    }
    data.update(overrides)
    return SweepConfig.from_dict(data)


def test_grid_size():
    result = run_suite(config())
    assert result.summary["points"] == 10
    assert result.summary["by_suite"]["daha_relations"]["passed"] == 10
    assert result.passed
    assert result.failures == []


def test_runs_are_deterministic():
    first = run_suite(config(twists=[0, 1]))
    second = run_suite(config(twists=[0, 1]))
    assert first.to_json(include_timing=False) == second.to_json(include_timing=False)
    assert "wall_time" not in first.to_dict(include_timing=False)


def test_seed_changes_the_grid():
    ids = [p.id for p in generate_grid(config())]
    other = [p.id for p in generate_grid(config(seed=1))]
    assert ids != other


def test_adding_a_suite_keeps_other_cells():
    alone = [p.id for p in generate_grid(config())]
    both = [p.id for p in generate_grid(config(suites=["daha_relations", "determinants"]))]
    assert [i for i in both if i.startswith("daha_relations|")] == alone


def test_replay_reproduces_a_point():
    result = run_suite(config(samples=1))
    entry = result.points[0]
    assert replay(entry["id"]).to_dict() == entry["report"]


@pytest.mark.parametrize("text", [
    "garbage",
    "nosuch|E|d=1|q=2|1/4,2,3,5|eps=0",
    "determinants|Vd|d=1|q=2|2,3,5|eps=0",
    "determinants|E|d=1|q=2|1/4,2,3,5|eps=7",
    "determinants|E|d=1|q=2|1,2,3,5|eps=0",
    "determinants|E|d=x|q=2|1/4,2,3,5|eps=0",
    "determinants|E|d=1|q=2||eps=0",
])
def test_replay_rejects_bad_ids(text):
    with pytest.raises(UnknownPoint):
        replay(text)


def test_point_ids_round_trip():
    point = grid.GridPoint("determinants", "O", 2, "2", ("2", "3", "5", "1/240"), 1)
    parsed = grid.parse_point_id(point.id)
    assert parsed == point
    assert point.id == "determinants|O|d=2|q=2|2,3,5,1/240|eps=1"


@pytest.mark.parametrize("overrides", [
    {"colour": "blue"},
    {"suites": ["nosuch"]},
    {"suites": []},
    {"families": ["F"]},
    {"d_values": {"E": [2]}},
    {"d_values": {"O": [1]}},
    {"q_values": ["1"]},
    {"q_values": ["0"]},
    {"twists": [4]},
    {"samples": -1},
    {"workers": 0},
    {"suites": ["irreducibility"], "boundary": False},
    {"suites": ["irreducibility"], "families": ["O"], "d_values": {"O": [0]}},
])
def test_bad_configs(overrides):
    with pytest.raises(ConfigError):
        config(**overrides)


def test_config_needs_suites():
    with pytest.raises(ConfigError):
        SweepConfig.from_dict({"families": ["E"]})
    with pytest.raises(ConfigError):
        SweepConfig.from_dict(["daha_relations"])


def test_config_files(tmp_path):
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(config().to_dict()))
    assert SweepConfig.from_file(path) == config()
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        SweepConfig.from_file(path)
    with pytest.raises(ConfigError):
        SweepConfig.from_file(tmp_path / "missing.json")


def test_explicit_rows_are_used_where_valid():
    points = generate_grid(config(samples=0, params={"E": [["1/4", "2", "3", "5"]]}))
    assert [(p.d, p.origin) for p in points] == [(3, "explicit")]
    with pytest.raises(ConfigError):
        generate_grid(config(samples=0, params={"E": [["1", "2", "3", "5"]]}))


def test_criterion_boundary_points_fail_the_criterion(q2):
    rng = random.Random(3)
    for family, d in (("Vd", 1), ("Vd", 3), ("E", 3), ("O", 2), ("O", 4)):
        specs = grid.criterion_boundary(family, d, q2, rng)
        assert specs
        assert not any(criterion(spec) for spec in specs)
    assert grid.criterion_boundary("O", 0, q2, rng) == []


def test_predicate_boundary_points_are_irreducible(q2):
    rng = random.Random(5)
    for family, d in (("Vd", 2), ("E", 3), ("O", 4)):
        specs = grid.predicate_boundary(family, d, q2, rng)
        assert specs
        assert all(criterion(spec) for spec in specs)


def test_irreducibility_with_constructed_points():
    result = run_suite(config(
        suites=["irreducibility"], families=["Vd", "E"],
        d_values={"Vd": [1, 2], "E": [1, 3]}, samples=2,
    ))
    assert result.passed, [e["id"] for e in result.failures]
    constructed = [e for e in result.points if e["origin"] == "constructed"]
    assert constructed
    assert all(not e["report"]["detail"]["verdict"]["by_criterion"] for e in constructed)


def test_counterexample_suites():
    result = run_suite(config(
        suites=["counterexample_even", "counterexample_odd"], families=["E", "O"],
        d_values={"E": [1, 3], "O": [0, 2]},
    ))
    assert result.passed, [e["id"] for e in result.failures]
    ids = [e["id"] for e in result.points]
    assert len(ids) == 2
    assert all(i.endswith("eps=2") for i in ids if i.startswith("counterexample_even"))
    assert not any("|d=0|" in i or "|d=1|" in i for i in ids)


def test_result_files(tmp_path):
    result = run_suite(config(samples=1))
    path = tmp_path / "result.json"
    result.write(path)
    loaded = load_result(path)
    assert set(loaded) == {e["id"] for e in result.points}
    assert all(report.passed for report in loaded.values())


@pytest.mark.slow
def test_worker_pool_matches_serial_run():
    serial = run_suite(config(suites=["determinants", "twist_discriminant"], twists=[0, 1, 2, 3]))
    pooled = run_suite(config(suites=["determinants", "twist_discriminant"], twists=[0, 1, 2, 3],
                              workers=2))
    assert json.loads(serial.to_json(False))["points"] == json.loads(pooled.to_json(False))["points"]


@pytest.mark.slow
def test_predicate_battery_sweep():
    result = run_suite(config(
        suites=["predicate_battery"], families=["Vd", "E", "O"],
        d_values={"Vd": [1, 2], "E": [1, 3], "O": [2, 4]}, samples=1,
    ))
    assert result.passed, [e["id"] for e in result.failures]


@pytest.mark.parametrize("suite", [
    "diagonalizable_iff_factors",
    "leonard_pairs_on_factors",
    "leonard_triples_on_factors",
])
def test_factor_suites_with_constructed_points(suite):
    result = run_suite(config(
        suites=[suite], families=["E", "O"],
        d_values={"E": [3], "O": [2]}, samples=1, twists=[0, 1],
    ))
    assert result.passed, [e["id"] for e in result.failures]
    constructed = [e for e in result.points if e["origin"] == "constructed"]
    # E boundary points carry k_i^2 = q^(d-1) and q^(d-3)
    assert any("|E|" in e["id"] for e in constructed)
    assert any("|O|" in e["id"] for e in constructed)


def test_factor_ladder_gap_is_reported_as_known_exception(q2):
    spec = make_spec("E", 3, ["-1/4", "224/5", -1, -2], q2)
    assert criterion(spec)
    aw = push_to_aw(build(spec, 2))
    assert not linalg.is_diagonalizable(aw.generators["C"])

    report = suites.diagonalizable_iff_factors(spec, 2)
    assert report.detail["ladder_gaps"] == ["C"]
    assert report.detail["factor_dims"] == [2, 2]
    entry = next(e for e in report.detail["entries"] if e["name"] == "C")
    assert entry["pass"]
    assert entry["known_exception"]
    assert entry["multiplicity_free_on_factors"]
    assert not entry["diagonalizable"]


def test_known_exceptions_are_counted():
    result = run_suite(config(
        suites=["diagonalizable_iff_factors"],
        params={"E": [["-1/4", "224/5", "-1", "-2"]]}, samples=0, twists=[2],
        d_values={"E": [3]},
    ))
    assert result.passed, [e["id"] for e in result.failures]
    flagged = [
        e for e in result.points
        if any(entry["known_exception"] for entry in e["report"]["detail"]["entries"])
    ]
    explicit = next(e for e in result.points if e["origin"] == "explicit")
    assert explicit in flagged
    assert result.summary["known_exceptions"] == len(flagged)
    assert result.summary["by_suite"]["diagonalizable_iff_factors"]["known_exceptions"] == len(flagged)


def test_twisted_factor_predicate_at_d1():
    report = replay("predicate_battery|E|d=1|q=2|-1/2,-4/3,-40/3,1|eps=0")
    entry = next(e for e in report.detail["entries"]
                 if e["name"] == "e3_A_multiplicity_free_on_factors")
    assert entry["pass"]
    assert entry["predicate"] is True


def test_reports_carry_the_reference_field():
    data = run_suite(config(samples=1)).points[0]["report"]
    assert set(data) == {"check", "paper_ref", "pass", "detail"}
    assert data["paper_ref"]
