"""Smoke tests for the python bindings."""

import pytest

import chipfire


def test_stabilize_line():
    final, odometer = chipfire.stabilize({0: 5})
    assert final == {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1}
    assert odometer == {-1: 1, 0: 3, 1: 1}


def test_policies_agree():
    base = chipfire.stabilize({0: 9})
    assert chipfire.stabilize({0: 9}, policy="highest") == base
    assert chipfire.stabilize({0: 9}, policy="random", seed=42) == base


def test_fire_and_replay():
    assert chipfire.fire({0: 5}, 0) == {-1: 1, 0: 3, 1: 1}
    assert chipfire.replay({0: 5}, [0, 0, 1, -1, 0]) == {
        -2: 1, -1: 1, 0: 1, 1: 1, 2: 1}
    with pytest.raises(chipfire.ChipFireError):
        chipfire.replay({0: 5}, [0, 0, 0])
    assert chipfire.available_sites({-1: 2, 0: 3}) == [-1, 0]


def test_config_poset():
    p = chipfire.config_poset({0: 5})
    assert len(p) == 9
    assert len(p.covers) == 11
    assert p.labels[0] == "_5_"
    assert p.lattice and p.uld and not p.distributive


def test_move_poset():
    poset, moves = chipfire.move_poset({0: 5})
    assert len(poset) == 5
    assert (0, 1) in moves and (0, 3) in moves and (-1, 1) in moves


def test_join_irreducibles():
    assert set(chipfire.join_irreducibles({0: 5})) == {
        "_5_", "1_3_1", "10_3_01", "11_0_3", "3_0_11"}


def test_only_move_config():
    assert chipfire.only_move_config({0: 5}, 0, 3) == {-2: 1, 0: 3, 2: 1}


def test_verify_join_theorem():
    report = chipfire.verify_join_theorem({0: 6})
    assert report["passed"]
    assert report["move_count"] == 14


def test_multigraph():
    g = chipfire.FiringSystem.multigraph(3, [(0, 1, 1), (1, 2, 1)], sinks=[2])
    # After vertex 1 fires, vertex 0 (degree 1) fires its chip right back.
    final, odometer = chipfire.stabilize({1: 2}, graph=g)
    assert final == {1: 1, 2: 1}
    assert odometer == {0: 1, 1: 1}
    assert g.degree(1) == 2
    assert g.is_sink(2)


def test_verify_endgame():
    reports = chipfire.verify_endgame(3)
    assert [r["m"] for r in reports] == [1, 2, 3]
    assert all(r["passed"] for r in reports)
    assert reports[2]["config_count"] == 20


def test_counterexample():
    rows, violates = chipfire.counterexample(5)
    assert violates
    assert rows[0] == ("x", "10_3_01")


def test_invalid_extension_demo():
    demo = chipfire.invalid_extension_demo(5)
    assert demo["extension_count"] == 6
    assert demo["valid_count"] == 4
    assert demo["invalid_sites"] == [0, 0, 0, 1, -1]
    assert demo["fail_index"] == 2


def test_labeled_run():
    final, sorted_flag = chipfire.labeled_run(6, seed=1)
    assert sorted_flag
    assert sum(len(v) for v in final.values()) == 6


def test_parse_and_format():
    assert chipfire.parse_config("10_3_01") == {-2: 1, 0: 3, 2: 1}
    assert chipfire.format_config({-2: 1, 0: 3, 2: 1}) == "10_3_01"
    with pytest.raises(ValueError):
        chipfire.parse_config("0:-2")
