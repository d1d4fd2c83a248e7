import numpy as np
import pytest

import monopath as mp


def test_worked_two_column_example():
    c = mp.CostMatrix(np.array([[0.9, 0.9], [0.1, 0.0], [0.0, 1.0]]))
    out = mp.solve(c, mp.SolverParams(w=1))
    assert out.result.path == [3, 2]
    assert out.result.total_cost == pytest.approx(0.014576819110409645, rel=1e-12)


def test_defaults_match_the_documented_configuration():
    p = mp.SolverParams()
    assert (p.w, p.beta, p.mu) == (5, 7.0, 16.0)
    assert p.start_mode == mp.StartMode.FreeStart


def test_paths_are_monotone_and_bottom_start_is_honoured():
    rng = np.random.default_rng(17)
    c = mp.CostMatrix(rng.uniform(0.0, 1.0, size=(3, 15)))
    out = mp.solve(c, mp.SolverParams(w=2, start_mode=mp.StartMode.EnforcedBottomStart))
    path = out.result.path
    assert len(path) == 15
    assert path[0] == 3
    assert all(a - b in (0, 1) for a, b in zip(path, path[1:]))


def test_solver_agrees_with_the_exhaustive_oracle():
    rng = np.random.default_rng(23)
    for _ in range(5):
        c = mp.CostMatrix(rng.uniform(0.0, 1.0, size=(3, 11)))
        params = mp.SolverParams(w=2)
        dp = mp.solve(c, params)
        bf = mp.brute_force_solve(c, params)
        assert dp.result.total_cost == pytest.approx(bf.total_cost, rel=1e-9, abs=1e-12)


def test_intermediate_fields_round_trip_to_numpy():
    rng = np.random.default_rng(29)
    values = rng.uniform(0.0, 1.0, size=(4, 9))
    c = mp.CostMatrix(values)
    np.testing.assert_array_equal(c.to_numpy(), values)

    out = mp.solve(c, mp.SolverParams(w=2))
    d = out.derivative.to_numpy()
    s = out.strength.to_numpy()
    assert d.shape == s.shape == (4, 9)
    assert ((0.0 <= d) & (d <= 1.0)).all()
    assert ((0.5 <= s) & (s < 1.0)).all()
    assert out.tables.q.shape == (4, 9)
    assert out.tables.p.dtype.kind == "u"


def test_enumeration_count_matches_the_formula():
    n = 7
    expected = 1 + (n - 1) + (n - 1) * (n - 2) // 2
    paths = mp.enumerate_paths(3, n, mp.StartMode.EnforcedBottomStart)
    assert mp.count_paths(3, n, mp.StartMode.EnforcedBottomStart) == expected
    assert len(paths) == expected
    assert len({tuple(p) for p in paths}) == expected


def test_errors_surface_as_python_exceptions():
    with pytest.raises(mp.ValueOutOfRange):
        mp.CostMatrix(np.array([[0.0, 1.5], [0.0, 0.0]]))
    with pytest.raises(mp.WindowTooLarge):
        mp.solve(mp.CostMatrix(np.zeros((3, 9))), mp.SolverParams(w=5))
    with pytest.raises(mp.InstanceTooLarge):
        mp.enumerate_paths(3, 30, mp.StartMode.FreeStart, cap=10)
    assert issubclass(mp.WindowTooLarge, mp.Error)


def test_reading_files(tmp_path):
    csv = tmp_path / "m.csv"
    csv.write_text("0,0.5\n0.5,0\n1,1\n")
    c = mp.read_csv(str(csv))
    assert (c.rows, c.cols) == (3, 2)
    assert c.to_numpy()[0, 1] == 0.5

    pgm = tmp_path / "m.pgm"
    pgm.write_bytes(b"P5\n2 3\n255\n" + bytes([255, 0, 128, 64, 255, 0]))
    img = mp.read_pgm(str(pgm))
    assert (img.rows, img.cols) == (3, 2)
    assert img.to_numpy()[0, 0] == 0.0
    assert img.to_numpy()[0, 1] == 1.0
