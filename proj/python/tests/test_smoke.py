import pytest

import hsqcount as hc

JORDAN_1_1 = '{"kind": "quiver", "vertices": 1, "edges": [[1, 1]], "w": [1], "v": [1]}'


def test_toric_polynomials():
    assert hc.toric_count([[1, 1]]) == {1: 1, 2: 1}
    assert hc.toric_poincare([[1, 1]]) == {0: 1, 2: 1}
    assert hc.toric_count([[1, 0, 1], [0, 1, 1]]) == {1: 2, 2: 1}
    assert hc.toric_poincare([[1, 0, 1], [0, 1, 1]]) == {0: 1, 2: 2}
    assert hc.toric_h_dual([[1, 0, 1], [0, 1, 1]]) == {0: 1, 1: 2}


def test_adhm_polynomials():
    assert hc.adhm_count(1, 1) == {2: 1}
    assert hc.adhm_count(2, 2) == {5: 1, 6: 2, 7: 1, 8: 1}
    assert hc.adhm_count(3, 0) == {}
    assert hc.adhm_poincare(0, 1) == {0: 1}
    assert hc.adhm_poincare(4, 1) == {0: 1, 2: 1, 4: 2, 6: 1}


def test_quiver_polynomials():
    assert hc.quiver_count(2, [(0, 1)], [1, 1], [1, 1]) == {1: 2, 2: 1}
    assert hc.quiver_poincare(2, [(0, 1)], [1, 1], [1, 1]) == {0: 1, 2: 2}
    assert hc.quiver_dimension(2, [(0, 1)], [1, 1], [1, 1]) == 2
    assert hc.quiver_count(1, [(0, 0)], [1], [2]) == hc.adhm_count(2, 1)


def test_oracle_counts():
    assert hc.brute_force_count(JORDAN_1_1, 3) == 18
    assert hc.character_sum_count(JORDAN_1_1, 3) == 18
    assert hc.interpolate_count(JORDAN_1_1, [2, 3, 5]) == {2: 1}
    assert hc.is_good_prime(JORDAN_1_1, 2)
    # dict instances are accepted too
    inst = {"kind": "toric", "matrix": [[1, 1]]}
    assert hc.brute_force_count(inst, 3) == hc.character_sum_count(inst, 3)


def test_validation_errors_become_value_errors():
    with pytest.raises(ValueError):
        hc.adhm_count(0, 1)
    with pytest.raises(ValueError):
        hc.toric_count([[1, 1], [2, 2]])
    with pytest.raises(ValueError):
        hc.brute_force_count(JORDAN_1_1, 4)


def test_cli_driver_roundtrip():
    status, out, err = hc.run_cli(["toric", "--inline", "[[1,1]]"])
    assert status == 0
    assert "count: q^1 + q^2" in out
    assert err == ""
    status, _, err = hc.run_cli(["toric", "--inline", "[[1,1]", "--format", "json"])
    assert status == 1
    assert err != ""
