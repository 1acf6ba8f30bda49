import os
import subprocess
import sys

import numpy as np
import pytest

from braidbelts import _kernels

from oracles import all_words, brute_evaluate

BACKENDS = _kernels.available_backends()


def test_both_backends_present():
    # numba is a declared dependency, so both should load here
    assert BACKENDS == ("numba", "numpy")


@pytest.mark.parametrize("name", BACKENDS)
def test_random_codes_match_brute(name):
    rng = np.random.default_rng(7)
    for length in (0, 1, 4, 9):
        codes = rng.integers(0, 6, size=(200, length))
        start = rng.integers(-6, 7, size=3)
        got = _kernels.evaluate_codes(codes, start, name)
        for row, out in zip(codes, got):
            tokens = [_kernels.CODE_TOKENS[c] for c in row]
            assert tuple(out) == brute_evaluate(tokens, tuple(start))


@pytest.mark.parametrize("name", BACKENDS)
def test_index_range_matches_enumeration(name):
    length = 4
    got = _kernels.evaluate_index_range(length, 0, 6**length, name)
    expected = [brute_evaluate(tok) for tok in all_words(length)]
    assert [tuple(r) for r in got] == expected


def test_backends_agree_on_slice():
    if len(BACKENDS) < 2:
        pytest.skip("numba unavailable")
    a = _kernels.evaluate_index_range(7, 1000, 50000, "numba")
    b = _kernels.evaluate_index_range(7, 1000, 50000, "numpy")
    assert np.array_equal(a, b)


def test_codes_for_indices_inverts_enumeration():
    idx = [0, 1, 6, 215]
    codes = _kernels.codes_for_indices(3, idx)
    assert codes.tolist() == [[0, 0, 0], [0, 0, 1], [0, 1, 0], [5, 5, 5]]
    direct = _kernels.evaluate_codes(codes)
    ranged = _kernels.evaluate_index_range(3, 0, 216)[idx]
    assert np.array_equal(direct, ranged)


def test_validation():
    with pytest.raises(ValueError):
        _kernels.evaluate_codes(np.array([[0, 6]]))
    with pytest.raises(ValueError):
        _kernels.evaluate_codes(np.array([0, 1]))
    with pytest.raises(ValueError):
        _kernels.evaluate_index_range(3, 0, 217)
    with pytest.raises(ValueError):
        _kernels.evaluate_index_range(_kernels.MAX_ENUM_LENGTH + 1, 0, 1)
    with pytest.raises(ValueError):
        _kernels.evaluate_index_range(2, 0, 1, "fortran")


def test_env_flag_forces_numpy():
    code = "from braidbelts import _kernels; print(_kernels.backend())"
    env = dict(os.environ, BRAIDBELTS_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "numpy"
    env.pop("BRAIDBELTS_NO_NUMBA")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == BACKENDS[0]
