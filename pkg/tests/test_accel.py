import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvhskit import _accel
from pvhskit.repchar import clear_caches, decompose, symmetric_power, weight_system
from pvhskit.rootsys import build_root_system

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


@pytest.fixture
def both_paths():
    previous = _accel.numba_active()

    def run(fn):
        out = []
        for flag in (True, False):
            _accel.use_numba(flag)
            clear_caches()
            out.append(fn())
        return out

    yield run
    _accel.use_numba(previous)
    clear_caches()


def _as_pairs(result):
    keys, mults = result
    return keys.tolist(), mults.tolist()


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([50, 10**12]).flatmap(lambda top: st.lists(st.integers(0, top), max_size=60)),
    st.lists(st.integers(-3, 3), max_size=60),
)
def test_reduce_equivalence(keys, mults):
    # small key ranges take the dense accumulator, wide ones the sort
    n = min(len(keys), len(mults))
    k, m = np.array(keys[:n], dtype=np.int64), np.array(mults[:n], dtype=np.int64)
    assert _as_pairs(_accel._reduce_nb(k, m)) == _as_pairs(_accel._reduce_np(k, m))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 30), st.integers(1, 4)), max_size=20),
    st.lists(st.tuples(st.integers(0, 30), st.integers(-2, 2)), max_size=20),
)
def test_convolve_equivalence(a, b):
    ka = np.array([x for x, _ in a], dtype=np.int64)
    ma = np.array([y for _, y in a], dtype=np.int64)
    kb = np.array([x for x, _ in b], dtype=np.int64)
    mb = np.array([y for _, y in b], dtype=np.int64)
    assert _as_pairs(_accel._convolve_nb(ka, ma, kb, mb)) == _as_pairs(_accel._convolve_np(ka, ma, kb, mb))


@pytest.mark.parametrize(
    "family,rank,label",
    [("A", 3, (1, 1, 1)), ("B", 3, (1, 0, 1)), ("C", 3, (0, 2, 0)), ("D", 5, (0, 0, 0, 2, 0)), ("E6", 6, (1, 0, 0, 0, 0, 1))],
)
def test_weight_systems_agree(both_paths, family, rank, label):
    rs = build_root_system(family, rank)
    fast, slow = both_paths(lambda: weight_system(rs, label))
    assert fast == slow


def test_plethysm_agrees(both_paths):
    rs = build_root_system("D", 5)
    fast, slow = both_paths(lambda: decompose(symmetric_power(weight_system(rs, (0, 0, 0, 1, 0)), 3)))
    assert fast == slow


def test_use_numba_round_trip():
    previous = _accel.use_numba(False)
    try:
        assert not _accel.numba_active()
        assert _accel.use_numba(True) is False
        assert _accel.numba_active()
    finally:
        _accel.use_numba(previous)


def test_env_flag_disables_numba():
    env = dict(os.environ, PVHSKIT_DISABLE_NUMBA="1")
    code = "from pvhskit import _accel; print(_accel.numba_active())"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_pack_round_trip():
    rows = np.array([[-2, 3, 0], [1, -1, 4], [0, 0, 0]], dtype=np.int64)
    lo, hi = rows.min(axis=0), rows.max(axis=0)
    strides = _accel.make_strides(lo, hi)
    assert np.array_equal(_accel.unpack(_accel.pack(rows, lo, strides), lo, strides), rows)


def test_pack_overflow_guard():
    with pytest.raises(OverflowError):
        _accel.make_strides(np.zeros(8, dtype=np.int64), np.full(8, 10**3, dtype=np.int64))
