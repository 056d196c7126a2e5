"""The compiled loop kernels and the numpy kernels must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from translatio import _kernels, build_root_system
from translatio import repweights

SYSTEMS = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def _cartan(label):
    return build_root_system(label)._cartan_np


@pytest.mark.parametrize("label", SYSTEMS)
def test_orbit_paths_agree(label):
    R = build_root_system(label)
    rho = np.ones(R.rank, dtype=np.int64)
    bound = int(max(R.pairing(R.rho(), a) for a in R.positive_roots))
    a = _kernels.orbit_nb(rho, R._cartan_np, bound, R.group_order())
    b = _kernels.orbit_np(rho, R._cartan_np, bound, R.group_order())
    for x, y in zip(a, b):
        np.testing.assert_array_equal(x, y)
    assert a[0].shape[0] == R.group_order()


def test_orbit_capacity_overflow_returns_empty():
    cartan = _cartan("A3")
    rho = np.ones(3, dtype=np.int64)
    for fn in (_kernels.orbit_nb, _kernels.orbit_np):
        pts, _, _ = fn(rho, cartan, 3, 10)
        assert pts.shape[0] == 0


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_to_dominant_paths_agree(label, data):
    R = build_root_system(label)
    rows = data.draw(st.lists(st.lists(st.integers(-6, 6), min_size=R.rank, max_size=R.rank),
                              min_size=1, max_size=12))
    vecs = np.array(rows, dtype=np.int64)
    a = _kernels.to_dominant_nb(vecs, R._cartan_np)
    b = _kernels.to_dominant_np(vecs, R._cartan_np)
    np.testing.assert_array_equal(a, b)
    assert (a >= 0).all()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3", "B3"]), st.data())
def test_box_and_freudenthal_paths_agree(label, data):
    R = build_root_system(label)
    lam = np.array(data.draw(st.lists(st.integers(0, 3), min_size=R.rank, max_size=R.rank)),
                   dtype=np.int64)
    limits = np.array([int(c) for c in R.to_root_coords(lam.tolist())], dtype=np.int64)
    w1, c1 = _kernels.box_dominant_nb(lam, R._cartan_np, limits)
    w2, c2 = _kernels.box_dominant_np(lam, R._cartan_np, limits)
    np.testing.assert_array_equal(w1, w2)
    np.testing.assert_array_equal(c1, c2)

    dom, depth = repweights.dominant_weights(R, lam.tolist())
    bound = int(max([0] + [R.pairing(lam.tolist(), a) for a in R.positive_roots]))
    keys = _kernels.keys_np(dom, bound)
    np.testing.assert_array_equal(keys, _kernels.keys_nb(dom, bound))
    order = np.argsort(keys, kind="mergesort")
    args = (dom, depth, keys[order], order.astype(np.int64), lam, np.ones(R.rank, dtype=np.int64),
            np.array([a.weight for a in R.positive_roots], dtype=np.int64),
            np.array([a.root_coords for a in R.positive_roots], dtype=np.int64),
            np.array(R.symmetrizer, dtype=np.int64), R._cartan_np, bound)
    np.testing.assert_array_equal(_kernels.freudenthal_nb(*args), _kernels.freudenthal_np(*args))


def test_radix_guard():
    assert _kernels.radix_ok(10, 8)
    assert not _kernels.radix_ok(10**4, 8)


def test_env_flag_selects_numpy_path():
    code = ("from translatio import _kernels as k; "
            "print(k.USE_NUMBA, k.orbit is k.orbit_np, k.freudenthal is k.freudenthal_np)")
    env = dict(os.environ, TRANSLATIO_JIT="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == ["False", "True", "True"]


def test_numpy_path_end_to_end():
    code = ("from translatio import build_root_system, repweights as rw; "
            "R = build_root_system('B3'); "
            "print(rw.weight_multiset(R, (1, 1, 1)).dimension(), len(R.weyl_group()))")
    env = dict(os.environ, TRANSLATIO_JIT="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    assert out == [str(repweights.weyl_dimension(build_root_system("B3"), (1, 1, 1))), "48"]
