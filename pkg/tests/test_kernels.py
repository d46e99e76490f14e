import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from whitehouse import _kernels_py as py
from whitehouse import kernels
from whitehouse.perms import symmetric_group

try:
    from whitehouse import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

ints = st.integers(-50, 50)


@st.composite
def int_matrices(draw):
    r = draw(st.integers(0, 7))
    c = draw(st.integers(1, 7))
    return draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=r, max_size=r)), c


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_python_rref_is_canonical(data):
    rows, c = data
    out, piv = py.rref_int([list(r) for r in rows], c)
    assert len(out) == len(piv)
    for row, p in zip(out, piv):
        assert row[p] > 0
        assert all(row[k] == 0 for k in range(p))
        assert all(o[p] == 0 for o in out if o is not row)


@needs_ext
@settings(max_examples=300, deadline=None)
@given(int_matrices())
def test_backends_agree_on_rref(data):
    rows, c = data
    assert cy.rref_int([list(r) for r in rows], c) == py.rref_int([list(r) for r in rows], c)


@needs_ext
def test_backends_agree_on_huge_entries():
    rows = [[2 ** 70 + 1, 3, 5], [7, 2 ** 65, 11], [13, 17, 2 ** 80]]
    assert cy.rref_int([r[:] for r in rows], 3) == py.rref_int([r[:] for r in rows], 3)


@needs_ext
@settings(max_examples=100, deadline=None)
@given(st.data())
def test_backends_agree_on_convolve(data):
    G = symmetric_group(4)
    a = data.draw(st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=24, max_size=24))
    b = data.draw(st.lists(ints, min_size=24, max_size=24))
    assert cy.convolve(a, b, G.table) == py.convolve(a, b, G.table_rows)


def test_convolve_unit():
    G = symmetric_group(3)
    e = [0] * 6
    e[G.identity_index] = 1
    x = list(range(6))
    assert py.convolve(e, x, G.table_rows) == x


def test_pure_python_switch():
    code = "from whitehouse import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, WHITEHOUSE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND in ("python", "cython")


def test_suite_runs_on_pure_python_backend():
    env = dict(os.environ, WHITEHOUSE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-m", "whitehouse", "verify", "--n", "2..4",
                          "--format", "text"], env=env, capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
    assert "0 failing" in out.stdout
