"""The compiled kernels must be bit-identical to the pure-Python reference
on both coefficient rings."""

import random

import pytest

from glaisher import _kernels_py
from glaisher._backend import backend_name
from glaisher.ring import CycInt, cyc_root_power

try:
    from glaisher import _kernels  # compiled
except ImportError:
    _kernels = None

needs_compiled = pytest.mark.skipif(
    _kernels is None, reason="compiled kernels not built"
)


def test_backend_name_is_known():
    assert backend_name() in ("c", "python")


def _int_lists(rng, n):
    return [rng.randint(-50, 50) for _ in range(n)]


def _cyc_lists(rng, m, n):
    return [CycInt(m, tuple(rng.randint(-5, 5) for _ in range(2)))
            for _ in range(n)]


@needs_compiled
def test_conv_truncated_matches():
    rng = random.Random(11)
    for _ in range(10):
        a, b = _int_lists(rng, 40), _int_lists(rng, 40)
        assert _kernels.conv_truncated(a, b, 39, 0) == \
            _kernels_py.conv_truncated(a, b, 39, 0)


@needs_compiled
def test_factor_kernels_match_int():
    rng = random.Random(12)
    for u in (1, -1, 3):
        for k in (1, 2, 7):
            base = _int_lists(rng, 50)
            c1, c2 = list(base), list(base)
            _kernels.mul_one_minus_uqk(c1, u, k)
            _kernels_py.mul_one_minus_uqk(c2, u, k)
            assert c1 == c2
            _kernels.div_one_minus_uqk(c1, u, k)
            _kernels_py.div_one_minus_uqk(c2, u, k)
            assert c1 == c2
            assert c1 == base  # mul then div restores


@needs_compiled
def test_factor_kernels_match_cyclotomic():
    rng = random.Random(13)
    w = cyc_root_power(3, 1)
    base = _cyc_lists(rng, 3, 30)
    c1, c2 = list(base), list(base)
    for kern in (_kernels.mul_one_minus_uqk,):
        kern(c1, w, 2)
    _kernels_py.mul_one_minus_uqk(c2, w, 2)
    assert c1 == c2


@needs_compiled
def test_add_scaled_shifted_matches():
    rng = random.Random(14)
    for scale in (1, -2):
        acc1, acc2 = _int_lists(rng, 30), None
        acc2 = list(acc1)
        src = _int_lists(rng, 20)
        _kernels.add_scaled_shifted(acc1, src, 15, scale)
        _kernels_py.add_scaled_shifted(acc2, src, 15, scale)
        assert acc1 == acc2


@needs_compiled
def test_factor_exponent_validation():
    for kern in (_kernels, _kernels_py):
        with pytest.raises(ValueError):
            kern.mul_one_minus_uqk([1, 0], 1, 0)
        with pytest.raises(ValueError):
            kern.div_one_minus_uqk([1, 0], 1, 0)


def test_pure_kernels_shift_truncates():
    acc = [0, 0, 0]
    _kernels_py.add_scaled_shifted(acc, [5, 5, 5], 2, 1)
    assert acc == [0, 0, 5]


def test_import_falls_back_without_extension(tmp_path):
    # simulate an install where the compiled module never built: the
    # package must import, select the pure backend, and still be right
    import subprocess
    import sys
    from pathlib import Path

    src = Path(__file__).resolve().parents[1] / "src"
    code = (
        "import sys\n"
        "sys.modules['glaisher._kernels'] = None\n"  # makes the import raise
        "from glaisher import backend_name, epsilon\n"
        "assert backend_name() == 'python'\n"
        "assert epsilon(3, 12, 'definition').coeffs == "
        "(2, -1, -2, 0, -1, 0, 0, 1, 0, 0, 0, 2, 0)\n"
        "print('ok')\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"PYTHONPATH": str(src), "PATH": "/usr/bin:/bin"},
        capture_output=True, text=True,
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "ok"
