import os
import random
import subprocess
import sys

import pytest

from verlinde_bricks import _fallback, kernels
from verlinde_bricks.heisenberg import EElement
from verlinde_bricks.symplectic import Mod4Class, intersect4

try:
    from verlinde_bricks import _native
except ImportError:  # pragma: no cover - exercised only without a compiler
    _native = None

needs_native = pytest.mark.skipif(_native is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    forced = os.environ.get("VERLINDE_BRICKS_PURE_PYTHON", "") not in ("", "0")
    assert (kernels.BACKEND == "cython") == (_native is not None and not forced)


def test_pure_python_switch():
    env = dict(os.environ, VERLINDE_BRICKS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from verlinde_bricks import kernels; print(kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_fallback_mul_matches_presentation():
    # u^t rho_a with a in {0,1}^2g: code -> product of generators.
    rng = random.Random(2)
    for g in (1, 2, 3, 5):
        order = 4 << (2 * g)
        for _ in range(300):
            x, y = rng.randrange(order), rng.randrange(order)
            ex, ey = EElement.from_code(g, x), EElement.from_code(g, y)
            a = Mod4Class(g, ex.rep.coords) + Mod4Class(g, ey.rep.coords)
            # rho_a rho_b = u^(a.b) rho_(a+b)
            want = EElement.central(g, ex.phase + ey.phase + intersect4(ex.rep, ey.rep)) * EElement.rho(a)
            assert _fallback.e_mul_packed(x, y, g) == want.code


def test_fallback_exhaustive_associativity():
    assert _fallback.exhaustive_associativity(1) == 0


@needs_native
class TestParity:
    def test_mul(self):
        rng = random.Random(0)
        for g in (1, 2, 3, 8, 31):
            order = 4 << (2 * g)
            for _ in range(2000):
                x, y = rng.randrange(order), rng.randrange(order)
                assert _native.e_mul_packed(x, y, g) == _fallback.e_mul_packed(x, y, g)

    def test_associativity(self):
        assert _native.exhaustive_associativity(1) == 0
        assert _native.exhaustive_associativity(2) == 0
        rng = random.Random(1)
        xs, ys, zs = ([rng.randrange(4 << 6) for _ in range(500)] for _ in range(3))
        assert _native.associativity_failure(xs, ys, zs, 3) == _fallback.associativity_failure(xs, ys, zs, 3) == -1

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_form_census(self, g):
        assert _native.form_census(g) == _fallback.form_census(g)

    def test_limits(self):
        with pytest.raises(OverflowError):
            _native.e_mul_packed(0, 0, 32)
        with pytest.raises(ValueError):
            _native.exhaustive_associativity(4)

    def test_wrapper_falls_back_for_large_genus(self):
        x = (1 << 70) | 1
        assert kernels.e_mul_packed(x, x, 40) == _fallback.e_mul_packed(x, x, 40)

