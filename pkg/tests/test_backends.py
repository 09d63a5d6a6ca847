"""The compiled and pure-Python kernels are interchangeable."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from qweyl import _kernels_py as kpy
from qweyl._backend import BACKEND

try:
    from qweyl import _kernels_cy as kcy
except ImportError:  # pragma: no cover - extension not built
    kcy = None

needs_ext = pytest.mark.skipif(kcy is None, reason="compiled kernels not built")

BIAS = (1 << 19) << 40


def random_poly(rng, terms=12):
    out = {}
    for _ in range(terms):
        key = (
            (rng.randrange(4) << 60)
            | ((rng.randrange(-3, 4) + (1 << 19)) << 40)
            | (rng.randrange(3) << 20)
            | rng.randrange(3)
        )
        out[key] = rng.choice([rng.randrange(-9, 10) or 1, Fraction(rng.randrange(1, 7), rng.randrange(1, 5))])
    return {k: v for k, v in out.items() if v}


@needs_ext
def test_kernel_equivalence_random():
    rng = random.Random(8)
    for _ in range(200):
        a, b = random_poly(rng), random_poly(rng)
        assert kpy.mpoly_add(a, b) == kcy.mpoly_add(a, b)
        assert kpy.mpoly_sub(a, b) == kcy.mpoly_sub(a, b)
        assert kpy.mpoly_neg(a) == kcy.mpoly_neg(a)
        assert kpy.mpoly_mul(a, b, BIAS) == kcy.mpoly_mul(a, b, BIAS)
        c = Fraction(rng.randrange(-5, 6), rng.randrange(1, 4))
        assert kpy.mpoly_scale(a, c) == kcy.mpoly_scale(a, c)
        acc1, acc2 = dict(a), dict(a)
        kpy.axpy(acc1, b, c)
        kcy.axpy(acc2, b, c)
        assert acc1 == acc2
        acc1, acc2 = dict(a), dict(a)
        kpy.axpy_shift(acc1, b, 7, c)
        kcy.axpy_shift(acc2, b, 7, c)
        assert acc1 == acc2


@needs_ext
def test_kernel_cancellation_pruned():
    a = {BIAS: 3}
    b = {BIAS: -3}
    assert kpy.mpoly_add(a, b) == {} == kcy.mpoly_add(a, b)


def test_forced_python_backend_end_to_end():
    env = dict(os.environ, QWEYL_BACKEND="python")
    code = (
        "from qweyl import BACKEND\n"
        "assert BACKEND == 'python', BACKEND\n"
        "from qweyl.identities import IdentityCase, verify\n"
        "from qweyl.weyl import hq\n"
        "rel = hq()\n"
        "assert verify(IdentityCase('THM1a', rel, n=3)).passed\n"
        "bad = verify(IdentityCase('THM5', rel, n=2))\n"
        "assert bad.status == 'fail'\n"
        "print(bad.residual.render())\n"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert r.returncode == 0, r.stderr
    pure_residual = r.stdout.strip()

    from qweyl.identities import IdentityCase, verify
    from qweyl.weyl import hq

    here = verify(IdentityCase("THM5", hq(), n=2)).residual.render()
    assert pure_residual == here


def test_backend_name_reported():
    assert BACKEND in ("cython", "python")
