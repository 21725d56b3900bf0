"""Compiled and pure-Python root kernels must be interchangeable."""

import numpy as np
import pytest

from spectral_patch import _kernel
from spectral_patch import _roots_py

from oracles import match_multisets

try:
    from spectral_patch import _roots_cy
except ImportError:
    _roots_cy = None

needs_compiled = pytest.mark.skipif(
    _roots_cy is None, reason="compiled kernel not built"
)


def battery(rng):
    cases = [
        np.array([1.0, 0.0, 1.0], dtype=complex),          # z^2 + 1
        np.array([-6.0, 11.0, -6.0, 1.0], dtype=complex),  # (z-1)(z-2)(z-3)
        np.array([2.0, -3.0, 0.0, 1.0], dtype=complex),    # (z-1)^2 (z+2)
        np.array([0.0, 4.0], dtype=complex),
        np.array([5.0j, 1.0, 1.0 - 2.0j], dtype=complex),
    ]
    for _ in range(40):
        deg = int(rng.integers(1, 9))
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        c[-1] += 2.0
        cases.append(c.astype(complex))
    return cases


class TestPureBackend:
    def test_empty_and_constant(self):
        roots, ok = _roots_py.aberth_roots(np.array([3.0 + 0j]), 1e-9, 100)
        assert roots.size == 0 and ok

    def test_linear_exact(self):
        roots, ok = _roots_py.aberth_roots(np.array([-6.0, 2.0], dtype=complex), 1e-9, 100)
        assert ok and roots[0] == 3.0 + 0j

    def test_deterministic(self, rng):
        for c in battery(rng)[:10]:
            a, _ = _roots_py.aberth_roots(c, 1e-9, 200)
            b, _ = _roots_py.aberth_roots(c, 1e-9, 200)
            assert np.array_equal(a, b)

    def test_matches_numpy(self, rng):
        for c in battery(rng):
            roots, ok = _roots_py.aberth_roots(c, 1e-9, 500)
            assert ok
            want = np.roots(c[::-1])
            assert match_multisets(
                roots.tolist(), want.tolist(), lambda w: 1e-5 * (1 + abs(w))
            )

    def test_batch_matches_single(self, rng):
        rows = np.stack([
            rng.normal(size=5) + 1j * rng.normal(size=5) for _ in range(6)
        ])
        rows[:, -1] += 2.0
        batch, ok = _roots_py.aberth_roots_batch(rows, 1e-9, 200)
        assert ok.all()
        for k in range(rows.shape[0]):
            single, _ = _roots_py.aberth_roots(rows[k], 1e-9, 200)
            assert np.array_equal(batch[k], single)

    def test_unconverged_flag(self):
        _, ok = _roots_py.aberth_roots(np.array([-1.0, 0.0, 1.0], dtype=complex), 1e-9, 1)
        assert not ok


@needs_compiled
class TestCompiledBackend:
    def test_backends_agree(self, rng):
        # same algorithm, but CPython and C round complex division
        # differently in the last ulp; agreement is near-bitwise
        for c in battery(rng):
            a, oka = _roots_py.aberth_roots(c, 1e-9, 500)
            b, okb = _roots_cy.aberth_roots(c, 1e-9, 500)
            assert oka == okb
            scale = 1.0 + float(np.max(np.abs(a)))
            assert np.max(np.abs(a - b)) <= 1e-12 * scale, f"coeffs {c}"

    def test_batch_agrees(self, rng):
        rows = np.stack([
            rng.normal(size=6) + 1j * rng.normal(size=6) for _ in range(8)
        ])
        rows[:, -1] += 2.0
        a, oka = _roots_py.aberth_roots_batch(rows, 1e-9, 200)
        b, okb = _roots_cy.aberth_roots_batch(rows, 1e-9, 200)
        assert np.array_equal(oka, okb)
        assert np.max(np.abs(a - b)) <= 1e-12 * (1.0 + float(np.max(np.abs(a))))

    def test_deterministic(self, rng):
        for c in battery(rng)[:10]:
            a, _ = _roots_cy.aberth_roots(c, 1e-9, 200)
            b, _ = _roots_cy.aberth_roots(c, 1e-9, 200)
            assert np.array_equal(a, b)


class TestSelection:
    def test_kernel_exposes_backend_name(self):
        assert _kernel.backend_name() in {"compiled", "python"}

    def test_env_override_forces_pure(self):
        import subprocess
        import sys

        out = subprocess.run(
            [sys.executable, "-c",
             "import spectral_patch; print(spectral_patch.backend_name())"],
            capture_output=True, text=True,
            env={"PATH": "/usr/bin:/bin", "SPECTRAL_PATCH_PURE": "1"},
        )
        assert out.stdout.strip() == "python"
