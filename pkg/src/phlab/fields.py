"""Random trigonometric fields with Sobolev-type spectral decay.

A field is a truncated Fourier sum f(x,y) = sum a_nm exp(2 pi i (nx + my))
over |n|,|m| <= n_max with Hermitian-symmetric complex coefficients, so all
evaluations are real. Coefficients are centered complex Gaussians with
variance (n^2 + m^2 + 1)^(-(2s-3)/2), where s >= 3 is the smoothness
parameter; larger s gives smoother samples. Sampling is driven by a
counter-based generator so a fixed seed reproduces fields bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["FourierField", "sample_field", "sample_field_pair", "mode_variance"]


def mode_variance(n: int, m: int, s: int) -> float:
    """Target E|a_nm|^2 for mode (n, m) at smoothness s."""
    return float(n * n + m * m + 1) ** (-(2 * s - 3) / 2.0)


@dataclass(frozen=True)
class FourierField:
    """Real-valued truncated Fourier field on the torus.

    coeffs[i, j] is the coefficient of exp(2 pi i (n x + m y)) with
    n = i - n_max, m = j - n_max. Hermitian symmetry coeffs[-n,-m] ==
    conj(coeffs[n,m]) is enforced at construction.
    """

    s: int
    n_max: int
    coeffs: np.ndarray

    def __post_init__(self):
        k = 2 * self.n_max + 1
        if self.coeffs.shape != (k, k):
            raise ValueError("coefficient array must be (2*n_max+1)^2")
        mirrored = np.conj(self.coeffs[::-1, ::-1])
        if not np.allclose(self.coeffs, mirrored, atol=1e-12):
            raise ValueError("coefficients are not Hermitian-symmetric")

    def _mode_grids(self):
        n = np.arange(-self.n_max, self.n_max + 1)
        return np.meshgrid(n, n, indexing="ij")

    def eval(self, x, y, dx: int = 0, dy: int = 0):
        """Evaluate the (dx, dy) mixed partial derivative at points (x, y).

        Exact for the truncated sum. Derivative orders above s-3 exceed the
        regularity the spectral decay guarantees for the untruncated field
        and are refused.
        """
        if dx + dy > self.s - 3:
            raise ValueError(
                f"derivative order {dx + dy} exceeds field smoothness budget {self.s - 3}"
            )
        ngrid, mgrid = self._mode_grids()
        factor = self.coeffs * (2j * np.pi * ngrid) ** dx * (2j * np.pi * mgrid) ** dy
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        phase = np.exp(
            2j
            * np.pi
            * (
                np.multiply.outer(x, ngrid).reshape(x.shape + ngrid.shape)
                + np.multiply.outer(y, mgrid).reshape(y.shape + mgrid.shape)
            )
        )
        vals = np.real(np.tensordot(phase, factor, axes=([-2, -1], [0, 1])))
        return float(vals) if vals.ndim == 0 else vals

    def l2_norm_sq(self) -> float:
        """Parseval: integral of f^2 over the torus equals sum |a_nm|^2."""
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def sobolev_weight_sum(self) -> float:
        """sum (n^2+m^2+1)^(s-3) |a_nm|^2; finite by construction."""
        ngrid, mgrid = self._mode_grids()
        w = (ngrid**2 + mgrid**2 + 1.0) ** (self.s - 3)
        return float(np.sum(w * np.abs(self.coeffs) ** 2))


def _rng(seed: int, stream: int = 0) -> np.random.Generator:
    # Philox is counter-based: (seed, stream) fully determines the draw.
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, stream]))


def sample_field(s: int, n_max: int, seed: int, stream: int = 0) -> FourierField:
    """Draw one field; deterministic given (seed, stream).

    Independent coefficients are drawn on the half lattice (m > 0, or m = 0
    and n > 0) with E|a|^2 = (n^2+m^2+1)^(-(2s-3)/2) split evenly between the
    real and imaginary parts; the other half is filled by conjugate symmetry
    and the (0,0) mode is real with variance 1.
    """
    if s < 3:
        raise ValueError("smoothness parameter s must be >= 3")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rng = _rng(seed, stream)
    k = 2 * n_max + 1
    coeffs = np.zeros((k, k), dtype=complex)
    for m in range(0, n_max + 1):
        for n in range(-n_max, n_max + 1):
            if m == 0 and n < 0:
                continue
            var = mode_variance(n, m, s)
            if n == 0 and m == 0:
                coeffs[n_max, n_max] = rng.normal(0.0, np.sqrt(var))
                continue
            re = rng.normal(0.0, np.sqrt(var / 2.0))
            im = rng.normal(0.0, np.sqrt(var / 2.0))
            coeffs[n + n_max, m + n_max] = re + 1j * im
            coeffs[-n + n_max, -m + n_max] = re - 1j * im
    return FourierField(s=s, n_max=n_max, coeffs=coeffs)


def sample_field_pair(s: int, n_max: int, seed: int) -> tuple[FourierField, FourierField]:
    """Two independent fields forming an R^2-valued perturbation."""
    return sample_field(s, n_max, seed, stream=0), sample_field(s, n_max, seed, stream=1)
