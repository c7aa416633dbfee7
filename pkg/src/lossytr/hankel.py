"""Hankel functions of the first kind, orders 0 and 1, for complex arguments.

Evaluation strategy: ascending (power) series for J and Y below a modulus
threshold, Hankel's large-argument expansion above it.  The switch point
``SERIES_CUTOFF = 13`` keeps both branches at or below ~1e-11 relative error
in double precision; pushing the switch lower is not possible because the
asymptotic expansion's optimal truncation error at |z| = 8 is only ~2e-8.

Valid for |arg z| < pi (principal branch of the logarithm in Y).  All
functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np

EULER_GAMMA = 0.5772156649015328606065120900824024

SERIES_CUTOFF = 13.0
_SERIES_TERMS = 42
_ASYM_TERMS = 25


def _series_h0_h1(z):
    """Ascending-series J0,J1,Y0,Y1 -> (H0^(1), H1^(1)) for |z| <= cutoff."""
    q = 0.25 * z * z
    # J0 = sum (-q)^k / (k!)^2,  J1 = (z/2) sum (-q)^k / (k! (k+1)!)
    # Y-series carry harmonic numbers H_k.
    t0 = np.ones_like(z)
    t1 = np.ones_like(z)
    j0 = t0.copy()
    j1s = t1.copy()
    y0s = np.zeros_like(z)
    y1s = np.ones_like(z)  # k = 0 term: (2 H_0 + 1) * q^0 = 1
    hk = 0.0
    for k in range(1, _SERIES_TERMS):
        t0 = t0 * (-q) / (k * k)
        t1 = t1 * (-q) / (k * (k + 1))
        hk += 1.0 / k
        j0 = j0 + t0
        j1s = j1s + t1
        y0s = y0s - hk * t0  # (-1)^{k+1} H_k q^k/(k!)^2 = -H_k * t0
        y1s = y1s + (2.0 * hk + 1.0 / (k + 1)) * t1
    lg = np.log(0.5 * z) + EULER_GAMMA
    j1 = 0.5 * z * j1s
    y0 = (2.0 / np.pi) * (lg * j0 + y0s)
    y1 = (2.0 / np.pi) * (lg * j1 - 1.0 / z) - (0.5 * z / np.pi) * y1s
    return j0 + 1j * y0, j1 + 1j * y1


def _asymptotic_h(z, nu):
    """Hankel's expansion H_nu^(1)(z) for large |z|, |arg z| < pi."""
    mu = 4.0 * nu * nu
    s = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(1, _ASYM_TERMS):
        term = term * (mu - (2 * k - 1) ** 2) * (1j / (8.0 * k)) / z
        s = s + term
    phase = np.exp(1j * (z - nu * (np.pi / 2) - np.pi / 4))
    return np.sqrt(2.0 / (np.pi * z)) * phase * s


def hankel1_01(z):
    """Evaluate H0^(1)(z) and H1^(1)(z) together.

    Returns a pair of complex arrays shaped like ``z``.  Raises on z = 0
    (logarithmic/pole singularity).
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValueError("Hankel functions are singular at z = 0")
    h0 = np.empty(z.shape, dtype=complex)
    h1 = np.empty(z.shape, dtype=complex)
    small = np.abs(z) <= SERIES_CUTOFF
    if small.any():
        zs = z[small]
        h0[small], h1[small] = _series_h0_h1(zs)
    large = ~small
    if large.any():
        zl = z[large]
        h0[large] = _asymptotic_h(zl, 0.0)
        h1[large] = _asymptotic_h(zl, 1.0)
    if h0.ndim == 0:
        return complex(h0), complex(h1)
    return h0, h1


def hankel1_0(z):
    """H0^(1)(z)."""
    return hankel1_01(z)[0]


def hankel1_1(z):
    """H1^(1)(z)."""
    return hankel1_01(z)[1]
