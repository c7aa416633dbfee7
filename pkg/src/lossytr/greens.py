"""2D scalar and dyadic electric-electric Green functions and identity checks.

The outgoing 2D Helmholtz kernel is g(r) = (i/4) H0^(1)(kappa r); the
electric-electric dyad is G^ee = i w mu0 (I + grad grad / kappa^2) g, with the
second derivatives reduced to H0/H1 in closed form:

    G_jk = i w mu0 (i/4) [ A(z) delta_jk + B(z) dx_j dx_k / r^2 ],
    A(z) = H0(z) - H1(z)/z,   B(z) = 2 H1(z)/z - H0(z),   z = kappa r.

``omega`` and ``kappa`` are independent arguments: lossy back-propagation
kernels keep the real-frequency prefactor i w mu0 while the Hankel argument
and the 1/kappa^2 in the dyad use a complex wavenumber branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hankel import hankel1_01
from .medium import MediumParams


@dataclass(frozen=True)
class DyadicGreen2x2:
    """Symmetric 2x2 complex dyadic Green value at one offset."""

    g11: complex
    g12: complex
    g21: complex
    g22: complex

    def as_array(self):
        return np.array([[self.g11, self.g12], [self.g21, self.g22]])


def scalar_green_2d(r, kappa):
    """Outgoing 2D Helmholtz kernel (i/4) H0^(1)(kappa r) at distance r > 0."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("scalar_green_2d requires r > 0 (singular at r = 0)")
    if kappa == 0:
        raise ValueError("kappa = 0 is excluded (logarithmic singularity)")
    out = 0.25j * hankel1_01(kappa * r)[0]
    return out if np.ndim(out) else complex(out)


def dyadic_entries(dx1, dx2, omega, kappa, mu0=1.0):
    """Vectorized dyadic entries (g11, g12, g22) at offsets (dx1, dx2).

    Offsets must be nonzero.  This is the array workhorse behind
    dyadic_green_ee and the imaging kernels.
    """
    dx1 = np.asarray(dx1, dtype=float)
    dx2 = np.asarray(dx2, dtype=float)
    r2 = dx1 * dx1 + dx2 * dx2
    r = np.sqrt(r2)
    z = kappa * r
    h0, h1 = hankel1_01(z)
    h1z = h1 / z
    A = h0 - h1z
    B = 2.0 * h1z - h0
    pref = 1j * omega * mu0 * 0.25j
    g11 = pref * (A + B * dx1 * dx1 / r2)
    g12 = pref * (B * dx1 * dx2 / r2)
    g22 = pref * (A + B * dx2 * dx2 / r2)
    return g11, g12, g22


def dyadic_green_ee(dx, omega, kappa, m: MediumParams) -> DyadicGreen2x2:
    """Electric-electric dyadic Green function at a single 2-vector offset."""
    dx = np.asarray(dx, dtype=float)
    if dx.shape != (2,):
        raise ValueError("dx must be a 2-vector")
    if dx[0] == 0 and dx[1] == 0:
        raise ValueError("dyadic Green function is singular at dx = 0")
    if kappa == 0:
        raise ValueError("kappa = 0 is excluded")
    g11, g12, g22 = dyadic_entries(dx[0], dx[1], omega, kappa, m.mu0)
    return DyadicGreen2x2(complex(g11), complex(g12), complex(g12), complex(g22))


def hk_residual(x, y, omega, R, M, m: MediumParams):
    """Boundary-integral check of the Helmholtz-Kirchhoff identity in 2D.

    Computes  sum_i G(x - xi_i) @ conj(G(xi_i - y)) dsigma  over M midpoint
    nodes on the circle |xi| = R and least-squares fits a real constant c
    against Re{G(x - y)}.  Returns (c, residual) with
    residual = ||BI - c Re G|| / ||BI|| in the Frobenius norm (imaginary
    leftovers of BI count as misfit).  The 2D constant is fitted, not assumed;
    empirically c = -mu0 c0.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.allclose(x, y):
        raise ValueError("coincident points are excluded (x != y required)")
    wavelength = 2.0 * np.pi * m.c0 / omega
    if R < 10.0 * wavelength:
        raise ValueError(f"R must be >= 10 wavelengths ({10 * wavelength:.3g})")
    if np.hypot(*x) > R / 4 or np.hypot(*y) > R / 4:
        raise ValueError("x and y must lie within R/4 of the origin")
    if 2.0 * np.pi * R / M > wavelength / 8.0:
        raise ValueError("sensor spacing exceeds wavelength/8; increase M")
    kappa = omega / m.c0

    theta = 2.0 * np.pi * (np.arange(M) + 0.5) / M
    xi1 = R * np.cos(theta)
    xi2 = R * np.sin(theta)
    dsig = 2.0 * np.pi * R / M

    a11, a12, a22 = dyadic_entries(x[0] - xi1, x[1] - xi2, omega, kappa, m.mu0)
    b11, b12, b22 = dyadic_entries(xi1 - y[0], xi2 - y[1], omega, kappa, m.mu0)
    b11, b12, b22 = np.conj(b11), np.conj(b12), np.conj(b22)
    # matrix product A @ B summed over the circle
    bi11 = np.sum(a11 * b11 + a12 * b12) * dsig
    bi12 = np.sum(a11 * b12 + a12 * b22) * dsig
    bi21 = np.sum(a12 * b11 + a22 * b12) * dsig
    bi22 = np.sum(a12 * b12 + a22 * b22) * dsig
    BI = np.array([[bi11, bi12], [bi21, bi22]])

    G = dyadic_green_ee(x - y, omega, kappa, m).as_array()
    ReG = G.real
    c = float(np.sum(BI.real * ReG) / np.sum(ReG * ReG))
    residual = float(np.linalg.norm(BI - c * ReG) / np.linalg.norm(BI))
    return c, residual


def psf_matrix(offsets, omega_max, m: MediumParams, nquad=400):
    """Point-spread matrix p(dx) = (eps0/pi) int_0^Omega Re{G^ee(dx, w)} dw.

    Trapezoid quadrature on (0, omega_max]; the w -> 0 endpoint is excluded
    (removable for the trace, log-divergent off-trace).  Returns an array of
    shape (N, 2, 2) for offsets of shape (N, 2).  The trace of p has the
    closed form -(eps0 mu0 c0 Omega / 2 pi) J1(Omega r/c0)/r, which tests use
    as the independent oracle.
    """
    offsets = np.atleast_2d(np.asarray(offsets, dtype=float))
    omegas = np.linspace(omega_max / nquad, omega_max, nquad)
    weights = np.full(nquad, omega_max / nquad)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    out = np.zeros((offsets.shape[0], 2, 2))
    for om, wq in zip(omegas, weights):
        kap = om / m.c0
        g11, g12, g22 = dyadic_entries(offsets[:, 0], offsets[:, 1], om, kap, m.mu0)
        out[:, 0, 0] += wq * g11.real
        out[:, 0, 1] += wq * g12.real
        out[:, 1, 0] += wq * g12.real
        out[:, 1, 1] += wq * g22.real
    return out * (m.eps0 / np.pi)
