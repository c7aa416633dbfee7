"""Debye material parameters and the complex dispersion relations.

Sign conventions (fixed package-wide): traces are analyzed with
``v_hat(w) = integral v(t) exp(-i w t) dt`` and synthesized with the inverse
``(1/2pi) integral v_hat exp(+i w t) dw``.  The Debye permittivity
``eps_a = eps_inf + (eps_s - eps_inf)/(1 + i a w) - i sigma/(w eps0)`` then has
nonpositive imaginary part for w > 0, and the principal square root gives the
attenuating branch ``Im(c0 * kappa_a) <= 0``: the time kernel
``exp(-i c0 kappa_a t)`` decays with elapsed time, while the spatial kernel
``H0^(1)(kappa_a r)`` grows with distance (the compensating back-propagation
kernel).  The ``sign=-1`` branch substitutes (-a, -sigma) and is the complex
conjugate for sigma = 0: its time kernel amplifies (the ill-posed adjoint
direction, guarded by frequency truncation downstream).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class MediumParams:
    """Dielectric constants and Debye loss parameters (dimensionless units).

    Defaults give the standard test medium: eps0 = eps_s = mu0 = 1,
    eps_inf = 0.5, hence c0 = 1, gamma = 1, beta = 0.5.
    """

    eps0: float = 1.0
    eps_s: float = 1.0
    eps_inf: float = 0.5
    mu0: float = 1.0
    sigma: float = 0.0
    a: float = 0.0
    c0: float = field(init=False)
    gamma: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self):
        if self.eps0 <= 0 or self.mu0 <= 0:
            raise ValueError("eps0 and mu0 must be positive")
        if not (0 < self.eps_inf <= self.eps_s):
            raise ValueError("require 0 < eps_inf <= eps_s")
        if self.a < 0:
            raise ValueError("Debye loss constant a must be >= 0")
        if self.sigma < 0:
            raise ValueError("conductivity sigma must be >= 0")
        object.__setattr__(self, "c0", 1.0 / np.sqrt(self.eps0 * self.mu0))
        object.__setattr__(self, "gamma", float(np.sqrt(self.eps_s / self.eps0)))
        object.__setattr__(self, "beta", 1.0 - self.eps_inf / self.eps_s)


def debye_permittivity(omega, m: MediumParams):
    """Complex Debye permittivity eps_a^sigma(omega).

    For w > 0 and a > 0 the imaginary part is negative (absorption).  With
    sigma > 0 the conductive term -i sigma/(w eps0) diverges at w = 0, so
    w = 0 is rejected in that case.
    """
    omega = np.asarray(omega, dtype=float)
    if m.sigma > 0 and np.any(omega == 0):
        raise ValueError("omega = 0 is singular for a conductive medium")
    eps = m.eps_inf + (m.eps_s - m.eps_inf) / (1.0 + 1j * m.a * omega)
    if m.sigma > 0:
        eps = eps - 1j * m.sigma / (omega * m.eps0)
    return eps if eps.ndim else complex(eps)


def lossy_wavenumber(omega, m: MediumParams, sign: int = +1):
    """Complex wavenumber kappa(omega) = omega * sqrt(mu0 * eps_{sign a}^{sign sigma}).

    Principal square root.  sign=+1 is the attenuating branch with
    Im(c0*kappa) <= 0 for omega > 0; sign=-1 substitutes (-a, -sigma) and is
    the complex conjugate branch for sigma = 0.  omega = 0 maps to kappa = 0
    by continuity when sigma = 0.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    omega = np.asarray(omega, dtype=float)
    if m.sigma > 0 and np.any(omega == 0):
        raise ValueError("omega = 0 is singular for a conductive medium")
    eps = m.eps_inf + (m.eps_s - m.eps_inf) / (1.0 + 1j * sign * m.a * omega)
    if m.sigma > 0:
        eps = eps - 1j * sign * m.sigma / (omega * m.eps0)
    kap = omega * np.sqrt(m.mu0 * eps)
    return kap if kap.ndim else complex(kap)


def asymptotic_wavenumber(omega, m: MediumParams, sign: int = +1):
    """Leading-order wavenumber gamma*w*(1 - sign*i*(beta/2)*w*a) / c0.

    Valid for sigma = 0 and w*a << 1; agrees with lossy_wavenumber to
    o(w*a), with O((w*a)^2) remainder.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    if m.sigma != 0:
        raise ValueError("asymptotic wavenumber assumes a non-conductive medium")
    omega = np.asarray(omega, dtype=float)
    kap = m.gamma * omega * (1.0 - 1j * sign * 0.5 * m.beta * omega * m.a) / m.c0
    return kap if kap.ndim else complex(kap)
