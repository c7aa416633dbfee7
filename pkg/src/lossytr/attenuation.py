"""Attenuation operator calculus on causal time traces.

Exact quadrature forms of the attenuation operator L_a, the truncated adjoint
L*_{-a,rho}, the ideal low-pass P_rho, the leading-order asymptotics, and the
first-order inverse filter.  All operators are linear trace-in/trace-out maps;
the exact ones evaluate an inner Laplace-type transform (complex frequency
c0*kappa(w), so a plain DFT does not apply) by trapezoid quadrature and
synthesize on the trace's own DFT frequency grid.

The sign=+1 wavenumber branch (Im(c0 kappa_a) <= 0) makes L_a damp late-time
content, exp(Im(c0 kappa_a) t); the sign=-1 branch grows like
exp(+gamma (beta/2) w^2 a t), which is why L*_{-a,rho} carries a growth guard
tying the admissible cutoff rho to a and the record length.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .medium import MediumParams, lossy_wavenumber

GROWTH_GUARD_LIMIT = 1.0e6

_FREQ_CHUNK = 1024


class PrecisionWarning(UserWarning):
    """Hermitian symmetrization discarded non-negligible imaginary mass."""


class AliasingWarning(UserWarning):
    """Spectral tail near Nyquist carries non-negligible energy."""


class GrowthGuardError(ValueError):
    """Requested cutoff rho exceeds the adjoint-branch growth guard."""

    def __init__(self, rho, rho_max):
        self.rho = rho
        self.rho_max = rho_max
        super().__init__(
            f"cutoff rho={rho:g} violates the growth guard; "
            f"maximal admissible rho is {rho_max:g}"
        )


@dataclass
class Trace:
    """Real causal time trace sampled at t_j = j*tau, j = 0..m-1."""

    values: np.ndarray
    tau: float

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 1:
            raise ValueError("Trace values must be one-dimensional")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("Trace values must be finite")
        if self.tau <= 0:
            raise ValueError("Trace step tau must be positive")

    @property
    def m(self):
        return self.values.size

    @property
    def duration(self):
        return self.m * self.tau

    @property
    def times(self):
        return self.tau * np.arange(self.m)

    def endpoint_ratio(self):
        """max(|phi(0)|, |phi(T)|) / max|phi|; small for causal decayed traces."""
        peak = np.abs(self.values).max()
        if peak == 0:
            return 0.0
        return float(max(abs(self.values[0]), abs(self.values[-1])) / peak)


@dataclass
class Spectrum:
    """Complex spectrum on the full symmetric DFT axis (fftfreq order)."""

    values: np.ndarray
    tau: float
    orig_m: int
    hermitian: bool = True

    @property
    def F(self):
        return self.values.size

    @property
    def domega(self):
        return 2.0 * np.pi / (self.F * self.tau)

    @property
    def omega(self):
        return 2.0 * np.pi * np.fft.fftfreq(self.F, self.tau)


def _next_pow2(m):
    p = 1
    while p < m:
        p *= 2
    return p


def to_spectrum(tr: Trace) -> Spectrum:
    """Forward transform, v_hat = tau * DFT(v); zero-pads m to a power of two."""
    m = tr.m
    mp = _next_pow2(m)
    vals = tr.values
    if mp != m:
        vals = np.concatenate([vals, np.zeros(mp - m)])
    return Spectrum(tr.tau * np.fft.fft(vals), tr.tau, orig_m=m)


def from_spectrum(sp: Spectrum) -> Trace:
    """Inverse transform back to the original trace length."""
    vals = np.fft.ifft(sp.values) / sp.tau
    imag = np.linalg.norm(vals.imag)
    real = np.linalg.norm(vals.real)
    if sp.hermitian and real > 0 and imag > 1e-9 * real:
        warnings.warn(
            f"spectrum marked hermitian but synthesis has imaginary mass {imag/real:.2e}",
            PrecisionWarning,
            stacklevel=2,
        )
    return Trace(vals.real[: sp.orig_m], sp.tau)


def _trap_weights(m):
    cw = np.ones(m)
    cw[0] = 0.5
    cw[-1] = 0.5
    return cw


def _ratio_omega_over_w(omega, w, gamma):
    """omega / (c0 kappa(omega)) with the continuity value 1/gamma at omega = 0."""
    out = np.empty(omega.shape, dtype=complex)
    zero = omega == 0
    out[zero] = 1.0 / gamma
    out[~zero] = omega[~zero] / w[~zero]
    return out


def _laplace_analysis(values, tau, w):
    """Trapezoid Laplace-type transform  tau * sum_j c_j phi_j exp(-i w_f t_j).

    values: (B, m) real;  w: (F,) complex;  returns (B, F) complex.
    Chunked over frequency rows to bound the kernel-matrix memory.
    """
    B, m = values.shape
    t = tau * np.arange(m)
    weighted = values * _trap_weights(m)
    out = np.empty((B, w.size), dtype=complex)
    for lo in range(0, w.size, _FREQ_CHUNK):
        hi = min(lo + _FREQ_CHUNK, w.size)
        ker = np.exp(-1j * np.outer(w[lo:hi], t))  # (chunk, m)
        out[:, lo:hi] = tau * (weighted @ ker.T)
    return out


def _check_imag_mass(values_complex, op_name):
    re = np.linalg.norm(values_complex.real)
    im = np.linalg.norm(values_complex.imag)
    if re > 0 and im > 1e-6 * re:
        warnings.warn(
            f"{op_name}: Hermitian symmetrization discards imaginary mass "
            f"{im/re:.2e} of output norm",
            PrecisionWarning,
            stacklevel=3,
        )


def _L_a_exact_batch(values, tau, med: MediumParams, sign=+1):
    """Exact attenuation operator on a (B, m) batch of real traces."""
    B, m = values.shape
    omega = 2.0 * np.pi * np.fft.fftfreq(m, tau)
    w = med.c0 * lossy_wavenumber(omega, med, sign)
    phi_L = _laplace_analysis(values, tau, w)
    U = _ratio_omega_over_w(omega, w, med.gamma) * phi_L
    out = np.fft.ifft(U, axis=-1) / tau
    _check_imag_mass(out, "apply_L_a_exact")
    return out.real


def apply_L_a_exact(tr: Trace, med: MediumParams) -> Trace:
    """Exact attenuation operator L_a (identity for a = 0, gamma = 1)."""
    out = _L_a_exact_batch(tr.values[None, :], tr.tau, med, sign=+1)
    return Trace(out[0], tr.tau)


def _spectral_derivative(values, tau, order):
    """d^order/dt^order via multiplication by (i w)^order on rfft bins."""
    m = values.shape[-1]
    omega = 2.0 * np.pi * np.fft.rfftfreq(m, tau)
    mult = (1j * omega) ** order
    if order % 2 == 1 and m % 2 == 0:
        mult[-1] = 0.0  # odd derivative: zero the Nyquist mode
    return np.fft.irfft(np.fft.rfft(values, axis=-1) * mult, n=m, axis=-1)


def _check_aliasing(values, tau, op_name):
    spec = np.fft.rfft(values, axis=-1)
    omega = 2.0 * np.pi * np.fft.rfftfreq(values.shape[-1], tau)
    nyq = np.pi / tau
    tail = np.sum(np.abs(spec[..., omega > 0.9 * nyq]) ** 2)
    total = np.sum(np.abs(spec) ** 2)
    if total > 0 and tail > 1e-6 * total:
        warnings.warn(
            f"{op_name}: spectral tail above 0.9*Nyquist carries {tail/total:.2e} "
            "of the energy; derivative terms may alias",
            AliasingWarning,
            stacklevel=3,
        )


def _dilate(values, tau, scale):
    """Band-limited evaluation of the trace at times scale * t_j."""
    if scale == 1.0:
        return values.copy()
    m = values.shape[-1]
    spec = np.fft.rfft(values, axis=-1)
    omega = 2.0 * np.pi * np.fft.rfftfreq(m, tau)
    t_new = scale * tau * np.arange(m)
    ker = np.exp(1j * np.outer(t_new, omega))  # (m, F)
    ker[:, 1:-1] *= 2.0
    if m % 2 == 1:
        ker[:, -1] *= 2.0
    return (spec @ ker.T).real / m


def _correction_term(values, tau):
    """phi' + (t phi)'' with spectral derivatives."""
    m = values.shape[-1]
    t = tau * np.arange(m)
    dphi = _spectral_derivative(values, tau, 1)
    d2tphi = _spectral_derivative(values * t, tau, 2)
    return dphi + d2tphi


def _L_a_asymptotic_batch(values, tau, med: MediumParams):
    if med.sigma != 0:
        raise ValueError("asymptotic operator assumes a non-conductive medium")
    _check_aliasing(values, tau, "apply_L_a_asymptotic")
    g = med.gamma
    corr = _correction_term(values, tau)
    lead = _dilate(values, tau, 1.0 / g) / g**2
    return lead + (med.beta * med.a / (2.0 * g**3)) * _dilate(corr, tau, 1.0 / g)


def apply_L_a_asymptotic(tr: Trace, med: MediumParams) -> Trace:
    """Leading-order attenuation  (1/g^2) phi(t/g) + (beta a/2 g^3)[phi' + (t phi)''](t/g)."""
    return Trace(_L_a_asymptotic_batch(tr.values[None, :], tr.tau, med)[0], tr.tau)


def _P_rho_batch(values, tau, rho):
    m = values.shape[-1]
    omega = 2.0 * np.pi * np.fft.rfftfreq(m, tau)
    spec = np.fft.rfft(values, axis=-1)
    spec[..., omega > rho] = 0.0
    return np.fft.irfft(spec, n=m, axis=-1)


def apply_P_rho(tr: Trace, rho: float) -> Trace:
    """Ideal low-pass truncation to |omega| <= rho (idempotent, self-adjoint)."""
    if rho <= 0:
        raise ValueError("cutoff rho must be positive")
    return Trace(_P_rho_batch(tr.values[None, :], tr.tau, rho)[0], tr.tau)


def max_admissible_rho(med: MediumParams, duration, limit=GROWTH_GUARD_LIMIT):
    """Largest rho with exp(gamma (beta/2) rho^2 a T) <= limit (inf if lossless)."""
    if med.a == 0 or med.beta == 0:
        return np.inf
    return float(np.sqrt(2.0 * np.log(limit) / (med.gamma * med.beta * med.a * duration)))


def _L_star_rho_batch(values, tau, med: MediumParams, rho):
    B, m = values.shape
    duration = m * tau
    rho_max = max_admissible_rho(med, duration)
    if rho > rho_max:
        raise GrowthGuardError(rho, rho_max)
    t = tau * np.arange(m)
    omega = 2.0 * np.pi * np.fft.fftfreq(m, tau)
    sel = np.abs(omega) <= rho
    oms = omega[sel]
    w = med.c0 * lossy_wavenumber(oms, med, -1)
    # int phi e^{+i w tau'} d tau' on the kept bins
    phi_plus = np.conj(_laplace_analysis(values, tau, oms.astype(complex)))
    ratio = _ratio_omega_over_w(oms, w, med.gamma)
    ker = np.exp(-1j * np.outer(w, t))  # (Fsel, m)
    domega = 2.0 * np.pi / duration
    out = (domega / (2.0 * np.pi)) * ((phi_plus * ratio) @ ker)
    _check_imag_mass(out, "apply_L_star_rho")
    return out.real


def apply_L_star_rho(tr: Trace, med: MediumParams, rho: float) -> Trace:
    """Truncated adjoint operator L*_{-a,rho}; equals P_rho when a = 0, gamma = 1."""
    if rho <= 0:
        raise ValueError("cutoff rho must be positive")
    return Trace(_L_star_rho_batch(tr.values[None, :], tr.tau, med, rho)[0], tr.tau)


def _inverse_filter_batch(values, tau, med: MediumParams):
    if med.sigma != 0:
        raise ValueError("inverse filter assumes a non-conductive medium")
    _check_aliasing(values, tau, "inverse_filter_k1")
    g = med.gamma
    corr = _correction_term(values, tau)
    lead = _dilate(values, tau, g) / g
    return lead - (med.beta * med.a / (2.0 * g**2)) * _dilate(corr, tau, g)


def inverse_filter_k1(tr: Trace, med: MediumParams, k: int = 1) -> Trace:
    """First-order approximate inverse  (1/g) phi(g t) - (beta a/2 g^2)[phi' + (t phi)''](g t).

    Only k = 1 is implemented; the order parameter is reserved.
    """
    if k != 1:
        raise NotImplementedError("only the first-order (k = 1) inverse is implemented")
    return Trace(_inverse_filter_batch(tr.values[None, :], tr.tau, med)[0], tr.tau)
