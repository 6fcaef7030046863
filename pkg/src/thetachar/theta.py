"""Riemann theta functions with characteristics on the Siegel space.

theta[eps; delta](tau, z) = sum over m in Z^g of
    exp(pi i (m + eps/2)' tau (m + eps/2) + 2 pi i (m + eps/2)' (z + delta/2)).

The lattice sum is truncated to an infinity-norm box whose radius comes
from the Gaussian tail bound with the smallest eigenvalue of Im tau
(computed by cyclic Jacobi iteration) and |Im z|; the bound is
conservative and the claimed absolute error is <= the requested
tolerance.  Summation order is fixed — shells of increasing |m|_inf,
lexicographic within a shell — so repeated evaluations are
bit-reproducible.

Accuracy contract: double precision throughout; tolerances below 1e-13
are rejected, and callers should keep Im tau >= 0.3 I (the truncation
radius guard trips otherwise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .characteristics import Characteristic

__all__ = [
    "PeriodMatrix",
    "ThetaArg",
    "Tolerance",
    "jacobi_eigenvalues",
    "truncation_radius",
    "theta_with_char",
    "theta_constant",
    "theta_constant_table",
    "theta_report",
    "block_diag",
]

_MAX_RADIUS = 64
_MAX_LATTICE = 4_000_000


@dataclass(frozen=True)
class Tolerance:
    """Absolute tolerance for theta sums; double precision floor enforced."""

    abs_tol: float = 1e-12

    def __post_init__(self) -> None:
        if not (1e-13 < self.abs_tol < 1.0):
            raise ValueError(
                f"tolerance must be in (1e-13, 1), got {self.abs_tol}; "
                "double precision cannot go tighter"
            )

    @classmethod
    def coerce(cls, tol) -> "Tolerance":
        if isinstance(tol, Tolerance):
            return tol
        return cls(float(tol))


class PeriodMatrix:
    """g x g complex symmetric matrix with positive-definite imaginary part.

    Symmetry must hold exactly as stored; positive definiteness is checked
    numerically through the smallest Jacobi eigenvalue of Im tau.
    """

    def __init__(self, entries) -> None:
        tau = np.array(entries, dtype=complex)
        if tau.ndim != 2 or tau.shape[0] != tau.shape[1] or tau.shape[0] == 0:
            raise ValueError(f"period matrix must be square, got shape {tau.shape}")
        if not np.all(np.isfinite(tau)):
            raise ValueError("period matrix entries must be finite")
        if not np.array_equal(tau, tau.T):
            raise ValueError("period matrix must be exactly symmetric")
        lam = jacobi_eigenvalues(tau.imag)[0]
        if lam <= 0.0:
            raise ValueError(f"Im tau must be positive definite (lambda_min={lam})")
        tau.setflags(write=False)
        self.tau = tau
        self.g = tau.shape[0]
        self.im_lambda_min = lam

    def __repr__(self) -> str:
        return f"PeriodMatrix(g={self.g})"


@dataclass(frozen=True)
class ThetaArg:
    """Argument vector z in C^g."""

    z: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.z:
            raise ValueError("z must be nonempty")
        if any(not (math.isfinite(w.real) and math.isfinite(w.imag)) for w in self.z):
            raise ValueError("z entries must be finite")

    @classmethod
    def coerce(cls, z, g: int) -> "ThetaArg":
        if isinstance(z, ThetaArg):
            arg = z
        elif z is None:
            arg = cls((0j,) * g)
        else:
            arg = cls(tuple(complex(w) for w in z))
        if len(arg.z) != g:
            raise ValueError(f"z has length {len(arg.z)}, expected {g}")
        return arg

    @classmethod
    def zero(cls, g: int) -> "ThetaArg":
        return cls((0j,) * g)


def jacobi_eigenvalues(matrix, tol: float = 1e-13) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi, ascending.

    Sweeps Givens rotations over all off-diagonal pairs until their
    Frobenius mass drops below tol (relative to the matrix norm).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("jacobi_eigenvalues needs an exactly symmetric matrix")
    n = a.shape[0]
    if n == 1:
        return [float(a[0, 0])]
    scale = max(1.0, float(np.sqrt((a * a).sum())))
    for _ in range(60):
        mass = a * a
        np.fill_diagonal(mass, 0.0)
        off = math.sqrt(float(mass.sum()))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 0.1 * tol * scale / (n * n):
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
    else:
        raise ValueError("Jacobi iteration failed to converge")
    return sorted(float(x) for x in np.diag(a))


def _tail_bound(lam: float, g: int, z_im_norm: float, radius: int) -> float:
    """Upper bound on the absolute tail mass outside the |m|_inf <= radius box.

    Each shell |m|_inf = s contributes at most ((2s+1)^g - (2s-1)^g) terms,
    each bounded by exp(-pi lam (s-1/2)^2 + 2 pi sqrt(g) (s+1/2) |Im z|).
    """
    total = 0.0
    for s in range(radius + 1, radius + 501):
        term = ((2 * s + 1) ** g - (2 * s - 1) ** g) * math.exp(
            -math.pi * lam * (s - 0.5) ** 2
            + 2.0 * math.pi * math.sqrt(g) * (s + 0.5) * z_im_norm
        )
        total += term
        if term < 1e-18 * max(total, 1e-300) and s > radius + 3:
            break
    return total


def truncation_radius(tau: PeriodMatrix, z, tol) -> int:
    """Smallest box radius R whose estimated tail is below the tolerance."""
    tol = Tolerance.coerce(tol)
    arg = ThetaArg.coerce(z, tau.g)
    z_im_norm = math.sqrt(sum(w.imag**2 for w in arg.z))
    for radius in range(1, _MAX_RADIUS + 1):
        if (2 * radius + 1) ** tau.g > _MAX_LATTICE:
            break
        if _tail_bound(tau.im_lambda_min, tau.g, z_im_norm, radius) <= tol.abs_tol:
            return radius
    raise ValueError(
        "cannot reach the requested tolerance: Im tau too small or |Im z| too "
        "large for the supported truncation range (keep Im tau >= 0.3 I)"
    )


@lru_cache(maxsize=32)
def _lattice(g: int, radius: int) -> np.ndarray:
    """Integer points of the box, shells of increasing |m|_inf, lex inside."""
    pts = sorted(
        np.ndindex(*(2 * radius + 1,) * g),
        key=lambda idx: (max(abs(k - radius) for k in idx), idx),
    )
    arr = np.array(pts, dtype=float) - radius
    arr.setflags(write=False)
    return arr


def _char_vec(block: int, g: int) -> np.ndarray:
    return np.array([(block >> (g - 1 - i)) & 1 for i in range(g)], dtype=float)


def _theta_sum(tau: PeriodMatrix, arg: ThetaArg, c: Characteristic, radius: int) -> complex:
    g = tau.g
    m = _lattice(g, radius)
    half_eps = _char_vec(c.eps, g) / 2.0
    half_delta = _char_vec(c.delta, g) / 2.0
    zvec = np.array(arg.z, dtype=complex)
    shifted = m + half_eps
    quad = np.einsum("ij,jk,ik->i", shifted, tau.tau, shifted)
    lin = shifted @ (zvec + half_delta)
    return complex(np.sum(np.exp(1j * np.pi * (quad + 2.0 * lin))))


def theta_with_char(tau: PeriodMatrix, z, c: Characteristic, tol=Tolerance()) -> complex:
    """theta[c](tau, z) with absolute truncation error below tol."""
    if c.g != tau.g:
        raise ValueError(f"genus mismatch: characteristic {c.g}, tau {tau.g}")
    tol = Tolerance.coerce(tol)
    arg = ThetaArg.coerce(z, tau.g)
    radius = truncation_radius(tau, arg, tol)
    return _theta_sum(tau, arg, c, radius)


def theta_constant(tau: PeriodMatrix, c: Characteristic, tol=Tolerance()) -> complex:
    """theta[c](tau, 0); vanishes identically for odd characteristics."""
    return theta_with_char(tau, ThetaArg.zero(tau.g), c, tol)


def theta_report(tau: PeriodMatrix, z, c: Characteristic, tol=Tolerance()) -> dict:
    """Evaluation plus the numerics actually used (radius, error estimate)."""
    tol = Tolerance.coerce(tol)
    arg = ThetaArg.coerce(z, tau.g)
    radius = truncation_radius(tau, arg, tol)
    value = _theta_sum(tau, arg, c, radius)
    z_im_norm = math.sqrt(sum(w.imag**2 for w in arg.z))
    return {
        "re": value.real,
        "im": value.imag,
        "radius": radius,
        "est_error": _tail_bound(tau.im_lambda_min, tau.g, z_im_norm, radius),
    }


_TABLE_CACHE: dict = {}


def theta_constant_table(tau: PeriodMatrix, tol=Tolerance()) -> np.ndarray:
    """All 2^2g theta constants as an array indexed [eps, delta].

    One truncation radius (for z=0) is shared across characteristics; each
    entry goes through the same summation path as theta_constant, so table
    lookups and direct calls agree bit for bit.
    """
    tol = Tolerance.coerce(tol)
    key = (tau.tau.tobytes(), tau.g, tol.abs_tol)
    cached = _TABLE_CACHE.get(key)
    if cached is not None:
        return cached
    g = tau.g
    zero = ThetaArg.zero(g)
    radius = truncation_radius(tau, zero, tol)
    table = np.empty((1 << g, 1 << g), dtype=complex)
    for eps in range(1 << g):
        for delta in range(1 << g):
            table[eps, delta] = _theta_sum(
                tau, zero, Characteristic(g, eps, delta), radius
            )
    table.setflags(write=False)
    if len(_TABLE_CACHE) >= 16:
        _TABLE_CACHE.pop(next(iter(_TABLE_CACHE)))
    _TABLE_CACHE[key] = table
    return table


def block_diag(tau1: PeriodMatrix, tau2: PeriodMatrix) -> PeriodMatrix:
    """diag(tau1, tau2) on the Siegel space of genus g1 + g2."""
    g1, g2 = tau1.g, tau2.g
    out = np.zeros((g1 + g2, g1 + g2), dtype=complex)
    out[:g1, :g1] = tau1.tau
    out[g1:, g1:] = tau2.tau
    return PeriodMatrix(out)
