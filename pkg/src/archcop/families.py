"""Generators and inverse generators for the supported copula families.

Five families are available, identified by lowercase string tags:

``f1``
    phi(z) = (-alpha*ln z)**(1/alpha), alpha in (0, 1].
``f2``
    phi(z) = (-ln z)**(1/alpha**2), alpha in (0, 1].
``f3``
    phi(z) = (alpha/2)*(sqrt(1 + 24/z) - 5), alpha > 0.  Its inverse
    psi(t) = 6*alpha**2 / ((t + 2*alpha)*(t + 3*alpha)) is the Laplace
    transform of a hypoexponential frailty law with rates 2*alpha, 3*alpha.
``gumbel``
    phi(z) = (-ln z)**theta, theta >= 1.  Reference family used as an
    independent oracle in cross-family tests.
``independence``
    phi(z) = -ln z, no parameter.

All functions accept floats or numpy arrays and are pure; boundary values
(z in {0, 1}, t in {0, inf}) are handled by exact branches so no logarithm
of zero is ever evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

F1 = "f1"
F2 = "f2"
F3 = "f3"
GUMBEL = "gumbel"
INDEPENDENCE = "independence"

FAMILIES = (F1, F2, F3, GUMBEL, INDEPENDENCE)


class DomainError(ValueError):
    """An argument lies outside the documented domain."""


def check_param(family: str, param: float | None) -> float | None:
    """Validate the dependence parameter for ``family`` and return it.

    Raises
    ------
    DomainError
        If the family tag is unknown or the parameter is outside the
        family's admissible range.
    """
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == INDEPENDENCE:
        if param is not None:
            raise DomainError("independence takes no parameter")
        return None
    if param is None or not np.isfinite(param):
        raise DomainError(f"family {family!r} requires a finite parameter")
    p = float(param)
    if family in (F1, F2) and not 0.0 < p <= 1.0:
        raise DomainError(f"alpha out of domain (0,1] for family {family!r}")
    if family == F3 and not p > 0.0:
        raise DomainError("alpha out of domain (0,inf) for family 'f3'")
    if family == GUMBEL and not p >= 1.0:
        raise DomainError("theta out of domain [1,inf) for family 'gumbel'")
    return p


def _unit(x, name, *, open_interval=False):
    """Coerce to float array in [0,1] (or (0,1)); return (array, was_scalar)."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    bad = ~((a >= 0.0) & (a <= 1.0))
    if open_interval:
        bad |= (a == 0.0) | (a == 1.0)
    if bad.any():
        interval = "(0,1)" if open_interval else "[0,1]"
        raise DomainError(f"{name} out of domain {interval}")
    return a.copy(), scalar


def _nonneg(x, name):
    """Coerce to float array in [0, inf]; +inf allowed."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    if (~(a >= 0.0)).any():
        raise DomainError(f"{name} out of domain [0,inf]")
    return a.copy(), scalar


def _ret(out, scalar):
    return float(out[0]) if scalar else out


def phi(family: str, param: float | None, z):
    """Generator value phi(z) in [0, inf]; phi(1) = 0 and phi(0) = +inf."""
    p = check_param(family, param)
    zz, scalar = _unit(z, "z")
    out = np.empty_like(zz)
    out[zz == 0.0] = np.inf
    out[zz == 1.0] = 0.0
    m = (zz > 0.0) & (zz < 1.0)
    if m.any():
        zi = zz[m]
        if family == F1:
            out[m] = (-p * np.log(zi)) ** (1.0 / p)
        elif family == F2:
            out[m] = (-np.log(zi)) ** (1.0 / (p * p))
        elif family == F3:
            out[m] = 0.5 * p * (np.sqrt(1.0 + 24.0 / zi) - 5.0)
        elif family == GUMBEL:
            out[m] = (-np.log(zi)) ** p
        else:
            out[m] = -np.log(zi)
    return _ret(out, scalar)


def phi_prime(family: str, param: float | None, z):
    """First derivative of the generator; strictly negative on (0,1)."""
    p = check_param(family, param)
    zz, scalar = _unit(z, "z", open_interval=True)
    if family == F1:
        out = (-p * np.log(zz)) ** (1.0 / p - 1.0) * (-1.0 / zz)
    elif family == F2:
        b = 1.0 / (p * p)
        out = b * (-np.log(zz)) ** (b - 1.0) * (-1.0 / zz)
    elif family == F3:
        out = -6.0 * p / (zz * zz * np.sqrt(1.0 + 24.0 / zz))
    elif family == GUMBEL:
        out = p * (-np.log(zz)) ** (p - 1.0) * (-1.0 / zz)
    else:
        out = -1.0 / zz
    return _ret(np.atleast_1d(out), scalar)


def phi_double_prime(family: str, param: float | None, z):
    """Second derivative of the generator; strictly positive on (0,1)."""
    p = check_param(family, param)
    zz, scalar = _unit(z, "z", open_interval=True)
    lz = -np.log(zz)
    z2 = zz * zz
    if family == F1:
        k = 1.0 / p
        out = (k - 1.0) * (p * lz) ** (k - 2.0) * (p / z2) + (p * lz) ** (k - 1.0) / z2
    elif family == F2:
        b = 1.0 / (p * p)
        out = b * (b - 1.0) * lz ** (b - 2.0) / z2 + b * lz ** (b - 1.0) / z2
    elif family == F3:
        s = np.sqrt(1.0 + 24.0 / zz)
        out = 12.0 * p / (z2 * zz * s) - 72.0 * p / (z2 * z2 * s * s * s)
    elif family == GUMBEL:
        out = p * (p - 1.0) * lz ** (p - 2.0) / z2 + p * lz ** (p - 1.0) / z2
    else:
        out = 1.0 / z2
    return _ret(np.atleast_1d(out), scalar)


def psi(family: str, param: float | None, t):
    """Inverse generator psi(t) in [0,1]; psi(0) = 1 and psi(inf) = 0."""
    p = check_param(family, param)
    tt, scalar = _nonneg(t, "t")
    out = np.empty_like(tt)
    out[tt == 0.0] = 1.0
    out[np.isinf(tt)] = 0.0
    m = (tt > 0.0) & np.isfinite(tt)
    if m.any():
        ti = tt[m]
        if family == F1:
            out[m] = np.exp(-(ti**p) / p)
        elif family == F2:
            out[m] = np.exp(-(ti ** (p * p)))
        elif family == F3:
            out[m] = 6.0 * p * p / ((ti + 2.0 * p) * (ti + 3.0 * p))
        elif family == GUMBEL:
            out[m] = np.exp(-(ti ** (1.0 / p)))
        else:
            out[m] = np.exp(-ti)
    return _ret(out, scalar)


def _exponent_singular_at_zero(family: str, p: float | None) -> bool:
    # psi' involves t**(e-1) with e < 1 for these families, unbounded at t=0.
    if family == F1:
        return p < 1.0
    if family == F2:
        return p * p < 1.0
    if family == GUMBEL:
        return p > 1.0
    return False


def _t_strict(family, p, t):
    tt, scalar = _nonneg(t, "t")
    if _exponent_singular_at_zero(family, p) and (tt == 0.0).any():
        raise DomainError(f"t=0 is singular for family {family!r} at this parameter")
    return tt, scalar


def psi_prime(family: str, param: float | None, t):
    """First derivative of the inverse generator; negative on (0, inf)."""
    p = check_param(family, param)
    tt, scalar = _t_strict(family, p, t)
    out = np.zeros_like(tt)  # psi'(inf) = 0
    m = np.isfinite(tt)
    ti = tt[m]
    if family == F1:
        out[m] = -(ti ** (p - 1.0)) * np.exp(-(ti**p) / p)
    elif family == F2:
        c = p * p
        out[m] = -c * ti ** (c - 1.0) * np.exp(-(ti**c))
    elif family == F3:
        q = (ti + 2.0 * p) * (ti + 3.0 * p)
        out[m] = -6.0 * p * p * (2.0 * ti + 5.0 * p) / (q * q)
    elif family == GUMBEL:
        r = 1.0 / p
        out[m] = -r * ti ** (r - 1.0) * np.exp(-(ti**r))
    else:
        out[m] = -np.exp(-ti)
    return _ret(out, scalar)


def psi_double_prime(family: str, param: float | None, t):
    """Second derivative of the inverse generator; positive on (0, inf)."""
    p = check_param(family, param)
    tt, scalar = _t_strict(family, p, t)
    out = np.zeros_like(tt)
    m = np.isfinite(tt)
    ti = tt[m]
    if family == F1:
        e = np.exp(-(ti**p) / p)
        out[m] = e * (ti ** (2.0 * p - 2.0) + (1.0 - p) * ti ** (p - 2.0))
    elif family == F2:
        c = p * p
        e = np.exp(-(ti**c))
        out[m] = e * (c * c * ti ** (2.0 * c - 2.0) + c * (1.0 - c) * ti ** (c - 2.0))
    elif family == F3:
        q = (ti + 2.0 * p) * (ti + 3.0 * p)
        d = 2.0 * ti + 5.0 * p
        out[m] = 12.0 * p * p * (d * d - q) / (q * q * q)
    elif family == GUMBEL:
        r = 1.0 / p
        e = np.exp(-(ti**r))
        out[m] = e * (r * r * ti ** (2.0 * r - 2.0) + r * (1.0 - r) * ti ** (r - 2.0))
    else:
        out[m] = np.exp(-ti)
    return _ret(out, scalar)


def generator_ratio(family: str, param: float | None, z):
    """phi(z)/phi'(z) in a cancellation-free form; defined as 0 at z=0.

    The direct quotient overflows or loses all precision for extreme
    exponents (e.g. f2 at small alpha); the simplified forms below are
    algebraically identical and stable over the whole open interval.
    """
    p = check_param(family, param)
    zz, scalar = _unit(z, "z")
    if (zz == 1.0).any():
        raise DomainError("z out of domain [0,1)")
    out = np.zeros_like(zz)
    m = zz > 0.0
    zi = zz[m]
    if family == F1:
        out[m] = p * zi * np.log(zi)
    elif family == F2:
        out[m] = p * p * zi * np.log(zi)
    elif family == F3:
        s = np.sqrt(1.0 + 24.0 / zi)
        out[m] = (5.0 - s) * s * zi * zi / 12.0
    elif family == GUMBEL:
        out[m] = zi * np.log(zi) / p
    else:
        out[m] = zi * np.log(zi)
    return _ret(out, scalar)


@dataclass
class ConditionReport:
    """Pointwise audit of the sufficient generator conditions."""

    family: str
    param: float | None
    probe_count: int
    zero_at_one: bool
    strictly_decreasing: bool
    convex: bool
    diverges_at_zero: bool
    worst_phi_prime: tuple[float, float]  # (z, largest phi' seen)
    worst_phi_double_prime: tuple[float, float]  # (z, smallest phi'' seen)

    @property
    def all_passed(self) -> bool:
        return (
            self.zero_at_one
            and self.strictly_decreasing
            and self.convex
            and self.diverges_at_zero
        )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "param": self.param,
            "probe_count": self.probe_count,
            "zero_at_one": self.zero_at_one,
            "strictly_decreasing": self.strictly_decreasing,
            "convex": self.convex,
            "diverges_at_zero": self.diverges_at_zero,
            "worst_phi_prime": list(self.worst_phi_prime),
            "worst_phi_double_prime": list(self.worst_phi_double_prime),
            "all_passed": self.all_passed,
        }


def check_generator_conditions(
    family: str, param: float | None, probe_count: int = 64
) -> ConditionReport:
    """Audit phi for the sufficient generator conditions.

    Probes ``probe_count`` log-spaced points in (0,1) (biased toward the
    singular endpoint at 0) and checks phi' < 0 and phi'' > 0 pointwise,
    phi(1) = 0 exactly, and divergence toward 0 via
    phi(1e-12) > 10*phi(0.5).
    """
    check_param(family, param)
    if probe_count < 3:
        raise DomainError("probe_count must be >= 3")
    probes = np.geomspace(1e-12, 1.0 - 1e-3, probe_count)
    d1 = np.atleast_1d(phi_prime(family, param, probes))
    d2 = np.atleast_1d(phi_double_prime(family, param, probes))
    i1 = int(np.argmax(d1))
    i2 = int(np.argmin(d2))
    return ConditionReport(
        family=family,
        param=param,
        probe_count=probe_count,
        zero_at_one=phi(family, param, 1.0) == 0.0,
        strictly_decreasing=bool(np.all(d1 < 0.0)),
        convex=bool(np.all(d2 > 0.0)),
        diverges_at_zero=bool(
            phi(family, param, 1e-12) > 10.0 * phi(family, param, 0.5)
        ),
        worst_phi_prime=(float(probes[i1]), float(d1[i1])),
        worst_phi_double_prime=(float(probes[i2]), float(d2[i2])),
    )
