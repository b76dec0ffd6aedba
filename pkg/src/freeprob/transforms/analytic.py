"""Floating-point evaluators for the Askey-Wimp-Kerov Cauchy transforms.

Two independent evaluation routes are kept throughout:

* a continued-fraction route (cf_eval) with numerators c+1, c+2, ...,
  evaluated backward with adaptive depth; valid in the open upper half-plane
  and for large |z|;
* an entire-series route (G_eval / F_eval): for c != 0 the transform is
  G = -phi'/(c phi) where phi solves phi'' + z phi' + c phi = 0, evaluated
  from its power series with the physical solution selected by a one-time
  Moebius calibration against the continued fraction at z = 10i; for c = 0
  the linear equation G' = -zG + 1 gives the closed form
  G(z) = exp(-z^2/2) (-i sqrt(pi/2) + integral_0^z exp(t^2/2) dt)
  with the integral summed as an entire series.

The series route analytically continues across the real axis (needed on the
negative imaginary axis); the continued fraction does not.  The series
suffers cancellation that grows with min(|Re z|, |Im z|), so every series
evaluation tracks its own cancellation ratio and G_eval falls back to the
continued fraction (or demands extended precision) when too many digits are
lost.  Default precision is binary64; pass dps >= 16 to run on mpmath.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

__all__ = [
    "PrecisionError",
    "PoleError",
    "ContinuationError",
    "RiccatiResiduals",
    "FTrajectoryReport",
    "cf_eval",
    "G_eval",
    "F_eval",
    "riccati_residual",
    "decomposition_residual",
    "dilation_residual",
    "density_eval",
    "voiculescu_phi",
    "f_trajectory",
]


class PrecisionError(ArithmeticError):
    """Requested accuracy is not reachable with the current settings."""


class PoleError(ArithmeticError):
    """Evaluation too close to a pole; carries a location estimate."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ContinuationError(ArithmeticError):
    """Newton continuation failed; carries the last good point."""

    def __init__(self, message, last_target=None, last_value=None):
        super().__init__(message)
        self.last_target = last_target
        self.last_value = last_value


def _scoped(fn):
    """Run the wrapped function inside mpmath.workdps(dps) when dps is set."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        dps = kwargs.get("dps")
        if dps is None:
            return fn(*args, **kwargs)
        import mpmath

        with mpmath.workdps(dps):
            return fn(*args, **kwargs)

    return wrapper


def _mp(dps: Optional[int]):
    if dps is None:
        return None
    import mpmath

    return mpmath


def _lift(z, mp_mod):
    return complex(z) if mp_mod is None else mp_mod.mpc(z)


def _real(value, mp_mod):
    if mp_mod is None:
        return float(value)
    if isinstance(value, Fraction):
        return mp_mod.mpf(value.numerator) / mp_mod.mpf(value.denominator)
    return mp_mod.mpf(value)


def _im(z) -> float:
    return float(z.imag)


# digits available at the working precision
def _digits(dps: Optional[int]) -> float:
    return 15.6 if dps is None else float(dps)


# ------------------------------------------------------------ continued fraction

CF_MIN_IM = 0.02


@_scoped
def cf_eval(c, z, tol: float = 1e-13, depth: Optional[int] = None,
            max_depth: int = 1 << 17, dps: Optional[int] = None):
    """Backward-evaluated continued fraction for G with numerators c+k.

    With depth=None the depth doubles until two successive approximants
    agree within tol; an explicit depth returns that single approximant.
    Requires Im z > 0 (convergence slows like (1/Im z)^2 near the axis) or
    |z| >= 40; below the real axis the fraction would converge to the
    reflected Cauchy transform, not the analytic continuation, and is
    rejected.
    """
    c = Fraction(c)
    if c < -1:
        raise ValueError("parameter must satisfy c >= -1")
    mp_mod = _mp(dps)
    w = _lift(z, mp_mod)
    if not (_im(w) > 0 or abs(w) >= 40):
        raise ValueError("continued fraction needs Im z > 0 or |z| >= 40")
    if c == -1:
        return 1 / w
    cval = _real(c, mp_mod)

    def approximant(d: int):
        g = 0 * w
        for k in range(d, 0, -1):
            g = (cval + k) / (w - g)
        return 1 / (w - g)

    if depth is not None:
        if depth < 1:
            raise ValueError("depth must be at least 1")
        return approximant(depth)
    if _im(w) > 0 and _im(w) < CF_MIN_IM and abs(w) < 40:
        raise PrecisionError(
            f"continued fraction too slow at Im z = {_im(w)}; use the series route"
        )
    d = 32
    prev = approximant(d)
    gap = None
    while d <= max_depth:
        d *= 2
        cur = approximant(d)
        gap = abs(cur - prev)
        if gap <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise PrecisionError(
        f"continued fraction did not converge by depth {max_depth} (residual {gap})"
    )


# ------------------------------------------------------------ entire series


@_scoped
def _phi_pair(c, z, dps: Optional[int] = None, max_terms: int = 200_000):
    """(phi_e, phi_e', phi_o, phi_o', scale) for the even/odd solutions of
    phi'' + z phi' + c phi = 0 with phi_e(0) = 1, phi_o'(0) = 1.

    `scale` is the largest accumulator/term magnitude met while summing; the
    achieved accuracy is roughly eps * scale in absolute terms.
    """
    mp_mod = _mp(dps)
    w = _lift(z, mp_mod)
    one = 1 + 0 * w
    if abs(w) == 0:
        return one, 0 * w, 0 * w, one, 1.0
    cval = _real(c, mp_mod)
    eps = 10.0 ** (-(_digits(dps) + 3))
    w2 = w * w
    even_term = one  # e_k z^{2k}
    odd_term = w  # o_k z^{2k+1}
    pe, po = even_term, odd_term
    dpe, dpo = 0 * w, one
    scale = max(abs(pe), abs(po))
    hump = float(abs(w2)) / 2
    quiet = 0
    k = 0
    while k < max_terms:
        even_term = even_term * w2 * (-(cval + 2 * k) / ((2 * k + 1) * (2 * k + 2)))
        odd_term = odd_term * w2 * (-(cval + 2 * k + 1) / ((2 * k + 2) * (2 * k + 3)))
        k += 1
        pe += even_term
        po += odd_term
        dpe += (2 * k) * even_term / w
        dpo += (2 * k + 1) * odd_term / w
        scale = max(scale, abs(pe), abs(po), abs(even_term), abs(odd_term))
        if abs(even_term) + abs(odd_term) < eps * scale and k > hump:
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    else:
        raise PrecisionError(f"series for phi did not settle in {max_terms} terms at z={z}")
    return pe, dpe, po, dpo, float(scale)


_RHO_CACHE: dict = {}


def _phi_mixture_ratio(c: Fraction, dps: Optional[int]):
    """Ratio rho with phi = phi_e + rho * phi_o the physical (decaying) branch,
    pinned by matching -phi'/(c phi) to the continued fraction at z = 10i."""
    key = (c, dps)
    if key not in _RHO_CACHE:
        mp_mod = _mp(dps)
        z0 = 10j
        g0 = cf_eval(c, z0, tol=10.0 ** (-(_digits(dps) - 1)), dps=dps)
        pe, dpe, po, dpo, _ = _phi_pair(c, z0, dps=dps)
        cval = _real(c, mp_mod)
        _RHO_CACHE[key] = -(dpe + cval * g0 * pe) / (dpo + cval * g0 * po)
    return _RHO_CACHE[key]


@_scoped
def _gauss_G(z, dps: Optional[int] = None, max_terms: int = 200_000):
    """(G(z), cancellation ratio) for the Gaussian closed form
    exp(-z^2/2) (-i sqrt(pi/2) + E(z)), E(z) = sum z^{2k+1}/((2k+1) 2^k k!)."""
    mp_mod = _mp(dps)
    w = _lift(z, mp_mod)
    if mp_mod is None:
        const = -1j * math.sqrt(math.pi / 2)
        expf = cmath.exp
    else:
        const = -1j * mp_mod.sqrt(mp_mod.pi / 2)
        expf = mp_mod.exp
    eps = 10.0 ** (-(_digits(dps) + 3))
    if abs(w) == 0:
        return const, 1.0
    w2 = w * w
    term = w
    total = term
    scale = abs(total)
    hump = float(abs(w2)) / 2
    k = 0
    while k < max_terms:
        # z^{2k+3}/((2k+3) 2^{k+1} (k+1)!) from z^{2k+1}/((2k+1) 2^k k!)
        term = term * w2 * (2 * k + 1) / ((2 * k + 3) * 2 * (k + 1))
        k += 1
        total += term
        scale = max(scale, abs(term), abs(total))
        if abs(term) < eps * scale and k > hump:
            break
    else:
        raise PrecisionError(f"Gaussian series did not settle in {max_terms} terms at z={z}")
    bracket = const + total
    cancel = float(scale / abs(bracket)) if abs(bracket) > 0 else math.inf
    return expf(-w2 / 2) * bracket, cancel


# series overflow guard in binary64 (worst term ~ exp(|z|^2 / 2))
def _series_overflow_safe(w, dps: Optional[int]) -> bool:
    return dps is not None or abs(w) <= 30.0


def _series_G_value(c: Fraction, w, dps: Optional[int]):
    """(G or None, cancellation ratio) via the entire-series branch; c != -1.

    Pole detection is left to the caller: a value is only trustworthy when
    the caller accepts the cancellation ratio, so no pole is signalled here.
    """
    if c == 0:
        return _gauss_G(w, dps=dps)
    pe, dpe, po, dpo, scale = _phi_pair(c, w, dps=dps)
    rho = _phi_mixture_ratio(c, dps)
    phi = pe + rho * po
    dphi = dpe + rho * dpo
    mp_mod = _mp(dps)
    cval = _real(c, mp_mod)
    mix_scale = max(float(scale), float(abs(rho) * scale))
    if abs(phi) == 0:
        return None, math.inf
    cancel = mix_scale / float(abs(phi))
    return -dphi / (cval * phi), cancel


# prefer the series while it retains this many digits; accept down to the
# floor only where the continued fraction is not applicable (near or below
# the real axis, where ~10 digits of G still beat having no value at all)
_SERIES_PREF_DIGITS = 13.0
_SERIES_FLOOR_DIGITS = 10.0


def _cf_applies(w) -> bool:
    return _im(w) >= CF_MIN_IM or abs(w) >= 40


@_scoped
def G_eval(c, z, dps: Optional[int] = None):
    """Cauchy transform of the measure with Jacobi numerators c+1, c+2, ...

    Uses the entire-series branch while its measured cancellation leaves
    enough digits (this includes the whole neighbourhood of the real axis
    and the lower half-plane, where the series is the analytic
    continuation), otherwise the continued fraction in the upper half-plane.
    c = -1 returns 1/z.
    """
    c = Fraction(c)
    if c < -1:
        raise ValueError("parameter must satisfy c >= -1")
    mp_mod = _mp(dps)
    w = _lift(z, mp_mod)
    if c == -1:
        return 1 / w
    prefer = 10.0 ** (_digits(dps) - _SERIES_PREF_DIGITS)
    floor = 10.0 ** (_digits(dps) - _SERIES_FLOOR_DIGITS)
    if _series_overflow_safe(w, dps):
        value, cancel = _series_G_value(c, w, dps)
        if cancel <= prefer or (cancel <= floor and not _cf_applies(w)):
            # for c != 0 the series branch is singular only at zeros of phi,
            # so a huge trustworthy value means a genuine pole (c = 0 has
            # none: its continuation merely grows below the axis)
            if c != 0 and (value is None or abs(value) > 1e12):
                estimate = None if value is None else w + 1 / (_real(c, mp_mod) * value)
                raise PoleError("evaluation too close to a pole of G", location=estimate)
            return value
    if _cf_applies(w):
        return cf_eval(c, w, dps=dps)
    raise PrecisionError(
        f"series cancellation too severe at z={z} and the continued fraction "
        "does not apply there; retry with a higher dps"
    )


@_scoped
def F_eval(c, z, dps: Optional[int] = None):
    """Reciprocal transform F = 1/G, via -c phi / phi' on the series branch."""
    c = Fraction(c)
    if c < -1:
        raise ValueError("parameter must satisfy c >= -1")
    mp_mod = _mp(dps)
    w = _lift(z, mp_mod)
    if c == -1:
        return w
    if c != 0 and _series_overflow_safe(w, dps):
        pe, dpe, po, dpo, scale = _phi_pair(c, w, dps=dps)
        rho = _phi_mixture_ratio(c, dps)
        phi = pe + rho * po
        dphi = dpe + rho * dpo
        cval = _real(c, mp_mod)
        mix_scale = max(float(scale), float(abs(rho) * scale))
        prefer = 10.0 ** (_digits(dps) - _SERIES_PREF_DIGITS)
        floor = 10.0 ** (_digits(dps) - _SERIES_FLOOR_DIGITS)
        if abs(dphi) > 0:
            cancel = mix_scale / float(abs(dphi))
            if cancel <= prefer or (cancel <= floor and not _cf_applies(w)):
                if abs(phi) == 0:
                    return 0 * w
                return -cval * phi / dphi
    return 1 / G_eval(c, w, dps=dps)


# ------------------------------------------------------------ residual checks


@dataclass
class RiccatiResiduals:
    g_form: float  # |G' - (c G^2 - z G + 1)|
    f_form: float  # |F' - (-F^2 + z F - c)|


def riccati_residual(c, z, step: float = 1e-5, dps: Optional[int] = None) -> RiccatiResiduals:
    """Central-difference residuals of the Riccati equations for G and F."""
    c = Fraction(c)
    h = step
    gp = (G_eval(c, z + h, dps=dps) - G_eval(c, z - h, dps=dps)) / (2 * h)
    g = G_eval(c, z, dps=dps)
    g_res = abs(gp - (float(c) * g * g - z * g + 1))
    fp = (F_eval(c, z + h, dps=dps) - F_eval(c, z - h, dps=dps)) / (2 * h)
    f = F_eval(c, z, dps=dps)
    f_res = abs(fp - (-f * f + z * f - float(c)))
    return RiccatiResiduals(float(g_res), float(f_res))


def decomposition_residual(c, z, dps: Optional[int] = None) -> float:
    """|G_{c+1}(z) - (z - F_c(z)) / (c+1)| with the two sides evaluated by
    independent routes (continued fraction vs entire series).

    At c = -1 the identity degenerates (F is the identity map); the returned
    number is then the Gaussian cross-route gap |G_cf - G_series| at z.
    """
    c = Fraction(c)
    if c == -1:
        series, _ = _gauss_G(z, dps=dps)
        return float(abs(cf_eval(0, z, dps=dps) - series))
    lhs = cf_eval(c + 1, z, dps=dps)
    rhs = (z - F_eval(c, z, dps=dps)) / (float(c) + 1)
    return float(abs(lhs - rhs))


def dilation_residual(c, z, dps: Optional[int] = None) -> float:
    """Residual of the variance-one dilation identity
    F_c(z sqrt(c+1)) / sqrt(c+1) = z - sqrt(c+1) G_{c+1}(z sqrt(c+1))."""
    c = Fraction(c)
    if c <= -1:
        raise ValueError("dilation identity needs c > -1")
    root = math.sqrt(float(c) + 1)
    lhs = F_eval(c, z * root, dps=dps) / root
    rhs = z - root * cf_eval(c + 1, z * root, dps=dps)
    return float(abs(lhs - rhs))


def density_eval(c, u: float, eps: float = 1e-6, richardson: bool = False,
                 dps: Optional[int] = None) -> float:
    """Density at u via the boundary value -(1/pi) Im G(u + i eps).

    With richardson=True the order-eps Poisson bias is removed by evaluating
    at eps and eps/2 and extrapolating.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")

    def one(e: float) -> float:
        return -float(G_eval(c, complex(u, e), dps=dps).imag) / math.pi

    if not richardson:
        return one(eps)
    d1, d2 = one(eps), one(eps / 2)
    return 2 * d2 - d1


# ------------------------------------------------------------ inverse transform


def voiculescu_phi(c, z, tol: float = 1e-11, dps: Optional[int] = None):
    """phi(z) = F^{-1}(z) - z by damped Newton with downward continuation.

    Continuation targets z + i T, T = 10 (1 + |z|) halving until it drops
    below tol; Newton uses the exact derivative F' = -F^2 + wF - c.  Raises
    ContinuationError (with the last good stage) if a stage fails.
    """
    c = Fraction(c)
    if c == -1:
        return 0j
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("the inverse transform is defined on the upper half-plane")
    t = 10.0 * (1.0 + abs(z))
    targets = []
    while t > tol:
        targets.append(z + 1j * t)
        t /= 2
    targets.append(z)
    w = targets[0]  # F(w) ~ w high up
    last_good = None
    for target in targets:
        converged = False
        for _ in range(100):
            fw = F_eval(c, w, dps=dps)
            residual = abs(fw - target)
            if residual <= tol * (1 + abs(target)):
                converged = True
                break
            derivative = -fw * fw + w * fw - float(c)
            if abs(derivative) < 1e-30:
                break
            full = (fw - target) / derivative
            step_scale = 1.0
            for _ in range(50):
                trial = w - step_scale * full
                trial_res = abs(F_eval(c, trial, dps=dps) - target)
                if trial_res < residual:
                    w = trial
                    break
                step_scale /= 2
            else:
                break
        if not converged:
            raise ContinuationError(
                f"Newton stage failed at target {target}",
                last_target=last_good[0] if last_good else None,
                last_value=last_good[1] if last_good else None,
            )
        last_good = (target, w)
    return w - z


# ------------------------------------------------------------ imaginary-axis flow


@dataclass
class FTrajectoryReport:
    """Diagnostics of the real flow f' = f^2 - r f - c on the imaginary axis
    (f(r) = F(ir)/i), integrated downward from r_hi.

    q0 is the unique zero of f, s_crit the unique critical point; the flags
    record f > r, f' < 1, uniqueness of both sign changes and the bound
    s_crit < -2 sqrt(-c).
    """

    c: float
    r_lo: float
    r_hi: float
    samples: list  # (r, f, f') triples, r decreasing
    q0: Optional[float] = None
    s_crit: Optional[float] = None
    f_at_scrit: Optional[float] = None
    f_above_diagonal: bool = False
    fprime_below_one: bool = False
    unique_zero: bool = False
    unique_critical_point: bool = False
    scrit_below_bound: bool = False
    failures: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return not self.failures


def _rk4_step(r: float, f: float, h: float, c: float) -> float:
    def deriv(rr, ff):
        return ff * ff - rr * ff - c

    k1 = deriv(r, f)
    k2 = deriv(r + h / 2, f + h * k1 / 2)
    k3 = deriv(r + h / 2, f + h * k2 / 2)
    k4 = deriv(r + h, f + h * k3)
    return f + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6


def f_trajectory(c, r_lo: float = -16.0, r_hi: float = 12.0, step: float = 0.005,
                 dps: Optional[int] = None) -> FTrajectoryReport:
    """Integrate the imaginary-axis flow downward and verify its shape.

    Requires -1 < c < 0.  The initial value comes from the continued
    fraction at i r_hi.  Assertion failures are collected in the report
    (a finding, not an exception).
    """
    cfrac = Fraction(c)
    if not (Fraction(-1) < cfrac < 0):
        raise ValueError("the trajectory verifier needs -1 < c < 0")
    cf = float(cfrac)
    if r_lo >= r_hi:
        raise ValueError("need r_lo < r_hi")
    f0 = complex(1 / cf_eval(cfrac, complex(0.0, r_hi), dps=dps) / 1j)
    f = f0.real
    samples = [(r_hi, f, f * f - r_hi * f - cf)]
    r = r_hi
    h = -abs(step)
    while r > r_lo + 1e-12:
        hh = max(h, r_lo - r)
        f = _rk4_step(r, f, hh, cf)
        r = r + hh
        samples.append((r, f, f * f - r * f - cf))
    report = FTrajectoryReport(c=cf, r_lo=r_lo, r_hi=r_hi, samples=samples)

    def interpolate(r1, v1, r2, v2):
        return r1 - v1 * (r2 - r1) / (v2 - v1)

    zero_crossings = []
    crit_crossings = []
    for (r1, f1, g1), (r2, f2, g2) in zip(samples, samples[1:]):
        if f1 == 0 or (f1 > 0) != (f2 > 0):
            zero_crossings.append(interpolate(r1, f1, r2, f2))
        if g1 == 0 or (g1 > 0) != (g2 > 0):
            crit_crossings.append(interpolate(r1, g1, r2, g2))

    report.unique_zero = len(zero_crossings) == 1
    report.unique_critical_point = len(crit_crossings) == 1
    if zero_crossings:
        report.q0 = zero_crossings[0]
    if crit_crossings:
        report.s_crit = crit_crossings[0]
        report.f_at_scrit = min(
            (fv for rv, fv, _ in samples if abs(rv - report.s_crit) < 5 * abs(step)),
            default=None,
        )
    report.f_above_diagonal = all(fv > rv for rv, fv, _ in samples)
    report.fprime_below_one = all(gv < 1 for _, _, gv in samples)
    bound = -2 * math.sqrt(-cf)
    report.scrit_below_bound = report.s_crit is not None and report.s_crit < bound

    if not report.unique_zero:
        report.failures.append(f"expected exactly one zero of f, found {len(zero_crossings)}")
    elif not (report.q0 < 0):
        report.failures.append(f"zero of f is not negative: {report.q0}")
    if not report.unique_critical_point:
        report.failures.append(
            f"expected exactly one critical point, found {len(crit_crossings)}"
        )
    if not report.scrit_below_bound:
        report.failures.append(f"critical point {report.s_crit} not below {bound}")
    if not report.f_above_diagonal:
        report.failures.append("f(r) > r violated")
    if not report.fprime_below_one:
        report.failures.append("f'(r) < 1 violated")
    return report
