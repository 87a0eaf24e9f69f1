"""Effective heavy-heavy potential branches from light-particle binding.

Each branch is the zero set of a transcendental equation in the scaled
light-particle binding momentum xi at fixed heavy-pair separation R:

* s-wave:  K0((2 e^-gamma R/a0) xi) = +/- ln xi, with xi = e^gamma kappa a0/2
  and V/|eps0| = -xi^2.
* p-wave branch I  (pure p superpositions):
  K0(xi R) - K2(xi R) = +/- (a1_inv/xi^2 + ln xi), xi = kappa r1, and
  V = -xi^2/2 in natural units.
* p-wave branch II (s+p superpositions), the product form
  [K2 + K0 +/- (a1_inv/xi^2 + ln xi)] [K0 -/+ ln(xi e^gamma a0/2)] = 2 K1^2.

The same zeros are reachable through the block determinants of the
six-coefficient linear system (``determinant_residual``), which is the
cross-check used by the validation suite.  Closed forms for the exact
resonance and the shared large-R asymptote -1/(R^2 ln R) are provided
alongside the full solvers.

Units: s-wave functions work in (R/a0, V/|eps0|); everything p-wave is in
natural units (r1 = 1, energies hbar^2/(mu r1^2)).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, NoRealRootError
from .numerics import brent, expand_bracket_up, scan_sign_changes
from .specfun import EULER_GAMMA, bessel_k
from .twobody import TwoBodyParams, dimer_energies, pwave_pole, t_matrix

log = logging.getLogger(__name__)

_TWO_EXP_NEG_GAMMA = 2.0 * math.exp(-EULER_GAMMA)


class Branch(Enum):
    SWAVE_PLUS = "s+"
    SWAVE_MINUS = "s-"
    PWAVE_I_PLUS = "I+"
    PWAVE_I_MINUS = "I-"
    PWAVE_I_ZERO = "I0"
    PWAVE_II_PLUS = "II+"
    PWAVE_II_MINUS = "II-"
    PWAVE_II_ZERO = "II0"
    ASYMPTOTIC_UNIFIED = "asym"


S_BRANCHES = (Branch.SWAVE_PLUS, Branch.SWAVE_MINUS)
ZERO_BRANCHES = (Branch.PWAVE_I_ZERO, Branch.PWAVE_II_ZERO)


@dataclass(frozen=True)
class RootResult:
    xi: float
    residual: float
    bracket: tuple
    converged: bool
    n_roots: int = 1


@dataclass
class PotentialCurve:
    """Sampled effective potential for one branch.

    R_grid is in units of a0 for the s-wave branches and r1 otherwise; V is
    in units of |eps0| for s-wave and hbar^2/(mu r1^2) otherwise.
    """

    branch: Branch
    R_grid: np.ndarray
    V: np.ndarray
    validity: tuple
    converged: np.ndarray
    residual: np.ndarray


def _refine(f, root):
    """Squeeze a Brent root to the last ulp by local bisection; return residual."""
    fr = f(root)
    if fr == 0.0:
        return root, 0.0
    step = 8.0 * 2.220446049250313e-16 * abs(root)
    a, b = root - step, root + step
    fa, fb = f(a), f(b)
    if fa * fr < 0.0:
        b, fb = root, fr
    elif fr * fb < 0.0:
        a, fa = root, fr
    else:
        return root, fr  # already at a local floor
    while True:
        m = 0.5 * (a + b)
        if m == a or m == b:
            break
        fm = f(m)
        if fm == 0.0:
            return m, 0.0
        if fa * fm < 0.0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    return (a, fa) if abs(fa) <= abs(fb) else (b, fb)


# --------------------------------------------------------------------------
# s-wave branches (units: R/a0 and V/|eps0|)
# --------------------------------------------------------------------------

def solve_swave(R_over_a0: float, sign: int) -> RootResult:
    """Root of K0((2 e^-gamma R/a0) xi) = sign * ln(xi).

    The + branch has a unique root above 1; the - branch a unique root in
    (0, 1) that exists only for R > a0 (below, the solution is complex and
    NoRealRootError is raised).
    """
    if R_over_a0 <= 0:
        raise DomainError("R/a0 must be positive")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    c = _TWO_EXP_NEG_GAMMA * R_over_a0

    if sign == +1:
        def f(xi):
            return bessel_k(0, c * xi) - math.log(xi)

        lo = 1.0 + 1e-15
        if f(lo) <= 0.0:  # K0 underflowed; root is pinned to xi = 1
            return RootResult(xi=1.0, residual=f(lo), bracket=(1.0, lo), converged=True)
        lo, hi = expand_bracket_up(f, lo, 2.0)
    else:
        def f(xi):
            return bessel_k(0, c * xi) + math.log(xi)

        # f(0+) -> -ln(R/a0): no sign change (hence no real root) for R <= a0
        if R_over_a0 <= 1.0:
            raise NoRealRootError(
                f"s-wave '-' branch has no real root for R/a0 = {R_over_a0:g} <= 1",
                window=(0.0, 1.0),
            )
        lo, hi = 1e-280, math.nextafter(1.0, 0.0)
        if f(hi) < 0.0:
            # root within an ulp of 1: asymptotically xi = 1 - K0(c)
            xi = 1.0 - bessel_k(0, c)
            return RootResult(xi=xi, residual=f(xi), bracket=(hi, 1.0), converged=True)
        if f(lo) > 0.0:
            raise NoRealRootError(
                f"s-wave '-' bracket failed at R/a0 = {R_over_a0:g}", window=(lo, hi)
            )
    root = brent(f, lo, hi, xtol=1e-300, rtol=1e-15)
    root, res = _refine(f, root)
    return RootResult(xi=root, residual=res, bracket=(lo, hi), converged=abs(res) <= 1e-10)


def v_swave(R_over_a0: float, sign: int) -> float:
    """V/|eps0| on the s-wave branch: -xi^2."""
    return -solve_swave(R_over_a0, sign).xi ** 2


def swave_asymptote(R_over_a0: float, sign: int, regime: str) -> float:
    """Closed-form limits of V/|eps0| for the s-wave branches.

    regime 'small' is the short-distance form (R << a0 for '+', R >~ a0 for
    '-'); 'large' is the long-distance form shared apart from the sign of
    the exponential correction.
    """
    if R_over_a0 <= 0:
        raise DomainError("R/a0 must be positive")
    if regime not in ("small", "large"):
        raise DomainError("regime must be 'small' or 'large'")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    x = R_over_a0
    if regime == "small":
        if sign == +1:
            return -1.0 / x
        return -math.exp(2.0 * EULER_GAMMA) * math.log(x) / (x * x)
    tail = math.sqrt(math.pi * math.exp(EULER_GAMMA) / x) * math.exp(-_TWO_EXP_NEG_GAMMA * x)
    return -(1.0 + tail) if sign == +1 else -(1.0 - tail)


# --------------------------------------------------------------------------
# p-wave branches (natural units)
# --------------------------------------------------------------------------

def _pwave_scan_solve(f, R, label, *, hi=None, n_scan=200):
    """Scan xi in (0, hi) on a log grid, Brent the smallest bracket."""
    lo = min(1e-7 / R, 1e-7)
    hi = 1.0 - 1e-12 if hi is None else hi
    brackets, min_abs = scan_sign_changes(f, lo, hi, n=n_scan, log=True)
    if not brackets:
        raise NoRealRootError(
            f"{label}: no sign change for xi in [{lo:.3g}, 1) at R = {R:g} "
            f"(min |F| = {min_abs:.3g})",
            window=(lo, 1.0),
            min_abs_residual=min_abs,
        )
    if len(brackets) > 1:
        others = ", ".join(f"[{a:.3g}, {b:.3g}]" for a, b in brackets[1:])
        log.debug("%s: %d roots at R=%g; keeping smallest, others in %s",
                  label, len(brackets), R, others)
    a, b = brackets[0]
    root = brent(f, a, b, xtol=1e-300, rtol=1e-15)
    root, res = _refine(f, root)
    return RootResult(xi=root, residual=res, bracket=(a, b),
                      converged=abs(res) <= 1e-10, n_roots=len(brackets))


def pole_function(xi: float, a1_inv: float) -> float:
    """a1_inv/xi^2 + ln xi, the real p-wave inverse-T combination."""
    return a1_inv / (xi * xi) + math.log(xi)


def solve_pwave_I(R: float, params: TwoBodyParams, sign: int) -> RootResult:
    """Root of K0(xi R) - K2(xi R) = sign*(a1_inv/xi^2 + ln xi).

    The left side equals -2 K1(xi R)/(xi R) by the K recurrence, which is the
    cancellation-free form used here.  At exact resonance only sign=+1 has a
    root in the physical window xi < 1.

    The effective-range form has a second, unphysical zero of its inverse-T
    combination near xi ~ 1 (kappa r1 of order one, outside the low-energy
    regime); the '-' branch scan is therefore capped at the physical pole
    kappa1, below which its genuine roots live.
    """
    if R <= params.r1:
        raise DomainError(f"branch I needs R > r1, got R = {R:g}")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    a1_inv = params.a1_inv

    def f(xi):
        z = xi * R
        return -2.0 * bessel_k(1, z) / z - sign * pole_function(xi, a1_inv)

    hi = None
    if sign == -1 and a1_inv > 0.0:
        hi = pwave_pole(a1_inv) * (1.0 - 1e-9)
    return _pwave_scan_solve(f, R, f"pwave_I({'+' if sign > 0 else '-'})", hi=hi)


def solve_pwave_II(R: float, params: TwoBodyParams, sign: int) -> RootResult:
    """Root of the product form (branch II, s+p superpositions):

    [K2 + K0 + sign*(a1_inv/xi^2 + ln xi)] [K0 - sign*ln(xi e^gamma a0/2)]
    = 2 K1(xi R)^2.
    """
    if R <= params.r1:
        raise DomainError(f"branch II needs R > r1, got R = {R:g}")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    a1_inv = params.a1_inv
    log_ga0 = EULER_GAMMA + math.log(0.5 * params.a0)

    def f(xi):
        z = xi * R
        k0 = bessel_k(0, z)
        k1 = bessel_k(1, z)
        k2 = k0 + 2.0 * k1 / z
        first = k2 + k0 + sign * pole_function(xi, a1_inv)
        second = k0 - sign * (math.log(xi) + log_ga0)
        return first * second - 2.0 * k1 * k1

    return _pwave_scan_solve(f, R, f"pwave_II({'+' if sign > 0 else '-'})")


def xi_I0_closed(R: float) -> float:
    """Closed-form resonance momentum of branch I for R >> r1."""
    if R <= 1.0:
        raise DomainError("closed form needs R > r1")
    inner = math.log(R) - EULER_GAMMA + 0.5
    if inner <= 0:
        raise DomainError(f"inner logarithm non-positive at R = {R:g}")
    denom = inner + math.log(inner)
    if denom <= 0:
        raise DomainError(f"closed form denominator non-positive at R = {R:g}")
    return math.sqrt(2.0 / denom) / R


def xi_II0_closed(R: float) -> float:
    """Closed-form resonance momentum of branch II for R >> r1."""
    if R <= 0.0:
        raise DomainError("R must be positive")
    denom = math.log(0.5 * R) + EULER_GAMMA + 1.5
    if denom <= 0:
        raise DomainError(f"closed form bracket non-positive at R = {R:g}")
    return math.sqrt(2.0 / denom) / R


def v_pwave(xi: float) -> float:
    """Natural-unit potential from a p-wave root: V = -xi^2/2."""
    return -0.5 * xi * xi


def v_unified(R: float) -> float:
    """Shared large-R asymptote -1/(R^2 ln R), natural units; needs R > 1."""
    if R <= 1.0:
        raise DomainError(f"v_unified needs R > 1 (ln R > 0), got {R:g}")
    return -1.0 / (R * R * math.log(R))


class UnifiedPotential:
    """Callable wrapper for the asymptotic potential with its log-space form.

    ``langer_w(x)`` returns -e^(2x) V(e^x) = 1/x exactly, which stays finite
    where e^(2x) overflows; the WKB machinery prefers it when present.
    """

    validity = (math.e, math.inf)

    def __call__(self, R: float) -> float:
        return v_unified(R)

    @staticmethod
    def langer_w(x: float) -> float:
        if x <= 0:
            raise DomainError("langer_w needs x = ln R > 0")
        return 1.0 / x


# --------------------------------------------------------------------------
# Block-determinant consistency check
# --------------------------------------------------------------------------

def coupling_coefficients(kappa: float, R: float, params: TwoBodyParams):
    """The five complex couplings (alpha0, alpha1, beta0, beta1, beta2).

    alpha_m = i pi T0(i kappa) H_m(i kappa R) and beta_m the same with T1,
    rewritten through K_m via H_m(iz) = (2/pi) i^-(m+1) K_m(z).
    """
    if kappa <= 0 or R <= 0:
        raise DomainError("coupling_coefficients needs kappa > 0 and R > 0")
    t0 = t_matrix(0, kappa, params)
    t1 = t_matrix(1, kappa, params)
    z = kappa * R
    k0 = bessel_k(0, z)
    k1 = bessel_k(1, z)
    k2 = k0 + 2.0 * k1 / z
    alpha0 = complex(2.0 * t0 * k0)
    alpha1 = -2.0j * t0 * k1
    beta0 = complex(2.0 * t1 * k0)
    beta1 = -2.0j * t1 * k1
    beta2 = complex(-2.0 * t1 * k2)
    return alpha0, alpha1, beta0, beta1, beta2


def block_matrices(kappa: float, R: float, params: TwoBodyParams):
    """2x2 blocks of the six-coefficient system: (M_plus, M_minus, M_zero)."""
    alpha0, alpha1, beta0, beta1, beta2 = coupling_coefficients(kappa, R, params)
    blocks = {}
    for s in (+1, -1):
        blocks[s] = np.array(
            [[1.0 + s * alpha0, s * alpha1],
             [s * 2.0 * beta1, 1.0 + s * (beta2 - beta0)]],
            dtype=complex,
        )
    m_zero = np.array([[1.0, beta0 + beta2], [beta0 + beta2, 1.0]], dtype=complex)
    return blocks[+1], blocks[-1], m_zero


def determinant_residual(xi: float, R: float, params: TwoBodyParams, block: str) -> float:
    """Determinant of the selected block at light momentum kappa = xi/r1.

    block: 'plus'/'minus' (branch II with that sign) or 'zero' (branch I,
    both signs).  A converged branch root makes the matching block singular.
    """
    m_plus, m_minus, m_zero = block_matrices(xi, R, params)
    sel = {"plus": m_plus, "minus": m_minus, "zero": m_zero}
    if block not in sel:
        raise DomainError("block must be 'plus', 'minus' or 'zero'")
    m = sel[block]
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return det.real


_BLOCK_FOR_BRANCH = {
    Branch.PWAVE_I_PLUS: "zero",
    Branch.PWAVE_I_MINUS: "zero",
    Branch.PWAVE_I_ZERO: "zero",
    Branch.PWAVE_II_PLUS: "plus",
    Branch.PWAVE_II_MINUS: "minus",
    Branch.PWAVE_II_ZERO: "plus",
}


def block_for_branch(branch: Branch) -> str:
    return _BLOCK_FOR_BRANCH[branch]


# --------------------------------------------------------------------------
# Light-particle wavefunctions
# --------------------------------------------------------------------------

def light_wavefunction(branch: str, sign: int, kappa: float, R: float,
                       points, params: TwoBodyParams | None = None) -> np.ndarray:
    """Unnormalized light-particle wavefunction sampled on 2D points.

    branch 'I': sin(phi+) K1(kappa r+) + sign * sin(phi-) K1(kappa r-);
    branch 'II' additionally mixes K0 s-waves through the T0-dependent
    amplitude, so it needs `params`.  Heavy particles sit at (-R/2, 0) and
    (+R/2, 0); points within 1e-6 of either center sample as NaN (K1
    diverges there).
    """
    if branch not in ("I", "II"):
        raise DomainError("branch must be 'I' or 'II'")
    if sign not in (+1, -1):
        raise DomainError("sign must be +1 or -1")
    if kappa <= 0 or R <= 0:
        raise DomainError("kappa and R must be positive")
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DomainError("points must be an (n, 2) array")
    x, y = pts[:, 0], pts[:, 1]
    xp, xm = x + 0.5 * R, x - 0.5 * R
    r_p = np.hypot(xp, y)
    r_m = np.hypot(xm, y)
    phi_p = np.arctan2(y, xp)
    phi_m = np.arctan2(y, xm)
    out = np.empty(len(pts))
    mask = (r_p < 1e-6) | (r_m < 1e-6)
    if branch == "I":
        for i in range(len(pts)):
            if mask[i]:
                out[i] = math.nan
                continue
            out[i] = (math.sin(phi_p[i]) * bessel_k(1, kappa * r_p[i])
                      + sign * math.sin(phi_m[i]) * bessel_k(1, kappa * r_m[i]))
        return out
    if params is None:
        raise DomainError("branch II wavefunction needs TwoBodyParams for T0")
    t0 = t_matrix(0, kappa, params)
    amp = (2.0 * t0 * bessel_k(0, kappa * R) + sign) / (2.0 * t0 * bessel_k(1, kappa * R))
    for i in range(len(pts)):
        if mask[i]:
            out[i] = math.nan
            continue
        out[i] = (bessel_k(0, kappa * r_p[i]) + sign * bessel_k(0, kappa * r_m[i])
                  - amp * (math.cos(phi_p[i]) * bessel_k(1, kappa * r_p[i])
                           - sign * math.cos(phi_m[i]) * bessel_k(1, kappa * r_m[i])))
    return out


# --------------------------------------------------------------------------
# Curve sweeps
# --------------------------------------------------------------------------

def branch_validity(branch: Branch, params: TwoBodyParams) -> tuple:
    """Documented validity window of a branch, in the branch's R unit."""
    if branch is Branch.SWAVE_PLUS:
        return (0.0, math.inf)
    if branch is Branch.SWAVE_MINUS:
        return (1.0, math.inf)
    if branch is Branch.ASYMPTOTIC_UNIFIED:
        return (math.e, math.inf)
    if branch in ZERO_BRANCHES:
        return (params.r1, math.inf)
    return (params.r1, dimer_energies(params).R1)


def branch_existence(branch: Branch, params: TwoBodyParams) -> tuple:
    """Window where real roots are expected (used to tell genuine solver
    failures from branches that simply have no solution at that R).

    The '-' branches detach from threshold at finite separation: the s-wave
    one below a0, the p-wave ones near sqrt(2 a1) (none at all at exact
    resonance).  The lower edges of the '+' families are approximate.
    """
    if branch is Branch.SWAVE_PLUS:
        return (0.0, math.inf)
    if branch is Branch.SWAVE_MINUS:
        return (1.0, math.inf)
    if branch is Branch.ASYMPTOTIC_UNIFIED:
        return (1.0, math.inf)
    if branch in (Branch.PWAVE_I_MINUS, Branch.PWAVE_II_MINUS):
        if params.a1_inv == 0.0:
            return (math.inf, math.inf)
        return (math.sqrt(2.0 * params.a1), math.inf)
    return (2.0 * params.r1, math.inf)


def _solve_branch_point(branch: Branch, R: float, params: TwoBodyParams):
    """(V, converged, residual, n_roots) for one grid point; NaN on failure."""
    try:
        if branch is Branch.SWAVE_PLUS:
            r = solve_swave(R, +1)
            return -r.xi ** 2, r.converged, r.residual, r.n_roots
        if branch is Branch.SWAVE_MINUS:
            r = solve_swave(R, -1)
            return -r.xi ** 2, r.converged, r.residual, r.n_roots
        if branch is Branch.ASYMPTOTIC_UNIFIED:
            return v_unified(R), True, 0.0, 1
        if branch is Branch.PWAVE_I_PLUS:
            r = solve_pwave_I(R, params, +1)
        elif branch is Branch.PWAVE_I_MINUS:
            r = solve_pwave_I(R, params, -1)
        elif branch is Branch.PWAVE_I_ZERO:
            r = solve_pwave_I(R, params, +1)
        elif branch is Branch.PWAVE_II_PLUS:
            r = solve_pwave_II(R, params, +1)
        elif branch is Branch.PWAVE_II_MINUS:
            r = solve_pwave_II(R, params, -1)
        elif branch is Branch.PWAVE_II_ZERO:
            r = solve_pwave_II(R, params, +1)
        else:
            raise DomainError(f"unknown branch {branch}")
        return v_pwave(r.xi), r.converged, r.residual, r.n_roots
    except (NoRealRootError, DomainError):
        return math.nan, False, math.nan, 1


def resonance_params(params: TwoBodyParams) -> TwoBodyParams:
    return TwoBodyParams(a0=params.a0, a1_inv=0.0, r1=params.r1, r0=params.r0)


def sweep_branch(branch: Branch, params: TwoBodyParams, R_grid) -> PotentialCurve:
    """Sample one branch over a grid (grid in units of a0 for s-wave branches,
    r1 otherwise).  Failed points carry V = NaN and converged = False."""
    if branch in ZERO_BRANCHES and params.a1_inv != 0.0:
        raise DomainError(f"{branch.value} requires exact resonance (a1_inv = 0)")
    grid = np.asarray(R_grid, dtype=float)
    v = np.empty_like(grid)
    ok = np.zeros(grid.shape, dtype=bool)
    res = np.full_like(grid, math.nan)
    multi = 0
    for i, R in enumerate(grid):
        v[i], ok[i], res[i], n_roots = _solve_branch_point(branch, float(R), params)
        multi += n_roots > 1
    if multi:
        log.warning("%s: %d of %d sweep points had extra roots; kept the "
                    "smallest xi at each", branch.value, multi, len(grid))
    return PotentialCurve(
        branch=branch,
        R_grid=grid,
        V=v,
        validity=branch_validity(branch, params),
        converged=ok,
        residual=res,
    )


def swave_v_to_natural(v_over_eps0: float, a0: float) -> float:
    """Convert V/|eps0| to natural units hbar^2/(mu r1^2)."""
    return v_over_eps0 * 2.0 * math.exp(-2.0 * EULER_GAMMA) / (a0 * a0)
