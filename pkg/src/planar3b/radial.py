"""Numerov integration of the heavy-pair radial problem: the independent
check on the WKB spectrum.

Everything is integrated in the logarithmic coordinate x = ln(R/r1), where
the radial equation takes the form chi'' + Q(x) chi = 0 with

    Q(x) = eps e^{2x} + nu0 W(x),      eps = nu0 * E,

W(x) = -e^{2x} V(e^x) (equal to 1/x for the shared asymptotic potential) and
no first-derivative term, so the fourth-order Numerov recurrence applies
directly.  Eigenvalues come from hard-wall shooting with node-count
bisection and Ridders refinement; the outward integration is truncated once
the solution has grown by e^35 inside the classically forbidden region,
which shifts eigenvalues by ~e^-70 and keeps the recurrence inside double
range (this also makes the levels independent of the outer wall position
once the wall clears the turning point).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, StepSizeError
from .numerics import ridders
from .specfun import bessel_j, bessel_y
from .wkb import langer_w

_FORBIDDEN_ACTION_CAP = 35.0
_RENORM_LIMIT = 1e250


@dataclass
class WavefunctionSample:
    grid: np.ndarray
    values: np.ndarray
    node_count: int
    norm_const: float


@dataclass
class BoundStates:
    """Eigenvalues (ascending, natural units), their node counts, and whether
    all requested levels were found."""

    energies: list
    nodes: list
    complete: bool


def _numerov_sweep(q, h, y0, y1, *, count_from=0):
    """Numerov recurrence for chi'' + q chi = 0 on a uniform grid.

    Returns (values, node_count, scale_log) where values may have been
    rescaled by exp(-scale_log) along the way to avoid overflow (sign
    structure, and therefore nodes, are unaffected).
    """
    n = len(q)
    t = (h * h / 12.0) * np.asarray(q, dtype=float)
    y = np.empty(n)
    y[0], y[1] = y0, y1
    nodes = 0
    scale_log = 0.0
    ya, yb = y1, y0  # previous point, point before that
    ta, tb = t[1], t[0]
    for i in range(2, n):
        tc = t[i]
        yc = (2.0 * ya * (1.0 - 5.0 * ta) - yb * (1.0 + tb)) / (1.0 + tc)
        yb, ya = ya, yc
        tb, ta = ta, tc
        if abs(yc) > _RENORM_LIMIT:
            f = abs(yc)
            yb /= f
            ya /= f
            y[: i] /= f
            scale_log += math.log(f)
        y[i] = ya
        if i - 1 >= count_from and y[i - 1] * y[i] < 0.0:
            nodes += 1
    if y[0] * y[1] < 0.0 and count_from == 0:
        nodes += 1
    return y, nodes, scale_log


def numerov_integrate(potential, E: float, grid, bc, *, nu0: float) -> WavefunctionSample:
    """Fourth-order Numerov solution of the log-coordinate radial equation.

    grid must be uniform in x = ln R; bc supplies the first two values.  The
    local step criterion h^2 |Q| < 0.25 is enforced (StepSizeError).
    """
    x = np.asarray(grid, dtype=float)
    if len(x) < 3:
        raise DomainError("grid must have at least 3 points")
    h = x[1] - x[0]
    if not np.allclose(np.diff(x), h, rtol=1e-9, atol=0.0):
        raise DomainError("grid must be uniform in x")
    w = langer_w(potential)
    eps = nu0 * E
    q = np.array([eps * math.exp(2.0 * xi) + nu0 * w(xi) for xi in x])
    if np.max(h * h * np.abs(q)) > 0.25:
        raise StepSizeError(
            f"step h = {h:g} too coarse: max h^2|Q| = {np.max(h*h*np.abs(q)):.3g}"
        )
    y, nodes, _ = _numerov_sweep(q, h, bc[0], bc[1])
    norm = math.sqrt(np.trapezoid(y * y * np.exp(2.0 * x), x))
    return WavefunctionSample(grid=x, values=y, node_count=nodes, norm_const=norm)


def zero_energy_exact(x_grid, nu0: float, A: float, B: float) -> WavefunctionSample:
    """Exact zero-energy solution of chi'' + (nu0/x) chi = 0:

    chi0(x) = sqrt(x) [A J1(2 sqrt(nu0 x)) + B Y1(2 sqrt(nu0 x))].
    """
    x = np.asarray(x_grid, dtype=float)
    if np.any(x <= 0):
        raise DomainError("zero_energy_exact needs x > 0")
    vals = np.empty_like(x)
    for i, xi in enumerate(x):
        z = 2.0 * math.sqrt(nu0 * xi)
        vals[i] = math.sqrt(xi) * (A * bessel_j(1, z) + B * bessel_y(1, z))
    nodes = int(np.sum(vals[:-1] * vals[1:] < 0.0))
    norm = math.sqrt(np.trapezoid(vals * vals * np.exp(2.0 * x), x))
    return WavefunctionSample(grid=x, values=vals, node_count=nodes, norm_const=norm)


class _ShootingProblem:
    """Hard-wall shooting on a fixed x grid for Q(x; eps) families."""

    def __init__(self, x, q_of_eps):
        self.x = x
        self.h = x[1] - x[0]
        self.q_of_eps = q_of_eps

    def _cap_index(self, q):
        """First index past which the forbidden-region action exceeds the cap."""
        neg = np.flatnonzero(q < 0.0)
        if len(neg) == 0:
            return len(q) - 1
        i0 = neg[0]
        action = 0.0
        for i in range(i0, len(q)):
            if q[i] < 0.0:
                action += math.sqrt(-q[i]) * self.h
                if action > _FORBIDDEN_ACTION_CAP:
                    return i
            else:  # re-entered an allowed region: reset
                action = 0.0
        return len(q) - 1

    def shoot(self, eps, end=None):
        q = self.q_of_eps(eps)
        if end is None:
            end = self._cap_index(q)
        end = max(end, 3)
        y, _, _ = _numerov_sweep(q[: end + 1], self.h, 0.0, self.h)
        # interior sign changes only: a zero at the wall is a boundary, not a node
        interior = y[:-1]
        nodes = int(np.count_nonzero(interior[:-1] * interior[1:] < 0.0))
        return nodes, y[end], end


def _eigensolve(problem: _ShootingProblem, k_levels: int, *, eps_hi=0.0, rtol=1e-10):
    """Node-count bisection plus Ridders refinement on the wall value.

    Only eigenvalues below eps_hi are reported (eps_hi = 0 restricts to
    bound states of the radial problem).
    """
    # lower all-levels-excluded bound by doubling
    eps_lo = min(-1.0, eps_hi - 1.0)
    for _ in range(300):
        if problem.shoot(eps_lo)[0] == 0:
            break
        eps_lo = eps_hi - 4.0 * (eps_hi - eps_lo)
    total = problem.shoot(eps_hi)[0]
    energies, nodes_out = [], []
    for k in range(k_levels):
        if k + 1 > total:
            return BoundStates(energies=energies, nodes=nodes_out, complete=False)
        lo, hi = eps_lo, eps_hi
        # shrink until node counts bracket k -> k+1 tightly
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if problem.shoot(mid)[0] <= k:
                lo = mid
            else:
                hi = mid
            if (hi - lo) <= 1e-3 * max(abs(lo), abs(hi), 1e-12):
                break
        end = problem.shoot(0.5 * (lo + hi))[2]  # freeze the grid cap

        def wall(eps):
            return problem.shoot(eps, end=end)[1]

        w_lo, w_hi = wall(lo), wall(hi)
        if w_lo * w_hi > 0.0:
            # widen minimally within the counted bracket
            lo2, hi2 = lo, hi
            for _ in range(60):
                lo2 -= (hi - lo)
                if wall(lo2) * w_hi <= 0.0:
                    lo = lo2
                    break
            else:
                raise RuntimeError("eigenvalue refinement lost its bracket")
        eps_k = ridders(wall, lo, hi, rtol=rtol)
        # node theorem: the count steps k -> k+1 exactly at the eigenvalue,
        # so the converged shot must sit on that transition
        n_k = problem.shoot(eps_k, end=end)[0]
        if n_k not in (k, k + 1):
            raise RuntimeError(
                f"node theorem violated: level {k} converged with {n_k} nodes"
            )
        energies.append(eps_k)
        nodes_out.append(k)
    return BoundStates(energies=energies, nodes=nodes_out, complete=True)


def _langer_grid(window, h):
    x_lo = math.log(window[0]) if window[0] > 1.0 else 0.0
    if window[0] < 1.0:
        raise DomainError("radial window must start at R >= r1 = 1")
    x_hi = math.log(window[1])
    if x_hi <= x_lo:
        raise DomainError("empty radial window")
    n = max(int(math.ceil((x_hi - x_lo) / h)) + 1, 8)
    return np.linspace(x_lo, x_hi, n)


def bound_states_numerov(potential, nu0: float, window, k_levels: int,
                         *, h: float = 2e-4) -> BoundStates:
    """Hard-wall eigenvalues of the heavy-pair problem on an R window.

    Returns up to k_levels energies in units hbar^2/(mu r1^2), ascending.
    If the window supports fewer negative-energy levels the result carries
    complete=False.
    """
    x = _langer_grid(window, h)
    w = langer_w(potential)
    wx = np.array([w(xi) if xi > 0.0 else 0.0 for xi in x])
    e2x = np.exp(2.0 * x)

    def q_of_eps(eps):
        return eps * e2x + nu0 * wx

    problem = _ShootingProblem(x, q_of_eps)
    res = _eigensolve(problem, k_levels)
    return BoundStates(
        energies=[e / nu0 for e in res.energies], nodes=res.nodes, complete=res.complete
    )


def count_negative_levels(potential, nu0: float, window, *, h: float = 2e-4) -> int:
    """Number of E < 0 hard-wall levels: node count of the zero-energy shot."""
    x = _langer_grid(window, h)
    w = langer_w(potential)
    q = np.array([nu0 * (w(xi) if xi > 0.0 else 0.0) for xi in x])
    _, nodes, _ = _numerov_sweep(q, x[1] - x[0], 0.0, x[1] - x[0])
    return nodes


def write_wavefunction_csv(sample: WavefunctionSample, path) -> None:
    """Dump a sample as `x,chi` rows (17 significant digits)."""
    with open(path, "w", newline="\n") as fh:
        fh.write("x,chi\n")
        for x, chi in zip(sample.grid, sample.values):
            fh.write(f"{x:.17g},{chi:.17g}\n")


def write_eigenvalues_csv(states: BoundStates, path) -> None:
    """Dump bound-state energies as `k,E_k,nodes` rows."""
    with open(path, "w", newline="\n") as fh:
        fh.write("k,E_k,nodes\n")
        for k, (e, n) in enumerate(zip(states.energies, states.nodes)):
            fh.write(f"{k},{e:.17g},{n}\n")


def bound_states_1d(u_of_x, window, k_levels: int, *, h: float = 1e-3) -> BoundStates:
    """Plain 1D hard-wall problem chi'' + (E - U(x)) chi = 0 (solver self-test)."""
    x_lo, x_hi = window
    n = max(int(math.ceil((x_hi - x_lo) / h)) + 1, 8)
    x = np.linspace(x_lo, x_hi, n)
    u = np.array([u_of_x(xi) for xi in x])

    def q_of_eps(eps):
        return eps - u

    problem = _ShootingProblem(x, q_of_eps)
    eps_hi = 1.0
    for _ in range(200):
        if problem.shoot(eps_hi)[0] >= k_levels:
            break
        eps_hi *= 2.0
    return _eigensolve(problem, k_levels, eps_hi=eps_hi)
