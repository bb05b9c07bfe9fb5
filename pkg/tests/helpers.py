"""Shared test utilities: draw construction and independent oracles."""

import math

import numpy as np

from bepalloc.channel import ChannelDraw
from bepalloc.special_math import q_inv


def make_draw(gain_b: float, gains_e) -> ChannelDraw:
    """Single-antenna draw with prescribed power gains (real channels)."""
    h_b = np.array([math.sqrt(gain_b) + 0j])
    h_e = np.array([[math.sqrt(g) + 0j] for g in gains_e])
    return ChannelDraw(h_b=h_b, h_e=h_e)


def random_draw(rng: np.random.Generator, n_adversaries: int, antennas: int = 1) -> ChannelDraw:
    s = math.sqrt(0.5)
    h_b = (rng.standard_normal(antennas) + 1j * rng.standard_normal(antennas)) * s
    h_e = (
        rng.standard_normal((n_adversaries, antennas))
        + 1j * rng.standard_normal((n_adversaries, antennas))
    ) * s
    return ChannelDraw(h_b=h_b, h_e=h_e)


def grid_search_power_pair(draw, scenario, th, step=1e-4):
    """Independent check of the beamforming power optimum: scan a dense
    (p_d, p_an) grid, evaluating the raw constraints of the power program,
    and return the smallest feasible p_d + p_an found.

    The grid spans [0, p_total_solver] per axis: any point beating the
    solver's optimum would have both coordinates below that sum, so the
    scan cannot miss one.  Returns (best_grid_sum, solver_total).
    """
    from bepalloc.beamforming import solve_power_pair

    sol = solve_power_pair(draw, scenario, th)
    assert sol.feasible
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    s2 = scenario.sigma2
    h_b = scenario.alpha_b * draw.h_b
    h_e = [scenario.alpha_e[e] * draw.h_e[e] for e in range(scenario.n_adversaries)]
    hb2 = float(np.sum(np.abs(h_b) ** 2))
    g_de = np.array([abs(np.vdot(h, sol.w_d)) ** 2 for h in h_e])
    g_ae = np.array([abs(np.vdot(h, sol.w_an)) ** 2 for h in h_e])

    top = sol.p_total + 2 * step
    pan_grid = np.arange(0.0, top, step)
    best = math.inf
    for p_d in np.arange(0.0, top, step):
        if s2 * c1 - hb2 * p_d > 0.0:
            continue  # legitimate constraint violated
        ok = np.ones(pan_grid.size, dtype=bool)
        for e in range(len(h_e)):
            ok &= g_de[e] * p_d - c2 * (s2 + g_ae[e] * pan_grid) <= 0.0
        if np.any(ok):
            best = min(best, p_d + pan_grid[np.argmax(ok)])
    return best, sol.p_total
