"""Sweep runners behind the CLI subcommands.

Each runner returns ``(metadata, header, rows)`` ready for the CSV writer.
Sweep points get their own child random streams, split up front in a fixed
order, so results do not depend on execution order or worker count.  Mean
values over feasible draws are reduced batch-by-batch in index order;
points whose feasible set is empty are emitted with NA cells rather than
dropped.
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.special import erfc

from .. import __version__
from ..allocation import Thresholds
from ..beamforming import outage_beamforming_mc, power_pair_mc_stats
from ..channel import FadingScenario, RandomStream, draw_channel_matrix, draw_power_gains
from ..coding import BlockCodeParams, effective_thresholds
from ..errors import ConfigError
from ..outage import (
    MC_BATCH,
    outage_max_of_exponentials,
    outage_monte_carlo,
    outage_multi_analytic,
    outage_single_analytic,
    outage_sum_of_exponentials,
    multi_eve_rates,
    unknown_mode_rates,
)
from ..special_math import q_inv
from .config import ExperimentConfig, config_hash

MATCH_BEP = 1e-3  # legitimate BEP level at which the power gap is measured


def _q_array(x):
    return 0.5 * erfc(np.sqrt(x) * math.sqrt(0.5))


def _meta(cfg: ExperimentConfig, figure: str, extra=()):
    meta = [
        ("tool", f"bepalloc {__version__}"),
        ("figure", figure),
        ("config_hash", config_hash(cfg)),
        ("seed", cfg.seed),
        ("trials", cfg.trials),
    ]
    meta.extend(extra)
    return meta


def _t1_grid(cfg: ExperimentConfig):
    return [float(v) for v in np.geomspace(cfg.t1_min, cfg.t1_max, cfg.t1_points)]


def _power_grid(cfg: ExperimentConfig):
    dbs = np.linspace(cfg.power_db_min, cfg.power_db_max, cfg.power_points)
    return [0.0] + [cfg.sigma2 * 10.0 ** (db / 10.0) for db in dbs]


def _db_rel_noise(power: float, sigma2: float):
    if power <= 0.0:
        return None
    return 10.0 * math.log10(power / sigma2)


# ---------------------------------------------------------------------------
# deterministic single-link curves


def run_fig1(cfg: ExperimentConfig):
    """Secrecy rate vs transmit power at fixed effective gains, with the
    saturation bound in the last column."""
    a = cfg.gain_b / cfg.sigma2
    b = cfg.gain_e / cfg.sigma2
    bound = max(0.0, math.log2(cfg.gain_b / cfg.gain_e))
    rows = []
    for p in _power_grid(cfg):
        rate = max(0.0, math.log2(1.0 + a * p) - math.log2(1.0 + b * p))
        rows.append([p, _db_rel_noise(p, cfg.sigma2), rate, bound])
    header = ["power_w", "power_db", "secrecy_rate_bits", "saturation_bound_bits"]
    return _meta(cfg, "fig1"), header, rows


def run_fig2(cfg: ExperimentConfig):
    """Legitimate and adversary BPSK BEP vs transmit power."""
    rows = []
    for p in _power_grid(cfg):
        snr_b = cfg.gain_b * p / cfg.sigma2
        snr_e = cfg.gain_e * p / cfg.sigma2
        rows.append(
            [p, _db_rel_noise(p, cfg.sigma2),
             float(_q_array(snr_b)), float(_q_array(snr_e))]
        )
    header = ["power_w", "power_db", "bep_legit", "bep_eve"]
    return _meta(cfg, "fig2"), header, rows


# ---------------------------------------------------------------------------
# threshold sweeps with Monte Carlo averaging


def _combined_adversary_value(gains_e, weights, combiner):
    z = weights[0] * gains_e[:, 0]
    for e in range(1, gains_e.shape[1]):
        if combiner == "max":
            z = np.maximum(z, weights[e] * gains_e[:, e])
        else:
            z = z + weights[e] * gains_e[:, e]
    return z


def _feasible_power_stats(scenario, th, combiner, trials, stream, workers):
    """Feasible-draw count, sum of 1/|h_B|^2, and sum of the delivered
    adversary BEP over feasible draws (batch-ordered reduction)."""
    c1 = q_inv(th.t1) ** 2
    c2 = q_inv(th.t2) ** 2
    s2 = scenario.sigma2
    if combiner == "max":
        weights = np.array(
            [(s2 + scenario.interference) * c1 * a**2 for a in scenario.alpha_e]
        )
        y_weight = s2 * c2 * scenario.alpha_b**2
    else:
        weights = np.array([c1 * a**2 for a in scenario.alpha_e])
        y_weight = c2 * scenario.alpha_b**2
    gb2 = scenario.alpha_b**2

    full, rem = divmod(trials, MC_BATCH)
    sizes = [MC_BATCH] * full + ([rem] if rem else [])
    children = stream.split(len(sizes))

    def run(j):
        gain_b, gains_e = draw_power_gains(
            children[j].generator, sizes[j], scenario.n_adversaries
        )
        z = _combined_adversary_value(gains_e, weights, combiner)
        feas = z <= y_weight * gain_b
        gb = gain_b[feas]
        # adversary-side BEP delivered at p_opt, combined per the scenario rule
        snr_comb = z[feas] / (s2 * gb2 * gb)
        return (
            int(np.count_nonzero(feas)),
            float(np.sum(1.0 / gb)),
            float(np.sum(_q_array(snr_comb))),
        )

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, range(len(sizes))))
    else:
        parts = [run(j) for j in range(len(sizes))]
    feasible = sum(p[0] for p in parts)
    sum_inv = math.fsum(p[1] for p in parts)
    sum_bep_eve = math.fsum(p[2] for p in parts)
    return feasible, sum_inv, sum_bep_eve


def _mean_power_cells(scenario, th, combiner, trials, stream, workers):
    feasible, sum_inv, _ = _feasible_power_stats(
        scenario, th, combiner, trials, stream, workers
    )
    noise_b = scenario.sigma2 + scenario.interference
    c1 = q_inv(th.t1) ** 2
    if feasible == 0:
        return None, None, 0.0
    mean_p = noise_b * c1 / scenario.alpha_b**2 * (sum_inv / feasible)
    return mean_p, 10.0 * math.log10(mean_p / scenario.sigma2), feasible / trials


def run_fig3(cfg: ExperimentConfig):
    """Mean optimal power (over feasible draws) vs legitimate threshold,
    one series per adversary count."""
    grid = _t1_grid(cfg)
    n_series = len(cfg.alpha_e)
    streams = RandomStream(cfg.seed).split(len(grid) * n_series)
    header = ["t1", "power_mean_gains_w"]
    for e in range(1, n_series + 1):
        header += [f"power_mean_w_e{e}", f"power_mean_db_e{e}", f"feasible_frac_e{e}"]
    rows = []
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        c1 = q_inv(t1) ** 2
        row = [t1, cfg.sigma2 * c1 / cfg.alpha_b**2]
        for e in range(1, n_series + 1):
            scen = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:e])
            cells = _mean_power_cells(
                scen, th, "max", cfg.trials, streams[i * n_series + e - 1], cfg.workers
            )
            row += list(cells)
        rows.append(row)
    return _meta(cfg, "fig3"), header, rows


def run_fig4(cfg: ExperimentConfig):
    """Outage probability vs legitimate threshold, analytic and Monte
    Carlo, one series per adversary count."""
    grid = _t1_grid(cfg)
    n_series = len(cfg.alpha_e)
    streams = RandomStream(cfg.seed).split(len(grid) * n_series)
    header = ["t1"]
    for e in range(1, n_series + 1):
        header += [f"outage_analytic_e{e}", f"outage_mc_e{e}", f"mc_halfwidth_e{e}"]
    rows = []
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        row = [t1]
        for e in range(1, n_series + 1):
            scen = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:e])
            analytic = (
                outage_single_analytic(scen, th) if e == 1
                else outage_multi_analytic(scen, th)
            )
            mc = outage_monte_carlo(
                scen, th, "max", cfg.trials, streams[i * n_series + e - 1], cfg.workers
            )
            row += [analytic, mc.mc_estimate, mc.mc_halfwidth]
        rows.append(row)
    return _meta(cfg, "fig4"), header, rows


def run_fig5(cfg: ExperimentConfig):
    """Mean optimal power vs threshold for cooperating (MRC) adversaries
    and for unknown-mode adversaries with jamming power I."""
    grid = _t1_grid(cfg)
    streams = RandomStream(cfg.seed).split(2 * len(grid))
    mrc_scen = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e)
    um_scen = FadingScenario(
        cfg.sigma2, cfg.alpha_b, cfg.alpha_e, interference=cfg.interference
    )
    header = [
        "t1",
        "power_mrc_w", "power_mrc_db", "feasible_frac_mrc",
        "power_unknown_w", "power_unknown_db", "feasible_frac_unknown",
    ]
    rows = []
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        mrc = _mean_power_cells(mrc_scen, th, "sum", cfg.trials, streams[2 * i], cfg.workers)
        um = _mean_power_cells(um_scen, th, "max", cfg.trials, streams[2 * i + 1], cfg.workers)
        rows.append([t1, *mrc, *um])
    return _meta(cfg, "fig5"), header, rows


def run_fig6(cfg: ExperimentConfig):
    """Outage vs threshold for the MRC and unknown-mode scenarios."""
    grid = _t1_grid(cfg)
    streams = RandomStream(cfg.seed).split(2 * len(grid))
    mrc_scen = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e)
    um_scen = FadingScenario(
        cfg.sigma2, cfg.alpha_b, cfg.alpha_e, interference=cfg.interference
    )
    header = [
        "t1",
        "outage_mrc_analytic", "outage_mrc_mc", "mc_halfwidth_mrc",
        "outage_unknown_analytic", "outage_unknown_mc", "mc_halfwidth_unknown",
    ]
    rows = []
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        lam_m, ly_m = multi_eve_rates(mrc_scen, th)
        lam_u, ly_u = unknown_mode_rates(um_scen, th)
        a_mrc = outage_sum_of_exponentials(lam_m, ly_m)
        a_um = outage_max_of_exponentials(lam_u, ly_u)
        mc_mrc = outage_monte_carlo(
            mrc_scen, th, "sum", cfg.trials, streams[2 * i], cfg.workers
        )
        mc_um = outage_monte_carlo(
            um_scen, th, "max", cfg.trials, streams[2 * i + 1], cfg.workers
        )
        rows.append(
            [t1, a_mrc, mc_mrc.mc_estimate, mc_mrc.mc_halfwidth,
             a_um, mc_um.mc_estimate, mc_um.mc_halfwidth]
        )
    return _meta(cfg, "fig6"), header, rows


def run_fig7(cfg: ExperimentConfig):
    """Coded vs uncoded outage across the reliability sweep.

    The sweep value is the end-to-end per-block reliability target: the
    uncoded system must hold every bit of an n-bit block below
    1 - (1 - tau)^(1/n), while the coded system only needs its raw BEP at
    or below the code's transformed threshold p1.  The adversary side is
    matched at block level: the coded target equals the block success
    probability an uncoded adversary at the bit floor t2 would achieve.
    """
    grid = _t1_grid(cfg)
    n, t = cfg.code_n, cfg.code_t
    eve_block_success = (1.0 - cfg.t2) ** n
    n_series = len(cfg.alpha_e)
    header = ["block_fail_target", "uncoded_t1", "coded_p1", "coded_p2"]
    for e in range(1, n_series + 1):
        header += [f"outage_uncoded_e{e}", f"outage_coded_e{e}"]
    rows = []
    for tau in grid:
        code = BlockCodeParams(
            n=n, t=t,
            target_block_fail_legit=tau,
            target_block_success_eve=eve_block_success,
        )
        th_coded = effective_thresholds(code)
        t1_uncoded = -math.expm1(math.log1p(-tau) / n)
        th_uncoded = Thresholds(t1=t1_uncoded, t2=cfg.t2)
        row = [tau, t1_uncoded, th_coded.t1, th_coded.t2]
        for e in range(1, n_series + 1):
            scen = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:e])
            if e == 1:
                row += [
                    outage_single_analytic(scen, th_uncoded),
                    outage_single_analytic(scen, th_coded),
                ]
            else:
                row += [
                    outage_multi_analytic(scen, th_uncoded),
                    outage_multi_analytic(scen, th_coded),
                ]
        rows.append(row)
    extra = [("code", f"n={n} t={t}"),
             ("eve_block_success_target", f"{eve_block_success:.12g}")]
    return _meta(cfg, "fig7", extra), header, rows


def run_fig8(cfg: ExperimentConfig):
    """Artificial-noise beamforming outage (Monte Carlo) against the
    single-antenna analytic outage, per adversary count."""
    grid = _t1_grid(cfg)
    n_series = len(cfg.alpha_e)
    streams = RandomStream(cfg.seed).split(len(grid) * n_series)
    header = ["t1"]
    for e in range(1, n_series + 1):
        header += [
            f"outage_single_antenna_e{e}",
            f"outage_beamformed_e{e}",
            f"mc_halfwidth_e{e}",
        ]
    rows = []
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        row = [t1]
        for e in range(1, n_series + 1):
            single = FadingScenario(cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:e])
            multi_antenna = FadingScenario(
                cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:e], antennas=cfg.antennas
            )
            analytic = (
                outage_single_analytic(single, th) if e == 1
                else outage_multi_analytic(single, th)
            )
            mc = outage_beamforming_mc(
                multi_antenna, th, cfg.trials, streams[i * n_series + e - 1], cfg.workers
            )
            row += [analytic, mc.mc_estimate, mc.mc_halfwidth]
        rows.append(row)
    return _meta(cfg, "fig8", [("antennas", cfg.antennas)]), header, rows


# ---------------------------------------------------------------------------
# power-gap comparison against the secrecy-rate baseline


def _gap_grid(cfg: ExperimentConfig):
    grid = set(float(v) for v in np.geomspace(1e-4, 0.2, cfg.t1_points))
    grid.add(MATCH_BEP)
    return sorted(grid)


def _baseline_power_dbs(cfg: ExperimentConfig):
    return [float(v) for v in np.linspace(0.0, cfg.power_db_max, cfg.power_points)]


def _crossing_db(dbs, beps, level=MATCH_BEP):
    """Power (dB) where a decreasing BEP curve crosses ``level``,
    interpolated linearly in (dB, log10 BEP)."""
    for i in range(1, len(dbs)):
        hi, lo = beps[i - 1], beps[i]
        if hi >= level > lo and lo > 0.0:
            y0, y1 = math.log10(hi), math.log10(lo)
            frac = (math.log10(level) - y0) / (y1 - y0)
            return dbs[i - 1] + frac * (dbs[i] - dbs[i - 1])
    return None


def run_fig9(cfg: ExperimentConfig):
    """Legitimate BEP against transmit power: threshold-driven allocation
    (power adapted per draw) vs the fixed-power secrecy-rate baseline.

    The proposed series reports, per target t1, the mean power spent on
    feasible draws (dB mean, i.e. geometric; linear mean alongside).  The
    baseline series reports the fading-averaged BEPs at each fixed power,
    plus the fraction of draws where the rate target r_min is met at all.
    The headline number is the horizontal gap between the two curves at
    legitimate BEP 1e-3, interpolated in dB.
    """
    grid = _gap_grid(cfg)
    streams = RandomStream(cfg.seed).split(len(grid) + 1)
    s2 = cfg.sigma2
    a_b2 = cfg.alpha_b**2
    a_e2 = cfg.alpha_e[0] ** 2
    c2 = q_inv(cfg.t2) ** 2

    header = [
        "series", "t1", "power_db", "power_db_linear_mean",
        "bep_legit", "bep_eve", "feasible_frac", "rate_feasible_frac",
    ]
    rows = []
    prop_db_at_match = prop_db_lin_at_match = None
    for i, t1 in enumerate(grid):
        c1 = q_inv(t1) ** 2
        full, rem = divmod(cfg.trials, MC_BATCH)
        sizes = [MC_BATCH] * full + ([rem] if rem else [])
        children = streams[i].split(len(sizes))

        def run(j):
            gain_b, gains_e = draw_power_gains(children[j].generator, sizes[j], 1)
            feas = a_e2 * gains_e[:, 0] * c1 <= a_b2 * gain_b * c2
            gb = gain_b[feas]
            p = s2 * c1 / (a_b2 * gb)
            bep_eve = _q_array(c1 * a_e2 * gains_e[feas, 0] / (a_b2 * gb))
            return (
                int(gb.size),
                float(np.sum(10.0 * np.log10(p / s2))),
                float(np.sum(p)),
                float(np.sum(bep_eve)),
            )

        if cfg.workers > 1 and len(sizes) > 1:
            with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
                parts = list(pool.map(run, range(len(sizes))))
        else:
            parts = [run(j) for j in range(len(sizes))]
        count = sum(p[0] for p in parts)
        if count == 0:
            rows.append(["proposed", t1, None, None, t1, None, 0.0, None])
            continue
        db_geo = math.fsum(p[1] for p in parts) / count
        db_lin = 10.0 * math.log10(math.fsum(p[2] for p in parts) / count / s2)
        eve_mean = math.fsum(p[3] for p in parts) / count
        rows.append(
            ["proposed", t1, db_geo, db_lin, t1, eve_mean, count / cfg.trials, None]
        )
        if t1 == MATCH_BEP:
            prop_db_at_match, prop_db_lin_at_match = db_geo, db_lin

    # baseline: one draw pool, evaluated at every fixed power
    gain_b, gains_e = draw_power_gains(streams[-1].generator, cfg.trials, 1)
    ge = gains_e[:, 0]
    ratio = 2.0**cfg.r_min
    dbs = _baseline_power_dbs(cfg)
    base_beps = []
    for db in dbs:
        gamma = 10.0 ** (db / 10.0)
        bep_b = float(np.mean(_q_array(a_b2 * gain_b * gamma)))
        bep_e = float(np.mean(_q_array(a_e2 * ge * gamma)))
        rate_ok = float(
            np.mean((1.0 + a_b2 * gain_b * gamma) >= ratio * (1.0 + a_e2 * ge * gamma))
        )
        base_beps.append(bep_b)
        rows.append(["baseline", None, db, db, bep_b, bep_e, None, rate_ok])

    base_cross = _crossing_db(dbs, base_beps)
    gap = gap_lin = None
    if base_cross is not None and prop_db_at_match is not None:
        gap = base_cross - prop_db_at_match
        gap_lin = base_cross - prop_db_lin_at_match
    extra = [
        ("r_min", f"{cfg.r_min:.12g}"),
        ("match_bep", f"{MATCH_BEP:.12g}"),
        ("baseline_crossing_db", "NA" if base_cross is None else f"{base_cross:.12g}"),
        ("gap_db_geometric", "NA" if gap is None else f"{gap:.12g}"),
        ("gap_db_linear_mean", "NA" if gap_lin is None else f"{gap_lin:.12g}"),
    ]
    return _meta(cfg, "fig9", extra), header, rows


def run_fig10(cfg: ExperimentConfig):
    """Same comparison as fig9 for the multi-antenna transmitter: the
    proposed side spends p_d + p_an (artificial noise included), the
    baseline transmits at fixed power on the matched-filter beam."""
    grid = _gap_grid(cfg)
    streams = RandomStream(cfg.seed).split(len(grid) + 1)
    s2 = cfg.sigma2
    scen = FadingScenario(
        cfg.sigma2, cfg.alpha_b, cfg.alpha_e[:1], antennas=cfg.antennas
    )
    header = [
        "series", "t1", "power_db", "power_db_linear_mean",
        "bep_legit", "bep_eve", "feasible_frac", "rate_feasible_frac",
    ]
    rows = []
    prop_db_at_match = prop_db_lin_at_match = None
    for i, t1 in enumerate(grid):
        th = Thresholds(t1=t1, t2=cfg.t2)
        stats = power_pair_mc_stats(scen, th, cfg.trials, streams[i], cfg.workers)
        if stats["feasible"] == 0:
            rows.append(["proposed", t1, None, None, t1, None, 0.0, None])
            continue
        db_geo = stats["sum_power_db"] / stats["feasible"]
        db_lin = 10.0 * math.log10(stats["sum_power"] / stats["feasible"] / s2)
        rows.append(
            ["proposed", t1, db_geo, db_lin, t1, None,
             stats["feasible"] / cfg.trials, None]
        )
        if t1 == MATCH_BEP:
            prop_db_at_match, prop_db_lin_at_match = db_geo, db_lin

    hb_re, hb_im, he_re, he_im = draw_channel_matrix(
        streams[-1].generator, cfg.trials, cfg.antennas, 1
    )
    a_b2 = cfg.alpha_b**2
    a_e2 = cfg.alpha_e[0] ** 2
    hb2 = a_b2 * np.sum(hb_re**2 + hb_im**2, axis=1)
    dot_re = np.sum(he_re[:, 0, :] * hb_re + he_im[:, 0, :] * hb_im, axis=1)
    dot_im = np.sum(he_re[:, 0, :] * hb_im - he_im[:, 0, :] * hb_re, axis=1)
    # adversary gain through the matched-filter data beam
    g_de = a_e2 * a_b2 * (dot_re**2 + dot_im**2) / hb2
    ratio = 2.0**cfg.r_min
    dbs = _baseline_power_dbs(cfg)
    base_beps = []
    for db in dbs:
        gamma = 10.0 ** (db / 10.0)
        bep_b = float(np.mean(_q_array(hb2 * gamma)))
        bep_e = float(np.mean(_q_array(g_de * gamma)))
        rate_ok = float(np.mean((1.0 + hb2 * gamma) >= ratio * (1.0 + g_de * gamma)))
        base_beps.append(bep_b)
        rows.append(["baseline", None, db, db, bep_b, bep_e, None, rate_ok])

    base_cross = _crossing_db(dbs, base_beps)
    gap = gap_lin = None
    if base_cross is not None and prop_db_at_match is not None:
        gap = base_cross - prop_db_at_match
        gap_lin = base_cross - prop_db_lin_at_match
    extra = [
        ("antennas", cfg.antennas),
        ("r_min", f"{cfg.r_min:.12g}"),
        ("match_bep", f"{MATCH_BEP:.12g}"),
        ("baseline_crossing_db", "NA" if base_cross is None else f"{base_cross:.12g}"),
        ("gap_db_geometric", "NA" if gap is None else f"{gap:.12g}"),
        ("gap_db_linear_mean", "NA" if gap_lin is None else f"{gap_lin:.12g}"),
    ]
    return _meta(cfg, "fig10", extra), header, rows


# ---------------------------------------------------------------------------
# analytic-vs-Monte-Carlo validation grid


def _report_cells(cfg: ExperimentConfig):
    if len(cfg.report_t1) == 0:
        raise ConfigError("report grid is empty: report_t1 has no entries")
    for t1 in cfg.report_t1:
        if not (0.0 < t1 < 0.5):
            raise ConfigError(f"report_t1 entries must lie in (0, 0.5), got {t1!r}")
    cells = []
    for a_e in (0.5, 1.0, 2.0):
        scen = FadingScenario(cfg.sigma2, cfg.alpha_b, (a_e,))
        for t1 in cfg.report_t1:
            cells.append((f"single alpha_e={a_e:g}", scen, t1, "max"))
    for alphas in ((1.0, 0.8), (1.0, 0.8, 1.25)):
        scen = FadingScenario(cfg.sigma2, cfg.alpha_b, alphas)
        for t1 in cfg.report_t1:
            cells.append((f"multi E={len(alphas)}", scen, t1, "max"))
            cells.append((f"mrc E={len(alphas)}", scen, t1, "sum"))
    for mult in (0.0, 1.0, 5.0):
        scen = FadingScenario(
            cfg.sigma2, cfg.alpha_b, (1.0, 0.8), interference=mult * cfg.sigma2
        )
        for t1 in cfg.report_t1:
            cells.append((f"unknown I={mult:g}*sigma2", scen, t1, "max"))
    return cells


def run_report(cfg: ExperimentConfig, rate_scale_y: float = 1.0):
    """Analytic-vs-Monte-Carlo agreement over the validation grid.

    Every cell must agree within three confidence half-widths.
    ``rate_scale_y`` deliberately corrupts the legitimate-side rate in the
    analytic formulas; anything but 1.0 must make cells fail (used as a
    sensitivity check on the comparison itself).
    """
    cells = _report_cells(cfg)
    streams = RandomStream(cfg.seed).split(len(cells))
    header = [
        "cell", "combiner", "t1", "t2", "analytic", "mc_estimate",
        "mc_halfwidth", "abs_error", "tolerance", "pass",
    ]
    rows = []
    all_pass = True
    for i, (label, scen, t1, combiner) in enumerate(cells):
        th = Thresholds(t1=t1, t2=cfg.t2)
        if combiner == "sum":
            lams, lam_y = multi_eve_rates(scen, th)
            analytic = outage_sum_of_exponentials(lams, lam_y * rate_scale_y)
        else:
            if scen.interference > 0.0:
                lams, lam_y = unknown_mode_rates(scen, th)
            else:
                lams, lam_y = multi_eve_rates(scen, th)
            analytic = outage_max_of_exponentials(lams, lam_y * rate_scale_y)
        mc = outage_monte_carlo(scen, th, combiner, cfg.trials, streams[i], cfg.workers)
        err = abs(analytic - mc.mc_estimate)
        tol = 3.0 * mc.mc_halfwidth
        ok = err <= tol
        all_pass &= ok
        rows.append(
            [label, combiner, t1, cfg.t2, analytic, mc.mc_estimate,
             mc.mc_halfwidth, err, tol, ok]
        )
    extra = [("cells", len(cells)), ("all_pass", "yes" if all_pass else "no")]
    return _meta(cfg, "report", extra), header, rows, all_pass


RUNNERS = {
    "fig1": run_fig1,
    "fig2": run_fig2,
    "fig3": run_fig3,
    "fig4": run_fig4,
    "fig5": run_fig5,
    "fig6": run_fig6,
    "fig7": run_fig7,
    "fig8": run_fig8,
    "fig9": run_fig9,
    "fig10": run_fig10,
}
