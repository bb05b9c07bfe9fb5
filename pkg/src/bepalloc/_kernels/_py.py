"""NumPy implementations of the Monte Carlo trial kernels.

This is the fallback backend used when the compiled extension is absent.
Operation order mirrors ``_core.pyx`` exactly (same multiplies, adds and
comparisons per element), so both backends return bit-identical results
for identical input arrays.
"""

import numpy as np


def count_infeasible_max(gain_b, gains_e, weights, y_weight):
    """Trials where max_e(weights[e] * gains_e[:, e]) > y_weight * gain_b."""
    z = weights[0] * gains_e[:, 0]
    for e in range(1, gains_e.shape[1]):
        z = np.maximum(z, weights[e] * gains_e[:, e])
    return int(np.count_nonzero(z > y_weight * gain_b))


def count_infeasible_sum(gain_b, gains_e, weights, y_weight):
    """Trials where sum_e(weights[e] * gains_e[:, e]) > y_weight * gain_b."""
    z = weights[0] * gains_e[:, 0]
    for e in range(1, gains_e.shape[1]):
        z = z + weights[e] * gains_e[:, e]
    return int(np.count_nonzero(z > y_weight * gain_b))


def count_block_failures(uniforms, p, t):
    """Blocks (rows) where more than ``t`` of the uniforms fall below ``p``."""
    errors = (uniforms < p).sum(axis=1)
    return int(np.count_nonzero(errors > t))


def beamforming_batch(hb_re, hb_im, he_re, he_im, c1, c2, sigma2, p_total, feasible):
    """Solve the two-variable power program for a batch of channel draws.

    Channel vectors arrive pre-scaled by path loss.  For each trial the
    data beamformer is matched to h_b, the noise beamformer is the
    strongest adversary's channel projected onto the complement of h_b
    (basis-vector fallback if that projection is numerically zero), p_d
    sits on the legitimate constraint and p_an on the worst adversary
    constraint.  Writes p_d + p_an into ``p_total`` (NaN when infeasible)
    and 0/1 into ``feasible``; returns the infeasible count.
    """
    n, m = hb_re.shape
    n_e = he_re.shape[1]

    hbg = hb_re * hb_re + hb_im * hb_im
    hb2 = hbg[:, 0].copy()
    for k in range(1, m):
        hb2 += hbg[:, k]

    ghe = he_re[:, :, 0] * he_re[:, :, 0] + he_im[:, :, 0] * he_im[:, :, 0]
    for k in range(1, m):
        ghe = ghe + (he_re[:, :, k] * he_re[:, :, k] + he_im[:, :, k] * he_im[:, :, k])

    estar = np.argmax(ghe, axis=1)
    rows = np.arange(n)
    hes_re = he_re[rows, estar, :]
    hes_im = he_im[rows, estar, :]
    gsel = ghe[rows, estar]

    # projection of the strongest adversary channel onto the complement of h_b
    d_re = hb_re[:, 0] * hes_re[:, 0] + hb_im[:, 0] * hes_im[:, 0]
    d_im = hb_re[:, 0] * hes_im[:, 0] - hb_im[:, 0] * hes_re[:, 0]
    for k in range(1, m):
        d_re = d_re + (hb_re[:, k] * hes_re[:, k] + hb_im[:, k] * hes_im[:, k])
        d_im = d_im + (hb_re[:, k] * hes_im[:, k] - hb_im[:, k] * hes_re[:, k])
    s_re = d_re / hb2
    s_im = d_im / hb2
    proj_re = np.empty((n, m))
    proj_im = np.empty((n, m))
    for k in range(m):
        proj_re[:, k] = hes_re[:, k] - (s_re * hb_re[:, k] - s_im * hb_im[:, k])
        proj_im[:, k] = hes_im[:, k] - (s_re * hb_im[:, k] + s_im * hb_re[:, k])
    pn2 = proj_re[:, 0] * proj_re[:, 0] + proj_im[:, 0] * proj_im[:, 0]
    for k in range(1, m):
        pn2 = pn2 + (proj_re[:, k] * proj_re[:, k] + proj_im[:, k] * proj_im[:, k])

    # fallback direction: weakest h_b component's basis vector, orthogonalized
    kmin = np.argmin(hbg, axis=1)
    hbk_re = hb_re[rows, kmin]
    hbk_im = hb_im[rows, kmin]
    t_re = hbk_re / hb2
    t_im = -hbk_im / hb2
    fb_re = np.empty((n, m))
    fb_im = np.empty((n, m))
    for k in range(m):
        delta = (kmin == k).astype(np.float64)
        fb_re[:, k] = delta - (t_re * hb_re[:, k] - t_im * hb_im[:, k])
        fb_im[:, k] = -(t_re * hb_im[:, k] + t_im * hb_re[:, k])
    vn2 = fb_re[:, 0] * fb_re[:, 0] + fb_im[:, 0] * fb_im[:, 0]
    for k in range(1, m):
        vn2 = vn2 + (fb_re[:, k] * fb_re[:, k] + fb_im[:, k] * fb_im[:, k])

    use_proj = pn2 > 1e-12 * gsel
    w_re = np.where(use_proj[:, None], proj_re, fb_re)
    w_im = np.where(use_proj[:, None], proj_im, fb_im)
    wn2 = np.where(use_proj, pn2, vn2)

    sc1 = sigma2 * c1
    c2s = c2 * sigma2
    p_d = sc1 / hb2

    p_an = np.zeros(n)
    blocked = np.zeros(n, dtype=bool)
    for e in range(n_e):
        q_re = he_re[:, e, 0] * hb_re[:, 0] + he_im[:, e, 0] * hb_im[:, 0]
        q_im = he_re[:, e, 0] * hb_im[:, 0] - he_im[:, e, 0] * hb_re[:, 0]
        u_re = he_re[:, e, 0] * w_re[:, 0] + he_im[:, e, 0] * w_im[:, 0]
        u_im = he_re[:, e, 0] * w_im[:, 0] - he_im[:, e, 0] * w_re[:, 0]
        for k in range(1, m):
            q_re = q_re + (he_re[:, e, k] * hb_re[:, k] + he_im[:, e, k] * hb_im[:, k])
            q_im = q_im + (he_re[:, e, k] * hb_im[:, k] - he_im[:, e, k] * hb_re[:, k])
            u_re = u_re + (he_re[:, e, k] * w_re[:, k] + he_im[:, e, k] * w_im[:, k])
            u_im = u_im + (he_re[:, e, k] * w_im[:, k] - he_im[:, e, k] * w_re[:, k])
        g_de = (q_re * q_re + q_im * q_im) / hb2
        g_ae = (u_re * u_re + u_im * u_im) / wn2
        numer = g_de * p_d - c2s
        need = numer > 0.0
        blocked |= need & (g_ae == 0.0)
        denom = c2 * np.where(g_ae == 0.0, 1.0, g_ae)
        req = np.where(need, numer / denom, 0.0)
        p_an = np.maximum(p_an, req)

    p_total[:] = np.where(blocked, np.nan, p_d + p_an)
    feasible[:] = np.where(blocked, 0, 1).astype(np.uint8)
    return int(np.count_nonzero(blocked))
