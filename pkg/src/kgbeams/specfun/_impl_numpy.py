"""Pure-numpy vectorized Bessel kernels (fallback backend).

Same regime split as the numba build: power series below the frozen
crossover, Chebyshev expansions of the scaled auxiliary functions above it.
All functions take and return 1-D float64 arrays.
"""

import numpy as np

from ._coeffs import (
    EULER_GAMMA,
    J_CROSSOVER,
    K0_CHEB,
    K1_CHEB,
    K_CROSSOVER,
    P0_CHEB,
    P1_CHEB,
    Q0_CHEB,
    Q1_CHEB,
)

_INV_SQRT2 = 1.0 / np.sqrt(2.0)
_J_SERIES_TERMS = 36
_K_SERIES_TERMS = 24


def _clenshaw(coeffs, t):
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    for a in coeffs[:0:-1]:
        b1, b2 = a + 2.0 * t * b1 - b2, b1
    return coeffs[0] + t * b1 - b2


def _j_series(ax, nu):
    half2 = 0.25 * ax * ax
    term = np.ones_like(ax) if nu == 0 else 0.5 * ax
    total = term.copy()
    for k in range(1, _J_SERIES_TERMS + 1):
        term = term * (-half2) / (k * (k + nu))
        total += term
    return total

def _j_asymptotic(ax, nu, p_cheb, q_cheb):
    t = 2.0 * (J_CROSSOVER / ax) ** 2 - 1.0
    p = _clenshaw(p_cheb, t)
    q = _clenshaw(q_cheb, t) / ax
    c = np.cos(ax)
    s = np.sin(ax)
    if nu == 0:
        cchi = (c + s) * _INV_SQRT2
        schi = (s - c) * _INV_SQRT2
    else:
        cchi = (s - c) * _INV_SQRT2
        schi = -(s + c) * _INV_SQRT2
    return np.sqrt(2.0 / (np.pi * ax)) * (p * cchi - q * schi)


def _j(x, nu, p_cheb, q_cheb):
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= J_CROSSOVER
    if small.any():
        out[small] = _j_series(ax[small], nu)
    big = ~small
    if big.any():
        out[big] = _j_asymptotic(ax[big], nu, p_cheb, q_cheb)
    if nu == 1:
        out = np.where(x < 0.0, -out, out)
    return out


def j0(x):
    return _j(x, 0, P0_CHEB, Q0_CHEB)


def j1(x):
    return _j(x, 1, P1_CHEB, Q1_CHEB)


def _k_series(x, nu):
    half2 = 0.25 * x * x
    lg = np.log(0.5 * x)
    if nu == 0:
        ti = np.ones_like(x)
        i_sum = ti.copy()
        s_sum = np.zeros_like(x)
        hk = 0.0
        for k in range(1, _K_SERIES_TERMS + 1):
            ti = ti * half2 / (k * k)
            hk += 1.0 / k
            i_sum += ti
            s_sum += ti * hk
        return -(lg + EULER_GAMMA) * i_sum + s_sum
    ti = 0.5 * x
    i_sum = ti.copy()
    s_sum = ti.copy()  # H_0 + H_1 = 1
    hk = 0.0
    hk1 = 1.0
    for k in range(1, _K_SERIES_TERMS + 1):
        ti = ti * half2 / (k * (k + 1))
        hk += 1.0 / k
        hk1 += 1.0 / (k + 1)
        i_sum += ti
        s_sum += ti * (hk + hk1)
    return (lg + EULER_GAMMA) * i_sum + 1.0 / x - 0.5 * s_sum


def _k(x, nu, cheb):
    out = np.empty_like(x)
    small = x <= K_CROSSOVER
    if small.any():
        out[small] = _k_series(x[small], nu)
    big = ~small
    if big.any():
        xb = x[big]
        t = 2.0 * K_CROSSOVER / xb - 1.0
        out[big] = np.exp(-xb) / np.sqrt(xb) * _clenshaw(cheb, t)
    return out


def k0(x):
    return _k(x, 0, K0_CHEB)


def k1(x):
    return _k(x, 1, K1_CHEB)
