"""Probe grids on half-planes: log-spaced real parts, linear heights."""

from __future__ import annotations

import numpy as np


def halfplane_grid(epsilon: float, n_re: int = 8, n_im: int = 9,
                   re_span: float = 10.0, im_span: float = 50.0) -> list[complex]:
    """Points of C_epsilon with Re log-spaced in (epsilon, epsilon + re_span]
    and Im linear in [-im_span, im_span]."""
    res = epsilon + np.logspace(-6, np.log10(re_span), n_re)
    ims = np.linspace(-im_span, im_span, n_im)
    return [complex(r, i) for r in res for i in ims]


def halfplane_grid2(epsilon: float, n_re: int = 5, n_im: int = 5,
                    re_span: float = 10.0, im_span: float = 50.0) -> list[tuple[complex, complex]]:
    """Product grid on C_epsilon^2."""
    pts = halfplane_grid(epsilon, n_re, n_im, re_span, im_span)
    return [(s, t) for s in pts for t in pts]


def boundary_grid2(min_re: float = 1e-8, n_re: int = 12, n_im: int = 7,
                   re_span: float = 10.0, im_span: float = 50.0) -> list[tuple[complex, complex]]:
    """Grid on C_+^2 with real parts decaying to min_re, for sampled infs
    approaching the boundary."""
    res = np.logspace(np.log10(min_re), np.log10(re_span), n_re)
    ims = np.linspace(-im_span, im_span, n_im)
    pts = [complex(r, i) for r in res for i in ims]
    return [(s, t) for s in pts for t in pts]
