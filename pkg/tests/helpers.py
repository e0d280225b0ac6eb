"""Shared random generators and independent numeric oracles for the tests."""

from __future__ import annotations

import numpy as np

from splitnorm.polyalg import PiecewisePoly, Poly, indicator, tent
from splitnorm.scalars import gauss, rat

_trapezoid = getattr(np, "trapezoid", None) or np.trapz  # numpy < 2 fallback


def rnd_rat(rng, span=3, dens=3):
    return rat(int(rng.integers(-span, span + 1)), int(rng.integers(1, dens + 1)))


def rnd_poly(rng, max_deg=2, complex_ok=False, span=3, dens=3):
    deg = int(rng.integers(0, max_deg + 1))
    coeffs = []
    for _ in range(deg + 1):
        re = rnd_rat(rng, span, dens)
        im = rnd_rat(rng, span, dens) if (complex_ok and rng.random() < 0.4) else 0
        coeffs.append(gauss(re, im))
    return Poly(coeffs)


def rnd_pp(rng, halfwidth=rat(1), max_pieces=3, max_deg=2, complex_ok=False):
    """Random piecewise polynomial supported in [-halfwidth, halfwidth]."""
    halfwidth = rat(halfwidth)
    for _ in range(50):
        n = int(rng.integers(1, max_pieces + 1))
        ks = rng.choice(np.arange(-4, 5), size=n + 1, replace=False)
        grid = sorted({rat(int(k)) * halfwidth / 4 for k in ks})
        if len(grid) < 2:
            continue
        pieces = [rnd_poly(rng, max_deg, complex_ok) for _ in range(len(grid) - 1)]
        f = PiecewisePoly(grid, pieces)
        if not f.is_zero():
            return f
    raise RuntimeError("failed to generate a nonzero function")


def rnd_class_s_member(rng, max_steps=2):
    """A class-S member via the bump generators: nested steps or a tent.

    Nested-step form: g_+ = sum_j c_j chi_{A_j} with A_1 subset ... subset
    A_k subset [0, oo) sharing an interior point, mirrored evenly; tents are
    even single bumps.  Both satisfy the single-bump sufficient condition.
    """
    if rng.random() < 0.4:
        a = rat(int(rng.integers(1, 5)), int(rng.integers(1, 3)))
        return tent(-a, 0, a) * rat(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
    k = int(rng.integers(1, max_steps + 1))
    lo = rat(int(rng.integers(0, 3)), 2)
    hi = lo + rat(int(rng.integers(1, 3)), 2)
    plus = PiecewisePoly([], [])
    for _ in range(k):
        c = rat(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
        plus = plus + indicator(lo, hi) * c
        lo = lo * rat(int(rng.integers(0, 2)))  # widen downward (or keep)
        hi = hi + rat(int(rng.integers(1, 3)), 2)  # widen upward
    return plus + plus.reflect()


def rnd_even_nonneg(rng, max_atoms=2):
    """Random real, even, nonnegative function (sums of even atoms)."""
    f = PiecewisePoly([], [])
    n = int(rng.integers(1, max_atoms + 1))
    for _ in range(n):
        c = rat(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
        a = rat(int(rng.integers(1, 5)), int(rng.integers(1, 3)))
        kind = rng.random()
        if kind < 0.4:
            f = f + indicator(-a, a) * c
        elif kind < 0.7:
            f = f + tent(-a, 0, a) * c
        else:
            b = a + rat(int(rng.integers(1, 3)), 2)
            f = f + (indicator(a, b) + indicator(-b, -a)) * c
    return f


def conv_numeric(f: PiecewisePoly, g: PiecewisePoly, x: float, n: int = 20000) -> complex:
    """Independent convolution oracle: trapezoid quadrature of the integral."""
    sup = f.support()
    assert sup is not None
    lo, hi = float(sup[0]), float(sup[1])
    ys = np.linspace(lo - 1e-9, hi + 1e-9, n)
    vals = np.asarray(f.evaluate_float(ys)) * np.asarray(g.evaluate_float(x - ys))
    return complex(_trapezoid(vals, ys))


def grid_increase_search(f: PiecewisePoly, a, n=400):
    """Dense-grid falsification: a pair x1 < x2 (non-breakpoint rationals)
    with f(x1) < f(x2), or None."""
    sup = f.support()
    if sup is None:
        return None
    lo = rat(a)
    hi = sup[1] + 1
    if lo >= hi:
        return None
    xs = [lo + (hi - lo) * rat(2 * k + 1, 2 * n) for k in range(n)]
    xs = [x for x in xs if x not in set(f.breakpoints)]
    vals = [f.eval(x) for x in xs]
    min_idx = 0
    for j in range(1, len(xs)):
        if vals[j] > vals[min_idx]:
            return (xs[min_idx], xs[j])
        if vals[j] < vals[min_idx]:
            min_idx = j
    return None
