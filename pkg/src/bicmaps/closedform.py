"""Closed-form slice ladders via series-valued parametrizations.

The explicit solutions involve a color ratio c and characteristic roots x
that are not power series themselves (c is a square root of B/W).  All
formulas here are pre-rewritten in combinations that are series:

* quadrangulations: d = c*x, y = x^2, beta = (d+y)/(1+d), gamma = y/beta;
* hexangulations: the analogous pair (d_a, y_a) per root, the interpolation
  weights lambda_a, the ratios beta_a and gamma_a = y_a/beta_a, and the
  product (W/B)*d1*d2.

Every inverted factor is a unit, every division goes through exact_div,
and the two quadratic branches are pinned by their leading vertex-weight
coefficients, which are asserted at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import WeightLadder
from .rational import rat
from .series import (
    MSeries,
    SeriesRing,
    agree,
    exact_div,
    inv_unit,
    one,
    solve_quadratic_branch,
    sqrt_unit,
)
from .slices import FaceWeights, TwoPointTable, tail_solve, twopoint_from_ladder


@dataclass(frozen=True)
class QuadParams:
    """Series parametrization of the quadrangulation closed forms."""

    B: MSeries
    W: MSeries
    d: MSeries
    y: MSeries
    beta: MSeries
    gamma: MSeries


@dataclass(frozen=True)
class HexParams:
    """Series parametrization of the hexangulation closed forms."""

    B: MSeries
    W: MSeries
    wz1: MSeries
    wz2: MSeries
    d1: MSeries
    d2: MSeries
    y1: MSeries
    y2: MSeries
    lam1: MSeries
    lam2: MSeries
    beta1: MSeries
    beta2: MSeries
    wd: MSeries  # (W/B) * d1 * d2
    gamma1: MSeries
    gamma2: MSeries


def quad_params(b: MSeries, w: MSeries) -> QuadParams:
    """Solve W d^2 + (2(B+W) - 1) d + B = 0 and derive y, beta, gamma."""
    d = solve_quadratic_branch(w, 2 * (b + w) - 1, b)
    lead = (1, 0) + (0,) * (b.num_vars - 2)
    assert d.coefficient(lead) == 1, "quadratic branch drifted from +t_black"
    y = exact_div(d * d * w, b)
    beta = (d + y) * inv_unit(1 + d)
    gamma = exact_div(y, beta)
    return QuadParams(b, w, d, y, beta, gamma)


def unit_factors(y: MSeries, beta: MSeries, gamma: MSeries, top: int):
    """Factor families u(j) = 1 - y^j, 1 - beta*y^j, 1 - gamma*y^j for j <= top."""
    powers = [y ** j for j in range(top + 1)]
    plain = [1 - p for p in powers]
    with_beta = [1 - beta * p for p in powers]
    with_gamma = [1 - gamma * p for p in powers]
    return plain, with_beta, with_gamma


def quad_pattern_ladder(
    tail_b: MSeries,
    tail_w: MSeries,
    y: MSeries,
    beta: MSeries,
    gamma: MSeries,
    i_max: int,
) -> tuple[list[MSeries], list[MSeries]]:
    """Entries 1..i_max of the four-factor product solution.

    The same pattern solves the quadrangulation system and the ternary-tree
    system; only the tails and the (y, beta, gamma) triple differ.
    """
    u, ub, ug = unit_factors(y, beta, gamma, i_max // 2 + 2)
    blacks, whites = [], []
    for idx in range(1, i_max + 1):
        m, odd = divmod(idx, 2)
        if not odd:
            blacks.append(tail_b * u[m] * ub[m + 1] * inv_unit(u[m + 1] * ub[m]))
            whites.append(tail_w * u[m] * ug[m + 1] * inv_unit(u[m + 1] * ug[m]))
        else:
            blacks.append(tail_b * ug[m] * u[m + 2] * inv_unit(ug[m + 1] * u[m + 1]))
            whites.append(tail_w * ub[m] * u[m + 2] * inv_unit(ub[m + 1] * u[m + 1]))
    return blacks, whites


def quad_ladder_closed(params: QuadParams, i_max: int) -> WeightLadder:
    blacks, whites = quad_pattern_ladder(
        params.B, params.W, params.y, params.beta, params.gamma, i_max
    )
    return WeightLadder(tuple(blacks), tuple(whites), params.B, params.W)


def hex_params(b: MSeries, w: MSeries) -> HexParams:
    """Both branches of the hexangulation characteristic system.

    (W z)^2 + 3(B+W)(W z) + 8BW + 3(B^2 + W^2) - 1 = 0 fixes W*z as a
    series (z itself is not one); each branch then feeds the quadratic
    W d^2 - (W z) d + B = 0 whose series roots start at -t_black and
    +t_black respectively.
    """
    disc = 2 * sqrt_unit(1 - (3 * b * b + 14 * b * w + 3 * w * w) * rat(1, 4))
    wz1 = (-3 * (b + w) - disc) * rat(1, 2)
    wz2 = (-3 * (b + w) + disc) * rat(1, 2)
    d1 = solve_quadratic_branch(w, -wz1, b)
    d2 = solve_quadratic_branch(w, -wz2, b)
    lead = (1, 0) + (0,) * (b.num_vars - 2)
    assert d1.coefficient(lead) == -1, "first branch drifted from -t_black"
    assert d2.coefficient(lead) == 1, "second branch drifted from +t_black"
    y1 = exact_div(d1 * d1 * w, b)
    y2 = exact_div(d2 * d2 * w, b)
    diff = d1 - d2
    lam1 = exact_div(d1 - y1 * d2, diff)
    lam2 = exact_div(d2 - y2 * d1, -diff)
    beta1 = (d1 + y1) * inv_unit(1 + d1)
    beta2 = (d2 + y2) * inv_unit(1 + d2)
    wd = exact_div(d1 * d2 * w, b)
    gamma1 = exact_div(y1, beta1)
    gamma2 = exact_div(y2, beta2)
    # the interpolation weights and the cross product must resolve unity
    assert agree(lam1 + lam2 + wd, one(b.num_vars, b.order)), "lambda normalization broken"
    return HexParams(
        b, w, wz1, wz2, d1, d2, y1, y2, lam1, lam2, beta1, beta2, wd, gamma1, gamma2
    )


def hex_ladder_closed(params: HexParams, i_max: int) -> WeightLadder:
    """Hexangulation entries from the three four-term product families.

    The inverse-beta family is shifted by one power of y_a so that only
    gamma_a = y_a/beta_a appears; every denominator is then a unit.
    """
    top = i_max // 2 + 2
    p1 = [params.y1 ** j for j in range(top + 1)]
    p2 = [params.y2 ** j for j in range(top + 1)]
    y12 = params.y1 * params.y2
    pd = [y12 ** j for j in range(top + 1)]

    lb1, lb2 = params.lam1 * params.beta1, params.lam2 * params.beta2
    wdb = params.wd * params.beta1 * params.beta2
    lg1, lg2 = params.lam1 * params.gamma1, params.lam2 * params.gamma2
    wdg = params.wd * params.gamma1 * params.gamma2

    def n_lam(j):
        return 1 - params.lam1 * p1[j] - params.lam2 * p2[j] - params.wd * pd[j]

    def n_beta(j):
        return 1 - lb1 * p1[j] - lb2 * p2[j] - wdb * pd[j]

    def n_gamma(j):  # the inverse-beta family evaluated at j+1
        return 1 - lg1 * p1[j] - lg2 * p2[j] - wdg * pd[j]

    blacks, whites = [], []
    for idx in range(1, i_max + 1):
        m, odd = divmod(idx, 2)
        if not odd:
            blacks.append(
                params.B * n_lam(m) * n_beta(m + 1) * inv_unit(n_lam(m + 1) * n_beta(m))
            )
            whites.append(
                params.W * n_lam(m) * n_gamma(m + 1) * inv_unit(n_lam(m + 1) * n_gamma(m))
            )
        else:
            blacks.append(
                params.B * n_lam(m + 2) * n_gamma(m) * inv_unit(n_lam(m + 1) * n_gamma(m + 1))
            )
            whites.append(
                params.W * n_lam(m + 2) * n_beta(m) * inv_unit(n_lam(m + 1) * n_beta(m + 1))
            )
    return WeightLadder(tuple(blacks), tuple(whites), params.B, params.W)


def closed_ladder(g: FaceWeights, ring: SeriesRing, i_max: int) -> WeightLadder:
    """Tail solve plus closed-form evaluation for p = 1 or p = 2 families."""
    b, w = tail_solve(g, ring)
    if g.p == 1 and not g.g[0]:
        return quad_ladder_closed(quad_params(b, w), i_max)
    if g.p == 2 and not g.g[0] and not g.g[1]:
        return hex_ladder_closed(hex_params(b, w), i_max)
    raise ValueError(
        "closed forms cover quadrangulations and hexangulations only; "
        "use the recursion or determinant routes for other families"
    )


def twopoint_closed(g: FaceWeights, ring: SeriesRing, i_max: int) -> TwoPointTable:
    """Full closed-form pipeline down to the two-point table."""
    return twopoint_from_ladder(closed_ladder(g, ring, i_max + 1), i_max)
