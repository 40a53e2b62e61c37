"""Further integrable ladder systems solved by the same closed-form machinery.

Three systems share the structure of the slice recursions: the ternary
system P_i = 1 + z_white Q_{i-1} P_i Q_{i+1} (and its color mirror), the
binary system R_i = 1 + y_black S_{i-1} S_{i+1}, and the trivariate
tricolored system T_i = t_black + T_i (U_{i-1} + V_{i+1}) with cyclic
companions.  Each gets a perturbative ladder solver plus a closed-form
cross-check built on series-valued (D, Y, beta, gamma) data, where D plays
the role the quantity c*x plays for quadrangulations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closedform import quad_pattern_ladder, unit_factors
from .series import (
    MSeries,
    SeriesRing,
    agree,
    exact_div,
    inv_unit,
    one,
    solve_quadratic_branch,
    zero,
)
from .slices import ConvergenceError

ROTATE = (1, 2, 0)  # rename black->white->third->black


def rotate_colors(f: MSeries) -> MSeries:
    return f.permute_vars(ROTATE)


@dataclass(frozen=True)
class TwoVarSystem:
    """A solved two-family ladder with unit seeds and index-0 entries zero."""

    kind: str  # "ternary" or "binary"
    first: tuple[MSeries, ...]
    second: tuple[MSeries, ...]
    tail_first: MSeries
    tail_second: MSeries

    def first_at(self, i: int) -> MSeries:
        if i == 0:
            return zero(self.tail_first.num_vars, self.tail_first.order)
        return self.first[i - 1] if i <= len(self.first) else self.tail_first

    def second_at(self, i: int) -> MSeries:
        if i == 0:
            return zero(self.tail_second.num_vars, self.tail_second.order)
        return self.second[i - 1] if i <= len(self.second) else self.tail_second

    @property
    def height(self) -> int:
        return len(self.first)


def _two_var_solve(ring: SeriesRing, kind: str, height: int | None) -> TwoVarSystem:
    n = ring.order
    if height is None:
        height = n + 2
    z_black, z_white = ring.gens()[:2]
    unit = ring.one()

    if kind == "ternary":

        def tail_step(p, q):
            return 1 + z_white * q * p * q, 1 + z_black * p * q * p

        def entry_rhs(first_at, second_at, i):
            return (
                1 + z_white * second_at(i - 1) * first_at(i) * second_at(i + 1),
                1 + z_black * first_at(i - 1) * second_at(i) * first_at(i + 1),
            )

    else:

        def tail_step(r, s):
            return 1 + z_black * s * s, 1 + z_white * r * r

        def entry_rhs(first_at, second_at, i):
            return (
                1 + z_black * second_at(i - 1) * second_at(i + 1),
                1 + z_white * first_at(i - 1) * first_at(i + 1),
            )

    p, q = unit, unit
    for _ in range(n + 1):
        p, q = tail_step(p, q)
    if tail_step(p, q) != (p, q):
        raise ConvergenceError(f"{kind} tail equations did not stabilize")

    firsts = [unit] * height
    seconds = [unit] * height
    for _ in range(n + 1):
        sys = TwoVarSystem(kind, tuple(firsts), tuple(seconds), p, q)
        pairs = [entry_rhs(sys.first_at, sys.second_at, i) for i in range(1, height + 1)]
        firsts = [a for a, _ in pairs]
        seconds = [b for _, b in pairs]
    sys = TwoVarSystem(kind, tuple(firsts), tuple(seconds), p, q)
    pairs = [entry_rhs(sys.first_at, sys.second_at, i) for i in range(1, height + 1)]
    if [a for a, _ in pairs] != firsts or [b for _, b in pairs] != seconds:
        raise ConvergenceError(f"{kind} ladder did not stabilize")
    return sys


def ternary_solve(ring: SeriesRing, height: int | None = None) -> TwoVarSystem:
    """Embedded-ternary-tree ladder in the two internal-vertex weights."""
    return _two_var_solve(ring, "ternary", height)


def binary_solve(ring: SeriesRing, height: int | None = None) -> TwoVarSystem:
    """Embedded-binary-tree ladder in the two internal-vertex weights."""
    return _two_var_solve(ring, "binary", height)


def _check_quadratic(a2, a1, a0, root):
    assert agree(a2 * root * root + a1 * root + a0, zero(root.num_vars, root.order)), (
        "derived quadratic residual does not vanish"
    )


def ternary_closed_ladder(sys: TwoVarSystem, i_max: int):
    """Closed entries from (P-1) D^2 - D + (Q-1) = 0 and Y = D^2 (P-1)/(Q-1).

    The color ratio satisfies c^2 = (Q-1)/(P-1) and c(x+1/x) = 1/(P-1);
    clearing denominators against D = c*x yields the quadratic, whose
    residual is asserted.  The entry pattern is the quadrangulation one.
    """
    p, q = sys.tail_first, sys.tail_second
    ring_one = one(p.num_vars, p.order)
    d = solve_quadratic_branch(p - 1, -ring_one, q - 1)
    _check_quadratic(p - 1, -ring_one, q - 1, d)
    y = exact_div(d * d * (p - 1), q - 1)
    beta = (d + y) * inv_unit(1 + d)
    gamma = exact_div(y, beta)
    return quad_pattern_ladder(p, q, y, beta, gamma, i_max)


def ternary_closed(sys: TwoVarSystem, i_max: int) -> bool:
    firsts, seconds = ternary_closed_ladder(sys, i_max)
    return all(
        agree(firsts[i - 1], sys.first_at(i)) and agree(seconds[i - 1], sys.second_at(i))
        for i in range(1, i_max + 1)
    )


def binary_closed_ladder(sys: TwoVarSystem, i_max: int):
    """Closed entries from S(S-1) D^2 - RS D + R(R-1) = 0.

    Here c^2 = R(R-1)/(S(S-1)) and c(x+1/x) = R/(S-1); the factor pattern
    is shifted relative to the quadrangulation one because these entries
    are triple products of consecutive ternary ones.
    """
    r, s = sys.tail_first, sys.tail_second
    a2 = s * (s - 1)
    a1 = -(r * s)
    a0 = r * (r - 1)
    d = solve_quadratic_branch(a2, a1, a0)
    _check_quadratic(a2, a1, a0, d)
    y = exact_div(d * d * a2, a0)
    beta = (d + y) * inv_unit(1 + d)
    gamma = exact_div(y, beta)
    u, ub, ug = unit_factors(y, beta, gamma, i_max // 2 + 3)
    firsts, seconds = [], []
    for idx in range(1, i_max + 1):
        m, odd = divmod(idx, 2)
        if not odd:
            firsts.append(r * u[m] * ug[m + 2] * inv_unit(u[m + 1] * ug[m + 1]))
            seconds.append(s * u[m] * ub[m + 2] * inv_unit(u[m + 1] * ub[m + 1]))
        else:
            firsts.append(r * ub[m] * u[m + 3] * inv_unit(ub[m + 1] * u[m + 2]))
            seconds.append(s * ug[m] * u[m + 3] * inv_unit(ug[m + 1] * u[m + 2]))
    return firsts, seconds


def binary_closed(sys: TwoVarSystem, i_max: int) -> bool:
    firsts, seconds = binary_closed_ladder(sys, i_max)
    return all(
        agree(firsts[i - 1], sys.first_at(i)) and agree(seconds[i - 1], sys.second_at(i))
        for i in range(1, i_max + 1)
    )


# -- the tricolored system -----------------------------------------------------


@dataclass(frozen=True)
class TriColorState:
    """Solved tricolored ladder plus its height parametrization."""

    t_list: tuple[MSeries, ...]
    u_list: tuple[MSeries, ...]
    v_list: tuple[MSeries, ...]
    t: MSeries
    u: MSeries
    v: MSeries
    y: MSeries
    d: MSeries
    e: MSeries
    a_hat: MSeries

    def t_at(self, i: int) -> MSeries:
        if i == 0:
            return zero(self.t.num_vars, self.t.order)
        return self.t_list[i - 1] if i <= len(self.t_list) else self.t

    def u_at(self, i: int) -> MSeries:
        if i == 0:
            return zero(self.u.num_vars, self.u.order)
        return self.u_list[i - 1] if i <= len(self.u_list) else self.u

    def v_at(self, i: int) -> MSeries:
        if i == 0:
            return zero(self.v.num_vars, self.v.order)
        return self.v_list[i - 1] if i <= len(self.v_list) else self.v

    @property
    def height(self) -> int:
        return len(self.t_list)


def solve_height_params(t: MSeries, u: MSeries, v: MSeries):
    """Fixed point of the linear height system in (y, d, e).

    y = U(y+d) + V y (1+e), d = V(d+e) + T(d+y), e = T(e+1) + U(e+d); all
    right-hand terms carry a T/U/V factor, so sweeps gain a degree each.
    Works for any positive-valuation T, U, V, in particular for the formal
    generators themselves.
    """
    if t.constant_term() or u.constant_term() or v.constant_term():
        raise ValueError("height parameters need positive-valuation inputs")
    order = t.order
    y = d = e = zero(t.num_vars, order)
    for _ in range(order + 1):
        y, d, e = (
            u * (y + d) + v * y * (1 + e),
            v * (d + e) + t * (d + y),
            t * (e + 1) + u * (e + d),
        )
    again = (
        u * (y + d) + v * y * (1 + e),
        v * (d + e) + t * (d + y),
        t * (e + 1) + u * (e + d),
    )
    if again != (y, d, e):
        raise ConvergenceError("height parametrization did not stabilize")
    return y, d, e


def tricolor_solve(ring: SeriesRing, height: int | None = None) -> TriColorState:
    """Perturbative solution of the three-color ladder system.

    The closed forms only ever consume (y, d, e) and a_hat; the cube root
    hiding behind y is never materialized, so its root-of-unity ambiguity
    never arises.
    """
    if ring.num_vars != 3:
        raise ValueError("the tricolored system needs three vertex weights")
    n = ring.order
    if height is None:
        height = n + 2
    tb, tw, tg = ring.gens()

    def tail_step(t, u, v):
        return tb + t * (u + v), tw + u * (v + t), tg + v * (t + u)

    t, u, v = tb, tw, tg
    for _ in range(n + 1):
        t, u, v = tail_step(t, u, v)
    if tail_step(t, u, v) != (t, u, v):
        raise ConvergenceError("tricolor tail equations did not stabilize")

    ts = [tb] * height
    us = [tw] * height
    vs = [tg] * height

    def sweep(ts, us, vs):
        def at(lst, tail, i):
            if i == 0:
                return ring.zero()
            return lst[i - 1] if i <= height else tail

        new_t = [
            tb + at(ts, t, i) * (at(us, u, i - 1) + at(vs, v, i + 1))
            for i in range(1, height + 1)
        ]
        new_u = [
            tw + at(us, u, i) * (at(vs, v, i - 1) + at(ts, t, i + 1))
            for i in range(1, height + 1)
        ]
        new_v = [
            tg + at(vs, v, i) * (at(ts, t, i - 1) + at(us, u, i + 1))
            for i in range(1, height + 1)
        ]
        return new_t, new_u, new_v

    for _ in range(n + 1):
        ts, us, vs = sweep(ts, us, vs)
    if sweep(ts, us, vs) != (ts, us, vs):
        raise ConvergenceError("tricolor ladder did not stabilize")

    y, d, e = solve_height_params(t, u, v)
    a_hat = (e + d + y) * inv_unit(1 + e + d)
    return TriColorState(tuple(ts), tuple(us), tuple(vs), t, u, v, y, d, e, a_hat)


def tricolor_closed_t(state: TriColorState, i: int) -> MSeries:
    """Closed form of the index-3i entry of the first color family."""
    y, a = state.y, state.a_hat
    yi = y ** i
    yi1 = y ** (i + 1)
    return state.t * (1 - yi) * (1 - a * yi1) * inv_unit((1 - a * yi) * (1 - yi1))


def tricolor_characteristic_residual(state: TriColorState) -> MSeries:
    """T U V (1+y)^2 - y (1 - T - U - V)^2, identically zero on solutions."""
    t, u, v, y = state.t, state.u, state.v, state.y
    lhs = t * u * v * (1 + y) * (1 + y)
    gap = 1 - t - u - v
    return lhs - y * gap * gap


def tricolor_closed_check(state: TriColorState, i_max: int) -> bool:
    """Closed multiples-of-three entries, their rotations, the characteristic
    identity, and the cyclic symmetry of the solved ladder."""
    checks = []
    for i in range(0, i_max // 3 + 1):
        closed = tricolor_closed_t(state, i)
        checks.append(agree(closed, state.t_at(3 * i)))
        checks.append(agree(rotate_colors(closed), state.u_at(3 * i)))
        checks.append(agree(rotate_colors(rotate_colors(closed)), state.v_at(3 * i)))
    for i in range(1, state.height + 1):
        checks.append(agree(rotate_colors(state.t_at(i)), state.u_at(i)))
        checks.append(agree(rotate_colors(state.u_at(i)), state.v_at(i)))
    residual = tricolor_characteristic_residual(state)
    checks.append(agree(residual, zero(3, state.t.order)))
    return all(checks)
