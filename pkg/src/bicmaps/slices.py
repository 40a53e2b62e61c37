"""Perturbative solvers for the nonlinear slice systems and two-point assembly.

The slice series B_i, W_i (and their common large-i limits B, W) satisfy
nonlinear recursions whose right-hand sides are weighted strip-path sums.
They are solved order by order: every right-hand-side monomial beyond the
seed either involves at least two ladder entries or carries an explicit
vertex weight, so each full Jacobi sweep pins one more total degree.  A
nonzero degree-two face weight g_1 contributes a term proportional to the
unknown itself at the same degree; the sweep divides it out through the
scalar 1/(1 - g_1), which is why g_1 = 1 is rejected as divergent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import WeightLadder, l_zero, z_plus, z_plus_profile, z_strip
from .rational import Rat, is_rational, rat
from .series import MSeries, SeriesRing, exact_div, variable

BLACK, WHITE = "black", "white"


class ConvergenceError(Exception):
    """A fixed-point sweep failed to stabilize (mis-weighted path sum)."""


@dataclass(frozen=True)
class FaceWeights:
    """Weights g_1..g_{p+1}, entry k applying to faces of degree 2k."""

    g: tuple

    def __post_init__(self):
        if not self.g or not self.g[-1]:
            raise ValueError("face weight list must be non-empty with nonzero last entry")
        if not all(is_rational(x) for x in self.g):
            raise ValueError("face weights must be exact rationals")

    @classmethod
    def quadrangulations(cls) -> "FaceWeights":
        return cls((rat(0), rat(1)))

    @classmethod
    def hexangulations(cls) -> "FaceWeights":
        return cls((rat(0), rat(0), rat(1)))

    @property
    def p(self) -> int:
        return len(self.g) - 1

    def weight(self, k: int):
        """Weight of a face of degree 2k (zero beyond the stored list)."""
        return self.g[k - 1] if 1 <= k <= len(self.g) else rat(0)


def _sweep_scale(g: FaceWeights):
    g1 = g.g[0]
    if g1 == 1:
        raise ConvergenceError(
            "degree-two face weight 1 makes the generating functions divergent"
        )
    return Rat(1) / (1 - Rat(g1))


def tail_solve(g: FaceWeights, ring: SeriesRing) -> tuple[MSeries, MSeries]:
    """Height-independent limits B, W of the slice series, exact to ring.order."""
    scale = _sweep_scale(g)
    tb, tw = ring.gens()[:2]

    def advance(b, w):
        lad = WeightLadder.constant_ladder(b, w)
        rb = ring.zero()
        rw = ring.zero()
        for k in range(2, g.p + 2):
            gk = g.weight(k)
            if not gk:
                continue
            length = 2 * k - 1
            rb = rb + gk * z_plus(0, -1, length, lad, floor=-length - 1)
            rw = rw + gk * z_plus(0, -1, length, lad, floor=-length - 1, black_start=False)
        return (tb + rb) * scale, (tw + rw) * scale

    b, w = tb, tw
    for _ in range(ring.order + 1):
        b, w = advance(b, w)
    again = advance(b, w)
    if again != (b, w):
        raise ConvergenceError("tail equations did not reach a fixed point")
    return b, w


def ladder_solve(
    g: FaceWeights, ring: SeriesRing, height: int | None = None
) -> WeightLadder:
    """Solve the slice recursion for B_1..B_H, W_1..W_H with tail boundary.

    Entries stabilize onto the tail from above (B_i agrees with B through
    total degree i-1), so any boundary height H >= order + p keeps every
    stored coefficient exact; the default adds one more for margin.
    """
    p = g.p
    if height is None:
        height = ring.order + p + 1
    if height < ring.order + p:
        raise ValueError("boundary height must be at least order + p")
    scale = _sweep_scale(g)
    tb, tw = ring.gens()[:2]
    tail_b, tail_w = tail_solve(g, ring)

    def advance(blacks, whites):
        lad = WeightLadder(tuple(blacks), tuple(whites), tail_b, tail_w)
        new_b, new_w = [], []
        for i in range(1, height + 1):
            rb = ring.zero()
            rw = ring.zero()
            for k in range(2, p + 2):
                gk = g.weight(k)
                if not gk:
                    continue
                rb = rb + gk * z_strip("bw", i, 2 * k - 1, lad)
                rw = rw + gk * z_strip("wb", i, 2 * k - 1, lad)
            new_b.append((tb + rb) * scale)
            new_w.append((tw + rw) * scale)
        return new_b, new_w

    blacks = [tb] * height
    whites = [tw] * height
    for _ in range(ring.order + 1):
        blacks, whites = advance(blacks, whites)
    again_b, again_w = advance(blacks, whites)
    if again_b != blacks or again_w != whites:
        raise ConvergenceError("slice recursion did not reach a fixed point")
    return WeightLadder(tuple(blacks), tuple(whites), tail_b, tail_w)


@dataclass(frozen=True)
class AlphaCoeffs:
    """Coefficients resolving a boundary of length 2n into floored round trips."""

    alpha: tuple[MSeries, ...]
    alpha_tilde: tuple[MSeries, ...]


def alpha_coeffs(g: FaceWeights, b: MSeries, w: MSeries) -> AlphaCoeffs:
    """Expansion coefficients alpha_0..alpha_p and their color-swapped twins.

    alpha_q = (B/t_black) * (delta_{q,0} - sum_{k>q} g_k L_0(2k-2q-2)); the
    tilde family replaces the unit prefactor by W/t_white.  Both share the
    same bracket, so t_white*alpha~_q/W = t_black*alpha_q/B identically.
    """
    p = g.p
    nv, order = b.num_vars, b.order
    tb = variable(nv, order, 0)
    tw = variable(nv, order, 1)
    closed = [l_zero(2 * j, b, w) for j in range(p + 1)]
    unit_b = exact_div(b, tb)
    unit_w = exact_div(w, tw)
    alpha = []
    alpha_t = []
    for q in range(p + 1):
        bracket = MSeries(nv, order, {(0,) * nv: 1} if q == 0 else {})
        for k in range(q + 1, p + 2):
            gk = g.weight(k)
            if gk:
                bracket = bracket - gk * closed[k - q - 1]
        alpha.append(unit_b * bracket)
        alpha_t.append(unit_w * bracket)
    return AlphaCoeffs(tuple(alpha), tuple(alpha_t))


def f_direct(
    n: int, g: FaceWeights, b: MSeries, w: MSeries, color: str = BLACK
) -> MSeries:
    """Generating function of pointed maps with a boundary of length 2n."""
    return f_sequence(n, g, b, w, color)[n]


def f_sequence(
    n_max: int, g: FaceWeights, b: MSeries, w: MSeries, color: str = BLACK
) -> list[MSeries]:
    """All boundary generating functions F_0..F_{n_max} from one path sweep."""
    coeffs = alpha_coeffs(g, b, w)
    weights = coeffs.alpha if color == BLACK else coeffs.alpha_tilde
    lad = WeightLadder.constant_ladder(b, w)
    profile = z_plus_profile(
        0, 2 * n_max + 2 * g.p, lad, floor=0, black_start=(color == BLACK)
    )
    out = []
    for n in range(n_max + 1):
        total = weights[0] * profile[2 * n]
        for q in range(1, g.p + 1):
            total = total + weights[q] * profile[2 * n + 2 * q]
        out.append(total)
    return out


def conserved(
    n: int, d: int, ladder: WeightLadder, g: FaceWeights, color: str = BLACK
) -> MSeries:
    """The boundary generating function computed at height offset d.

    The value is independent of d: the d-dependence of the round trips is
    cancelled by subtracting the configurations whose root sits strictly
    closer to the marked vertex, resolved through strips dropping to d-1.
    The division by the root vertex weight is exact by construction;
    DivisibilityError here means a mis-weighted path sum.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    black_start = color == BLACK
    nv, order = ladder.tail_black.num_vars, ladder.tail_black.order
    root_weight = variable(nv, order, 0 if black_start else 1)
    main = z_plus(d, d, 2 * n, ladder, floor=d, black_start=black_start)
    correction = MSeries(nv, order, {})
    for j in range(1, n + 1):
        outer = z_plus(d, d + 2 * j, 2 * n, ladder, floor=d, black_start=black_start)
        if outer.is_zero():
            continue
        strip = MSeries(nv, order, {})
        for k in range(j + 1, g.p + 2):
            gk = g.weight(k)
            if not gk:
                continue
            strip = strip + gk * z_plus(
                d + 2 * j,
                d - 1,
                2 * k - 1,
                ladder,
                floor=min(0, d - 1),
                black_start=black_start,
            )
        correction = correction + outer * strip
    return main - exact_div(correction, root_weight)


@dataclass(frozen=True)
class TwoPointTable:
    """Distance-indexed two-point generating functions, both root colors."""

    black: tuple[MSeries, ...]
    white: tuple[MSeries, ...]

    @property
    def i_max(self) -> int:
        return len(self.black)

    def g_black(self, i: int) -> MSeries:
        return self.black[i - 1]

    def g_white(self, i: int) -> MSeries:
        return self.white[i - 1]


def twopoint_from_ladder(ladder: WeightLadder, i_max: int) -> TwoPointTable:
    """Two-point functions as differences of consecutive slice series.

    A root edge at distances (i, i-1) cuts into an i-slice of maximal left
    boundary; removing shorter-boundary slices leaves B_i - B_{i-1}, and the
    marked vertex restores one vertex weight of the opposite color at odd i.
    """
    if i_max < 1:
        raise ValueError("need i_max >= 1")
    if ladder.height < i_max + 1 and not ladder.constant:
        raise ValueError("ladder height must exceed i_max")
    nv, order = ladder.tail_black.num_vars, ladder.tail_black.order
    tb = variable(nv, order, 0)
    tw = variable(nv, order, 1)
    blacks = [tw * (ladder.black_weight(1) - tb)]
    whites = [tb * (ladder.white_weight(1) - tw)]
    for i in range(2, i_max + 1):
        db = ladder.black_weight(i) - ladder.black_weight(i - 1)
        dw = ladder.white_weight(i) - ladder.white_weight(i - 1)
        if i % 2 == 0:
            blacks.append(tb * db)
            whites.append(tw * dw)
        else:
            blacks.append(tw * db)
            whites.append(tb * dw)
    return TwoPointTable(tuple(blacks), tuple(whites))
