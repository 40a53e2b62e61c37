"""Truncated multivariate formal power series over exact rationals.

Series are truncated by *total* degree and every value carries two bounds:
``order``, the hard truncation degree, and ``reliable``, the highest total
degree at which coefficients are guaranteed exact.  Ring operations keep
``reliable`` at the minimum of the operands; exact division by a series of
valuation v (a monomial of degree v times a unit) loses exactly the top v
degrees.  Nothing in this module ever compares coefficients beyond the
reliable bound, and consumers should not either: use ``agree`` or
``first_difference`` which take the bound into account.

Coefficients may be ints, Fractions or gmpy2 rationals; they are never
floats.  All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterator, Mapping, NamedTuple, Sequence

from .rational import Rat, is_rational

Expo = tuple  # exponent vector, one entry per variable


class SeriesError(Exception):
    """Base class for series arithmetic failures."""


class VariableMismatchError(SeriesError):
    """Operands live in rings with different variable counts."""


class NotAUnitError(SeriesError):
    """Inversion or unit decomposition applied to a non-unit."""


class NotASquareError(SeriesError):
    """Square root of a series whose constant term is not a rational square."""


class DivisibilityError(SeriesError):
    """Exact division left a coefficient the divisor monomial cannot absorb.

    This signals a formula or branch-selection bug upstream, not bad input.
    """


class NoSeriesRootError(SeriesError):
    """The requested quadratic has no series root with zero constant term."""


_VAR_NAMES = {2: ("tb", "tw"), 3: ("tb", "tw", "tg")}


def _zero_expo(num_vars: int) -> Expo:
    return (0,) * num_vars


def _add_expo(a: Expo, b: Expo) -> Expo:
    if len(a) == 2:
        return (a[0] + b[0], a[1] + b[1])
    if len(a) == 3:
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2])
    return tuple(x + y for x, y in zip(a, b))


class MSeries:
    """A truncated power series: finite map from exponent vectors to rationals."""

    __slots__ = ("num_vars", "order", "reliable", "coeffs")

    def __init__(
        self,
        num_vars: int,
        order: int,
        coeffs: Mapping[Expo, object] | None = None,
        reliable: int | None = None,
    ):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        if order < 0:
            raise ValueError("order must be non-negative")
        self.num_vars = num_vars
        self.order = order
        if reliable is None:
            reliable = order
        self.reliable = max(0, min(reliable, order))
        clean: dict[Expo, object] = {}
        if coeffs:
            for e, c in coeffs.items():
                if len(e) != num_vars:
                    raise ValueError(f"exponent {e} has wrong arity")
                if sum(e) <= order and c:
                    clean[tuple(e)] = c
        self.coeffs = clean

    # -- inspection ---------------------------------------------------------

    def coefficient(self, expo: Sequence[int]):
        return self.coeffs.get(tuple(expo), 0)

    def constant_term(self):
        return self.coeffs.get(_zero_expo(self.num_vars), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int | None:
        """Minimal total degree of a stored term, or None for the zero series."""
        if not self.coeffs:
            return None
        return min(sum(e) for e in self.coeffs)

    def terms(self) -> Iterator[tuple[Expo, object]]:
        """Terms sorted by total degree, then lexicographic exponents."""
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            yield e, self.coeffs[e]

    # -- structural helpers -------------------------------------------------

    def with_reliable(self, reliable: int) -> "MSeries":
        return MSeries(self.num_vars, self.order, self.coeffs, reliable)

    def truncate(self, order: int) -> "MSeries":
        kept = {e: c for e, c in self.coeffs.items() if sum(e) <= order}
        return MSeries(self.num_vars, order, kept, min(self.reliable, order))

    def permute_vars(self, perm: Sequence[int]) -> "MSeries":
        """Rename variable j to perm[j]; perm must be a permutation."""
        if sorted(perm) != list(range(self.num_vars)):
            raise ValueError(f"not a permutation of the variables: {perm}")
        out: dict[Expo, object] = {}
        for e, c in self.coeffs.items():
            ne = [0] * self.num_vars
            for j, x in enumerate(e):
                ne[perm[j]] = x
            out[tuple(ne)] = c
        return MSeries(self.num_vars, self.order, out, self.reliable)

    def swap_vars(self) -> "MSeries":
        """Exchange the first two variables (the black/white color swap)."""
        perm = (1, 0) + tuple(range(2, self.num_vars))
        return self.permute_vars(perm)

    def collapse_vars(self) -> "MSeries":
        """Identify all variables with the first one (same arity is kept)."""
        out: dict[Expo, object] = {}
        tail = (0,) * (self.num_vars - 1)
        for e, c in self.coeffs.items():
            ne = (sum(e),) + tail
            out[ne] = out.get(ne, 0) + c
        return MSeries(self.num_vars, self.order, out, self.reliable)

    def evaluate(self, point: Sequence):
        """Evaluate the truncated polynomial at exact rational arguments."""
        if len(point) != self.num_vars:
            raise ValueError("wrong number of values")
        total = Rat(0)
        for e, c in self.coeffs.items():
            term = Rat(c)
            for p, k in zip(point, e):
                if k:
                    term *= Rat(p) ** k
            total += term
        return total

    def substitute(self, values: Sequence["MSeries"]) -> "MSeries":
        """Plug series of positive valuation in for the variables.

        Positive valuation is required to keep truncation sound: a term of
        degree d then only feeds degrees >= d of the result.
        """
        if len(values) != self.num_vars:
            raise ValueError("wrong number of substitution values")
        nv = values[0].num_vars
        order = min([self.order] + [v.order for v in values])
        reliable = min([self.reliable] + [v.reliable for v in values])
        for v in values:
            if v.num_vars != nv:
                raise VariableMismatchError("substitution values disagree on arity")
            if v.constant_term():
                raise SeriesError("substitution requires positive valuation")
        one = MSeries(nv, order, {_zero_expo(nv): 1})
        powers: list[list[MSeries]] = []
        for j, v in enumerate(values):
            top = max((e[j] for e in self.coeffs), default=0)
            col = [one]
            for _ in range(top):
                col.append(col[-1] * v)
            powers.append(col)
        acc = MSeries(nv, order, {})
        for e, c in self.coeffs.items():
            term = one * c
            for j, k in enumerate(e):
                if k:
                    term = term * powers[j][k]
            acc = acc + term
        return acc.with_reliable(reliable)

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "MSeries") -> None:
        if self.num_vars != other.num_vars:
            raise VariableMismatchError(
                f"{self.num_vars}-variable series combined with {other.num_vars}-variable series"
            )

    def __add__(self, other):
        if is_rational(other):
            other = constant(self.num_vars, self.order, other)
        elif not isinstance(other, MSeries):
            return NotImplemented
        self._check_compatible(other)
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        if order < self.order:
            out = {e: c for e, c in out.items() if sum(e) <= order}
        return MSeries(self.num_vars, order, out, min(self.reliable, other.reliable))

    __radd__ = __add__

    def __neg__(self):
        return MSeries(
            self.num_vars, self.order, {e: -c for e, c in self.coeffs.items()}, self.reliable
        )

    def __sub__(self, other):
        if is_rational(other):
            other = constant(self.num_vars, self.order, other)
        elif not isinstance(other, MSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            if not other:
                return MSeries(self.num_vars, self.order, {}, self.reliable)
            return MSeries(
                self.num_vars,
                self.order,
                {e: c * other for e, c in self.coeffs.items()},
                self.reliable,
            )
        if not isinstance(other, MSeries):
            return NotImplemented
        self._check_compatible(other)
        order = min(self.order, other.order)
        # Iterate the sparser operand outside; keep the other sorted by degree
        # so the inner loop can stop as soon as the truncation bound is hit.
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        b_sorted = sorted(((sum(e), e) for e in b), key=lambda t: t[0])
        out: dict[Expo, object] = {}
        for ea, ca in a.items():
            room = order - sum(ea)
            if room < 0:
                continue
            for db, eb in b_sorted:
                if db > room:
                    break
                e = _add_expo(ea, eb)
                prod = ca * b[eb]
                s = out.get(e, 0) + prod
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MSeries(self.num_vars, order, out, min(self.reliable, other.reliable))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers")
        result = constant(self.num_vars, self.order, 1).with_reliable(self.reliable)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        """Coefficient equality; order/reliable metadata is not compared."""
        if is_rational(other):
            other = constant(self.num_vars, self.order, other)
        if not isinstance(other, MSeries):
            return NotImplemented
        return self.num_vars == other.num_vars and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = _VAR_NAMES.get(self.num_vars) or tuple(
            f"x{j}" for j in range(self.num_vars)
        )
        parts = []
        for e, c in self.terms():
            factors = [
                names[j] if k == 1 else f"{names[j]}^{k}" for j, k in enumerate(e) if k
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        text = " + ".join(parts).replace("+ -", "- ")
        return text

    def __repr__(self):
        return f"MSeries({self.num_vars}, order={self.order}, reliable={self.reliable}, {self})"


# -- factories ---------------------------------------------------------------


def zero(num_vars: int, order: int) -> MSeries:
    return MSeries(num_vars, order, {})


def one(num_vars: int, order: int) -> MSeries:
    return constant(num_vars, order, 1)


def constant(num_vars: int, order: int, value) -> MSeries:
    return MSeries(num_vars, order, {_zero_expo(num_vars): value})


def variable(num_vars: int, order: int, index: int) -> MSeries:
    e = [0] * num_vars
    e[index] = 1
    return MSeries(num_vars, order, {tuple(e): 1})


class SeriesRing(NamedTuple):
    """A (number of variables, truncation order) context with factories."""

    num_vars: int
    order: int

    def zero(self) -> MSeries:
        return zero(self.num_vars, self.order)

    def one(self) -> MSeries:
        return one(self.num_vars, self.order)

    def const(self, value) -> MSeries:
        return constant(self.num_vars, self.order, value)

    def gens(self) -> tuple[MSeries, ...]:
        return tuple(variable(self.num_vars, self.order, j) for j in range(self.num_vars))


class Valuation(NamedTuple):
    """Decomposition f = monomial * unit_part with an invertible unit part."""

    monomial: Expo
    unit_part: MSeries


def valuation_split(f: MSeries) -> Valuation:
    """Split f as monomial times unit, or raise if no such form exists."""
    if f.is_zero():
        raise NotAUnitError("zero series has no monomial-times-unit form")
    support = list(f.coeffs)
    m = tuple(min(e[j] for e in support) for j in range(f.num_vars))
    if m not in f.coeffs:
        raise NotAUnitError(
            "series is not a monomial times a unit (minimal support is not a single monomial)"
        )
    shifted = {
        tuple(x - y for x, y in zip(e, m)): c for e, c in f.coeffs.items()
    }
    return Valuation(m, MSeries(f.num_vars, f.order, shifted, f.reliable))


# -- the four nontrivial ring operations -------------------------------------


def inv_unit(f: MSeries) -> MSeries:
    """Multiplicative inverse of a series with nonzero constant term.

    Newton iteration g <- g*(2 - f*g) doubles the number of exact degree
    layers per step, so ceil(log2(order+1)) steps suffice.
    """
    c0 = f.constant_term()
    if not c0:
        raise NotAUnitError("cannot invert a series with zero constant term")
    g = constant(f.num_vars, f.order, Rat(1) / Rat(c0))
    correct = 1
    while correct <= f.order:
        g = g * (2 - f * g)
        correct *= 2
    return g.with_reliable(f.reliable)


def exact_div(f: MSeries, g: MSeries) -> MSeries:
    """Quotient q with f = q*g, for g a monomial of degree v times a unit.

    The quotient is reliable (and stored) only up to
    min(f.reliable, g.reliable) - v: dividing by valuation v destroys the
    top v degrees of information.  A surviving coefficient not divisible by
    the monomial raises DivisibilityError.  When nothing at all survives the
    result is the zero series with reliable 0, i.e. only its constant term
    (zero) is vouched for.
    """
    f._check_compatible(g)
    if g.is_zero():
        raise ZeroDivisionError("exact_div by the zero series")
    mono, unit = valuation_split(g)
    vdeg = sum(mono)
    bound = min(f.reliable, g.reliable)
    q0 = f * inv_unit(unit)
    out: dict[Expo, object] = {}
    for e, c in q0.coeffs.items():
        if sum(e) > bound:
            continue  # garbage region, drop
        if any(x < y for x, y in zip(e, mono)):
            raise DivisibilityError(
                f"coefficient at {e} (degree {sum(e)}) not divisible by monomial {mono}"
            )
        out[tuple(x - y for x, y in zip(e, mono))] = c
    order = min(f.order, g.order)
    return MSeries(f.num_vars, order, out, bound - vdeg)


def sqrt_unit(f: MSeries) -> MSeries:
    """Square root with positive constant term.

    The constant term must be the square of a rational; otherwise the square
    root is not a series over the rationals and NotASquareError is raised.
    """
    c0 = f.constant_term()
    if not c0 or c0 < 0:
        raise NotASquareError(f"constant term {c0} is not a nonzero rational square")
    num, den = Rat(c0).numerator, Rat(c0).denominator
    rn, rd = isqrt(int(num)), isqrt(int(den))
    if rn * rn != num or rd * rd != den:
        raise NotASquareError(f"constant term {c0} is not a rational square")
    root0 = Rat(rn, rd)
    # Newton on the inverse square root avoids repeated series inversions:
    # v <- v*(3 - f*v^2)/2 doubles the exact layers, then sqrt(f) = f*v.
    v = constant(f.num_vars, f.order, Rat(1) / root0)
    half = Rat(1, 2)
    correct = 1
    while correct <= f.order:
        v = v * (3 - f * v * v) * half
        correct *= 2
    return (f * v).with_reliable(f.reliable)


def solve_quadratic_branch(a2: MSeries, a1: MSeries, a0: MSeries) -> MSeries:
    """The unique series root mu with mu(0) = 0 of a2*mu^2 + a1*mu + a0 = 0.

    Requires a1 to be a unit and a0 to have zero constant term.  Iterating
    mu <- -(a0 + a2*mu^2)/a1 from mu = 0 gains at least one exact total
    degree per step, so order+1 steps pin every stored coefficient; one
    extra step asserts stability.
    """
    a2._check_compatible(a1)
    a1._check_compatible(a0)
    if not a1.constant_term():
        raise NotAUnitError("linear coefficient must be a unit")
    if a0.constant_term():
        raise NoSeriesRootError("constant coefficient must have zero constant term")
    order = min(a2.order, a1.order, a0.order)
    inv_a1 = inv_unit(a1.truncate(order))
    root = zero(a2.num_vars, order)
    for _ in range(order + 1):
        root = -(a0 + a2 * root * root) * inv_a1
    again = -(a0 + a2 * root * root) * inv_a1
    if again != root:
        raise NoSeriesRootError("quadratic iteration failed to stabilize")
    return root.with_reliable(min(a2.reliable, a1.reliable, a0.reliable))


# -- comparison helpers -------------------------------------------------------


def common_reliable(*series: MSeries) -> int:
    return min(s.reliable for s in series)


def first_difference(
    f: MSeries, g: MSeries, through: int | None = None
) -> tuple[Expo, object, object] | None:
    """Smallest-degree coefficient where f and g differ, or None.

    Compares only up to ``through`` (default: the common reliable order).
    """
    f._check_compatible(g)
    if through is None:
        through = common_reliable(f, g)
    keys = set(f.coeffs) | set(g.coeffs)
    for e in sorted(keys, key=lambda e: (sum(e), e)):
        if sum(e) > through:
            break
        cf, cg = f.coeffs.get(e, 0), g.coeffs.get(e, 0)
        if cf != cg:
            return e, cf, cg
    return None


def agree(f: MSeries, g: MSeries, through: int | None = None) -> bool:
    """Exact coefficient agreement up to the common reliable order."""
    return first_difference(f, g, through) is None
