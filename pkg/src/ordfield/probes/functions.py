"""Counterexample functions built from cuts: steps, jumps, contractions and bumps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import StabilizedSequence
from ..fields import FieldHandle
from ..results import ProbeResult, Status, Witness, WitnessKind
from .cuts import Cut, Side, refute_cutpoint


def step_function(cut: Cut):
    """-1 on A and 1 on B: continuous (locally constant) yet never zero."""
    h = cut.field
    neg, pos = h.const(-1), h.const(1)

    def f(x):
        return neg if cut.side_of(x) is Side.A else pos

    return f


def evp_function(cut: Cut):
    """``f(x) = x`` on A and ``0`` on B, meant for the interval ``[0, 3]``."""
    h = cut.field
    if not (cut.in_a(h.const(1)) and cut.in_b(h.const(2))):
        raise ValueError("extreme value function needs 1 in A and 2 in B")

    def f(x):
        return x if cut.side_of(x) is Side.A else h.zero

    return f


def refute_max(cut: Cut, candidate) -> Witness:
    """A point of ``[0, 3]`` where the jump function beats its value at ``candidate``."""
    h = cut.field
    f = evp_function(cut)
    if not (h.le(h.zero, candidate) and h.le(candidate, h.const(3))):
        raise ValueError("candidate maximum must lie in [0, 3]")
    if cut.in_b(candidate):
        x = h.one
        cert = f"candidate is in B so f(candidate) = 0, while f(1) = 1 > 0"
    else:
        x = refute_cutpoint(cut, candidate).elements[1]
        cert = (f"candidate is in A so f(candidate) = candidate; "
                f"{h.format(x)} is in A, below 3 and larger, so f is larger there")

    def check():
        return h.le(h.zero, x) and h.le(x, h.const(3)) and h.gt(f(x), f(candidate))

    return Witness(WitnessKind.BIGGER_VALUE, (candidate, x), cert, check=check,
                   details={"value": f(x), "candidate_value": f(candidate)})


def fixedpoint_function(cut: Cut, a, b):
    """``b`` on A and ``a`` on B; maps ``[a, b]`` into itself and swaps sides."""
    if not (cut.in_a(a) and cut.in_b(b)):
        raise ValueError("need a in A and b in B")

    def f(x):
        return b if cut.side_of(x) is Side.A else a

    return f


def check_no_fixed_point(cut: Cut, f, samples):
    """One NotFixed witness per sample: f(x) lies on the other side of the cut."""
    h = cut.field
    out = []
    for x in samples:
        y = f(x)

        def check(x=x, y=y):
            return cut.side_of(x) is not cut.side_of(y) and not h.eq(x, y)

        out.append(Witness(WitnessKind.NOT_FIXED, (x, y),
                           f"x is in {cut.side_of(x)} and f(x) = {h.format(y)} is in "
                           f"{cut.side_of(y)}; the sides are disjoint, so f(x) != x",
                           check=check))
    return out


# -- contraction with no fixed point (non-Archimedean) -------------------------------


def contraction_map(h: FieldHandle):
    """``f`` and its constant ``c = 1 - (1/2)/w^2``.

    ``f(x) = x/2`` for infinite ``x`` and ``x + g(x)/2`` for finite ``x``,
    where ``g(x) = 1 - x/(1 + |x|)`` decreases and takes values in (0, 2).
    """
    if h.archimedean:
        raise ValueError("the contraction needs an infinite element")
    w = h.omega()
    half = h.const(Fraction(1, 2))
    c = h.sub(h.one, h.div(half, h.mul(w, w)))

    def g(x):
        return h.sub(h.one, h.div(x, h.add(h.one, h.abs(x))))

    def f(x):
        if h.classify(x).is_infinite:
            return h.mul(half, x)
        return h.add(x, h.mul(half, g(x)))

    f.g = g
    return f, c


def contraction_check(h: FieldHandle, pairs, samples) -> ProbeResult:
    """Exact check of the contraction inequality and of ``f(x) != x``."""
    f, c = contraction_map(h)
    result = ProbeResult(13, h.label, Status.FAILS)
    bad = []
    checked = 0
    for x, y in pairs:
        if h.eq(x, y):
            continue
        lhs = h.abs(h.sub(f(x), f(y)))
        rhs = h.mul(c, h.abs(h.sub(x, y)))
        checked += 1
        if h.gt(lhs, rhs):
            bad.append((x, y))
    result.log(f"|f(x) - f(y)| <= c|x - y| with c = {h.format(c)}: "
               f"{checked - len(bad)}/{checked} pairs hold")
    for x in samples:
        fx = f(x)
        finite = not h.classify(x).is_infinite
        diff = h.sub(fx, x)

        def check(x=x):
            return not h.eq(f(x), x)

        result.witnesses.append(Witness(
            WitnessKind.NOT_FIXED, (x, fx),
            f"x is {'finite, f(x) - x = g(x)/2' if finite else 'infinite, f(x) - x = -x/2'}"
            f" = {h.format(diff)} != 0",
            check=check))
    if bad:
        result.status = Status.INCONCLUSIVE
        result.log(f"{len(bad)} pairs violate the inequality")
    return result


# -- the gap contraction over Q -------------------------------------------------------


@dataclass
class PiecewiseLinearMap:
    """Continuous piecewise linear map with the given breakpoints and outer slopes."""

    field: FieldHandle
    breakpoints: list
    values: list
    left_slope: Fraction
    right_slope: Fraction

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or not self.breakpoints:
            raise ValueError("need matching, nonempty breakpoints and values")
        h = self.field
        for p, q in zip(self.breakpoints, self.breakpoints[1:]):
            if not h.lt(p, q):
                raise ValueError("breakpoints must be strictly ascending")

    def __call__(self, x):
        h = self.field
        bp, vals = self.breakpoints, self.values
        if h.le(x, bp[0]):
            return h.add(vals[0], h.mul(h.const(self.left_slope), h.sub(x, bp[0])))
        if h.ge(x, bp[-1]):
            return h.add(vals[-1], h.mul(h.const(self.right_slope), h.sub(x, bp[-1])))
        lo, hi = 0, len(bp) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if h.le(bp[mid], x):
                lo = mid
            else:
                hi = mid
        slope = h.div(h.sub(vals[hi], vals[lo]), h.sub(bp[hi], bp[lo]))
        return h.add(vals[lo], h.mul(slope, h.sub(x, bp[lo])))

    def slopes(self):
        h = self.field
        inner = [h.div(h.sub(v1, v0), h.sub(p1, p0)) for p0, p1, v0, v1 in
                 zip(self.breakpoints, self.breakpoints[1:], self.values, self.values[1:])]
        return [h.const(self.left_slope)] + inner + [h.const(self.right_slope)]

    def lipschitz_constant(self):
        h = self.field
        best = h.zero
        for s in self.slopes():
            best = h.max(best, h.abs(s))
        return best


# levels searched past a candidate for the jump certificate; kept independent
# of max_level so that the chosen points never depend on it
_LOOKAHEAD = 16


def _gap_points(cut: Cut, count: int, max_level: int):
    """First ``count`` nested pairs ``(x_k, y_k)`` with levels chosen greedily.

    Level ``n_{k+1}`` is the least level giving strictly nested dyadics with
    ``y - x`` at most half the previous width, such that some deeper level
    ``m <= n + 16`` has ``b_m - x <= (x - x_k)/2`` and ``y - a_m <= (y_k - y)/2``.
    The latter bounds every later jump, so all slopes stay at most 1/2.
    The choice only depends on earlier points, so prefixes are stable.
    """
    dy = cut.dyadics()
    pts = getattr(dy, "gap_points", None)
    if pts is None:
        pts = dy.gap_points = [(1, dy.a(1), dy.b(1))]
    while len(pts) < count:
        n0, x0, y0 = pts[-1]
        moved = False
        chosen = None
        for n in range(n0 + 1, max_level + 1):
            x, y = dy.a(n), dy.b(n)
            if x > x0:
                moved = True
            if not (x > x0 and y < y0 and y - x <= (y0 - x0) / 2):
                continue
            if any(dy.b(m) - x <= (x - x0) / 2 and y - dy.a(m) <= (y0 - y) / 2
                   for m in range(n, n + _LOOKAHEAD + 1)):
                chosen = (n, x, y)
                break
        if chosen is None:
            if not moved:
                raise StabilizedSequence(
                    f"a_n of cut {cut.name} is constant from level {n0} to {max_level}")
            raise ValueError(f"depth {count - 2} needs more than {max_level} dyadic levels")
        pts.append(chosen)
    return pts[:count]


def gap_contraction_build(cut: Cut, depth: int = 8, max_level: int = 64) -> PiecewiseLinearMap:
    """Contraction with constant 1/2 sending ``x_k -> x_{k+1}`` and ``y_k -> y_{k+1}``.

    Breakpoints are ``x_1 < ... < x_{K+1} < y_{K+1} < ... < y_1``; the
    central piece maps ``[x_{K+1}, y_{K+1}]`` linearly onto
    ``[x_{K+2}, y_{K+2}]`` and both outer slopes are 1/2.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    pts = _gap_points(cut, depth + 2, max_level)
    xs = [p[1] for p in pts]
    ys = [p[2] for p in pts]
    K = depth
    bp = xs[:K + 1] + ys[:K + 1][::-1]
    vals = xs[1:K + 2] + ys[1:K + 2][::-1]
    h = cut.field
    m = PiecewiseLinearMap(h, [h.const(v) for v in bp], [h.const(v) for v in vals],
                           Fraction(1, 2), Fraction(1, 2))
    m.xs, m.ys, m.levels = xs, ys, [p[0] for p in pts]
    return m


def refute_gap_fixed_point(cut: Cut, candidate, depth: int = 4, max_level: int = 256) -> Witness:
    """Show the gap contraction moves ``candidate``.

    Outside the central piece every finite-depth map agrees with the
    limiting one, and there ``h(x) > x`` left of the gap and ``h(x) < x``
    right of it.  The depth is increased until ``candidate`` leaves the
    central interval ``[x_{K+1}, y_{K+1}]``.
    """
    h = cut.field
    K = depth
    while True:
        m = gap_contraction_build(cut, K, max_level)
        lo, hi = m.xs[K], m.ys[K]
        if h.lt(candidate, h.const(lo)) or h.gt(candidate, h.const(hi)):
            break
        K += 1
    value = m(candidate)
    side = "left" if h.lt(candidate, h.const(lo)) else "right"

    def check():
        return (not h.eq(m(candidate), candidate)
                and h.le(m.lipschitz_constant(), h.const(Fraction(1, 2))))

    return Witness(WitnessKind.NOT_FIXED, (candidate, value),
                   f"at depth {K} the candidate lies {side} of the central interval "
                   f"[{lo}, {hi}], where the map is final; h(candidate) = {h.format(value)} "
                   f"!= candidate, and every slope is at most 1/2",
                   check=check, details={"depth": K})


# -- the unbounded bump sum over Q ------------------------------------------------------


def _bump(h, a, b, n, x):
    r = Fraction(1, 2 ** n)
    if h.lt(x, h.const(a - r)) or h.gt(x, h.const(b + r)):
        return h.zero
    if h.lt(x, h.const(a)):
        return h.mul(h.sub(x, h.const(a - r)), h.const(2 ** n))
    if h.gt(x, h.const(b)):
        return h.mul(h.sub(h.const(b + r), x), h.const(2 ** n))
    return h.one


def bump(cut: Cut, n: int, x):
    """The trapezoid ``f_n``: 1 on ``[a_n, b_n]``, 0 off ``[a_n - 2^-n, b_n + 2^-n]``."""
    dy = cut.dyadics()
    return _bump(cut.field, dy.a(n), dy.b(n), n, x)


def bump_cutoff(cut: Cut, x, max_level: int = 4096) -> int:
    """First ``m >= 1`` with ``x`` outside the support ``J_m`` of ``f_m``.

    The supports are nested, so ``f_n(x) = 0`` for every ``n >= m``.
    """
    h = cut.field
    dy = cut.dyadics()
    for m in range(1, max_level + 1):
        r = Fraction(1, 2 ** m)
        if h.lt(x, h.const(dy.a(m) - r)) or h.gt(x, h.const(dy.b(m) + r)):
            return m
    raise StabilizedSequence(f"{h.format(x)} stays in the bump supports up to level {max_level}")


def bump_sum(cut: Cut, x, depth: int = None):
    """``f(x) = sum_{n >= 1} f_n(x)``, exact.

    Only the bumps before :func:`bump_cutoff` are nonzero at ``x``.  With
    ``depth`` given the sum is truncated to ``n <= depth``.
    """
    h = cut.field
    if not h.archimedean:
        raise ValueError("the bump sum is meant for Q")
    stop = bump_cutoff(cut, x)
    if depth is not None:
        stop = min(stop, depth + 1)
    total = h.zero
    for n in range(1, stop):
        total = h.add(total, bump(cut, n, x))
    return total


def supports_nested(cut: Cut, levels: int) -> bool:
    """``J_{n+1}`` is inside ``J_n`` for ``n < levels``."""
    dy = cut.dyadics()
    for n in range(1, levels):
        r0, r1 = Fraction(1, 2 ** n), Fraction(1, 2 ** (n + 1))
        if dy.a(n + 1) - r1 < dy.a(n) - r0 or dy.b(n + 1) + r1 > dy.b(n) + r0:
            return False
    return True


def refute_bound(cut: Cut, bound) -> Witness:
    """A point where the bump sum exceeds ``bound``: ``x = a_n`` with ``n > bound``."""
    h = cut.field
    n = h.nat_bound(bound)
    x = h.const(cut.dyadics().a(n))
    value = bump_sum(cut, x)

    def check():
        return h.gt(bump_sum(cut, x), bound)

    return Witness(WitnessKind.UNBOUNDED_VALUE, (bound, x),
                   f"x = a_{n} = {h.format(x)} lies in [a_k, b_k] for every k <= {n}, "
                   f"so f(x) >= {n} > {h.format(bound)}; exactly f(x) = {h.format(value)}",
                   check=check, details={"n": n, "value": value})
