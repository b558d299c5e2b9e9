"""Explicit ideal families with closed-form excess predictions.

``m_i`` below is the two-variable monomial x1^(p-i) x2^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ParameterError
from .monomial import FactoredIdeal, MonomialIdeal, minimalize
from .numerics import IntegerMatrix, lcm_denominators, solve_cramer


@dataclass(frozen=True)
class FamilySpec:
    """Predictions attached to a constructed family member.

    ``predicted_excess(n)`` returns None where no closed form is claimed.
    ``r_bounds`` is an inclusive (low, high) range, either side may be None.
    """

    tag: str
    params: dict
    predicted_excess: Callable[[int], int | None] = field(repr=False)
    predicted_r: int | None = None
    r_bounds: tuple[int | None, int | None] = (None, None)
    predicted_gstab: int | None = None

    def excess(self, n: int) -> int | None:
        return self.predicted_excess(n)

    def to_json(self, horizon: int = 10) -> dict:
        return {
            "tag": self.tag,
            "params": self.params,
            "predicted_excess": [self.predicted_excess(n) for n in range(1, horizon + 1)],
            "predicted_r": self.predicted_r,
            "r_bounds": list(self.r_bounds),
            "predicted_gstab": self.predicted_gstab,
        }


def _m(p: int, i: int) -> tuple[int, int]:
    return (p - i, i)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def build_J_pa(p: int, a: int) -> tuple[MonomialIdeal, FamilySpec]:
    """J_{p,a} = (m_0, m_p, m_{p-1}, x1^(p-1) x2^a)."""
    if p < 4 or not 2 <= a <= p - 2 or (p - 1) % a == 0:
        raise ParameterError(f"J_pa needs p >= 4, 2 <= a <= p-2, a not dividing p-1; got p={p}, a={a}")
    ideal = minimalize([_m(p, 0), _m(p, p), _m(p, p - 1), (p - 1, a)])
    r = (p - 1) // a

    def eps(n: int) -> int:
        return n * (a - 1) if n <= r - 1 else r * (a - 1)

    spec = FamilySpec("J_pa", {"p": p, "a": a}, eps, r, (r, r), r)
    return ideal, spec


def build_I_p(p: int) -> MonomialIdeal:
    """I_p = (m_0, m_p, m_1, m_{p-1})."""
    if p < 4:
        raise ParameterError(f"I_p needs p >= 4; got {p}")
    return minimalize([_m(p, 0), _m(p, p), _m(p, 1), _m(p, p - 1)])


def build_I_pi0(p: int, i: int) -> MonomialIdeal:
    """I_{p,i,0} = I_p + (m_i)."""
    if p < 4 or not 2 <= i <= p // 2:
        raise ParameterError(f"I_pi0 needs p >= 4 and 2 <= i <= p//2; got p={p}, i={i}")
    return minimalize([_m(p, 0), _m(p, p), _m(p, 1), _m(p, p - 1), _m(p, i)])


def build_I_pia(p: int, i: int, a: int) -> tuple[MonomialIdeal, FamilySpec]:
    """I_{p,i,a} = I_p + (m_i x3^a) in three variables.

    Only i = floor(p/2) has a full closed form.  For other i the excess is
    a*n up to ceil((p-1)/i) - 1 and 0 from p-2 on; the reduction number is
    exact for i = 2 and only bounded below otherwise.
    """
    if p < 4 or not 2 <= i <= p // 2 or a < 1:
        raise ParameterError(f"I_pia needs p >= 4, 2 <= i <= p//2, a >= 1; got p={p}, i={i}, a={a}")
    gens = [(*_m(p, k), 0) for k in (0, p, 1, p - 1)] + [(*_m(p, i), a)]
    ideal = minimalize(gens)
    low = _ceil_div(p - 1, i) - 1
    params = {"p": p, "i": i, "a": a}
    if i == p // 2:
        def eps(n: int) -> int:
            return a if n <= p - 3 else 0

        return ideal, FamilySpec("I_pia", params, eps, 1, (1, 1), p - 2)

    def eps_partial(n: int) -> int | None:
        if n <= low:
            return a * n
        if n >= p - 2:
            return 0
        return None

    if i == 2:
        r = _ceil_div(p - 1, 2) - 1
        return ideal, FamilySpec("I_pia", params, eps_partial, r, (r, r))
    return ideal, FamilySpec("I_pia", params, eps_partial, None, (low, None))


def exred_vectors(s: int, delta: int) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """The cyclic vertices v_k = (delta-1) e_k + e_(k+1) and v = (delta-s+1, 1, ..., 1)."""
    vs = []
    for k in range(s):
        v = [0] * s
        v[k] = delta - 1
        v[(k + 1) % s] = 1
        vs.append(tuple(v))
    return vs, (delta - s + 1,) + (1,) * (s - 1)


def _check_exred(s: int, delta: int) -> None:
    if s < 3 or delta < s + 1:
        raise ParameterError(f"ExRed needs s >= 3 and delta >= s+1; got s={s}, delta={delta}")


def exred_determinants(s: int, delta: int) -> tuple[int, tuple[int, ...]]:
    """D = det[v_1 ... v_s] and the Cramer numerators D_i for the target v."""
    _check_exred(s, delta)
    vs, target = exred_vectors(s, delta)
    a = IntegerMatrix.from_columns(vs)
    sol, D = solve_cramer(a, target)
    Di = tuple(int(x * D) for x in sol)
    sign = (-1) ** (s - 1)
    if D != (delta - 1) ** s + sign:
        raise AssertionError(f"D={D} disagrees with (delta-1)^s + (-1)^(s-1)")
    if Di[-1] * delta != (delta - 1) ** s + sign * (delta * delta - delta * s + 1):
        raise AssertionError(f"D_s={Di[-1]} disagrees with its closed form")
    if sum(Di) != D or min(Di) <= 0:
        raise AssertionError("numerators must be positive and sum to D")
    return D, Di


def build_exred(s: int, delta: int, a: int) -> tuple[MonomialIdeal, FamilySpec]:
    """(M_1, ..., M_s, M = X^v Y^a) in s+1 variables.

    The predicted reduction number comes from the unique convex weights
    D_i / D of v: M^t lies in J^t exactly when t D_i / D is integral for every
    i, so r = lcm of their denominators minus one.
    """
    _check_exred(s, delta)
    if a < 1:
        raise ParameterError(f"ExRed needs a >= 1; got {a}")
    vs, target = exred_vectors(s, delta)
    gens = [v + (0,) for v in vs] + [target + (a,)]
    ideal = minimalize(gens)
    D, Di = exred_determinants(s, delta)
    r = lcm_denominators(Fraction(x, D) for x in Di) - 1

    def eps(n: int) -> int:
        return a * n if n <= r - 1 else a * r

    bounds = ((delta - 1) ** (s - 2) + 1, (delta - 1) ** s)
    spec = FamilySpec("ExRed", {"s": s, "delta": delta, "a": a}, eps, r, bounds, r)
    return ideal, spec


def equigenerated_linear() -> MonomialIdeal:
    return minimalize([(1, 0), (0, 1)])


def _check_steps(steps: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    steps = [(int(d), int(n)) for d, n in steps]
    if not steps:
        raise ParameterError("need at least one step")
    if steps[0][1] != 1:
        raise ParameterError("the first step must start at n = 1")
    for (d0, n0), (d1, n1) in zip(steps, steps[1:]):
        if not d0 > d1:
            raise ParameterError(f"step values must strictly decrease; got {d0} then {d1}")
        if not n0 < n1:
            raise ParameterError(f"step starts must strictly increase; got {n0} then {n1}")
    if steps[-1][0] < 0:
        raise ParameterError("step values must be non-negative")
    return steps


def step_function(steps: Sequence[tuple[int, int]]) -> Callable[[int], int]:
    """f(n) = d_j for n_j <= n < n_(j+1), from (value, start) pairs."""
    steps = _check_steps(steps)

    def f(n: int) -> int:
        value = steps[0][0]
        for d, start in steps:
            if n >= start:
                value = d
        return value

    return f


def realize_nonincreasing(steps: Sequence[tuple[int, int]]) -> FactoredIdeal:
    """Ideal whose excess function is the given non-increasing step function.

    One I_{p_i, floor(p_i/2), a_i} factor per drop, with p_i = n_(i+1) + 2 and
    a_i = d_i - d_(i+1), times J_{d_k+3, d_k+1} when the final value d_k is
    positive.  The constant zero function gives (x1, x2).
    """
    steps = _check_steps(steps)
    factors = []
    for (d, _), (d_next, n_next) in zip(steps, steps[1:]):
        p = n_next + 2
        factors.append(build_I_pia(p, p // 2, d - d_next)[0])
    last = steps[-1][0]
    if last > 0:
        factors.append(build_J_pa(last + 3, last + 1)[0])
    if not factors:
        factors.append(equigenerated_linear())
    return FactoredIdeal(tuple(factors))


def local_maxima_steps(points: Sequence[int]) -> list[tuple[int, int]]:
    """Steps of f(n) = 2(k+1-i) on n_(i-1) < n <= n_i, with n_0 = 0, n_(k+1) = inf."""
    k = len(points)
    starts = [1] + [n + 1 for n in points]
    return [(2 * (k + 1 - i), starts[i - 1]) for i in range(1, k + 2)]


def _check_points(points: Sequence[int]) -> list[int]:
    points = [int(n) for n in points]
    if not points:
        raise ParameterError("need at least one point")
    if points[0] < 2:
        raise ParameterError("points must be >= 2")
    for a, b in zip(points, points[1:]):
        if b - a < 2:
            raise ParameterError(f"consecutive points must differ by at least 2; got {a}, {b}")
    return points


def build_local_maxima(points: Sequence[int]) -> FactoredIdeal:
    """Ideal whose excess function has local maxima exactly at ``points``."""
    points = _check_points(points)
    realizer = realize_nonincreasing(local_maxima_steps(points))
    j = build_J_pa(2 * (points[-1] + 2), 2)[0]
    return FactoredIdeal(realizer.factors + (j,))


def local_maxima_excess(points: Sequence[int]) -> Callable[[int], int]:
    """Predicted excess of :func:`build_local_maxima` by factor-wise addition."""
    points = _check_points(points)
    f = step_function(local_maxima_steps(points))
    g = build_J_pa(2 * (points[-1] + 2), 2)[1].predicted_excess
    return lambda n: f(n) + g(n)


FAMILY_TAGS = ("J_pa", "I_p", "I_pi0", "I_pia", "ExRed", "G6", "G7")


def build_family(tag: str, **params) -> tuple[MonomialIdeal | FactoredIdeal, FamilySpec | None]:
    """Dispatch on a family tag; G6 takes ``steps``, G7 takes ``points``."""
    try:
        if tag == "J_pa":
            return build_J_pa(params["p"], params["a"])
        if tag == "I_p":
            return build_I_p(params["p"]), None
        if tag == "I_pi0":
            return build_I_pi0(params["p"], params["i"]), None
        if tag == "I_pia":
            return build_I_pia(params["p"], params["i"], params["a"])
        if tag == "ExRed":
            return build_exred(params["s"], params["delta"], params["a"])
        if tag == "G6":
            steps = params["steps"]
            spec = FamilySpec("G6", {"steps": [list(x) for x in steps]}, step_function(steps))
            return realize_nonincreasing(steps), spec
        if tag == "G7":
            points = params["points"]
            spec = FamilySpec("G7", {"points": list(points)}, local_maxima_excess(points))
            return build_local_maxima(points), spec
    except KeyError as exc:
        raise ParameterError(f"family {tag} is missing parameter {exc.args[0]}") from None
    raise ParameterError(f"unknown family {tag!r}; expected one of {', '.join(FAMILY_TAGS)}")
