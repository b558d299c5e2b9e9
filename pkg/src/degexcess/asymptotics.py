"""Degree excess profiles, Kodiyalam reductions and reduction numbers."""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, replace
from typing import Protocol

from .errors import CapExceededError
from .monomial import (
    DEFAULT_BUDGET,
    FactoredIdeal,
    MonomialIdeal,
    degree,
    ideal_equals,
    is_minimal_generator,
    max_degree,
    member_of_power,
    multiply,
    powers,
)
from .newton import delta
from .numerics import hadamard_bound


@dataclass(frozen=True)
class DegreeExcessProfile:
    p: int
    horizon: int
    rows: dict[int, tuple[int, int]]
    reduction_number: int | None = None
    observed_gstab: int | None = None
    limit_value: int | None = None
    certified: bool = False

    def d(self, n: int) -> int:
        return self.rows[n][0]

    def epsilon(self, n: int) -> int:
        return self.rows[n][1]

    @property
    def eps(self) -> tuple[int, ...]:
        return tuple(self.rows[n][1] for n in range(1, self.horizon + 1))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "d", "epsilon"])
        for n in range(1, self.horizon + 1):
            w.writerow([n, *self.rows[n]])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "horizon": self.horizon,
            "rows": [{"n": n, "d": d, "epsilon": e} for n, (d, e) in sorted(self.rows.items())],
            "reduction_number": self.reduction_number,
            "observed_gstab": self.observed_gstab,
            "limit_value": self.limit_value,
            "certified": self.certified,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "DegreeExcessProfile":
        if isinstance(data, str):
            data = json.loads(data)
        rows = {r["n"]: (r["d"], r["epsilon"]) for r in data["rows"]}
        return cls(
            p=data["p"],
            horizon=data.get("horizon", max(rows)),
            rows=rows,
            reduction_number=data.get("reduction_number"),
            observed_gstab=data.get("observed_gstab"),
            limit_value=data.get("limit_value"),
            certified=data.get("certified", False),
        )


class ClosedForm(Protocol):
    """Anything that predicts epsilon(n) (None outside its domain) and the
    index from which it is constant."""

    predicted_gstab: int | None

    def excess(self, n: int) -> int | None: ...


def p_of(ideal: MonomialIdeal) -> int:
    """Leading coefficient of d(I^n); for monomial ideals this is delta(I)."""
    return delta(ideal)


def kodiyalam_reduction(ideal: MonomialIdeal) -> MonomialIdeal:
    p = p_of(ideal)
    gens = tuple(g for g in ideal.generators if degree(g) <= p)
    return MonomialIdeal(ideal.num_vars, gens)


def _extra_generators(ideal: MonomialIdeal, p: int):
    return [g for g in ideal.generators if degree(g) > p]


def lead_bound_r(ideal: MonomialIdeal) -> int:
    """q * ceil(sqrt(s^s)) * delta^s - q, q = #generators of degree > delta."""
    d = delta(ideal)
    q = len(_extra_generators(ideal, d))
    return q * hadamard_bound(ideal.num_vars, d) - q


def lead_bound_epsilon(ideal: MonomialIdeal) -> int:
    d = delta(ideal)
    q = len(_extra_generators(ideal, d))
    return q * (hadamard_bound(ideal.num_vars, d) - 1) * (max_degree(ideal) - d)


def _in_reduction_times_power(ideal: MonomialIdeal, red: MonomialIdeal, n: int, m) -> bool:
    """Is X^m in J * I^n?"""
    for g in red.generators:
        rest = tuple(x - y for x, y in zip(m, g))
        if min(rest) < 0:
            continue
        if n == 0 or member_of_power(ideal, n, rest):
            return True
    return False


def reduction_number(ideal: MonomialIdeal, cap: int | None = None, method: str = "auto") -> int:
    """Least n >= 0 with I^(n+1) = J I^n, J the Kodiyalam reduction.

    Equality at n persists to n+1 (multiply by I), so the first hit wins.

    ``method``:
      * ``"fast"``: only for I = (J, f); returns min{t : f^t in J^t} - 1.
      * ``"membership"``: I^(n+1) and J I^n differ only by products of n+1
        generators outside J, so test each such product for membership in
        J I^n.
      * ``"expand"``: compare the expanded ideals I^(n+1) and J I^n.
      * ``"auto"``: fast when there is one extra generator, else membership.

    The search never goes past ``min(cap, lead_bound_r(I))``.
    """
    p = p_of(ideal)
    red = MonomialIdeal(ideal.num_vars, tuple(g for g in ideal.generators if degree(g) <= p))
    extras = _extra_generators(ideal, p)
    if not extras:
        return 0
    bound = lead_bound_r(ideal)
    limit = bound if cap is None else min(cap, bound)
    if method == "auto":
        method = "fast" if len(extras) == 1 else "membership"

    if method == "fast":
        if len(extras) != 1:
            raise ValueError("fast path needs exactly one generator outside the reduction")
        (f,) = extras
        for t in range(1, limit + 2):
            if member_of_power(red, t, tuple(t * x for x in f)):
                return t - 1
        raise CapExceededError(limit)

    if method == "membership":
        for n in range(limit + 1):
            ok = True
            for combo in itertools.combinations_with_replacement(extras, n + 1):
                m = tuple(map(sum, zip(*combo)))
                if not _in_reduction_times_power(ideal, red, n, m):
                    ok = False
                    break
            if ok:
                return n
        raise CapExceededError(limit)

    if method == "expand":
        prev = None  # I^n for the current n >= 1
        for n in range(limit + 1):
            if n == 0:
                lhs, rhs = ideal, red
            else:
                lhs, rhs = multiply(prev, ideal), multiply(red, prev)
            if ideal_equals(lhs, rhs):
                return n
            prev = lhs
        raise CapExceededError(limit)

    raise ValueError(f"unknown method {method!r}")


def excess_profile(
    ideal: MonomialIdeal | FactoredIdeal, horizon: int, budget: int | None = DEFAULT_BUDGET
) -> DegreeExcessProfile:
    """Exact table n -> (d(I^n), epsilon(I;n)) for n = 1..horizon."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if isinstance(ideal, FactoredIdeal):
        parts = [excess_profile(f, horizon, budget) for f in ideal.factors]
        p = sum(pr.p for pr in parts)
        rows = {}
        for n in range(1, horizon + 1):
            d = sum(pr.d(n) for pr in parts)
            rows[n] = (d, d - p * n)
        return DegreeExcessProfile(p, horizon, rows)
    p = p_of(ideal)
    rows = {}
    for n, pw in zip(range(1, horizon + 1), powers(ideal, budget)):
        d = max_degree(pw)
        rows[n] = (d, d - p * n)
    return DegreeExcessProfile(p, horizon, rows)


def gstab_observe(
    profile: DegreeExcessProfile, r: int | None, closed_form: ClosedForm | None = None
) -> tuple[int, bool]:
    """First n from which epsilon is constant up to the horizon, and whether
    that plateau is certified to last forever.

    A zero plateau at or after r is certified: epsilon is non-increasing past
    r and never negative.  A positive plateau is certified only when a closed
    form is supplied that matches every row and stabilizes at the same index.
    """
    eps = profile.eps
    observed = len(eps)
    while observed > 1 and eps[observed - 2] == eps[-1]:
        observed -= 1
    certified = False
    if eps[-1] == 0:
        # eps(n) >= n > 0 for n <= r, so a zero plateau starts past r; with no
        # r known only eps == 0 from n = 1 (d(I) = p(I)) is safe
        certified = r is not None or observed == 1
    if not certified and closed_form is not None:
        matches = all(
            closed_form.excess(n) in (None, profile.epsilon(n)) for n in range(1, profile.horizon + 1)
        )
        certified = matches and closed_form.predicted_gstab == observed
    return observed, certified


def analyze(
    ideal: MonomialIdeal | FactoredIdeal,
    horizon: int,
    cap: int | None = None,
    budget: int | None = DEFAULT_BUDGET,
    closed_form: ClosedForm | None = None,
) -> DegreeExcessProfile:
    """Profile plus reduction number, observed stabilization and its status."""
    prof = excess_profile(ideal, horizon, budget)
    r = reduction_number(ideal, cap) if isinstance(ideal, MonomialIdeal) else None
    observed, certified = gstab_observe(prof, r, closed_form)
    return replace(
        prof,
        reduction_number=r,
        observed_gstab=observed,
        limit_value=prof.epsilon(observed),
        certified=certified,
    )


def check_g1(profile: DegreeExcessProfile, r: int, d: int) -> list[str]:
    """Violations of the elementary excess-function properties.

    (i) non-increasing from r on; (ii) eps(n) <= min(n, r)(d - p);
    (iii) eps(n) >= n for n <= r; (iv) n eps(m) >= m eps(n) for m <= n.
    """
    out = []
    h = profile.horizon
    e = profile.epsilon
    p = profile.p
    for n in range(max(r, 1), h):
        if e(n + 1) > e(n):
            out.append(f"(i) eps({n + 1})={e(n + 1)} > eps({n})={e(n)} with n >= r={r}")
    for n in range(1, h + 1):
        bound = min(n, r) * (d - p)
        if e(n) > bound:
            out.append(f"(ii) eps({n})={e(n)} > min({n},{r})*({d}-{p})={bound}")
    for n in range(1, min(r, h) + 1):
        if e(n) < n:
            out.append(f"(iii) eps({n})={e(n)} < {n} with n <= r={r}")
    for m in range(1, h + 1):
        for n in range(m, h + 1):
            if n * e(m) < m * e(n):
                out.append(f"(iv) {n}*eps({m})={n * e(m)} < {m}*eps({n})={m * e(n)}")
    return out


def kodiyalam_spot_check(ideal: MonomialIdeal, nmax: int = 4) -> int:
    """max deg f over generators with f^n a minimal generator of I^n for all
    n <= nmax.  Only an upper estimate of p(I) at finite nmax."""
    best = 0
    for g in ideal.generators:
        if all(is_minimal_generator(ideal, n, tuple(n * x for x in g)) for n in range(1, nmax + 1)):
            best = max(best, degree(g))
    return best


def local_maxima(eps: dict[int, int] | DegreeExcessProfile, upto: int | None = None) -> list[int]:
    """Indices n >= 2 with eps(n) > eps(n-1) and eps(n) > eps(n+1).

    Needs eps(n+1), so the last judged index is one below the largest known n
    (or ``upto`` if smaller).
    """
    if isinstance(eps, DegreeExcessProfile):
        eps = {n: e for n, (_, e) in eps.rows.items()}
    last = max(eps) - 1 if upto is None else min(upto, max(eps) - 1)
    return [n for n in range(2, last + 1) if eps[n] > eps[n - 1] and eps[n] > eps[n + 1]]
