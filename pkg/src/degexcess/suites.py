"""Verification suites: each recomputes a family of claims by brute force and
compares against the closed forms, case by case, with exact equality."""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field, replace
from typing import Any, Callable

from .asymptotics import (
    check_g1,
    excess_profile,
    lead_bound_epsilon,
    lead_bound_r,
    local_maxima,
    p_of,
    reduction_number,
)
from .families import (
    build_exred,
    build_I_p,
    build_I_pi0,
    build_I_pia,
    build_J_pa,
    build_local_maxima,
    exred_determinants,
    local_maxima_excess,
    realize_nonincreasing,
    step_function,
)
from .monomial import (
    DEFAULT_BUDGET,
    full_degree_ideal,
    ideal_equals,
    max_degree,
    member_of_power,
    mu,
    power,
    powers,
    product_disjoint,
)
from .newton import caratheodory_certificate, certificate_bound, vertices
from .sampling import RandomIdealConfig, random_cone_instance, random_ideal


@dataclass
class SuiteConfig:
    seed: int = 0
    pmax: int = 9
    count: int | None = None
    horizon: int = 8
    budget: int | None = DEFAULT_BUDGET
    cap: int | None = None
    random_ideals: RandomIdealConfig = field(default_factory=RandomIdealConfig)


@dataclass(frozen=True)
class Case:
    case_id: str
    params: dict
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: list[Case] = field(default_factory=list)
    wall_time: float | None = None

    def add(self, params: dict, expected, actual) -> None:
        self.cases.append(Case(f"{self.suite}-{len(self.cases) + 1:03d}", params, expected, actual))

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        return {"total": len(self.cases), "passed": self.passed, "failed": self.failed}

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [
                {
                    "id": c.case_id,
                    "params": c.params,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                }
                for c in self.cases
            ],
            "summary": self.summary(),
        }
        if timing:
            out["wall_time"] = round(self.wall_time or 0.0, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "seed", "id", "params", "expected", "actual", "pass"])
        for c in self.cases:
            w.writerow([self.suite, self.seed, c.case_id, _compact(c.params), _compact(c.expected),
                        _compact(c.actual), int(c.passed)])
        return buf.getvalue()

    def to_table(self, timing: bool = False) -> str:
        lines = [f"# suite {self.suite}  seed {self.seed}"]
        for c in self.cases:
            flag = "PASS" if c.passed else "FAIL"
            line = f"{c.case_id}  {flag}  {_compact(c.params)}"
            if not c.passed:
                line += f"\n    expected {_compact(c.expected)}\n    actual   {_compact(c.actual)}"
            lines.append(line)
        s = self.summary()
        tail = f"# {s['passed']}/{s['total']} passed"
        if timing:
            tail += f"  ({self.wall_time or 0.0:.2f}s)"
        lines.append(tail)
        return "\n".join(lines) + "\n"


def _compact(x) -> str:
    return json.dumps(x, separators=(",", ":"), sort_keys=True)


def _eps_list(prof) -> list[int]:
    return list(prof.eps)


def suite_g1(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """Random ideals: elementary excess properties, against the computed r."""
    rng = random.Random(cfg.seed)
    rand_cfg = replace(cfg.random_ideals, interior_prob=0.5)
    for _ in range(cfg.count or 50):
        ideal = random_ideal(rng, rand_cfg)
        prof = excess_profile(ideal, cfg.horizon, cfg.budget)
        r = reduction_number(ideal, cfg.cap)
        params = {"ideal": ideal.to_json(), "horizon": cfg.horizon}
        rep.add({**params, "check": "excess properties (i)-(iv)", "r": r}, [], check_g1(prof, r, max_degree(ideal)))
        rep.add({**params, "check": "eps >= 0"}, True, min(prof.eps) >= 0)


def suite_g2(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """J_{p,a}: excess n(a-1) then r(a-1), r = floor((p-1)/a)."""
    for p in range(4, cfg.pmax + 1):
        for a in range(2, p - 1):
            if (p - 1) % a == 0:
                continue
            ideal, spec = build_J_pa(p, a)
            r = (p - 1) // a
            horizon = r + 3
            prof = excess_profile(ideal, horizon, cfg.budget)
            expected = [n * (a - 1) if n <= r - 1 else r * (a - 1) for n in range(1, horizon + 1)]
            rep.add({"p": p, "a": a, "check": "eps", "horizon": horizon}, expected, _eps_list(prof))
            rep.add({"p": p, "a": a, "check": "r"}, r, reduction_number(ideal, cfg.cap))


def suite_g3(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """I_p versus I_{p,i,0}: equal powers from p-2 on, and the two
    non-membership claims."""
    for p in (4, 5, 6):
        ip = build_I_p(p)
        m = {j: (p - j, j) for j in range(p + 1)}
        for i in range(2, p // 2 + 1):
            ipi = build_I_pi0(p, i)
            for n in range(p - 2, p + 1):
                a, b = power(ipi, n, cfg.budget), power(ip, n, cfg.budget)
                full = full_degree_ideal(2, p * n)
                rep.add({"p": p, "i": i, "n": n, "check": "(I_pi0)^n = (I_p)^n = full"},
                        [True, True], [ideal_equals(a, b), ideal_equals(b, full)])
            for u in range(0, i - 1):
                for v in range(0, p - i - 1):
                    mono = tuple(m[i][k] + u * m[0][k] + v * m[p][k] for k in range(2))
                    rep.add({"p": p, "i": i, "u": u, "v": v, "check": "m_i m_0^u m_p^v not in I_p^(1+u+v)"},
                            False, member_of_power(ip, 1 + u + v, mono))
            t = 1
            while t * i < p - 1:
                mono = tuple(t * x for x in m[i])
                rep.add({"p": p, "i": i, "t": t, "check": "m_i^t not in I_p^t"},
                        False, member_of_power(ip, t, mono))
                t += 1


def suite_g4(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """I_{p,i,a}: the floor(p/2) profile, r at i = 2, and the general lower bound."""
    for p in (6, 7, 8):
        for a in (1, 2):
            q = p // 2
            ideal, _ = build_I_pia(p, q, a)
            horizon = p + 1
            prof = excess_profile(ideal, horizon, cfg.budget)
            expected = [a if n <= p - 3 else 0 for n in range(1, horizon + 1)]
            rep.add({"p": p, "i": q, "a": a, "check": "eps", "horizon": horizon}, expected, _eps_list(prof))
            rep.add({"p": p, "i": q, "a": a, "check": "r"}, 1, reduction_number(ideal, cfg.cap))
            ideal2, _ = build_I_pia(p, 2, a)
            rep.add({"p": p, "i": 2, "a": a, "check": "r"}, -(-(p - 1) // 2) - 1,
                    reduction_number(ideal2, cfg.cap))
            for i in range(2, q + 1):
                ideal_i, spec = build_I_pia(p, i, a)
                low = -(-(p - 1) // i) - 1
                r = reduction_number(ideal_i, cfg.cap)
                rep.add({"p": p, "i": i, "a": a, "check": "r >= ceil((p-1)/i) - 1", "bound": low}, True, r >= low)
                prof_i = excess_profile(ideal_i, p, cfg.budget)
                predicted = [spec.excess(n) for n in range(1, p + 1)]
                measured = [e if pr is not None else None for e, pr in zip(prof_i.eps, predicted)]
                rep.add({"p": p, "i": i, "a": a, "check": "eps on claimed domain"}, predicted, measured)


def suite_g5(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """Products over disjoint variables, expanded directly."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count or 20):
        a = random_ideal(rng, cfg.random_ideals)
        b = random_ideal(rng, cfg.random_ideals)
        prod = product_disjoint(a, b)
        params = {"I": a.to_json(), "J": b.to_json()}
        expanded = prod.expand(cfg.budget)
        rep.add({**params, "check": "mu(IJ) = mu(I) mu(J)"}, mu(a) * mu(b), mu(expanded))
        pa, pb, pab = powers(a), powers(b), powers(expanded, cfg.budget)
        for n in range(1, 5):
            x, y, z = next(pa), next(pb), next(pab)
            rep.add({**params, "n": n, "check": "d((IJ)^n) = d(I^n) + d(J^n)"},
                    max_degree(x) + max_degree(y), max_degree(z))


G6_INSTANCES = ([(3, 1), (1, 2)], [(2, 1)], [(0, 1)], [(4, 1), (2, 3), (1, 5)], [(3, 1), (0, 4)])


def suite_g6(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """Non-increasing step functions realized as excess functions."""
    for steps in G6_INSTANCES:
        ideal = realize_nonincreasing(steps)
        f = step_function(steps)
        prof = excess_profile(ideal, cfg.horizon, cfg.budget)
        params = {"steps": [list(s) for s in steps]}
        rep.add({**params, "check": "eps = f", "horizon": cfg.horizon},
                [f(n) for n in range(1, cfg.horizon + 1)], _eps_list(prof))
        for n in (1, 2):
            direct = max_degree(ideal.expanded_power(n, cfg.budget))
            rep.add({**params, "n": n, "check": "direct d((IJ)^n) = sum of factor d"}, prof.d(n), direct)


G7_INSTANCES = ([2], [2, 4], [3, 6])


def suite_g7(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """Local maxima placed at prescribed points."""
    for points in G7_INSTANCES:
        ideal = build_local_maxima(points)
        prof = excess_profile(ideal, cfg.horizon + 1, cfg.budget)
        g = local_maxima_excess(points)
        params = {"points": points, "horizon": cfg.horizon}
        rep.add({**params, "check": "local maxima"}, [n for n in points if n <= cfg.horizon],
                local_maxima(prof, cfg.horizon))
        rep.add({**params, "check": "eps = predicted"}, [g(n) for n in range(1, cfg.horizon + 2)], _eps_list(prof))


def suite_lp(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """Integer certificates for random points of conv(U) + R_+^s."""
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count or 100):
        inst = random_cone_instance(rng, cfg.random_ideals)
        cert = caratheodory_certificate(inst.v, inst.points)
        s = len(inst.v)
        bound = certificate_bound(inst.points)
        rhs = [cert.slack[j] + sum(a * u[j] for u, a in cert.support) for j in range(s)]
        actual = {
            "identity": rhs == [cert.N * x for x in inst.v],
            "sum_alpha": sum(a for _, a in cert.support) == cert.N,
            "support_le_s_plus_1": len(cert.support) <= s + 1,
            "N_le_bound": cert.N <= bound,
        }
        expected = dict.fromkeys(actual, True)
        rep.add({"U": [list(u) for u in inst.points], "v": list(inst.v), "N": cert.N, "bound": bound},
                expected, actual)


def lead_sample(rng: random.Random, count: int, base: RandomIdealConfig):
    """Half plain random ideals, half rejection-sampled to have generators
    above delta (so the bounds are not vacuous)."""
    planted = replace(base, interior_prob=1.0)
    out = [random_ideal(rng, base) for _ in range(count - count // 2)]
    while len(out) < count:
        ideal = random_ideal(rng, planted)
        if lead_bound_r(ideal) > 0:
            out.append(ideal)
    return out


def suite_lead(cfg: SuiteConfig, rep: VerificationReport) -> None:
    rng = random.Random(cfg.seed)
    for ideal in lead_sample(rng, cfg.count or 50, cfg.random_ideals):
        h = cfg.horizon
        prof = excess_profile(ideal, h, cfg.budget)
        dlt = p_of(ideal)
        r = reduction_number(ideal, cfg.cap)
        br, be = lead_bound_r(ideal), lead_bound_epsilon(ideal)
        verts = vertices(ideal).vertices
        vn = []
        for n, pw in zip(range(1, 4), powers(ideal, cfg.budget)):
            vn.append(sorted(vertices(pw).vertices) == sorted(tuple(n * x for x in v) for v in verts))
        actual = {
            "d(I^n) >= delta n": all(prof.d(n) >= dlt * n for n in range(1, h + 1)),
            "r <= lead_bound_r": r <= br,
            "eps <= lead_bound_epsilon": max(prof.eps) <= be,
            "property violations": check_g1(prof, r, max_degree(ideal)),
            "V(I^n) = nV(I)": all(vn),
        }
        expected = {**dict.fromkeys(actual, True), "property violations": []}
        rep.add({"ideal": ideal.to_json(), "r": r, "bound_r": br, "bound_eps": be}, expected, actual)


RED_INSTANCES = ((3, 4, 6), (3, 5, 12))


def suite_red(cfg: SuiteConfig, rep: VerificationReport) -> None:
    """The example with reduction number above (delta-1)^(s-2)."""
    a = 1
    for s, dlt, r_expected in RED_INSTANCES:
        ideal, spec = build_exred(s, dlt, a)
        params = {"s": s, "delta": dlt, "a": a}
        r = reduction_number(ideal, cfg.cap, method="fast")
        rep.add({**params, "check": "r"}, r_expected, r)
        rep.add({**params, "check": "r from determinants"}, r_expected, spec.predicted_r)
        rep.add({**params, "check": "(delta-1)^(s-2) < r <= (delta-1)^s"}, True,
                (dlt - 1) ** (s - 2) < r <= (dlt - 1) ** s)
        D, Di = exred_determinants(s, dlt)
        sign = (-1) ** (s - 1)
        rep.add({**params, "check": "D"}, (dlt - 1) ** s + sign, D)
        rep.add({**params, "check": "delta D_s"}, (dlt - 1) ** s + sign * (dlt * dlt - dlt * s + 1), dlt * Di[-1])
        top = min(r - 1, 6)
        if s == 3 and dlt == 4:
            top = max(top, r)
        prof = excess_profile(ideal, top, cfg.budget)
        rep.add({**params, "check": "eps = a n (direct)", "upto": top},
                [spec.excess(n) for n in range(1, top + 1)], _eps_list(prof))
    # beyond brute force: determinant data and bounds only
    for s, dlt in ((4, 5), (4, 6), (5, 6)):
        _, spec = build_exred(s, dlt, a)
        lo, hi = spec.r_bounds
        rep.add({"s": s, "delta": dlt, "check": "determinant r within bounds"}, True,
                lo <= spec.predicted_r <= hi)


SUITES: dict[str, Callable[[SuiteConfig, VerificationReport], None]] = {
    "g1": suite_g1,
    "g2": suite_g2,
    "g3": suite_g3,
    "g4": suite_g4,
    "g5": suite_g5,
    "g6": suite_g6,
    "g7": suite_g7,
    "lp": suite_lp,
    "lead": suite_lead,
    "red": suite_red,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> VerificationReport:
    cfg = cfg or SuiteConfig()
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    rep = VerificationReport(name, cfg.seed)
    start = time.perf_counter()
    SUITES[name](cfg, rep)
    rep.wall_time = time.perf_counter() - start
    return rep
