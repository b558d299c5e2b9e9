"""Newton polyhedron vertices and integer upper-cone certificates.

Everything is decided with the exact simplex in :mod:`degexcess.simplex`;
there is no floating point anywhere on these paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InfeasibleError
from .monomial import Exponent, MonomialIdeal, degree, divides
from .numerics import (
    IntegerMatrix,
    hadamard_bound,
    independent_rows,
    kernel_vector,
    lcm_denominators,
    solve_cramer,
)
from .simplex import basic_feasible_solution


@dataclass(frozen=True)
class VertexSet:
    vertices: tuple[Exponent, ...]
    delta: int


@dataclass(frozen=True)
class CaratheodoryCertificate:
    """Integer witness ``N v = sum(alpha_i u_i) + sum(beta_j e_j)``.

    ``det`` is the absolute determinant of the tight subsystem that pins the
    vertex solution (1 when there was nothing to solve); ``N`` divides it.
    """

    point: Exponent
    N: int
    support: tuple[tuple[Exponent, int], ...]
    slack: tuple[int, ...]
    det: int = 1

    def verify(self) -> bool:
        s = len(self.point)
        if self.N < 1 or any(a < 0 for _, a in self.support) or any(b < 0 for b in self.slack):
            return False
        if sum(a for _, a in self.support) != self.N:
            return False
        rhs = [self.slack[j] + sum(a * u[j] for u, a in self.support) for j in range(s)]
        return rhs == [self.N * x for x in self.point]

    def to_json(self) -> dict:
        return {
            "point": list(self.point),
            "N": self.N,
            "support": [{"u": list(u), "alpha": a} for u, a in self.support],
            "slack": list(self.slack),
            "det": self.det,
        }


def _cone_weights(v: Exponent, us: Sequence[Exponent]) -> tuple[Fraction, ...] | None:
    """Convex weights lambda with sum(lambda_i u_i) <= v, from a basic solution."""
    s = len(v)
    k = len(us)
    # columns: lambda_1..lambda_k, then slacks y_1..y_s
    rows = [[u[j] for u in us] + [int(i == j) for i in range(s)] for j in range(s)]
    rows.append([1] * k + [0] * s)
    res = basic_feasible_solution(rows, list(v) + [1])
    if res is None:
        return None
    return res[0][:k]


def in_upper_cone(v: Sequence[int], U: Sequence[Sequence[int]]) -> bool:
    """Is ``v`` in conv(U) + R_+^s?"""
    v = tuple(v)
    us = [tuple(u) for u in U]
    if not us:
        raise ValueError("U must be non-empty")
    if any(len(u) != len(v) for u in us):
        raise ValueError("length mismatch")
    if any(divides(u, v) for u in us):
        return True
    return _cone_weights(v, us) is not None


def vertices(ideal: MonomialIdeal) -> VertexSet:
    gens = ideal.generators
    verts = []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        # generators form an antichain, so no other generator divides g
        if not others or _cone_weights(g, others) is None:
            verts.append(g)
    return VertexSet(tuple(verts), max(degree(x) for x in verts))


def delta(ideal: MonomialIdeal) -> int:
    return vertices(ideal).delta


def _affine_reduce(points: list[Exponent], weights: list[Fraction]):
    """Shrink a convex combination to affinely independent support, keeping
    sum(w_i p_i) and sum(w_i) fixed."""
    while True:
        keep = [i for i, w in enumerate(weights) if w != 0]
        points = [points[i] for i in keep]
        weights = [weights[i] for i in keep]
        if len(points) <= 1:
            return points, weights
        s = len(points[0])
        lifted = [[p[j] for p in points] for j in range(s)] + [[1] * len(points)]
        mu = kernel_vector(lifted)
        if mu is None:
            return points, weights
        if not any(x > 0 for x in mu):
            mu = tuple(-x for x in mu)
        ratios = [(weights[i] / mu[i], i) for i in range(len(mu)) if mu[i] > 0]
        theta = min(r for r, _ in ratios)
        drop = max(i for r, i in ratios if r == theta)
        weights = [w - theta * m for w, m in zip(weights, mu)]
        weights[drop] = Fraction(0)


def caratheodory_certificate(v: Sequence[int], U: Sequence[Sequence[int]]) -> CaratheodoryCertificate:
    """Integer certificate that ``v`` lies in conv(U) + R_+^s.

    Takes a rational feasible combination, reduces its support to an affinely
    independent set, moves to a vertex of the reduced system in the weights
    x_1..x_{m-1} (the last point absorbs ``1 - sum x``), and scales by the lcm
    of the vertex denominators.
    """
    v = tuple(v)
    us = sorted({tuple(u) for u in U})
    s = len(v)
    if not us:
        raise ValueError("U must be non-empty")
    if v in us:
        return CaratheodoryCertificate(v, 1, ((v, 1),), (0,) * s)

    lam = _cone_weights(v, us)
    if lam is None:
        raise InfeasibleError(f"{v} is not in conv(U) + R_+^{s}")
    pts, w = _affine_reduce(list(us), list(lam))

    last = pts[-1]
    k = len(pts) - 1
    # sum_i x_i (p_i - last) <= v - last, sum x_i <= 1, x >= 0, as equalities
    # with s+1 slack columns
    diff_rows = [[pts[i][j] - last[j] for i in range(k)] for j in range(s)]
    rows = [diff_rows[j] + [int(t == j) for t in range(s + 1)] for j in range(s)]
    rows.append([1] * k + [0] * s + [1])
    rhs = [v[j] - last[j] for j in range(s)] + [1]
    res = basic_feasible_solution(rows, rhs)
    if res is None:
        raise AssertionError("reduced system lost feasibility")
    x = res[0][:k]

    det = 1
    if k:
        # the vertex is the unique solution of k tight constraints; recover it
        # by Cramer's rule so N provably divides that determinant
        ineqs = [(diff_rows[j], v[j] - last[j]) for j in range(s)]
        ineqs.append(([1] * k, 1))
        ineqs += [([-int(t == i) for t in range(k)], 0) for i in range(k)]
        tight = [(r, b) for r, b in ineqs if sum(c * xi for c, xi in zip(r, x)) == b]
        pick = independent_rows([r for r, _ in tight])
        a = IntegerMatrix.from_rows([tight[i][0] for i in pick])
        sol, det = solve_cramer(a, [tight[i][1] for i in pick])
        if tuple(sol) != tuple(x):
            raise AssertionError("Cramer solution disagrees with simplex vertex")
        det = abs(det)

    alpha_last = 1 - sum(x, Fraction(0))
    weights = list(x) + [alpha_last]
    beta = [v[j] - sum(weights[i] * pts[i][j] for i in range(k + 1)) for j in range(s)]
    n_scale = lcm_denominators(weights + beta)
    if det % n_scale:
        raise AssertionError("lcm of denominators does not divide the determinant")
    support = tuple((pts[i], int(weights[i] * n_scale)) for i in range(k + 1) if weights[i] != 0)
    slack = tuple(int(b * n_scale) for b in beta)
    cert = CaratheodoryCertificate(v, n_scale, support, slack, det)
    if not cert.verify():
        raise AssertionError("certificate identity failed")
    return cert


def certificate_bound(U: Sequence[Sequence[int]]) -> int:
    """ceil(sqrt(s^s)) * delta^s with delta the largest degree in U."""
    s = len(U[0])
    return hadamard_bound(s, max(degree(u) for u in U))
