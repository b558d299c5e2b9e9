import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import SAMPLE, small_ideals
from degexcess.errors import InfeasibleError
from degexcess.families import build_exred, build_J_pa
from degexcess.monomial import minimalize, power, powers
from degexcess.newton import (
    caratheodory_certificate,
    certificate_bound,
    delta,
    in_upper_cone,
    vertices,
)
from degexcess.sampling import RandomIdealConfig, random_cone_instance


def segment_oracle_2d(v, U):
    """v in conv(U) + R_+^2 iff some lambda*u + (1-lambda)*w <= v with
    lambda in [0,1]; each coordinate gives a linear constraint on lambda."""
    for u in U:
        for w in U:
            lo, hi = Fraction(0), Fraction(1)
            for j in range(2):
                # lambda*(u_j - w_j) <= v_j - w_j
                a, b = u[j] - w[j], v[j] - w[j]
                if a > 0:
                    hi = min(hi, Fraction(b, a))
                elif a < 0:
                    lo = max(lo, Fraction(b, a))
                elif b < 0:
                    lo, hi = Fraction(1), Fraction(0)
            if lo <= hi:
                return True
    return False


class TestUpperCone:
    def test_sample_point(self):
        assert in_upper_cone((1, 2, 1), [(2, 0, 0), (0, 3, 0)])

    def test_self(self):
        assert in_upper_cone((3, 1, 4), [(3, 1, 4)])

    def test_outside(self):
        assert not in_upper_cone((1, 0, 0), [(2, 0, 0), (0, 3, 0)])

    @given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=5),
           st.tuples(st.integers(0, 7), st.integers(0, 7)))
    def test_matches_2d_oracle(self, U, v):
        assert in_upper_cone(v, U) == segment_oracle_2d(v, U)


class TestVertices:
    def test_sample(self):
        vs = vertices(SAMPLE)
        assert set(vs.vertices) == {(2, 0, 0), (0, 3, 0)} and vs.delta == 3

    def test_single(self):
        vs = vertices(minimalize([(2, 5, 1)]))
        assert vs.vertices == ((2, 5, 1),) and vs.delta == 8

    def test_exred(self):
        vs = vertices(build_exred(3, 4, 1)[0])
        assert set(vs.vertices) == {(3, 1, 0, 0), (0, 3, 1, 0), (1, 0, 3, 0)} and vs.delta == 4

    def test_delta(self):
        assert delta(SAMPLE) == 3
        assert delta(minimalize([(1, 2, 3)])) == 6
        for p, a in [(4, 2), (5, 3), (8, 3), (9, 3)]:
            assert delta(build_J_pa(p, a)[0]) == p

    @given(small_ideals())
    def test_definition(self, ideal):
        vs = set(vertices(ideal).vertices)
        g = ideal.generators
        for u in g:
            others = [w for w in g if w != u]
            is_vertex = not others or not in_upper_cone(u, others)
            assert (u in vs) == is_vertex
            # reconstruction: every generator lies over conv(V)
            assert in_upper_cone(u, sorted(vs))

    @settings(max_examples=30)
    @given(small_ideals(max_gens=4, max_coord=4))
    def test_vertices_scale_with_powers(self, ideal):
        vs = sorted(vertices(ideal).vertices)
        d = delta(ideal)
        for n, pw in zip(range(1, 4), powers(ideal)):
            assert sorted(vertices(pw).vertices) == sorted(tuple(n * x for x in v) for v in vs)
            assert delta(pw) == n * d


class TestCertificate:
    def test_sample(self):
        cert = caratheodory_certificate((1, 2, 1), [(2, 0, 0), (0, 3, 0)])
        assert cert.N == 2
        assert dict(cert.support) == {(2, 0, 0): 1, (0, 3, 0): 1}
        assert cert.slack == (0, 1, 2)

    def test_trivial(self):
        cert = caratheodory_certificate((4, 1), [(4, 1), (0, 9)])
        assert cert.N == 1 and cert.support == (((4, 1), 1),) and cert.slack == (0, 0)

    def test_exred(self):
        cert = caratheodory_certificate((2, 1, 1), [(3, 1, 0), (0, 3, 1), (1, 0, 3)])
        assert cert.N == 7
        assert dict(cert.support) == {(3, 1, 0): 4, (0, 3, 1): 1, (1, 0, 3): 2}
        assert cert.slack == (0, 0, 0)
        assert cert.det % cert.N == 0

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            caratheodory_certificate((1, 0, 0), [(2, 0, 0), (0, 3, 0)])

    def test_json(self):
        cert = caratheodory_certificate((1, 2, 1), [(2, 0, 0), (0, 3, 0)])
        js = cert.to_json()
        assert js["N"] == 2 and js["slack"] == [0, 1, 2]

    def test_deterministic(self):
        U = [(0, 4), (2, 2), (4, 0), (1, 3)]
        a = caratheodory_certificate((2, 2), U)
        b = caratheodory_certificate((2, 2), list(reversed(U)))
        assert a == b

    @settings(max_examples=150)
    @given(st.integers(0, 2**32))
    def test_random_instances(self, seed):
        inst = random_cone_instance(random.Random(seed), RandomIdealConfig())
        cert = caratheodory_certificate(inst.v, inst.points)
        s = len(inst.v)
        assert cert.verify()
        assert sum(a for _, a in cert.support) == cert.N
        rhs = [cert.slack[j] + sum(a * u[j] for u, a in cert.support) for j in range(s)]
        assert rhs == [cert.N * x for x in inst.v]
        assert len(cert.support) <= s + 1
        assert cert.N <= certificate_bound(inst.points)
        assert cert.det % cert.N == 0
        assert all(u in inst.points for u, _ in cert.support)

    @given(small_ideals(min_vars=2))
    def test_generators_certified_over_vertices(self, ideal):
        vs = vertices(ideal)
        for g in ideal.generators:
            cert = caratheodory_certificate(g, vs.vertices)
            assert cert.verify()
            assert cert.N <= certificate_bound(vs.vertices)


def test_power_generators_over_scaled_vertices():
    ideal = SAMPLE
    pw = power(ideal, 3)
    vs = [tuple(3 * x for x in v) for v in vertices(ideal).vertices]
    assert all(in_upper_cone(g, vs) for g in pw.generators)
