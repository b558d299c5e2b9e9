import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import SAMPLE, brute_power, small_ideals
from degexcess.errors import BudgetExceededError, InvalidIdealError
from degexcess.families import build_exred, build_I_p, build_I_pia, build_J_pa
from degexcess.monomial import (
    FactoredIdeal,
    MonomialIdeal,
    _antichain_bitset,
    _antichain_small,
    contains,
    full_degree_ideal,
    ideal_equals,
    is_minimal_generator,
    max_degree,
    member_of_power,
    minimalize,
    mu,
    multiply,
    power,
    powers,
    product_disjoint,
)
from degexcess.newton import delta

LINEAR = minimalize([(1, 0), (0, 1)])


def gens(ideal):
    return set(ideal.generators)


class TestMinimalize:
    def test_drops_dominated(self):
        assert gens(minimalize([(2, 0), (3, 1), (0, 1)])) == {(2, 0), (0, 1)}

    def test_sample_unchanged(self):
        assert gens(SAMPLE) == {(2, 0, 0), (0, 3, 0), (1, 2, 1)}

    def test_dedupe(self):
        assert minimalize([(1, 1), (1, 1)]).generators == ((1, 1),)

    def test_empty(self):
        with pytest.raises(InvalidIdealError):
            minimalize([])

    def test_zero_vector(self):
        with pytest.raises(InvalidIdealError):
            minimalize([(0, 0), (1, 0)])

    def test_length_mismatch(self):
        with pytest.raises(InvalidIdealError):
            minimalize([(1, 0), (1, 0, 0)])

    def test_sorted_lex(self):
        ideal = minimalize([(0, 3), (3, 0), (1, 1)])
        assert list(ideal.generators) == sorted(ideal.generators)

    def test_direct_constructor_checks_shape(self):
        with pytest.raises(InvalidIdealError):
            MonomialIdeal(2, ((1, 0, 0),))
        with pytest.raises(InvalidIdealError):
            MonomialIdeal(2, ((-1, 2),))

    @given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)).filter(any),
                    min_size=1, max_size=400))
    def test_bitset_matches_pairwise(self, vecs):
        vecs = sorted(set(vecs))
        assert sorted(_antichain_bitset(vecs)) == sorted(_antichain_small(vecs))

    @given(small_ideals())
    def test_antichain_and_same_ideal(self, ideal):
        g = ideal.generators
        assert all(not (a != b and all(x <= y for x, y in zip(a, b))) for a in g for b in g)
        again = minimalize(list(g) + [tuple(x + 1 for x in v) for v in g])
        assert ideal_equals(again, ideal)


class TestDegrees:
    def test_max_degree(self):
        assert max_degree(SAMPLE) == 4
        assert max_degree(LINEAR) == 1
        assert max_degree(build_J_pa(8, 3)[0]) == 10

    def test_mu(self):
        assert mu(SAMPLE) == 3
        assert mu(minimalize([(1,)])) == 1
        assert product_disjoint(SAMPLE, LINEAR).mu() == 6
        assert mu(product_disjoint(SAMPLE, LINEAR).expand()) == 6


class TestPower:
    def test_linear_square(self):
        assert gens(power(LINEAR, 2)) == {(2, 0), (1, 1), (0, 2)}

    def test_I4_square_is_full(self):
        sq = power(build_I_p(4), 2)
        assert gens(sq) == {(8 - k, k) for k in range(9)}

    def test_J83_square_degree(self):
        assert max_degree(power(build_J_pa(8, 3)[0], 2)) == 20

    def test_power_one(self):
        assert ideal_equals(power(SAMPLE, 1), SAMPLE)

    def test_power_zero(self):
        with pytest.raises(ValueError):
            power(SAMPLE, 0)

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            power(SAMPLE, 10, budget=20)
        assert info.value.n == 10

    def test_powers_generator_budget(self):
        it = powers(SAMPLE, budget=10)
        assert next(it) is SAMPLE
        next(it)  # C(4,2) = 6
        with pytest.raises(BudgetExceededError):
            for _ in range(5):
                next(it)

    @given(small_ideals(), st.integers(1, 4))
    def test_matches_brute_force(self, ideal, n):
        assert ideal_equals(power(ideal, n), brute_power(ideal, n))

    @settings(max_examples=30)
    @given(small_ideals(max_gens=3, max_coord=3), st.integers(1, 3), st.integers(1, 3))
    def test_additive_exponents(self, ideal, m, n):
        assert ideal_equals(power(ideal, m + n), multiply(power(ideal, m), power(ideal, n)))

    @given(small_ideals(), st.integers(1, 5))
    def test_degree_growth(self, ideal, n):
        d = [max_degree(p) for _, p in zip(range(n + 1), powers(ideal))]
        dlt = delta(ideal)
        for k in range(n):
            assert d[k] >= (k + 1) * dlt
            assert d[k + 1] <= d[k] + max_degree(ideal)


class TestContains:
    def test_examples(self):
        x2 = minimalize([(2, 0)])
        assert contains(x2, (3, 0))
        assert not contains(x2, (1, 5))
        assert contains(SAMPLE, (1, 2, 1))

    def test_equals(self):
        assert ideal_equals(power(build_I_p(4), 2), full_degree_ideal(2, 8))
        assert ideal_equals(SAMPLE, power(SAMPLE, 1))
        assert not ideal_equals(minimalize([(1, 0)]), minimalize([(0, 1)]))

    def test_full_degree_ideal(self):
        f = full_degree_ideal(3, 4)
        assert mu(f) == 15 and set(f.degrees) == {4}


class TestMemberOfPower:
    def test_trivial(self):
        assert member_of_power(minimalize([(1, 0)]), 2, (2, 0))

    def test_exred_m7(self):
        ideal, _ = build_exred(3, 4, 1)
        red = MonomialIdeal(4, tuple(g for g in ideal.generators if g[3] == 0))
        m = (2, 1, 1, 1)
        assert member_of_power(red, 7, tuple(7 * x for x in m))
        assert not member_of_power(red, 6, tuple(6 * x for x in m))

    def test_exred_exhaustive_oracle(self):
        # compositions (t1,t2,t3) of t with t1 v1 + t2 v2 + t3 v3 <= t (2,1,1)
        vs = [(3, 1, 0), (0, 3, 1), (1, 0, 3)]
        red = minimalize([v + (0,) for v in vs])
        for t in range(1, 8):
            target = (2 * t, t, t)
            oracle = any(
                all(sum(c * v[j] for c, v in zip(cs, vs)) <= target[j] for j in range(3))
                for cs in itertools.product(range(t + 1), repeat=3) if sum(cs) == t
            )
            assert member_of_power(red, t, target + (0,)) == oracle == (t == 7)

    @settings(max_examples=80)
    @given(small_ideals(max_vars=3, max_gens=5, max_coord=3), st.integers(1, 6), st.data())
    def test_agrees_with_expansion(self, ideal, t, data):
        pw = power(ideal, t)
        top = max_degree(pw)
        m = data.draw(st.tuples(*[st.integers(0, top)] * ideal.num_vars))
        assert member_of_power(ideal, t, m) == contains(pw, m)
        g = data.draw(st.sampled_from(pw.generators))
        assert member_of_power(ideal, t, g)

    def test_bad_t(self):
        with pytest.raises(ValueError):
            member_of_power(SAMPLE, 0, (1, 1, 1))


class TestMinimalGenerator:
    def test_J83(self):
        assert is_minimal_generator(build_J_pa(8, 3)[0], 2, (14, 6))

    def test_linear(self):
        assert not is_minimal_generator(LINEAR, 2, (3, 0))

    def test_I6_full(self):
        i6 = build_I_p(6)
        assert all(is_minimal_generator(i6, 4, (24 - k, k)) for k in range(25))

    @given(small_ideals(max_gens=4, max_coord=3), st.integers(1, 3), st.data())
    def test_agrees_with_generator_set(self, ideal, n, data):
        pw = power(ideal, n)
        top = max_degree(pw)
        m = data.draw(st.tuples(*[st.integers(0, top)] * ideal.num_vars))
        assert is_minimal_generator(ideal, n, m) == pw.has_generator(m)
        assert is_minimal_generator(ideal, n, data.draw(st.sampled_from(pw.generators)))


class TestProduct:
    def test_single(self):
        prod = product_disjoint(minimalize([(2,)]), minimalize([(3,)]))
        assert prod.expand().generators == ((2, 3),)
        assert prod.blocks == (1, 1)

    def test_mu_multiplicative(self):
        j, _ = build_J_pa(4, 2)
        i, _ = build_I_pia(4, 2, 2)
        assert product_disjoint(j, i).mu() == mu(j) * mu(i)

    def test_flattens(self):
        prod = product_disjoint(product_disjoint(LINEAR, SAMPLE), LINEAR)
        assert prod.blocks == (2, 3, 2) and prod.total_vars == 7

    @settings(max_examples=30)
    @given(small_ideals(max_vars=2), small_ideals(max_vars=2), st.integers(1, 3))
    def test_expansion_matches_minimalized_product(self, a, b, n):
        prod = product_disjoint(a, b)
        pad_a = minimalize([g + (0,) * b.num_vars for g in a.generators])
        pad_b = minimalize([(0,) * a.num_vars + g for g in b.generators])
        direct = multiply(pad_a, pad_b)
        assert ideal_equals(prod.expand(), direct)
        pw = prod.expanded_power(n)
        assert mu(pw) == mu(power(a, n)) * mu(power(b, n))
        assert max_degree(pw) == max_degree(power(a, n)) + max_degree(power(b, n))
        assert ideal_equals(pw, power(direct, n))

    def test_factored_rejects_empty(self):
        with pytest.raises((InvalidIdealError, ValueError)):
            FactoredIdeal(())
