import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shrubs import (
    LabelClash,
    Shrub,
    UnknownLabel,
    ZinbElement,
    compatible_orders,
    compose,
    decompose,
    gamma,
    graft_generator,
    pair_generator,
    trivial_shrub,
    zinb_compose,
)
from shrubs.errors import CapExceeded

from oracles import all_shrubs, shuffle_compose_orders


def order(*labels):
    return ZinbElement.from_order(tuple(labels))


class TestCompatibleOrders:
    def test_trivial(self):
        assert compatible_orders(trivial_shrub(1)) == ((1,),)

    def test_pair(self):
        assert set(compatible_orders(pair_generator(1, 2))) == {(1, 2), (2, 1)}

    def test_star(self):
        star = Shrub([1, 2, 3], {1: 0, 2: 1, 3: 1}, [(1, 2), (1, 3)])
        assert set(compatible_orders(star)) == {(1, 2, 3), (1, 3, 2)}

    def test_matches_direct_filter(self):
        for P in all_shrubs(4):
            expected = set()
            below = {v: P.covers(v) for v in P.labels}
            for perm in itertools.permutations(sorted(P.labels)):
                pos = {v: k for k, v in enumerate(perm)}
                if all(
                    P.height(v) == 0 or any(pos[w] < pos[v] for w in below[v]) for v in perm
                ):
                    expected.add(perm)
            assert set(compatible_orders(P)) == expected

    def test_cap(self):
        big = Shrub(range(10), {k: 0 for k in range(10)}, [])
        with pytest.raises(CapExceeded):
            compatible_orders(big)


class TestGamma:
    def test_generator_images(self):
        assert gamma(graft_generator(2, 1)) == order(2, 1)
        assert gamma(pair_generator(1, 2)) == order(1, 2) + order(2, 1)
        assert gamma(trivial_shrub(1)) == order(1)

    def test_unit_coefficients(self):
        for P in all_shrubs(4):
            assert all(c == 1 for _, c in gamma(P).terms())

    def test_morphism_exhaustive(self):
        for np_ in range(1, 4):
            for P in all_shrubs(np_):
                gP = gamma(P)
                for nq in range(1, 4):
                    for Q0 in all_shrubs(nq):
                        Q = Q0.relabel({v: v + 100 for v in Q0.labels})
                        for i in P.labels:
                            assert gamma(compose(P, i, Q)) == zinb_compose(gP, i, gamma(Q))

    def test_morphism_randomized(self):
        from shrubs.checks import random_shrub

        rng = random.Random(13)
        for _ in range(60):
            a = rng.randint(1, 4)
            b = rng.randint(1, min(3, 7 - a))
            P = random_shrub(range(1, a + 1), rng)
            Q = random_shrub(range(101, 101 + b), rng)
            i = rng.choice(sorted(P.labels))
            assert gamma(compose(P, i, Q)) == zinb_compose(gamma(P), i, gamma(Q))

    def test_injective_small(self):
        for n in range(1, 6):
            S = all_shrubs(n)
            assert len({gamma(P) for P in S}) == len(S)

    def test_forest_orders_are_linear_extensions(self):
        for P in all_shrubs(4):
            if not P.is_forest():
                continue
            below = {v: P.covers(v) for v in P.labels}
            exts = {
                perm
                for perm in itertools.permutations(sorted(P.labels))
                if all(
                    all(perm.index(w) < perm.index(v) for w in below[v]) for v in perm
                )
            }
            assert set(compatible_orders(P)) == exts


def gamma_by_generators(P):
    """Second route: evaluate the generator word inside the order operad."""
    word = decompose(P)
    c_img = order("x", "y") + order("y", "x")
    d_img = order("x", "y")

    def ev(w):
        if w.gen == "leaf":
            return ZinbElement.from_order((w.label,))
        left, right = ev(w.args[0]), ev(w.args[1])
        img = c_img if w.gen == "C" else d_img
        return zinb_compose(zinb_compose(img, "x", left), "y", right)

    return ev(word)


class TestComposition:
    def test_spec_single_extension(self):
        got = zinb_compose(order(2, 1), 1, order(3, 4))
        assert got == order(2, 3, 4)

    def test_head_takes_the_slot(self):
        got = zinb_compose(order(1, 2), 1, order(3, 4))
        assert got == order(3, 2, 4) + order(3, 4, 2)

    def test_unit(self):
        x = order(1, 2) + order(2, 1).scale(3)
        got = zinb_compose(x, 1, order(9))
        assert got == order(9, 2) + order(2, 9).scale(3)

    def test_bilinear_rational(self):
        x = order(1, 2).scale(Fraction(1, 2))
        y = order(3).scale(Fraction(2, 3))
        assert zinb_compose(x, 1, y) == order(3, 2).scale(Fraction(1, 3))

    def test_matches_shuffle_oracle(self):
        rng = random.Random(14)
        for _ in range(200):
            n = rng.randint(1, 4)
            m = rng.randint(1, 3)
            pi = list(range(1, n + 1))
            sigma = list(range(11, 11 + m))
            rng.shuffle(pi)
            rng.shuffle(sigma)
            i = rng.choice(pi)
            got = zinb_compose(order(*pi), i, order(*sigma))
            want = {}
            for o in shuffle_compose_orders(tuple(pi), i, tuple(sigma)):
                want[o] = want.get(o, 0) + 1
            assert dict(got.coeffs) == want

    def test_errors(self):
        with pytest.raises(UnknownLabel):
            zinb_compose(order(1, 2), 9, order(3))
        with pytest.raises(LabelClash):
            zinb_compose(order(1, 2), 1, order(2))

    def test_gamma_agrees_with_generator_route(self):
        for n in range(1, 5):
            for P in all_shrubs(n):
                assert gamma(P) == gamma_by_generators(P)


class TestZinbElement:
    def test_text(self):
        x = order(1, 2) - order(2, 1).scale(2)
        assert x.text() == "[12] - 2*[21]"
        assert ZinbElement.zero({1}).text() == "0"

    def test_text_long_labels(self):
        x = ZinbElement.from_order((10, 2))
        assert x.text() == "[10,2]"

    def test_algebra(self):
        x = order(1, 2)
        assert (x + x).coeffs == {(1, 2): 2}
        assert (x - x).is_zero()

    def test_rejects_foreign_orders(self):
        with pytest.raises(UnknownLabel):
            ZinbElement({1, 2}, {(1, 3): 1})


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_sequential_composition_property(rng):
    """Composing twice sequentially matches composing the inner pair first."""
    from shrubs.checks import random_shrub

    a = rng.randint(1, 3)
    b = rng.randint(1, 2)
    c = rng.randint(1, 2)
    P = random_shrub(range(1, a + 1), rng)
    Q = random_shrub(range(11, 11 + b), rng)
    R = random_shrub(range(21, 21 + c), rng)
    i = rng.choice(sorted(P.labels))
    j = rng.choice(sorted(Q.labels))
    lhs = zinb_compose(zinb_compose(gamma(P), i, gamma(Q)), j, gamma(R))
    rhs = zinb_compose(gamma(P), i, zinb_compose(gamma(Q), j, gamma(R)))
    assert lhs == rhs
