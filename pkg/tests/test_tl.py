import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlimm import perm, tl
from tlimm.errors import LimitError, PreconditionError

from oracles import beta_lookup, brute_all_matchings


def test_generator_diagrams():
    assert tl.format_matching(tl.generator(2, 1)) == "1-2 1'-2'"
    assert tl.format_matching(tl.generator(3, 2)) == "1-1' 2-3 2'-3'"
    g = tl.generator(4, 1)
    assert g.partner_of(3, False) == (3, True)
    assert g.partner_of(4, False) == (4, True)
    with pytest.raises(PreconditionError):
        tl.generator(3, 3)


def test_matching_text_roundtrip():
    text = "1-3' 2-4' 3-4 1'-2'"
    m = tl.parse_matching(text)
    assert tl.format_matching(m) == text
    # any pair order parses to the same matching
    assert tl.parse_matching("3-4 1'-2' 2-4' 1-3'") == m
    with pytest.raises(ValueError):
        tl.parse_matching("1-2")  # n inferred as 1, label 2 out of range


def test_matching_validation():
    with pytest.raises(AssertionError):
        tl.NonCrossingMatching(2, (2, 3, 0, 1))  # crossing


def test_relations():
    n = 4
    t1, t2, t3 = (tl.t(n, i) for i in (1, 2, 3))
    assert t1 * t1 == t1.scaled(2)
    assert t1 * t3 == t3 * t1
    assert t1 * t2 * t1 == t1
    assert t2 * t1 * t2 == t2


def test_beta_anchor():
    assert tl.format_matching(tl.beta((2, 3, 4, 1))) == "1-3' 2-4' 3-4 1'-2'"
    assert tl.beta((2, 1)) == tl.generator(2, 1)
    assert tl.beta(perm.identity(4)) == tl.identity_matching(4)
    with pytest.raises(PreconditionError):
        tl.beta((3, 2, 1))


def test_theta_anchors():
    n3 = tl.TLElement.one(3)
    assert tl.theta(perm.identity(3)) == n3
    assert tl.theta((2, 1)) == tl.t(2, 1) - tl.TLElement.one(2)
    t1, t2 = tl.t(3, 1), tl.t(3, 2)
    expected = t1 + t2 - t1 * t2 - t2 * t1 - n3
    assert tl.theta((3, 2, 1)) == expected


@pytest.mark.parametrize("n", range(1, 5))
def test_theta_homomorphism_exhaustive(n):
    table = tl.theta_table(n)
    for u in perm.all_perms(n):
        for v in perm.all_perms(n):
            assert table[u] * table[v] == table[perm.compose(u, v)]


@pytest.mark.parametrize("n", (5, 6))
def test_theta_homomorphism_sampled(n):
    rng = random.Random(n)
    table = tl.theta_table(n)
    everyone = list(perm.all_perms(n))
    for _ in range(40):
        u, v = rng.choice(everyone), rng.choice(everyone)
        assert table[u] * table[v] == table[perm.compose(u, v)]


def test_theta_table_agrees_with_single_shot():
    table = tl.theta_table(3)
    for u in perm.all_perms(3):
        assert table[u] == tl.theta(u)
    assert len(tl.theta_table(4)) == 24
    assert tl.theta_table(2) == {
        (1, 2): tl.TLElement.one(2),
        (2, 1): tl.t(2, 1) - tl.TLElement.one(2),
    }


def test_theta_table_limit():
    with pytest.raises(LimitError):
        tl.theta_table(8)
    with pytest.raises(LimitError):
        tl.theta_table(9, limit=8)


@pytest.mark.parametrize("n", range(1, 8))
def test_matchings_enumeration_and_bijection(n):
    matchings = tl.all_matchings(n)
    assert len(matchings) == tl.catalan(n)
    if n <= 5:
        assert {m.pairing for m in matchings} == brute_all_matchings(n)
    avoiders = perm.avoiding_321(n)
    assert len(avoiders) == tl.catalan(n)
    images = {tl.beta(w) for w in avoiders}
    assert images == set(matchings)
    lookup = beta_lookup(n) if n <= 6 else None
    for w in avoiders:
        m = tl.beta(w)
        assert tl.beta_inv(m) == w
        if lookup is not None:
            assert lookup[m] == w


def test_f_coeff_anchors():
    for n in range(1, 6):
        for w in perm.avoiding_321(n):
            assert tl.f_coeff(w, w) == 1
    assert tl.f_coeff((2, 1, 4, 3), (4, 3, 2, 1)) == 2
    with pytest.raises(PreconditionError):
        tl.f_coeff((3, 2, 1), (3, 2, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_f_coeff_vanishes_off_bruhat_interval(n):
    table = tl.theta_table(n)
    for w in perm.avoiding_321(n):
        target = tl.beta(w)
        for u in perm.all_perms(n):
            if not perm.bruhat_leq(w, u):
                assert table[u].coeff(target) == 0


@pytest.mark.parametrize("n", range(2, 7))
def test_symmetry(n):
    rng = random.Random(n)
    table = tl.theta_table(n)
    avoiders = perm.avoiding_321(n)
    pairs = (
        list(itertools.product(avoiders, perm.all_perms(n)))
        if n <= 5
        else [
            (rng.choice(avoiders), rng.choice(list(perm.all_perms(n))))
            for _ in range(300)
        ]
    )
    for w, u in pairs:
        value = table[u].coeff(tl.beta(w))
        assert value == table[perm.inverse(u)].coeff(tl.beta(perm.inverse(w)))
        assert value == table[perm.conjugate_by_longest(u)].coeff(
            tl.beta(perm.conjugate_by_longest(w))
        )


matching_for = lambda n: st.sampled_from(tl.all_matchings(n))


@settings(max_examples=120, deadline=None)
@given(
    st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.tuples(matching_for(n), matching_for(n), matching_for(n))
    )
)
def test_multiplication_associative(triple):
    x, y, z = (tl.TLElement.from_matching(m) for m in triple)
    assert (x * y) * z == x * (y * z)


@settings(max_examples=120, deadline=None)
@given(
    st.integers(min_value=2, max_value=6).flatmap(
        lambda n: st.tuples(matching_for(n), matching_for(n))
    )
)
def test_product_parity_invariant(pair):
    # Every diagram produced by gluing passes the constructor's parity and
    # crossing checks.
    glued, loops = tl.glue(*pair)
    assert loops >= 0
    assert all((p - q) % 2 == 1 for p, q in enumerate(glued.pairing))
