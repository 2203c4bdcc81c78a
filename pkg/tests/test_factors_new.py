import itertools
import math

import pytest

from braid_garside.factors import EnumerationCapExceeded, get_algebra
from braid_garside.factors.new import (
    BandFactor,
    complement_new,
    cycle_factor,
    delta_new,
    enumerate_q_new,
    factor_product_new,
    format_factor,
    generator_new,
    identity_new,
    left_meet_head_new,
    meet_new,
    parse_factor,
    right_complement_new,
    tau_new,
    word_new,
)
from braid_garside.factors.old import enumerate_q_old


@pytest.fixture(params=[2, 3, 4, 5, 6])
def n(request):
    return request.param


def _product_of(n, gens):
    result = identity_new(n)
    for t, s in gens:
        result = factor_product_new(result, generator_new(n, t, s))
        assert result is not None
    return result


def test_delta():
    assert word_new(delta_new(5)) == [(5, 4), (4, 3), (3, 2), (2, 1)]
    assert delta_new(5).length == 4
    assert format_factor(delta_new(5)) == "[5:1]"
    assert word_new(delta_new(2)) == [(2, 1)]
    assert delta_new(3).length == 2


def test_factor_product_b3():
    a21, a32 = generator_new(3, 2, 1), generator_new(3, 3, 2)
    assert factor_product_new(a21, a32) is None
    assert factor_product_new(a32, a21) == delta_new(3)
    assert factor_product_new(identity_new(3), delta_new(3)) == delta_new(3)
    assert factor_product_new(delta_new(3), a21) is None


def test_factor_product_b3_table():
    q = enumerate_q_new(3)
    products = {
        (format_factor(a), format_factor(b)): factor_product_new(a, b)
        for a, b in itertools.product(q, q)
    }
    inside = {key: value for key, value in products.items() if value is not None}
    # e times anything, anything times e, and the three ways of writing δ
    assert len(inside) == 5 + 5 - 1 + 3
    assert sum(1 for value in inside.values() if value == delta_new(3)) == 3 + 2


def test_complement_examples():
    assert complement_new(generator_new(3, 2, 1)) == generator_new(3, 3, 2)
    assert complement_new(identity_new(4)) == delta_new(4)
    assert complement_new(delta_new(4)) == identity_new(4)


def test_complements_bruteforce(n):
    delta = delta_new(n)
    q = enumerate_q_new(n)
    for a in q:
        bar, star = complement_new(a), right_complement_new(a)
        assert factor_product_new(bar, a) == delta
        assert factor_product_new(a, star) == delta
        assert a.length + bar.length == n - 1
        assert complement_new(bar) == tau_new(a, -1)
        assert right_complement_new(bar) == a


def test_tau():
    a21, a32 = generator_new(3, 2, 1), generator_new(3, 3, 2)
    assert tau_new(a21, 1) == a32
    assert tau_new(a32, 1) == generator_new(3, 3, 1)
    assert tau_new(delta_new(5), 3) == delta_new(5)
    assert format_factor(tau_new(a32, 1)) == "{1,3}{2}"


def test_tau_order_n(n):
    for a in enumerate_q_new(n):
        assert tau_new(a, n) == a
        assert tau_new(tau_new(a, 1), -1) == a
        assert tau_new(a, 1).length == a.length


def test_left_meet_head_golden():
    head, rest = left_meet_head_new(parse_factor("[3:2]", 5), parse_factor("[2:1][5:3]", 5))
    assert format_factor(head) == "[3:1][5:4]"
    assert format_factor(rest) == "[4:3]"


def test_left_meet_head_trivial(n):
    for a in enumerate_q_new(n):
        assert left_meet_head_new(identity_new(n), a) == (a, identity_new(n))
        assert left_meet_head_new(delta_new(n), a) == (delta_new(n), a)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_left_meet_head_bruteforce(n):
    q = enumerate_q_new(n)
    generators = [generator_new(n, t, s) for t in range(2, n + 1) for s in range(1, t)]
    for a, b in itertools.product(q, q):
        head, rest = left_meet_head_new(a, b)
        assert head.length + rest.length == a.length + b.length
        assert tuple(rest.perm[x - 1] for x in head.perm) == tuple(
            b.perm[x - 1] for x in a.perm
        )
        assert any(factor_product_new(a, c) == head for c in q)
        for g in generators:
            if meet_new(g, rest) == g:
                assert factor_product_new(head, g) is None


def test_enumerate_counts():
    assert [len(enumerate_q_new(n)) for n in range(2, 7)] == [2, 5, 14, 42, 132]
    assert set(enumerate_q_new(2)) == {identity_new(2), delta_new(2)}
    for n in range(3, 7):
        assert len(enumerate_q_new(n)) < len(enumerate_q_old(n))
    assert len(enumerate_q_new(8)) == math.comb(16, 8) // 9


def test_enumerate_cap():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_q_new(13)
    with pytest.raises(EnumerationCapExceeded):
        enumerate_q_new(5, cap=4)


def test_crossing_partition_rejected():
    with pytest.raises(ValueError):
        BandFactor.from_blocks(4, [(1, 3), (2, 4)])


@pytest.mark.parametrize("n", range(2, 9))
def test_descending_cycles(n):
    for t in range(2, n + 1):
        for s in range(1, t):
            gens = [(j, j - 1) for j in range(t, s, -1)]
            assert _product_of(n, gens) == cycle_factor(n, t, s)
            assert cycle_factor(n, t, s).blocks[s - 1] == tuple(range(s, t + 1))


def test_word_expansion(n):
    for a in enumerate_q_new(n):
        gens = word_new(a)
        assert len(gens) == a.length
        assert _product_of(n, gens) == a


def test_format_parse(n):
    for a in enumerate_q_new(n):
        assert parse_factor(format_factor(a), n) == a
    assert format_factor(identity_new(4)) == "e"
    assert parse_factor("{1,3}{2}", 3) == generator_new(3, 3, 1)
    with pytest.raises(ValueError):
        parse_factor("[3:1]x", 4)


def test_algebra_surface():
    algebra = get_algebra(5, "new")
    assert algebra.delta_length == 4
    assert algebra.generator((3, 1)) == generator_new(5, 3, 1)
    assert algebra.parse("[5:1]") == algebra.delta()
    assert [l.token for l in algebra.word(delta_new(5))] == ["5.4", "4.3", "3.2", "2.1"]
    assert get_algebra(5, "new") is algebra
    assert algebra.letter_length(delta_new(5)) == 4
    assert algebra.letter_length(algebra.identity()) == 0
    assert algebra.letter_length(algebra.generator((3, 1))) == 1
