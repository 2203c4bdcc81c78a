import time

import numpy as np
import pytest
from hypothesis import assume, given, settings

from braid_garside import normalform, words
from braid_garside.factors import get_algebra
from braid_garside.generators.random_words import random_word, scramble
from braid_garside.normalform import NormalForm
from braid_garside.words import BraidWord, PresentationMismatch

from strategies import braid_words, word_pairs


def nf_of(text, n, presentation):
    return normalform.normalize(words.parse(text, n, presentation))


def test_normalize_delta_old():
    nf = nf_of("1 2 1", 3, "old")
    assert (nf.u, nf.k) == (1, 0)
    assert normalform.to_text(nf) == "D^1"


def test_normalize_golden():
    nf = nf_of("2.1 5.4 4.3 3.2", 5, "new")
    assert normalform.to_text(nf) == "D^0 | [2:1][5:3] | [3:2]"
    assert (normalform.inf(nf), normalform.sup(nf)) == (0, 2)


def test_normalize_negative_generator_b2():
    nf = nf_of("-1", 2, "old")
    assert (nf.u, nf.k) == (-1, 0)


def test_inf_sup_trivial():
    delta = normalform.normalize(words.delta_word(5, "new"))
    assert (delta.inf, delta.sup) == (1, 1)
    e = normalform.normalize(BraidWord(5, "new"))
    assert (e.inf, e.sup) == (0, 0)


@pytest.mark.parametrize(
    "v, w, n, presentation, expected",
    [
        ("1 2 1", "2 1 2", 3, "old", True),
        ("2.1 3.2", "3.2 2.1", 3, "new", False),
        ("1 3 -2", "1 3 -2", 4, "old", True),
        ("3.2 2.1", "3.1 3.2", 3, "new", True),
        ("1 -1 2", "2", 3, "old", True),
    ],
)
def test_equal(v, w, n, presentation, expected):
    assert normalform.equal(words.parse(v, n, presentation), words.parse(w, n, presentation)) is (
        expected
    )


def test_equal_mismatch():
    with pytest.raises(PresentationMismatch):
        normalform.equal(BraidWord(3, "old"), BraidWord(3, "new"))


def test_power_of_delta():
    w = words.parse("3.2", 3, "new")
    nf = normalform.normalize(w)
    delta = words.delta_word(3, "new")
    assert normalform.power_of_delta(nf, 1) == normalform.normalize(words.concat(delta, w))
    assert normalform.power_of_delta(nf, 1, side="right") == normalform.normalize(
        words.concat(w, delta)
    )
    assert normalform.power_of_delta(nf, 0) == nf
    one = normalform.normalize(words.delta_word(5, "new"))
    assert normalform.power_of_delta(one, -1) == NormalForm(5, "new", 0)
    with pytest.raises(ValueError):
        normalform.power_of_delta(nf, 1, side="up")


def test_positive_part_check():
    assert normalform.positive_part_check(words.parse("1 2", 3, "old"))
    assert not normalform.positive_part_check(words.parse("-1", 3, "old"))
    assert normalform.positive_part_check(words.parse("-1 -2 -1 1 2 1", 3, "old"))


def test_normal_forms_of_length_b3():
    for k in range(1, 5):
        forms = list(normalform.normal_forms_of_length(3, "old", k))
        assert len(forms) == 4 * 2 ** (k - 1)
        assert all(normalform.is_left_greedy(nf) and nf.k == k for nf in forms)


def test_is_left_greedy_rejects():
    algebra = get_algebra(3, "old")
    s1 = algebra.generator((1,))
    assert not normalform.is_left_greedy(NormalForm(3, "old", 0, (s1, s1, algebra.delta())))
    s2 = algebra.generator((2,))
    assert not normalform.is_left_greedy(NormalForm(3, "old", 0, (s2, s1)))


def test_to_json():
    nf = nf_of("2.1 5.4 4.3 3.2", 5, "new")
    assert normalform.to_json(nf) == {
        "n": 5,
        "presentation": "new",
        "u": 0,
        "factors": ["[2:1][5:3]", "[3:2]"],
    }


@settings(max_examples=80, deadline=None)
@given(braid_words(max_n=6, max_len=12))
def test_normal_form_invariants(w):
    nf = normalform.normalize(w)
    assert normalform.is_left_greedy(nf)
    assert normalform.exponent_sum(nf) == words.exponent_sum(w)
    assert normalform.normalize(normalform.to_word(nf)) == nf


@settings(max_examples=60, deadline=None)
@given(braid_words(max_n=6, max_len=12, positive=True))
def test_positive_words_have_nonnegative_inf(w):
    assert normalform.normalize(w).inf >= 0
    assert normalform.normalize(words.inverse(w)).sup <= 0


@settings(max_examples=60, deadline=None)
@given(word_pairs(max_n=5, max_len=8))
def test_group_operations(pair):
    v, w = pair
    nv, nw = normalform.normalize(v), normalform.normalize(w)
    assert normalform.multiply(nv, nw) == normalform.normalize(words.concat(v, w))
    assert normalform.inverse(nw) == normalform.normalize(words.inverse(w))
    assert normalform.multiply(nw, normalform.inverse(nw)) == NormalForm(w.n, w.presentation, 0)
    # congruence
    assert normalform.equal(words.concat(v, w), words.concat(v, normalform.to_word(nw)))


@settings(max_examples=40, deadline=None)
@given(braid_words(max_n=5, max_len=8))
def test_conjugate_by_factor(w):
    nf = normalform.normalize(w)
    algebra = nf.algebra
    for a in algebra.enumerate()[:: max(1, len(algebra.enumerate()) // 6)]:
        aw = words.BraidWord(w.n, w.presentation, tuple(algebra.word(a)))
        expected = normalform.normalize(words.concat(words.concat(aw, w), words.inverse(aw)))
        assert normalform.conjugate_by_factor(nf, a) == expected


@pytest.mark.parametrize("presentation", ["old", "new"])
def test_uniqueness_under_rewriting(presentation):
    rng = np.random.default_rng(7)
    for _ in range(150):
        n = int(rng.integers(2, 6))
        w = random_word(n, presentation, int(rng.integers(0, 12)), rng=rng)
        scrambled = scramble(w, steps=25, rng=rng)
        assert normalform.normalize(scrambled) == normalform.normalize(w)


@settings(max_examples=100, deadline=None)
@given(braid_words(min_n=3, max_n=5, max_len=12, positive=True))
def test_complement_chain_of_inverse(z):
    nf = normalform.normalize(z)
    assume(nf.u == 0 and nf.k > 0)
    algebra = nf.algebra
    ell = nf.k
    delta = words.delta_word(z.n, z.presentation)
    shifted = normalform.normalize(words.concat(words.inverse(z), words.power(delta, ell)))
    expected = tuple(
        algebra.tau(algebra.complement(nf.factors[ell - i]), i) for i in range(1, ell + 1)
    )
    assert shifted.u == 0
    assert shifted.factors == expected


def _median_time(items, repeats=3):
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        for w in items:
            normalform.normalize(w)
        timings.append(time.perf_counter() - start)
    return float(np.median(timings))


def test_polynomial_growth():
    rng = np.random.default_rng(0)
    short = [random_word(6, "new", 100, rng=rng) for _ in range(10)]
    long = [random_word(6, "new", 200, rng=rng) for _ in range(10)]
    # warm up the factor caches
    _median_time(short + long, repeats=1)
    assert _median_time(long) <= 8 * _median_time(short)
