"""
Random braid words, and random rewriting of words by the defining relations.

`generate_words` multiplexes one pescador stream per (n, presentation) pair the same way
url streams are balanced, so randomized corpora over several braid groups come out of a
single iterable.
"""
import itertools as it
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pescador

from ..words import BraidWord, Letter, Presentation, from_letters

log = logging.getLogger(__name__)


def _generator_payloads(n: int, presentation: Presentation) -> List[Tuple[int, ...]]:
    if Presentation(presentation) is Presentation.OLD:
        return [(i,) for i in range(1, n)]
    return [(t, s) for t in range(2, n + 1) for s in range(1, t)]


def _as_rng(rng: Union[None, int, np.random.Generator]) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def random_word(
    n: int,
    presentation: Presentation,
    length: int,
    positive: bool = False,
    rng: Union[None, int, np.random.Generator] = None,
) -> BraidWord:
    """Uniformly random letters (and signs, unless `positive`)"""
    rng = _as_rng(rng)
    payloads = _generator_payloads(n, presentation)
    picks = rng.integers(len(payloads), size=length)
    signs = np.ones(length, dtype=int) if positive else rng.choice([-1, 1], size=length)
    letters = tuple(Letter(payloads[p], int(s)) for p, s in zip(picks, signs))
    return from_letters(n, presentation, letters)


def random_word_generator(
    n: int,
    presentation: Presentation,
    length: Union[int, Tuple[int, int]] = (0, 12),
    positive: bool = False,
    seed: Optional[int] = None,
):
    """Endless stream of random words of B_n

    Args:
        n (int): braid index.
        presentation (Presentation): `old` or `new`.
        length (int or (int, int), optional): word length, or an inclusive range to draw it
            from. Defaults to `(0, 12)`.
        positive (bool, optional): only positive letters. Defaults to False.
        seed (int, optional): random seed. Defaults to `None`.

    Yields:
        BraidWord
    """
    rng = np.random.default_rng(seed)
    while True:
        if isinstance(length, int):
            size = length
        else:
            size = int(rng.integers(length[0], length[1] + 1))
        yield random_word(n, presentation, size, positive=positive, rng=rng)


def _dproduct(dicts):
    """Returns the products of dicts"""
    return (dict(zip(dicts, x)) for x in it.product(*dicts.values()))


def generate_words(
    n: Union[int, Sequence[int]],
    presentation: Union[str, Sequence[str]] = "new",
    length: Union[int, Tuple[int, int]] = (0, 12),
    positive: bool = False,
    nb_samples: Optional[int] = None,
    nb_samples_per_stream: Optional[int] = None,
    weighted_streams: bool = False,
    seed: Optional[int] = None,
):
    """Provides a word generator over one or several braid groups

    Args:
        n (int or list of int): braid indices, one stream per index and presentation.
        presentation (str or list of str): `old`, `new` or both. Defaults to `new`.
        length (int or (int, int), optional): word length or inclusive length range.
            Defaults to `(0, 12)`.
        positive (bool, optional): only positive letters. Defaults to False.
        nb_samples (int, optional): Limit the total number of words.
            Defaults to `None`, which never stops unless `nb_samples_per_stream` is set.
        nb_samples_per_stream (int, optional): Limit the number of words per stream.
            Defaults to `None`.
        weighted_streams (bool, optional): Sample streams proportionally to their number of
            generators. Defaults to `False`.
        seed (int, optional): random seed for the words and the stream multiplexer.
            Defaults to `None`.

    Returns:
        Iterable: generator-like object that yields `BraidWord`s
    """
    ns = [n] if isinstance(n, int) else list(n)
    presentations = [presentation] if isinstance(presentation, str) else list(presentation)
    groups = list(_dproduct({"n": ns, "presentation": [Presentation(p) for p in presentations]}))

    streams = [
        pescador.Streamer(
            pescador.Streamer(
                random_word_generator,
                length=length,
                positive=positive,
                seed=None if seed is None else seed + i,
                **group,
            ),
            # only yield a maximum number of words per stream
            max_iter=nb_samples_per_stream,
        )
        for i, group in enumerate(groups)
    ]

    if len(streams) == 1:
        if nb_samples and nb_samples_per_stream:
            nb_samples = min(nb_samples, nb_samples_per_stream)
        return streams[0].iterate(max_iter=nb_samples)

    if weighted_streams:
        weights = np.array(
            [float(len(_generator_payloads(**group))) for group in groups]
        )
        weights /= np.max(weights)
    else:
        weights = None

    log.debug(f"multiplexing {len(streams)} word streams")
    mux = pescador.StochasticMux(
        streams,
        n_active=len(streams),  # all streams are always active.
        rate=None,  # streams are never replaced
        weights=weights,
        mode="exhaustive",
        random_state=seed,
    )
    return mux(max_iter=nb_samples)


def _positive_alternatives(
    window: Tuple[Letter, ...], presentation: Presentation
) -> List[Tuple[Letter, ...]]:
    """Other sides of a defining relation whose one side is the positive `window`"""
    gens = [letter.gen for letter in window]
    if presentation is Presentation.OLD:
        (i,), (j,), (k,) = gens
        if i == k and abs(i - j) == 1:
            return [(Letter((j,)), Letter((i,)), Letter((j,)))]
        return []

    # a_ts a_sr = a_tr a_ts = a_sr a_tr for t > s > r
    (p, q), (x, y) = gens
    if q == x:
        t, s, r = p, q, y
    elif p == x and q < y:
        t, s, r = p, y, q
    elif q == y and p < x:
        t, s, r = x, p, q
    else:
        return []
    forms = [((t, s), (s, r)), ((t, r), (t, s)), ((s, r), (t, r))]
    return [tuple(Letter(g) for g in form) for form in forms if list(form) != gens]


def _relation_alternatives(
    window: Tuple[Letter, ...], presentation: Presentation
) -> List[Tuple[Letter, ...]]:
    if all(letter.sign > 0 for letter in window):
        return _positive_alternatives(window, presentation)
    if all(letter.sign < 0 for letter in window):
        flipped = tuple(letter.inverse() for letter in reversed(window))
        return [
            tuple(letter.inverse() for letter in reversed(alternative))
            for alternative in _positive_alternatives(flipped, presentation)
        ]
    return []


def _commute(a: Letter, b: Letter, presentation: Presentation) -> bool:
    if presentation is Presentation.OLD:
        return abs(a.gen[0] - b.gen[0]) >= 2
    (t, s), (r, q) = a.gen, b.gen
    return (t - r) * (t - q) * (s - r) * (s - q) > 0


def scramble(
    w: BraidWord, steps: int = 20, rng: Union[None, int, np.random.Generator] = None
) -> BraidWord:
    """Applies random moves that keep the braid: commutations, relation rewrites,
    free insertions of x·x⁻¹ and free cancellations.

    Args:
        w (BraidWord): input word.
        steps (int, optional): number of attempted moves. Defaults to 20.
        rng (optional): numpy Generator or seed. Defaults to `None`.

    Returns:
        BraidWord: a word for the same braid.
    """
    rng = _as_rng(rng)
    presentation = w.presentation
    width = 3 if presentation is Presentation.OLD else 2
    payloads = _generator_payloads(w.n, presentation)
    letters = list(w.letters)

    for _ in range(steps):
        move = rng.choice(["commute", "relation", "insert", "cancel"])
        if move == "commute":
            spots = [
                p
                for p in range(len(letters) - 1)
                if _commute(letters[p], letters[p + 1], presentation)
            ]
            if spots:
                p = int(rng.choice(spots))
                letters[p], letters[p + 1] = letters[p + 1], letters[p]
        elif move == "relation":
            rewrites = [
                (p, alternative)
                for p in range(len(letters) - width + 1)
                for alternative in _relation_alternatives(
                    tuple(letters[p : p + width]), presentation
                )
            ]
            if rewrites:
                p, alternative = rewrites[int(rng.integers(len(rewrites)))]
                letters[p : p + width] = alternative
        elif move == "insert":
            p = int(rng.integers(len(letters) + 1))
            letter = Letter(payloads[int(rng.integers(len(payloads)))], int(rng.choice([-1, 1])))
            letters[p:p] = [letter, letter.inverse()]
        else:
            spots = [
                p for p in range(len(letters) - 1) if letters[p + 1] == letters[p].inverse()
            ]
            if spots:
                p = int(rng.choice(spots))
                del letters[p : p + 2]

    return from_letters(w.n, presentation, letters)
