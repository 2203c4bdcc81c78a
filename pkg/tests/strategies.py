from hypothesis import strategies as st

from braid_garside.words import BraidWord, Letter, Presentation


def payloads(n, presentation):
    if Presentation(presentation) is Presentation.OLD:
        return [(i,) for i in range(1, n)]
    return [(t, s) for t in range(2, n + 1) for s in range(1, t)]


@st.composite
def braid_words(draw, min_n=2, max_n=5, max_len=10, presentation=None, positive=False):
    n = draw(st.integers(min_n, max_n))
    if presentation is None:
        presentation = draw(st.sampled_from([Presentation.OLD, Presentation.NEW]))
    signs = st.just(1) if positive else st.sampled_from([1, -1])
    letters = draw(
        st.lists(
            st.builds(Letter, st.sampled_from(payloads(n, presentation)), signs),
            max_size=max_len,
        )
    )
    return BraidWord(n, Presentation(presentation), tuple(letters))


@st.composite
def word_pairs(draw, min_n=2, max_n=4, max_len=6, presentation=None):
    """Two words over the same braid group"""
    w = draw(braid_words(min_n, max_n, max_len, presentation))
    v = draw(braid_words(w.n, w.n, max_len, w.presentation))
    return w, v
