from hypothesis import strategies as st

from hyperknot.braid import BraidWord


@st.composite
def braid_words(draw, min_strands=2, max_strands=4, max_length=8):
    N = draw(st.integers(min_strands, max_strands))
    letters = draw(st.lists(
        st.tuples(st.integers(1, N - 1), st.sampled_from((1, -1))), max_size=max_length))
    return BraidWord(N, tuple(letters))
