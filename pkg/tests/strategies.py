from hypothesis import strategies as st

from mideal.core import minimal_generators


@st.composite
def ideals(draw, n=None, max_n=4, max_gens=5, max_exp=3, allow_unit=False):
    if n is None:
        n = draw(st.integers(1, max_n))
    lo = 0 if allow_unit else 1
    gens = draw(st.lists(
        st.tuples(*[st.integers(0, max_exp)] * n).filter(lambda g: sum(g) >= lo),
        min_size=1, max_size=max_gens))
    return minimal_generators(gens, n)


@st.composite
def ideal_pairs(draw, max_n=3, **kw):
    n = draw(st.integers(1, max_n))
    return draw(ideals(n=n, **kw)), draw(ideals(n=n, **kw))
