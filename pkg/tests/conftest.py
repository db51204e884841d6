from hypothesis import strategies as st

from hornkron.partitions import bounded_partitions


@st.composite
def partitions(draw, max_size=8, max_len=None, min_size=0):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    return draw(st.sampled_from(bounded_partitions(n, n if max_len is None else max_len)))
