import os

import hypothesis
from hypothesis import strategies as st

from planar_ccw.generate import GenSpec, random_planar
from planar_ccw.graph import Graph

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def planar_specs(draw, max_n=40):
    n = draw(st.integers(min_value=1, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    keep = draw(st.sampled_from((1.0, 0.9, 0.75, 0.6, 0.4)))
    return GenSpec(n, seed=seed, edge_keep_ratio=keep)


@st.composite
def embedded_planar(draw, max_n=40):
    return random_planar(draw(planar_specs(max_n)))


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(range(n), [p for p, keep in zip(pairs, mask) if keep])
