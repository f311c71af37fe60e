from hypothesis import strategies as st

from signed_butterfly import SyntheticSpec, build_graph, generate_random_bipartite

EDGE_PROBS = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
SIGN_PROBS = [0.0, 0.25, 0.5, 0.75, 1.0]


@st.composite
def signed_graphs(draw, max_left=8, max_right=8, min_size=1):
    """Arbitrary signed bipartite graphs, edges chosen edge by edge."""
    left = draw(st.integers(min_size, max_left))
    right = draw(st.integers(min_size, max_right))
    cells = [(i, j) for i in range(left) for j in range(right)]
    chosen = draw(st.lists(st.sampled_from(cells), unique=True, max_size=len(cells))) if cells else []
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=len(chosen), max_size=len(chosen)))
    return build_graph(left, right, [(i, j, s) for (i, j), s in zip(chosen, signs)])


@st.composite
def synthetic_graphs(draw, max_side=12):
    spec = SyntheticSpec(
        draw(st.integers(1, max_side)),
        draw(st.integers(1, max_side)),
        draw(st.sampled_from(EDGE_PROBS)),
        draw(st.sampled_from(SIGN_PROBS)),
        draw(st.integers(0, 2**32)),
    )
    return generate_random_bipartite(spec)
