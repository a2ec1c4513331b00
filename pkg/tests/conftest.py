from __future__ import annotations

from hypothesis import strategies as st

from mixspec.graph import BLACK, WHITE, Graph, build_graph


@st.composite
def graphs(draw, max_vertices: int = 8) -> Graph:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph([p for p, keep in zip(pairs, mask) if keep], n)


@st.composite
def graph_with_coloring(draw, max_vertices: int = 8):
    g = draw(graphs(max_vertices))
    colors = draw(
        st.lists(
            st.sampled_from((BLACK, WHITE)),
            min_size=g.vertex_count,
            max_size=g.vertex_count,
        )
    )
    return g, tuple(colors)
