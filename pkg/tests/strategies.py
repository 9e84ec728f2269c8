"""Hypothesis strategies shared across the test modules."""

from hypothesis import strategies as st

from commagraph import make_graph, make_set

LABELS = ("a", "b", "c", "d", "e")


def label_sets(max_size=4, min_size=0):
    return st.integers(min_size, max_size).map(lambda n: make_set(LABELS[:n]))


@st.composite
def graphs(draw, max_vertices=4, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    vertices = make_set(LABELS[:n])
    pairs = [
        (LABELS[i], LABELS[j]) for i in range(n) for j in range(i + 1, n)
    ]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    else:
        edges = []
    return make_graph(vertices, edges)


@st.composite
def words_over(draw, vertices, max_len=8):
    if not len(vertices):
        return ()
    letters = st.tuples(st.sampled_from(vertices.labels), st.sampled_from((1, -1)))
    return tuple(draw(st.lists(letters, max_size=max_len)))


@st.composite
def graph_with_word(draw, max_vertices=4, max_len=8, min_vertices=1):
    g = draw(graphs(max_vertices=max_vertices, min_vertices=min_vertices))
    w = draw(words_over(g.vertices, max_len=max_len))
    return g, w


@st.composite
def graph_with_words(draw, count, max_vertices=4, max_len=8, min_vertices=1):
    g = draw(graphs(max_vertices=max_vertices, min_vertices=min_vertices))
    ws = tuple(draw(words_over(g.vertices, max_len=max_len)) for _ in range(count))
    return (g,) + ws


@st.composite
def set_maps_between(draw, dom, cod):
    return {x: draw(st.sampled_from(cod.labels)) for x in dom}
