import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commagraph import (
    commutation_counit,
    commutation_graph,
    cyclic_group,
    dihedral_group_4,
    discrete,
    enumerate_homs_finite_to_finite,
    enumerate_homs_raag_to_finite,
    evaluate_word,
    finite_group_from_permutations,
    finite_group_from_table,
    free_group_on,
    free_reduce,
    hom_check,
    indiscrete,
    klein_four_group,
    make_graph,
    make_graph_hom,
    make_set,
    raag_commute,
    raag_equal,
    raag_is_identity,
    raag_of,
    raag_on_hom,
    raag_oracle_is_identity,
    raag_reduce,
    symmetric_group_3,
    trivial_group,
)
from commagraph.errors import (
    InvalidHom,
    MalformedInput,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    OrderCapExceeded,
    UnknownElement,
    UnknownGenerator,
    WordTooLong,
)
from commagraph.groups import (
    GroupHom,
    Raag,
    apply_hom,
    compose_group_homs,
    group_from_json,
    group_to_json,
    identity_group_hom,
    make_group_hom,
    word_from_json,
    word_from_tokens,
    word_to_json,
)
from commagraph.verify import graphs_up_to

from .strategies import graph_with_word, graph_with_words, graphs

A, B = ("a", 1), ("b", 1)
iA, iB = ("a", -1), ("b", -1)
COMMUTATOR = (A, B, iA, iB)


def edge_raag():
    return raag_of(make_graph(make_set(["a", "b"]), [("a", "b")]))


def discrete_raag(n=2):
    return raag_of(discrete(make_set(["a", "b", "c", "d"][:n])))


# ---------------------------------------------------------------------------
# free reduction

def test_free_reduce_examples():
    assert free_reduce([]) == ()
    assert free_reduce([A, iA]) == ()
    assert free_reduce([A, B, iB, iA, A]) == (A,)


@given(graph_with_word(max_len=12))
def test_free_reduce_idempotent_and_shorter(gw):
    _, w = gw
    reduced = free_reduce(w)
    assert free_reduce(reduced) == reduced
    assert len(reduced) <= len(w)


@given(graph_with_word(max_len=10))
def test_free_reduce_preserves_element(gw):
    g, w = gw
    free = free_group_on(g.vertices)
    assert raag_equal(free, w, free_reduce(w))


# ---------------------------------------------------------------------------
# RAAG reduction and the word problem

def test_commutator_dies_on_edge():
    assert raag_reduce(edge_raag(), COMMUTATOR) == ()
    assert raag_is_identity(edge_raag(), COMMUTATOR)


def test_commutator_survives_on_discrete():
    reduced = raag_reduce(discrete_raag(), COMMUTATOR)
    assert reduced == COMMUTATOR
    assert free_reduce(COMMUTATOR) == COMMUTATOR
    assert not raag_is_identity(discrete_raag(), COMMUTATOR)


def test_inverse_pair_dies_anywhere():
    for raag in (edge_raag(), discrete_raag()):
        assert raag_reduce(raag, [A, iA]) == ()


def test_unknown_generator_rejected():
    with pytest.raises(UnknownGenerator):
        raag_reduce(edge_raag(), [("z", 1)])
    with pytest.raises(UnknownGenerator):
        raag_is_identity(edge_raag(), [("z", 1)])


def test_path_commutator_of_endpoints_is_not_identity():
    path = raag_of(make_graph(make_set(["a", "b", "c"]), [("a", "b"), ("b", "c")]))
    endpoints = (A, ("c", 1), iA, ("c", -1))
    assert not raag_is_identity(path, endpoints)
    assert not raag_oracle_is_identity(path, endpoints)


def test_oracle_examples():
    assert raag_oracle_is_identity(edge_raag(), COMMUTATOR)
    assert not raag_oracle_is_identity(discrete_raag(), COMMUTATOR)
    assert raag_oracle_is_identity(edge_raag(), [])


def test_oracle_word_length_bound():
    long_word = (A, iA) * 7
    with pytest.raises(WordTooLong):
        raag_oracle_is_identity(edge_raag(), long_word)
    assert raag_oracle_is_identity(edge_raag(), long_word, bound=14)


def test_engine_agrees_with_oracle_exhaustively_small():
    # every word of length <= 5 over every labeled graph with <= 3 vertices
    for g in graphs_up_to(3):
        raag = raag_of(g)
        letters = [(v, s) for v in g.vertices for s in (1, -1)]
        for length in range(6):
            for w in product(letters, repeat=length):
                assert raag_is_identity(raag, w) == raag_oracle_is_identity(raag, w)


@settings(max_examples=300)
@given(graph_with_word(max_vertices=4, max_len=8))
def test_engine_agrees_with_oracle_sampled(gw):
    g, w = gw
    raag = raag_of(g)
    assert raag_is_identity(raag, w) == raag_oracle_is_identity(raag, w)


@given(graph_with_word(max_len=8))
def test_reduce_output_is_cancellation_free_and_equal(gw):
    g, w = gw
    raag = raag_of(g)
    reduced = raag_reduce(raag, w)
    assert raag_equal(raag, w, reduced)
    assert raag_reduce(raag, reduced) == reduced
    # no free cancellation can hide in a reduced word
    assert free_reduce(reduced) == reduced


@given(graph_with_words(2, max_vertices=4, max_len=6))
def test_reduced_form_is_a_complete_invariant(gws):
    g, u, v = gws
    raag = raag_of(g)
    assert (raag_reduce(raag, u) == raag_reduce(raag, v)) == raag_equal(raag, u, v)


@given(graph_with_word(max_vertices=4, max_len=10, min_vertices=1))
def test_discrete_graphs_reduce_like_free_groups(gw):
    g, w = gw
    free = raag_of(discrete(g.vertices))
    assert raag_is_identity(free, w) == (free_reduce(w) == ())


@given(graph_with_words(2, max_vertices=4, max_len=8))
def test_complete_graphs_reduce_like_free_abelian(gws):
    g, u, v = gws
    raag = raag_of(indiscrete(g.vertices))

    def exponents(w):
        out = {x: 0 for x in g.vertices}
        for gen, sign in w:
            out[gen] += sign
        return out

    assert raag_equal(raag, u, v) == (exponents(u) == exponents(v))


@given(graph_with_words(2, max_len=6), st.data())
def test_raag_equal_is_a_congruence(gws, data):
    g, u1, v1 = gws
    raag = raag_of(g)
    # u2 is the canonical form of u1; v2 is v1 with a cancelling pair spliced in
    u2 = raag_reduce(raag, u1)
    if len(g.vertices):
        x = data.draw(st.sampled_from(g.vertices.labels))
        cut = data.draw(st.integers(0, len(v1)))
        v2 = v1[:cut] + ((x, 1), (x, -1)) + v1[cut:]
    else:
        v2 = v1
    assert raag_equal(raag, u1, u2)
    assert raag_equal(raag, v1, v2)
    assert raag_equal(raag, u1 + v1, u2 + v2)


def _swap_closure(graph, word):
    """All shuffles of a word by swapping adjacent letters whose generators
    are adjacent in the graph. Independent of the engine's internals."""
    seen = {word}
    queue = [word]
    while queue:
        u = queue.pop()
        for i in range(len(u) - 1):
            (g1, _), (g2, _) = u[i], u[i + 1]
            if g1 != g2 and graph.has_edge(g1, g2):
                v = u[:i] + (u[i + 1], u[i]) + u[i + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return seen


def test_reduced_form_is_lex_least_of_its_shuffle_class():
    # raag_reduce must return the lexicographically least member of the
    # shuffle class of its own output (generator order = storage order,
    # a positive letter before its inverse)
    for g in graphs_up_to(3):
        raag = raag_of(g)
        index = {v: i for i, v in enumerate(g.vertices)}

        def key(w):
            return tuple((index[gen], 0 if sign > 0 else 1) for gen, sign in w)

        letters = [(v, s) for v in g.vertices for s in (1, -1)]
        for length in range(5):
            for w in product(letters, repeat=length):
                reduced = raag_reduce(raag, w)
                closure = _swap_closure(g, reduced)
                assert reduced == min(closure, key=key)
                assert all(raag_equal(raag, w, u) for u in closure)


def test_commute_examples():
    assert raag_commute(edge_raag(), (A,), (B,))
    assert not raag_commute(discrete_raag(), (A,), (B,))
    assert raag_commute(discrete_raag(), (A,), (A,))


def test_generators_commute_exactly_on_edges():
    for g in graphs_up_to(4):
        raag = raag_of(g)
        for i, u in enumerate(g.vertices):
            for v in g.vertices.labels[i + 1:]:
                assert raag_commute(raag, ((u, 1),), ((v, 1),)) == g.has_edge(u, v)


# ---------------------------------------------------------------------------
# finite groups

def test_cyclic_group_2():
    c2 = cyclic_group(2)
    assert c2.elements.labels == ("e", "g")
    assert c2.multiply("g", "g") == "e"
    assert c2.invert("g") == "g"


def test_trivial_group():
    t = trivial_group()
    assert len(t.elements) == 1 and t.identity == "e"


def test_from_table_rejects_non_associative():
    labels = ["e", "a", "b"]
    table = {
        ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
        ("a", "e"): "a", ("a", "a"): "e", ("a", "b"): "a",
        ("b", "e"): "b", ("b", "a"): "a", ("b", "b"): "b",
    }
    with pytest.raises(NotAssociative):
        finite_group_from_table(make_set(labels), table)


def test_from_table_rejects_missing_identity():
    table = {("a", "a"): "a", ("a", "b"): "a", ("b", "a"): "a", ("b", "b"): "a"}
    with pytest.raises(NoIdentity):
        finite_group_from_table(make_set(["a", "b"]), table)


def test_from_table_rejects_missing_inverse():
    # two-element monoid that is not a group
    table = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("g", "g"): "g"}
    with pytest.raises(NoInverse):
        finite_group_from_table(make_set(["e", "g"]), table)


def test_from_table_rejects_wrong_identity():
    c2 = cyclic_group(2)
    with pytest.raises(NoIdentity):
        finite_group_from_table(c2.elements, c2.table, identity="g")


def test_from_table_accepts_rows():
    g = finite_group_from_table(["e", "g"], [["e", "g"], ["g", "e"]])
    assert g.identity == "e"


def test_from_table_rejects_unknown_entry():
    with pytest.raises(UnknownElement):
        finite_group_from_table(["e"], [["x"]])


def test_permutation_closure_s3():
    s3 = finite_group_from_permutations(3, [(2, 1, 3), (2, 3, 1)])
    assert len(s3.elements) == 6


def test_permutation_closure_cyclic_4():
    c = finite_group_from_permutations(4, [(2, 3, 4, 1)])
    assert len(c.elements) == 4
    assert all(c.commutes(a, b) for a in c.elements for b in c.elements)


def test_permutation_closure_no_generators():
    t = finite_group_from_permutations(3, [])
    assert len(t.elements) == 1


def test_permutation_closure_rejects_non_permutation():
    with pytest.raises(NotAPermutation):
        finite_group_from_permutations(3, [(1, 1, 3)])
    with pytest.raises(NotAPermutation):
        finite_group_from_permutations(3, [(1, 2)])


def test_permutation_closure_cap():
    with pytest.raises(OrderCapExceeded):
        finite_group_from_permutations(3, [(2, 1, 3), (2, 3, 1)], cap=3)


def test_dihedral_order_8():
    assert len(dihedral_group_4().elements) == 8


# ---------------------------------------------------------------------------
# commutation graphs

def test_commutation_graph_c2_is_complete():
    assert commutation_graph(cyclic_group(2)).edges == (("e", "g"),)


def test_commutation_graph_trivial():
    g = commutation_graph(trivial_group())
    assert len(g.vertices) == 1 and g.edges == ()


def test_commutation_graph_s3():
    s3 = symmetric_group_3()
    g = commutation_graph(s3)
    assert len(g.edges) == 6
    # the identity is adjacent to all five others; the two rotations commute
    assert sum(1 for e in g.edges if "123" in e) == 5
    assert g.has_edge("231", "312")


def test_commutation_graph_identity_degree():
    for h in (cyclic_group(3), klein_four_group(), symmetric_group_3(), dihedral_group_4()):
        g = commutation_graph(h)
        degree = sum(1 for e in g.edges if h.identity in e)
        assert degree == len(h.elements) - 1


# ---------------------------------------------------------------------------
# the graph -> group functor

def test_raag_of_discrete_is_free():
    free = raag_of(discrete(make_set(["a", "b"])))
    assert not raag_commute(free, (A,), (B,))
    assert free.presentation.edges == ()


def test_raag_of_triangle_is_free_abelian():
    triangle = raag_of(indiscrete(make_set(["a", "b", "c"])))
    labels = triangle.generators.labels
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            assert raag_commute(triangle, ((u, 1),), ((v, 1),))


def test_raag_on_hom_functor_laws():
    g = make_graph(make_set(["a", "b"]), [("a", "b")])
    ident = raag_on_hom(make_graph_hom(g, g, {"a": "a", "b": "b"}))
    assert ident == identity_group_hom(raag_of(g))
    h = indiscrete(make_set(["c", "d", "e"]))
    f1 = make_graph_hom(g, h, {"a": "c", "b": "d"})
    f2 = make_graph_hom(h, h, {"c": "d", "d": "e", "e": "c"})
    composed = compose_group_homs(raag_on_hom(f1), raag_on_hom(f2))
    direct = raag_on_hom(make_graph_hom(g, h, {"a": "d", "b": "e"}))
    assert composed == direct


def test_raag_on_hom_rejects_non_hom():
    from commagraph.graphs import GraphHom
    from commagraph.sets import make_map

    g = make_graph(make_set(["a", "b"]), [("a", "b")])
    h = discrete(make_set(["c", "d"]))
    bad = make_map(g.vertices, h.vertices, {"a": "c", "b": "d"})
    with pytest.raises(InvalidHom):
        raag_on_hom(GraphHom(g, h, bad))


def test_free_group_equality_matches_free_reduce():
    free = free_group_on(make_set(["a", "b"]))
    rng = random.Random(0)
    letters = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    for _ in range(1000):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 8)))
        assert raag_is_identity(free, w) == (free_reduce(w) == ())


def test_infinite_cyclic():
    free = free_group_on(make_set(["a"]))
    assert raag_equal(free, (A, A, iA), (A,))
    trivial = free_group_on(make_set([]))
    assert raag_is_identity(trivial, ())


# ---------------------------------------------------------------------------
# evaluation and homomorphisms

def test_evaluate_word_in_c4():
    c4 = cyclic_group(4)
    assert evaluate_word({"a": "g"}, (A, A), c4) == "g2"
    assert evaluate_word({"a": "g"}, (), c4) == "e"
    assert evaluate_word({"a": "g"}, (A, iA), c4) == "e"


def test_evaluate_word_unknown_generator():
    with pytest.raises(UnknownGenerator):
        evaluate_word({}, (A,), cyclic_group(2))


def test_hom_check_equal_images_commute():
    s3 = symmetric_group_3()
    f = GroupHom(edge_raag(), s3, generator_images={"a": "213", "b": "213"})
    assert hom_check(f)


def test_hom_check_noncommuting_images_fail():
    s3 = symmetric_group_3()
    f = GroupHom(edge_raag(), s3, generator_images={"a": "213", "b": "231"})
    assert not hom_check(f)


def test_hom_check_free_domain_accepts_anything():
    s3 = symmetric_group_3()
    free = free_group_on(make_set(["a", "b"]))
    for x, y in product(s3.elements.labels, repeat=2):
        assert hom_check(GroupHom(free, s3, generator_images={"a": x, "b": y}))


def test_make_group_hom_validates():
    s3 = symmetric_group_3()
    with pytest.raises(InvalidHom):
        make_group_hom(edge_raag(), s3, generator_images={"a": "213", "b": "231"})
    with pytest.raises(UnknownElement):
        make_group_hom(edge_raag(), s3, generator_images={"a": "zzz", "b": "123"})


def test_apply_hom_finite_domain():
    c2, c4 = cyclic_group(2), cyclic_group(4)
    f = make_group_hom(c2, c4, table={"e": "e", "g": "g2"})
    assert apply_hom(f, "g") == "g2"
    assert hom_check(f)


def test_enumerate_homs_raag_to_finite_counts():
    s3 = symmetric_group_3()
    assert len(enumerate_homs_raag_to_finite(edge_raag(), s3)) == 18
    point = raag_of(discrete(make_set(["a"])))
    assert len(enumerate_homs_raag_to_finite(point, s3)) == 6
    empty = raag_of(discrete(make_set([])))
    assert len(enumerate_homs_raag_to_finite(empty, s3)) == 1


def test_enumerated_homs_are_homs():
    s3 = symmetric_group_3()
    for f in enumerate_homs_raag_to_finite(edge_raag(), s3):
        assert hom_check(f)


def test_enumerate_finite_to_finite_counts():
    c2, c3, c4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)
    s3, v4 = symmetric_group_3(), klein_four_group()
    assert len(enumerate_homs_finite_to_finite(c2, c2)) == 2
    assert len(enumerate_homs_finite_to_finite(c3, c4)) == 1
    assert len(enumerate_homs_finite_to_finite(c2, v4)) == 4
    assert len(enumerate_homs_finite_to_finite(s3, s3)) == 10
    for f in enumerate_homs_finite_to_finite(s3, c2):
        assert hom_check(f)


def test_hom_set_bijection_up_to_order_8():
    from commagraph import enumerate_graph_homs

    d4 = dihedral_group_4()
    c_d4 = commutation_graph(d4)
    for g in graphs_up_to(3):
        graph_side = {
            tuple(sorted(f.vmap.mapping.items()))
            for f in enumerate_graph_homs(g, c_d4)
        }
        group_side = {
            tuple(sorted(f.generator_images.items()))
            for f in enumerate_homs_raag_to_finite(raag_of(g), d4)
        }
        assert graph_side == group_side


def test_commutation_counit_is_a_hom():
    for h in (cyclic_group(2), symmetric_group_3()):
        counit = commutation_counit(h)
        assert hom_check(counit)
        assert counit.dom.generators == h.elements


def test_commutation_counit_evaluates():
    counit = commutation_counit(cyclic_group(2))
    assert apply_hom(counit, (("g", 1), ("g", 1))) == "e"


# ---------------------------------------------------------------------------
# JSON forms

def test_word_json_round_trip():
    w = (A, iB, A)
    assert word_from_json(word_to_json(w)) == w
    assert word_to_json(w) == ["a", "-b", "a"]


def test_word_tokens_reject_bare_dash():
    with pytest.raises(MalformedInput):
        word_from_tokens(["-"])


def test_cayley_json_round_trip():
    s3 = symmetric_group_3()
    again = group_from_json(group_to_json(s3))
    assert again == s3


def test_raag_json_round_trip():
    raag = edge_raag()
    assert group_from_json(group_to_json(raag)) == raag


def test_perm_json_builds_cayley_group():
    h = group_from_json({"type": "perm", "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]})
    assert h == symmetric_group_3()


def test_free_json_reads_as_edgeless_presentation():
    h = group_from_json({"type": "free", "generators": ["a", "b"]})
    assert isinstance(h, Raag)
    assert h.presentation.edges == ()


def test_group_json_rejects_unknown_type():
    with pytest.raises(MalformedInput):
        group_from_json({"type": "sporadic"})
