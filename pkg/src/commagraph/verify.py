"""Named desk-scale verification suites.

Each suite exhaustively enumerates a bounded fragment, checks one universal
property or agreement, and returns a deterministic report.  A failing
report always carries a counterexample serialized in the same JSON the CLI
accepts, so any failure replays as a single CLI invocation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from . import comma
from .errors import NotFactorable
from .graphs import (
    Graph,
    discrete,
    enumerate_graph_homs,
    graph_to_json,
    indiscrete,
    make_graph,
)
from .groups import (
    ORACLE_DEFAULT_BOUND,
    FiniteGroup,
    _engine,
    commutation_graph,
    cyclic_group,
    enumerate_homs_finite_to_finite,
    enumerate_homs_raag_to_finite,
    group_to_json,
    klein_four_group,
    raag_of,
    symmetric_group_3,
    trivial_group,
    word_to_tokens,
)
from .sets import SetMap, make_set

_LABELS = ("a", "b", "c", "d", "e")

SUITE_NAMES = (
    "unit-iso",
    "fullness",
    "ac-bijection",
    "dvi",
    "couniversal",
    "group-reflection",
    "word-differential",
)


@dataclass(frozen=True)
class CheckReport:
    name: str
    scope: str
    passed: bool
    counterexample: dict | None
    cases_checked: int

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "scope": self.scope,
            "passed": self.passed,
            "cases_checked": self.cases_checked,
            "counterexample": self.counterexample,
        }


def graphs_on(n: int):
    """All 2^C(n,2) labeled graphs on the first n standard labels."""
    labels = make_set(_LABELS[:n])
    pairs = [
        (labels.labels[i], labels.labels[j])
        for i in range(n)
        for j in range(i + 1, n)
    ]
    for bits in range(2 ** len(pairs)):
        yield make_graph(labels, [p for k, p in enumerate(pairs) if bits >> k & 1])


def graphs_up_to(max_vertices: int):
    for n in range(max_vertices + 1):
        yield from graphs_on(n)


def default_ac_groups() -> list[FiniteGroup]:
    return [
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_four_group(),
        symmetric_group_3(),
    ]


def default_pool(seed: int = 0) -> list[comma.CommaObject]:
    """Comma objects used by the couniversality and reflection sweeps:
    an empty-generator object, then one- and two-generator objects over
    C2, C3, C4, C2xC2 and S3 with seeded images, plus the standard
    noncommuting witness in S3."""
    rng = random.Random(seed)
    pool = [comma.make_comma_object(make_set([]), cyclic_group(2), {})]
    for h in default_ac_groups():
        elems = h.elements.labels
        pool.append(comma.make_comma_object(make_set(["x"]), h, {"x": rng.choice(elems)}))
        for _ in range(2):
            pool.append(
                comma.make_comma_object(
                    make_set(["x", "y"]),
                    h,
                    {"x": rng.choice(elems), "y": rng.choice(elems)},
                )
            )
    s3 = symmetric_group_3()
    pool.append(comma.make_comma_object(make_set(["x", "y"]), s3, {"x": "213", "y": "231"}))
    return pool


# ---------------------------------------------------------------------------
# Suites

def check_unit_iso(max_vertices: int = 4) -> CheckReport:
    """Embedding followed by coreflection gives every graph back exactly."""
    if not 0 <= max_vertices <= 5:
        raise ValueError("unit-iso sweep supports at most 5 vertices")
    cases = 0
    counterexample = None
    for g in graphs_up_to(max_vertices):
        cases += 1
        core = comma.coreflect(comma.embed_graph(g))
        if core.graph.vertices != g.vertices or core.graph.edges != g.edges:
            counterexample = {
                "graph": graph_to_json(g),
                "coreflection": graph_to_json(core.graph),
            }
            break
    return CheckReport(
        "unit-iso",
        f"all labeled graphs on 0..{max_vertices} vertices",
        counterexample is None,
        counterexample,
        cases,
    )


def check_fullness(max_vertices: int = 3) -> CheckReport:
    """Commuting squares between embedded graphs are exactly graph homs.

    For every ordered pair of graphs, every vertex map inducing a valid
    comma morphism (its group part is forced on generators) must be a graph
    hom, and conversely; the two collections must agree one for one.
    """
    if not 0 <= max_vertices <= 3:
        raise ValueError("fullness sweep supports at most 3 vertices")
    cases = 0
    counterexample = None
    pool = list(graphs_up_to(max_vertices))
    for g1 in pool:
        for g2 in pool:
            square_maps = set()
            for m in comma.enumerate_morphisms_from_embedded_graph(g1, comma.embed_graph(g2)):
                cases += 1
                if not comma.is_comma_morphism(m):
                    counterexample = {
                        "dom": graph_to_json(g1),
                        "cod": graph_to_json(g2),
                        "map": dict(m.f_set.mapping),
                        "reason": "enumerated square does not commute",
                    }
                    break
                square_maps.add(tuple(sorted(m.f_set.mapping.items())))
            if counterexample is not None:
                break
            hom_maps = {
                tuple(sorted(h.vmap.mapping.items()))
                for h in enumerate_graph_homs(g1, g2)
            }
            if square_maps != hom_maps:
                diff = square_maps.symmetric_difference(hom_maps)
                counterexample = {
                    "dom": graph_to_json(g1),
                    "cod": graph_to_json(g2),
                    "map": dict(next(iter(sorted(diff)))),
                    "squares": len(square_maps),
                    "graph_homs": len(hom_maps),
                }
                break
        if counterexample is not None:
            break
    return CheckReport(
        "fullness",
        f"all ordered pairs of labeled graphs on 0..{max_vertices} vertices",
        counterexample is None,
        counterexample,
        cases,
    )


def check_ac_bijection(max_vertices: int = 3, groups: list[FiniteGroup] | None = None) -> CheckReport:
    """Graph homs into the commutation graph correspond one for one with
    group homs out of the presented group."""
    if groups is None:
        groups = default_ac_groups()
    cases = 0
    counterexample = None
    for g in graphs_up_to(max_vertices):
        for h in groups:
            cases += 1
            graph_side = {
                tuple(sorted(f.vmap.mapping.items()))
                for f in enumerate_graph_homs(g, commutation_graph(h))
            }
            group_side = {
                tuple(sorted(f.generator_images.items()))
                for f in enumerate_homs_raag_to_finite(raag_of(g), h)
            }
            if graph_side != group_side:
                counterexample = {
                    "graph": graph_to_json(g),
                    "group": group_to_json(h),
                    "graph_homs": len(graph_side),
                    "group_homs": len(group_side),
                }
                break
        if counterexample is not None:
            break
    return CheckReport(
        "ac-bijection",
        f"graphs on 0..{max_vertices} vertices against {len(groups)} groups",
        counterexample is None,
        counterexample,
        cases,
    )


def check_dvi(max_set: int = 3, max_vertices: int = 3) -> CheckReport:
    """Hom-count identities for the discrete and indiscrete constructions."""
    cases = 0
    counterexample = None
    for n in range(max_set + 1):
        x = make_set(_LABELS[:n])
        for g in graphs_up_to(max_vertices):
            cases += 1
            discrete_count = len(enumerate_graph_homs(discrete(x), g))
            if discrete_count != len(g.vertices) ** len(x):
                counterexample = {
                    "set": list(x.labels),
                    "graph": graph_to_json(g),
                    "side": "discrete",
                    "hom_count": discrete_count,
                    "expected": len(g.vertices) ** len(x),
                }
                break
            indiscrete_count = len(enumerate_graph_homs(g, indiscrete(x)))
            if indiscrete_count != len(x) ** len(g.vertices):
                counterexample = {
                    "set": list(x.labels),
                    "graph": graph_to_json(g),
                    "side": "indiscrete",
                    "hom_count": indiscrete_count,
                    "expected": len(x) ** len(g.vertices),
                }
                break
        if counterexample is not None:
            break
    return CheckReport(
        "dvi",
        f"sets of size 0..{max_set} against graphs on 0..{max_vertices} vertices",
        counterexample is None,
        counterexample,
        cases,
    )


def check_couniversal(pool: list[comma.CommaObject] | None = None, max_vertices: int = 3) -> CheckReport:
    """Every morphism from an embedded graph into a pool object factors
    through the coreflection counit by exactly one graph hom."""
    if pool is None:
        pool = default_pool()
    cases = 0
    counterexample = None
    for w in pool:
        core = comma.coreflect(w)
        for g in graphs_up_to(max_vertices):
            candidates = enumerate_graph_homs(g, core.graph)
            for m in comma.enumerate_morphisms_from_embedded_graph(g, w):
                cases += 1
                factors = [
                    h
                    for h in candidates
                    if comma.compose_comma(comma.embed_graph_hom(h), core.counit) == m
                ]
                witness = None
                if len(factors) != 1:
                    witness = {"factorizations": len(factors)}
                else:
                    try:
                        found = comma.factor_through_coreflection(g, m)
                    except NotFactorable:
                        witness = {"factorizations": "factor_through_coreflection failed"}
                    else:
                        if found.vmap.mapping != factors[0].vmap.mapping:
                            witness = {"factorizations": "disagrees with the direct factor"}
                if witness is not None:
                    counterexample = {
                        "graph": graph_to_json(g),
                        "object": comma.comma_object_to_json(w),
                        "morphism_f_set": dict(m.f_set.mapping),
                        **witness,
                    }
                    break
            if counterexample is not None:
                break
        if counterexample is not None:
            break
    return CheckReport(
        "couniversal",
        f"graphs on 0..{max_vertices} vertices into a pool of {len(pool)} objects",
        counterexample is None,
        counterexample,
        cases,
    )


def check_group_reflection(
    pool: list[comma.CommaObject] | None = None,
    codomains: list[FiniteGroup] | None = None,
) -> CheckReport:
    """The unit into the embedded target group is couniversal the other way
    round: morphisms into embedded groups factor uniquely through it."""
    if pool is None:
        pool = default_pool()
    if codomains is None:
        codomains = [trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four_group()]
    cases = 0
    counterexample = None
    for w in pool:
        reflection = comma.reflect_to_group(w)
        if not comma.is_comma_morphism(reflection.unit):
            counterexample = {
                "object": comma.comma_object_to_json(w),
                "reason": "unit is not a comma morphism",
            }
            break
        for k in codomains:
            embedded = comma.embed_group(k)
            hom_list = enumerate_homs_finite_to_finite(w.target, k)
            through = [
                comma.CommaMorphism(
                    comma.embed_group(w.target),
                    embedded,
                    SetMap(w.target.elements, k.elements, dict(f.table)),
                    f,
                )
                for f in hom_list
            ]
            for f in hom_list:
                cases += 1
                m = comma.CommaMorphism(
                    w,
                    embedded,
                    SetMap(w.gens, k.elements, {x: f.table[w.images[x]] for x in w.gens}),
                    f,
                )
                if not comma.is_comma_morphism(m):
                    counterexample = {
                        "object": comma.comma_object_to_json(w),
                        "codomain": group_to_json(k),
                        "reason": "induced morphism into the embedded group does not commute",
                    }
                    break
                factors = [
                    g
                    for g in through
                    if comma.compose_comma(reflection.unit, g) == m
                ]
                if len(factors) != 1:
                    counterexample = {
                        "object": comma.comma_object_to_json(w),
                        "codomain": group_to_json(k),
                        "factorizations": len(factors),
                    }
                    break
            if counterexample is not None:
                break
        if counterexample is not None:
            break
    return CheckReport(
        "group-reflection",
        f"a pool of {len(pool)} objects into {len(codomains)} embedded groups",
        counterexample is None,
        counterexample,
        cases,
    )


def check_word_differential(
    max_vertices: int = 3,
    max_len: int = 6,
    random_words: int = 10000,
    random_max_len: int = 10,
    random_max_vertices: int = 4,
    seed: int = 0,
) -> CheckReport:
    """The cancellation engine against the brute-force shuffle oracle:
    exhaustively on every word within the bounds over every labeled graph,
    then on a seeded batch of random words over random graphs."""
    bound = max(ORACLE_DEFAULT_BOUND, max_len, random_max_len)
    cases = 0
    counterexample = None

    def mismatch(graph: Graph, codes: tuple[int, ...]) -> dict:
        engine = _engine(graph)
        return {
            "presentation": graph_to_json(graph),
            "word": word_to_tokens(engine.decode(codes)),
            "fast": engine.is_identity(codes),
            "oracle": engine.oracle_is_identity(codes, bound),
        }

    for g in graphs_up_to(max_vertices):
        engine = _engine(g)
        letters = range(2 * len(g.vertices))
        for length in range(max_len + 1):
            for codes in product(letters, repeat=length):
                cases += 1
                if engine.is_identity(codes) != engine.oracle_is_identity(codes, bound):
                    counterexample = mismatch(g, codes)
                    break
            if counterexample is not None:
                break
        if counterexample is not None:
            break

    if counterexample is None:
        rng = random.Random(seed)
        pairs = [
            (_LABELS[i], _LABELS[j])
            for i in range(random_max_vertices)
            for j in range(i + 1, random_max_vertices)
        ]
        for _ in range(random_words):
            n = rng.randint(1, random_max_vertices)
            labels = make_set(_LABELS[:n])
            edges = [p for p in pairs if p[1] in labels and rng.random() < 0.5]
            g = make_graph(labels, edges)
            engine = _engine(g)
            length = rng.randint(0, random_max_len)
            codes = tuple(rng.randrange(2 * n) for _ in range(length))
            cases += 1
            if engine.is_identity(codes) != engine.oracle_is_identity(codes, bound):
                counterexample = mismatch(g, codes)
                break

    return CheckReport(
        "word-differential",
        f"all words of length <= {max_len} over graphs on 0..{max_vertices} vertices, "
        f"plus {random_words} seeded words of length <= {random_max_len} "
        f"over graphs on <= {random_max_vertices} vertices",
        counterexample is None,
        counterexample,
        cases,
    )


# ---------------------------------------------------------------------------
# Dispatch used by the CLI

def run_suite(
    name: str,
    max_vertices: int | None = None,
    max_word_len: int | None = None,
    seed: int = 0,
) -> CheckReport:
    """Run one suite by its public name, with optional bound overrides."""
    if name == "unit-iso":
        return check_unit_iso(4 if max_vertices is None else max_vertices)
    if name == "fullness":
        return check_fullness(3 if max_vertices is None else max_vertices)
    if name == "ac-bijection":
        return check_ac_bijection(3 if max_vertices is None else max_vertices)
    if name == "dvi":
        return check_dvi(3, 3 if max_vertices is None else max_vertices)
    if name == "couniversal":
        return check_couniversal(default_pool(seed), 3 if max_vertices is None else max_vertices)
    if name == "group-reflection":
        return check_group_reflection(default_pool(seed))
    if name == "word-differential":
        return check_word_differential(
            3 if max_vertices is None else max_vertices,
            6 if max_word_len is None else max_word_len,
            seed=seed,
        )
    raise KeyError(name)
