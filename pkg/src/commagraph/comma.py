"""Comma objects under free groups and the embedding of graphs among them.

A comma object is a homomorphism out of a free group, recorded as a finite
generator set, a computable target group, and one target element per
generator.  A morphism between two such objects is a set map on generators
together with a group homomorphism of targets making the evident square
commute; since the domains are free, checking the square on generators is
enough.

A graph embeds as the quotient map from the free group on its vertices to
the group presented by the graph.  That embedding has an explicit right
adjoint: the coreflection graph puts an edge between two generators exactly
when their images commute in the target, and the counit evaluates the
presented group into the target.  Groups themselves embed via their full
multiplication structure, with the codomain projection as left adjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import MalformedInput, MissingImage, NotFactorable, NotFiniteTarget, ObjectMismatch
from .graphs import Graph, GraphHom, is_graph_hom
from .groups import (
    FiniteGroup,
    GroupHandle,
    GroupHom,
    Raag,
    apply_hom,
    as_word,
    compose_group_homs,
    group_from_json,
    group_to_json,
    hom_check,
    identity_group_hom,
    make_group_hom,
    raag_of,
    raag_on_hom,
)
from .sets import FiniteSet, SetMap, compose_maps, finite_set_from_json, identity_map, make_map


@dataclass(frozen=True, eq=False)
class CommaObject:
    gens: FiniteSet
    target: GroupHandle
    images: dict[str, object]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommaObject):
            return NotImplemented
        if self.gens != other.gens or self.target != other.target:
            return False
        return all(self.target.equal(self.images[x], other.images[x]) for x in self.gens)


@dataclass(frozen=True, eq=False)
class CommaMorphism:
    src: CommaObject
    dst: CommaObject
    f_set: SetMap
    f_grp: GroupHom

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CommaMorphism):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and self.f_set.mapping == other.f_set.mapping
            and self.f_grp == other.f_grp
        )


def make_comma_object(gens: FiniteSet, target: GroupHandle, images: Mapping[str, object]) -> CommaObject:
    extra = set(images) - set(gens.labels)
    if extra:
        raise MalformedInput(f"images mention labels outside the generator set: {sorted(extra)}")
    validated: dict[str, object] = {}
    for x in gens:
        if x not in images:
            raise MissingImage(f"no image given for generator {x!r}")
        validated[x] = target.validate_element(images[x])
    return CommaObject(gens, target, validated)


def is_comma_morphism(m: CommaMorphism) -> bool:
    """True iff the generator-level square commutes; the domain side is free
    on the generators, so nothing more is needed."""
    if m.f_set.dom != m.src.gens or m.f_set.cod != m.dst.gens:
        return False
    if m.f_grp.dom != m.src.target or m.f_grp.cod != m.dst.target:
        return False
    if not hom_check(m.f_grp):
        return False
    t = m.dst.target
    return all(
        t.equal(apply_hom(m.f_grp, m.src.images[x]), m.dst.images[m.f_set.mapping[x]])
        for x in m.src.gens
    )


def identity_comma(w: CommaObject) -> CommaMorphism:
    return CommaMorphism(w, w, identity_map(w.gens), identity_group_hom(w.target))


def compose_comma(m1: CommaMorphism, m2: CommaMorphism) -> CommaMorphism:
    if m1.dst != m2.src:
        raise ObjectMismatch("middle objects of the composite do not agree")
    return CommaMorphism(
        m1.src,
        m2.dst,
        compose_maps(m1.f_set, m2.f_set),
        compose_group_homs(m1.f_grp, m2.f_grp),
    )


# ---------------------------------------------------------------------------
# The embedding of graphs

def embed_graph(g: Graph) -> CommaObject:
    """A graph as a comma object: the quotient map from the free group on
    the vertices to the group the graph presents, one single-letter image
    per vertex."""
    return CommaObject(g.vertices, raag_of(g), {v: ((v, 1),) for v in g.vertices})


def embed_graph_hom(f: GraphHom) -> CommaMorphism:
    """Functorial action: the vertex map paired with the induced map of
    presented groups."""
    return CommaMorphism(
        embed_graph(f.dom),
        embed_graph(f.cod),
        f.vmap,
        raag_on_hom(f),
    )


def enumerate_morphisms_from_embedded_graph(g: Graph, w: CommaObject) -> list[CommaMorphism]:
    """All comma morphisms from the embedded graph into w.

    The commuting square forces the group part on generators, so the search
    ranges only over set maps; a candidate survives iff the induced
    generator images commute wherever the graph has an edge.
    """
    src = embed_graph(g)
    t = w.target
    out: list[CommaMorphism] = []
    for combo in product(w.gens.labels, repeat=len(g.vertices)):
        assignment = dict(zip(g.vertices.labels, combo))
        if all(
            t.commutes(w.images[assignment[u]], w.images[assignment[v]])
            for u, v in g.edges
        ):
            f_set = SetMap(g.vertices, w.gens, assignment)
            f_grp = GroupHom(
                src.target, t,
                generator_images={v: w.images[assignment[v]] for v in g.vertices},
            )
            out.append(CommaMorphism(src, w, f_set, f_grp))
    return out


# ---------------------------------------------------------------------------
# The coreflection onto graphs

@dataclass(frozen=True, eq=False)
class Coreflection:
    graph: Graph
    counit: CommaMorphism


def coreflect(w: CommaObject) -> Coreflection:
    """Best graph approximation of a comma object.

    The graph lives on w's generators with an edge between distinct
    generators whose images commute in the target; the counit maps the
    embedded graph back into w by evaluating each generator at its image.
    """
    labels = w.gens.labels
    t = w.target
    edges = tuple(
        (labels[i], labels[j])
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if t.commutes(w.images[labels[i]], w.images[labels[j]])
    )
    graph = Graph(w.gens, edges)
    counit = CommaMorphism(
        embed_graph(graph),
        w,
        identity_map(w.gens),
        GroupHom(raag_of(graph), t, generator_images=dict(w.images)),
    )
    return Coreflection(graph, counit)


def factor_through_coreflection(g: Graph, m: CommaMorphism) -> GraphHom:
    """The unique graph hom whose embedded image followed by the counit
    gives back m, for m out of the embedded graph g."""
    if m.src != embed_graph(g):
        raise ObjectMismatch("the morphism does not start at the embedded graph")
    core = coreflect(m.dst)
    vmap = SetMap(g.vertices, core.graph.vertices, dict(m.f_set.mapping))
    if not is_graph_hom(g, core.graph, vmap):
        raise NotFactorable(
            "the set part of a valid morphism must land as a graph hom in the coreflection"
        )
    return GraphHom(g, core.graph, vmap)


# ---------------------------------------------------------------------------
# The embedding of groups

@dataclass(frozen=True, eq=False)
class GroupReflection:
    group: GroupHandle
    unit: CommaMorphism


def embed_group(h: FiniteGroup) -> CommaObject:
    """A finite group as a comma object: the free group on its underlying
    set mapping each element-named generator to itself."""
    return CommaObject(h.elements, h, {x: x for x in h.elements})


def reflect_to_group(w: CommaObject) -> GroupReflection:
    """Project a comma object to its target group; the unit sends each
    generator to (the element-named generator of) its image."""
    if not isinstance(w.target, FiniteGroup):
        raise NotFiniteTarget("only finite targets have a computable underlying set")
    unit = CommaMorphism(
        w,
        embed_group(w.target),
        SetMap(w.gens, w.target.elements, {x: w.images[x] for x in w.gens}),
        identity_group_hom(w.target),
    )
    return GroupReflection(w.target, unit)


def is_canonical_raag_quotient(w: CommaObject) -> bool:
    """Syntactic recognizer for embedded graphs: the target must be the
    group presented by a graph on exactly w's generators, each mapping to
    its own single-letter word."""
    if not isinstance(w.target, Raag):
        return False
    if w.target.presentation.vertices != w.gens:
        return False
    return all(as_word(w.images[x]) == ((x, 1),) for x in w.gens)


# ---------------------------------------------------------------------------
# JSON forms

def comma_object_to_json(w: CommaObject) -> dict:
    return {
        "gens": list(w.gens.labels),
        "target": group_to_json(w.target),
        "images": {x: w.target.element_to_json(w.images[x]) for x in w.gens},
    }


def comma_object_from_json(data: object, closure_cap: int = 10000) -> CommaObject:
    if not isinstance(data, dict) or not {"gens", "target", "images"} <= set(data):
        raise MalformedInput('a comma object needs "gens", "target" and "images"')
    gens = finite_set_from_json(data["gens"])
    target = group_from_json(data["target"], closure_cap=closure_cap)
    images_data = data["images"]
    if not isinstance(images_data, dict):
        raise MalformedInput('"images" must be an object keyed by generator')
    images = {x: target.element_from_json(v) for x, v in images_data.items()}
    return make_comma_object(gens, target, images)


def comma_morphism_to_json(m: CommaMorphism) -> dict:
    if m.f_grp.generator_images is not None:
        grp = {
            "generator_images": {
                g: m.f_grp.cod.element_to_json(x)
                for g, x in sorted(m.f_grp.generator_images.items())
            }
        }
    else:
        grp = {"table": {a: b for a, b in sorted(m.f_grp.table.items())}}
    return {
        "from": comma_object_to_json(m.src),
        "to": comma_object_to_json(m.dst),
        "f_set": {x: m.f_set.mapping[x] for x in m.f_set.dom},
        "f_grp": grp,
    }


def comma_morphism_from_json(data: object, closure_cap: int = 10000) -> CommaMorphism:
    if not isinstance(data, dict) or not {"from", "to", "f_set", "f_grp"} <= set(data):
        raise MalformedInput('a comma morphism needs "from", "to", "f_set" and "f_grp"')
    src = comma_object_from_json(data["from"], closure_cap=closure_cap)
    dst = comma_object_from_json(data["to"], closure_cap=closure_cap)
    f_set = make_map(src.gens, dst.gens, data["f_set"])
    grp_data = data["f_grp"]
    if not isinstance(grp_data, dict):
        raise MalformedInput('"f_grp" must be an object')
    if "generator_images" in grp_data:
        images = {
            g: dst.target.element_from_json(v)
            for g, v in grp_data["generator_images"].items()
        }
        f_grp = make_group_hom(src.target, dst.target, generator_images=images)
    elif "table" in grp_data:
        f_grp = make_group_hom(src.target, dst.target, table=grp_data["table"])
    else:
        raise MalformedInput('"f_grp" needs "generator_images" or "table"')
    m = CommaMorphism(src, dst, f_set, f_grp)
    if not is_comma_morphism(m):
        raise MalformedInput("the square of the comma morphism does not commute")
    return m
