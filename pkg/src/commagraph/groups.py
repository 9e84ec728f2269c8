"""Computable groups: free groups, right-angled Artin groups, finite groups.

Elements of free groups and RAAGs are words, i.e. sequences of signed
generators.  Equality of RAAG elements is decided by a cancellation engine
(delete a pair x, x^-1 whenever everything strictly between commutes with
x) and double-checked elsewhere by a brute-force shuffle oracle.  Reduced
words are put into a canonical form: the lexicographically least word
obtainable by swapping adjacent commuting letters, so two words denote the
same element iff they reduce to the same canonical form.

Finite groups carry a full Cayley table.  The two directions between graphs
and groups live here as well: a graph yields the RAAG presented by it, and
a finite group yields its commutation graph (distinct elements joined iff
they commute).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    InvalidHom,
    MalformedInput,
    MissingImage,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    OrderCapExceeded,
    UnknownElement,
    UnknownGenerator,
    WordTooLong,
)
from .graphs import Graph, GraphHom, discrete, graph_from_json, graph_to_json, is_graph_hom
from .sets import FiniteSet, finite_set_from_json, make_set

Word = tuple[tuple[str, int], ...]

ORACLE_DEFAULT_BOUND = 12
CLOSURE_DEFAULT_CAP = 10000


# ---------------------------------------------------------------------------
# Words

def as_word(value: Iterable) -> Word:
    """Normalize a sequence of (generator, sign) pairs into a Word."""
    out = []
    for letter in value:
        try:
            gen, sign = letter
        except (TypeError, ValueError):
            raise MalformedInput(f"word letter {letter!r} is not a (generator, sign) pair")
        if not isinstance(gen, str) or sign not in (1, -1):
            raise MalformedInput(f"word letter {letter!r} is not a (generator, sign) pair")
        out.append((gen, sign))
    return tuple(out)


def word_from_tokens(tokens: Iterable[str]) -> Word:
    """Parse tokens like "a" and "-a" (the "-" prefix marks an inverse)."""
    out = []
    for token in tokens:
        if not isinstance(token, str) or token in ("", "-"):
            raise MalformedInput(f"bad word token {token!r}")
        if token.startswith("-"):
            out.append((token[1:], -1))
        else:
            out.append((token, 1))
    return tuple(out)


def word_to_tokens(w: Word) -> list[str]:
    return [gen if sign > 0 else "-" + gen for gen, sign in w]


def word_inverse(w: Word) -> Word:
    return tuple((gen, -sign) for gen, sign in reversed(w))


def word_concat(*ws: Word) -> Word:
    out: tuple[tuple[str, int], ...] = ()
    for w in ws:
        out = out + tuple(w)
    return out


def free_reduce(w: Iterable) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[tuple[str, int]] = []
    for gen, sign in as_word(w):
        if out and out[-1][0] == gen and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((gen, sign))
    return tuple(out)


# ---------------------------------------------------------------------------
# Right-angled Artin groups

@dataclass(frozen=True)
class Raag:
    """The group presented by a graph: one generator per vertex, and the
    relations that adjacent generators commute.  An edgeless presentation
    graph gives a free group, a complete one a free abelian group."""

    presentation: Graph

    @property
    def generators(self) -> FiniteSet:
        return self.presentation.vertices

    def identity_element(self) -> Word:
        return ()

    def multiply(self, a: Word, b: Word) -> Word:
        return raag_reduce(self, word_concat(a, b))

    def invert(self, a: Word) -> Word:
        return word_inverse(as_word(a))

    def equal(self, a: Word, b: Word) -> bool:
        return raag_equal(self, a, b)

    def commutes(self, a: Word, b: Word) -> bool:
        return raag_commute(self, a, b)

    def validate_element(self, value) -> Word:
        w = as_word(value)
        _engine(self.presentation).encode(w)
        return w

    def element_to_json(self, value: Word) -> list[str]:
        return word_to_tokens(as_word(value))

    def element_from_json(self, data) -> Word:
        if not isinstance(data, list):
            raise MalformedInput("an element of a presented group must be a word array")
        return self.validate_element(word_from_tokens(data))


class _RaagEngine:
    """Word machinery for one presentation graph, on integer letter codes.

    Generator i gets codes 2i (positive) and 2i+1 (inverse), so the inverse
    of a code is code^1 and its generator is code>>1.
    """

    __slots__ = ("labels", "index", "adjacent", "letter_adjacent")

    def __init__(self, graph: Graph):
        self.labels = graph.vertices.labels
        self.index = {v: i for i, v in enumerate(self.labels)}
        n = len(self.labels)
        adjacent: list[set[int]] = [set() for _ in range(n)]
        for u, v in graph.edges:
            iu, iv = self.index[u], self.index[v]
            adjacent[iu].add(iv)
            adjacent[iv].add(iu)
        self.adjacent = adjacent
        self.letter_adjacent = [
            [(b >> 1) in adjacent[a >> 1] for b in range(2 * n)] for a in range(2 * n)
        ]

    def encode(self, w: Word) -> tuple[int, ...]:
        enc = []
        for gen, sign in w:
            i = self.index.get(gen)
            if i is None:
                raise UnknownGenerator(f"{gen!r} is not a generator of this group")
            enc.append(2 * i + (0 if sign > 0 else 1))
        return tuple(enc)

    def decode(self, enc: Sequence[int]) -> Word:
        return tuple((self.labels[c >> 1], 1 if c % 2 == 0 else -1) for c in enc)

    def cancel_fixpoint(self, enc: Sequence[int]) -> list[int]:
        """Delete pairs x, x^-1 whose in-between letters all commute with x,
        until no such pair remains."""
        w = list(enc)
        adjacent = self.adjacent
        changed = True
        while changed:
            changed = False
            n = len(w)
            for i in range(n):
                c = w[i]
                neighbours = adjacent[c >> 1]
                for j in range(i + 1, n):
                    d = w[j]
                    g = d >> 1
                    if g == c >> 1:
                        if d == (c ^ 1):
                            del w[j]
                            del w[i]
                            changed = True
                        break
                    if g not in neighbours:
                        break
                if changed:
                    break
        return w

    def is_identity(self, enc: Sequence[int]) -> bool:
        return not self.cancel_fixpoint(enc)

    def lex_normal(self, reduced: Sequence[int]) -> list[int]:
        """Lexicographically least shuffle of a cancellation-free word.

        Repeatedly extract the least letter that can commute past everything
        to its left; generator order is vertex storage order, a positive
        letter sorting before its inverse.
        """
        remaining = list(reduced)
        adjacent = self.adjacent
        out: list[int] = []
        while remaining:
            best_idx = -1
            best_code = None
            earlier: set[int] = set()
            for idx, c in enumerate(remaining):
                g = c >> 1
                if earlier <= adjacent[g] and (best_code is None or c < best_code):
                    best_idx, best_code = idx, c
                earlier.add(g)
            out.append(remaining.pop(best_idx))
        return out

    def oracle_is_identity(self, enc: Sequence[int], bound: int) -> bool:
        """Brute-force identity check: breadth-first closure under swaps of
        adjacent commuting letters; when any reachable word has an adjacent
        inverse pair, cancel it and start over on the shorter word."""
        if len(enc) > bound:
            raise WordTooLong(f"oracle refuses words longer than {bound}")
        letter_adjacent = self.letter_adjacent
        w = tuple(enc)
        while True:
            if not w:
                return True
            cancelled = None
            seen = {w}
            queue = deque((w,))
            while queue:
                u = queue.popleft()
                last = len(u) - 1
                for i in range(last):
                    if u[i] == (u[i + 1] ^ 1):
                        cancelled = u[:i] + u[i + 2:]
                        break
                if cancelled is not None:
                    break
                for i in range(last):
                    a, b = u[i], u[i + 1]
                    if letter_adjacent[a][b]:
                        v = u[:i] + (b, a) + u[i + 2:]
                        if v not in seen:
                            seen.add(v)
                            queue.append(v)
            if cancelled is None:
                return False
            w = cancelled


@lru_cache(maxsize=None)
def _engine(graph: Graph) -> _RaagEngine:
    return _RaagEngine(graph)


def raag_of(g: Graph) -> Raag:
    return Raag(g)


def free_group_on(x: FiniteSet) -> Raag:
    """The free group, presented by the edgeless graph on x."""
    return Raag(discrete(x))


def raag_reduce(raag: Raag, w: Iterable) -> Word:
    """Cancellation-free canonical representative of the same element."""
    engine = _engine(raag.presentation)
    enc = engine.encode(as_word(w))
    return engine.decode(engine.lex_normal(engine.cancel_fixpoint(enc)))


def raag_is_identity(raag: Raag, w: Iterable) -> bool:
    engine = _engine(raag.presentation)
    return engine.is_identity(engine.encode(as_word(w)))


def raag_oracle_is_identity(raag: Raag, w: Iterable, bound: int = ORACLE_DEFAULT_BOUND) -> bool:
    engine = _engine(raag.presentation)
    return engine.oracle_is_identity(engine.encode(as_word(w)), bound)


def raag_equal(raag: Raag, u: Iterable, v: Iterable) -> bool:
    return raag_is_identity(raag, word_concat(as_word(u), word_inverse(as_word(v))))


def raag_commute(raag: Raag, u: Iterable, v: Iterable) -> bool:
    u, v = as_word(u), as_word(v)
    commutator = word_concat(u, v, word_inverse(u), word_inverse(v))
    return raag_is_identity(raag, commutator)


# ---------------------------------------------------------------------------
# Finite groups

@dataclass(frozen=True, eq=True)
class FiniteGroup:
    elements: FiniteSet
    table: dict[tuple[str, str], str]
    identity: str
    inverse: dict[str, str]

    __hash__ = None  # type: ignore[assignment]

    def identity_element(self) -> str:
        return self.identity

    def multiply(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def invert(self, a: str) -> str:
        return self.inverse[a]

    def equal(self, a: str, b: str) -> bool:
        return a == b

    def commutes(self, a: str, b: str) -> bool:
        return self.table[(a, b)] == self.table[(b, a)]

    def validate_element(self, value) -> str:
        if not isinstance(value, str) or value not in self.elements:
            raise UnknownElement(f"{value!r} is not an element of this group")
        return value

    def element_to_json(self, value: str) -> str:
        return value

    def element_from_json(self, data) -> str:
        return self.validate_element(data)


GroupHandle = Union[Raag, FiniteGroup]


def finite_group_from_table(
    elements: FiniteSet | Iterable[str],
    table: Mapping[tuple[str, str], str] | Sequence[Sequence[str]],
    identity: str | None = None,
) -> FiniteGroup:
    """Build and fully validate a finite group from its Cayley table.

    The table may be a (a, b) -> ab mapping or a square array of rows in
    element order.  When identity is omitted it is searched for.
    """
    elements = elements if isinstance(elements, FiniteSet) else make_set(elements)
    labels = elements.labels
    flat: dict[tuple[str, str], str] = {}
    if isinstance(table, Mapping):
        flat = dict(table)
    else:
        if len(table) != len(labels) or any(len(row) != len(labels) for row in table):
            raise MalformedInput("table must be square, one row per element")
        for a, row in zip(labels, table):
            for b, value in zip(labels, row):
                flat[(a, b)] = value
    for a in labels:
        for b in labels:
            if (a, b) not in flat:
                raise MalformedInput(f"table has no entry for ({a!r}, {b!r})")
            if flat[(a, b)] not in elements:
                raise UnknownElement(f"table entry for ({a!r}, {b!r}) is not an element")
    for a in labels:
        for b in labels:
            for c in labels:
                if flat[(flat[(a, b)], c)] != flat[(a, flat[(b, c)])]:
                    raise NotAssociative(f"({a!r}*{b!r})*{c!r} != {a!r}*({b!r}*{c!r})")
    if identity is None:
        for e in labels:
            if all(flat[(e, x)] == x == flat[(x, e)] for x in labels):
                identity = e
                break
        else:
            raise NoIdentity("the table has no two-sided identity")
    elif not all(flat[(identity, x)] == x == flat[(x, identity)] for x in labels):
        raise NoIdentity(f"{identity!r} is not a two-sided identity")
    inverse: dict[str, str] = {}
    for a in labels:
        for b in labels:
            if flat[(a, b)] == identity == flat[(b, a)]:
                inverse[a] = b
                break
        else:
            raise NoInverse(f"{a!r} has no two-sided inverse")
    return FiniteGroup(elements, flat, identity, inverse)


def _permutation_label(perm: tuple[int, ...]) -> str:
    if len(perm) <= 9:
        return "".join(str(i) for i in perm)
    return ",".join(str(i) for i in perm)


def finite_group_from_permutations(
    degree: int,
    generators: Iterable[Sequence[int]],
    cap: int = CLOSURE_DEFAULT_CAP,
) -> FiniteGroup:
    """Close a set of permutations of {1..degree} under composition.

    Elements are named by one-line notation (the sequence of images).
    Composition is (p * q)(i) = p(q(i)): apply q first.
    """
    gens: list[tuple[int, ...]] = []
    for g in generators:
        p = tuple(g)
        if sorted(p) != list(range(1, degree + 1)):
            raise NotAPermutation(f"{list(g)!r} is not a permutation of 1..{degree}")
        gens.append(p)

    def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p[q[i] - 1] for i in range(degree))

    ident = tuple(range(1, degree + 1))
    found = [ident]
    seen = {ident}
    queue = deque((ident,))
    while queue:
        p = queue.popleft()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                if len(seen) >= cap:
                    raise OrderCapExceeded(f"closure exceeded the cap of {cap} elements")
                seen.add(q)
                found.append(q)
                queue.append(q)
    labels = make_set(_permutation_label(p) for p in found)
    by_label = dict(zip(labels.labels, found))
    table = {
        (a, b): _permutation_label(compose(by_label[a], by_label[b]))
        for a in labels
        for b in labels
    }
    return finite_group_from_table(labels, table, _permutation_label(ident))


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group of order n with elements e, g, g2, ..."""
    if n < 1:
        raise MalformedInput("a cyclic group needs order at least 1")
    labels = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, n)]
    table = {
        (labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)
    }
    return finite_group_from_table(make_set(labels), table, "e")


def klein_four_group() -> FiniteGroup:
    """The direct product of two copies of the order-2 cyclic group."""
    labels = ["e", "a", "b", "ab"]
    table = {
        (labels[i], labels[j]): labels[i ^ j] for i in range(4) for j in range(4)
    }
    return finite_group_from_table(make_set(labels), table, "e")


def symmetric_group_3() -> FiniteGroup:
    return finite_group_from_permutations(3, [(2, 1, 3), (2, 3, 1)])


def dihedral_group_4() -> FiniteGroup:
    """Symmetries of the square, order 8."""
    return finite_group_from_permutations(4, [(2, 3, 4, 1), (2, 1, 4, 3)])


def commutation_graph(h: FiniteGroup) -> Graph:
    """Graph on the elements of h, distinct vertices adjacent iff they
    commute."""
    labels = h.elements.labels
    edges = tuple(
        (labels[i], labels[j])
        for i in range(len(labels))
        for j in range(i + 1, len(labels))
        if h.commutes(labels[i], labels[j])
    )
    return Graph(h.elements, edges)


# ---------------------------------------------------------------------------
# Group homomorphisms

@dataclass(frozen=True, eq=False)
class GroupHom:
    """A homomorphism given by generator images (presented domain) or by a
    full element table (finite domain)."""

    dom: GroupHandle
    cod: GroupHandle
    generator_images: dict[str, object] | None = None
    table: dict[str, str] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        if (self.generator_images is None) != (other.generator_images is None):
            return False
        if self.generator_images is not None:
            mine, theirs = self.generator_images, other.generator_images
            return set(mine) == set(theirs) and all(
                self.cod.equal(mine[k], theirs[k]) for k in mine
            )
        return set(self.table) == set(other.table) and all(
            self.cod.equal(self.table[k], other.table[k]) for k in self.table
        )


def apply_hom(f: GroupHom, x):
    """Image of an element of f's domain."""
    if isinstance(f.dom, Raag):
        return evaluate_word(f.generator_images, as_word(x), f.cod)
    if x not in f.table:
        raise UnknownElement(f"{x!r} is not an element of the domain")
    return f.table[x]


def evaluate_word(images: Mapping[str, object], w: Iterable, h: GroupHandle):
    """Product in h of the images of a word's letters, signs applied."""
    acc = h.identity_element()
    for gen, sign in as_word(w):
        if gen not in images:
            raise UnknownGenerator(f"no image given for generator {gen!r}")
        x = images[gen]
        if sign < 0:
            x = h.invert(x)
        acc = h.multiply(acc, x)
    return acc


def hom_check(f: GroupHom) -> bool:
    """Whether f respects the domain's relations.

    Presented domain: images of adjacent generators must commute (an
    edgeless presentation imposes nothing).  Finite domain: the full
    f(ab) = f(a)f(b) table is checked.
    """
    if isinstance(f.dom, Raag):
        images = f.generator_images
        if images is None:
            raise MissingImage("a presented domain needs generator images")
        for gen in f.dom.generators:
            if gen not in images:
                raise MissingImage(f"no image given for generator {gen!r}")
        return all(
            f.cod.commutes(images[u], images[v]) for u, v in f.dom.presentation.edges
        )
    if f.table is None:
        raise MissingImage("a finite domain needs a full element table")
    for a in f.dom.elements:
        if a not in f.table:
            raise MissingImage(f"no image given for element {a!r}")
    return all(
        f.cod.equal(f.table[f.dom.multiply(a, b)], f.cod.multiply(f.table[a], f.table[b]))
        for a in f.dom.elements
        for b in f.dom.elements
    )


def make_group_hom(
    dom: GroupHandle,
    cod: GroupHandle,
    generator_images: Mapping[str, object] | None = None,
    table: Mapping[str, str] | None = None,
) -> GroupHom:
    """Validated constructor: images complete and in the codomain, and the
    homomorphism property holds."""
    if isinstance(dom, Raag):
        if generator_images is None:
            raise MissingImage("a presented domain needs generator images")
        images = {}
        for gen in dom.generators:
            if gen not in generator_images:
                raise MissingImage(f"no image given for generator {gen!r}")
            images[gen] = cod.validate_element(generator_images[gen])
        f = GroupHom(dom, cod, generator_images=images)
    else:
        if table is None:
            raise MissingImage("a finite domain needs a full element table")
        full = {}
        for a in dom.elements:
            if a not in table:
                raise MissingImage(f"no image given for element {a!r}")
            full[a] = cod.validate_element(table[a])
        f = GroupHom(dom, cod, table=full)
    if not hom_check(f):
        raise InvalidHom("the assignment does not respect the domain's relations")
    return f


def identity_group_hom(h: GroupHandle) -> GroupHom:
    if isinstance(h, Raag):
        return GroupHom(h, h, generator_images={v: ((v, 1),) for v in h.generators})
    return GroupHom(h, h, table={x: x for x in h.elements})


def compose_group_homs(f: GroupHom, g: GroupHom) -> GroupHom:
    """The composite g after f."""
    if f.cod != g.dom:
        raise InvalidHom("codomain of the first hom differs from domain of the second")
    if isinstance(f.dom, Raag):
        images = {v: apply_hom(g, f.generator_images[v]) for v in f.dom.generators}
        return GroupHom(f.dom, g.cod, generator_images=images)
    return GroupHom(f.dom, g.cod, table={x: apply_hom(g, f.table[x]) for x in f.dom.elements})


def raag_on_hom(f: GraphHom) -> GroupHom:
    """Functorial action on a graph hom: generator v goes to generator f(v).

    Adjacent generators map to equal or adjacent ones, so their images
    always commute and the result is a genuine homomorphism.
    """
    if not is_graph_hom(f.dom, f.cod, f.vmap):
        raise InvalidHom("the vertex map is not a graph homomorphism")
    images = {v: ((f.vmap.mapping[v], 1),) for v in f.dom.vertices}
    return GroupHom(Raag(f.dom), Raag(f.cod), generator_images=images)


def enumerate_homs_raag_to_finite(raag: Raag, h: FiniteGroup) -> list[GroupHom]:
    """All homomorphisms from a presented group to a finite group, as
    generator assignments with adjacent images commuting, in storage order."""
    gens = raag.generators.labels
    pos = {v: i for i, v in enumerate(gens)}
    earlier: dict[str, list[str]] = {v: [] for v in gens}
    for u, v in raag.presentation.edges:
        if pos[u] > pos[v]:
            u, v = v, u
        earlier[v].append(u)

    out: list[GroupHom] = []
    assignment: dict[str, str] = {}

    def extend(i: int) -> None:
        if i == len(gens):
            out.append(GroupHom(raag, h, generator_images=dict(assignment)))
            return
        v = gens[i]
        for elem in h.elements:
            if all(h.commutes(assignment[u], elem) for u in earlier[v]):
                assignment[v] = elem
                extend(i + 1)
                del assignment[v]

    extend(0)
    return out


def _generators_and_expressions(h: FiniteGroup) -> tuple[list[str], dict[str, tuple[str, ...]]]:
    """A generating sequence plus, for every element, some product of those
    generators reaching it (greedy, deterministic)."""
    gens: list[str] = []
    exprs: dict[str, tuple[str, ...]] = {h.identity: ()}
    for label in h.elements:
        if label in exprs:
            continue
        gens.append(label)
        exprs = {h.identity: ()}
        queue = deque((h.identity,))
        while queue:
            x = queue.popleft()
            for g in gens:
                y = h.multiply(x, g)
                if y not in exprs:
                    exprs[y] = exprs[x] + (g,)
                    queue.append(y)
    return gens, exprs


def enumerate_homs_finite_to_finite(dom: FiniteGroup, cod: FiniteGroup) -> list[GroupHom]:
    """All homomorphisms between two finite groups, by trying every image of
    a generating set and validating the induced table."""
    gens, exprs = _generators_and_expressions(dom)
    out: list[GroupHom] = []
    for images in product(cod.elements.labels, repeat=len(gens)):
        lookup = dict(zip(gens, images))
        table: dict[str, str] = {}
        for x in dom.elements:
            acc = cod.identity
            for g in exprs[x]:
                acc = cod.multiply(acc, lookup[g])
            table[x] = acc
        if all(
            table[dom.multiply(a, b)] == cod.multiply(table[a], table[b])
            for a in dom.elements
            for b in dom.elements
        ):
            out.append(GroupHom(dom, cod, table=table))
    return out


def commutation_counit(h: FiniteGroup) -> GroupHom:
    """The evaluation hom from the group presented by h's commutation graph
    onto h: the generator named by an element goes to that element."""
    raag = Raag(commutation_graph(h))
    return GroupHom(raag, h, generator_images={x: x for x in h.elements})


# ---------------------------------------------------------------------------
# JSON forms

def word_to_json(w: Word) -> list[str]:
    return word_to_tokens(as_word(w))


def word_from_json(data: object) -> Word:
    if not isinstance(data, list) or not all(isinstance(t, str) for t in data):
        raise MalformedInput("a word must be a JSON array of generator tokens")
    return word_from_tokens(data)


def group_to_json(h: GroupHandle) -> dict:
    if isinstance(h, Raag):
        return {"type": "raag", "presentation": graph_to_json(h.presentation)}
    labels = h.elements.labels
    return {
        "type": "cayley",
        "elements": list(labels),
        "table": [[h.table[(a, b)] for b in labels] for a in labels],
    }


def group_from_json(data: object, closure_cap: int = CLOSURE_DEFAULT_CAP) -> GroupHandle:
    if not isinstance(data, dict) or "type" not in data:
        raise MalformedInput('a group must be an object with a "type" field')
    kind = data["type"]
    if kind == "raag":
        if "presentation" not in data:
            raise MalformedInput('a "raag" group needs a "presentation" graph')
        return Raag(graph_from_json(data["presentation"]))
    if kind == "free":
        if "generators" not in data:
            raise MalformedInput('a "free" group needs a "generators" array')
        return free_group_on(finite_set_from_json(data["generators"]))
    if kind == "cayley":
        if "elements" not in data or "table" not in data:
            raise MalformedInput('a "cayley" group needs "elements" and "table"')
        return finite_group_from_table(finite_set_from_json(data["elements"]), data["table"])
    if kind == "perm":
        if "degree" not in data or "generators" not in data:
            raise MalformedInput('a "perm" group needs "degree" and "generators"')
        degree, gens = data["degree"], data["generators"]
        if not isinstance(degree, int) or not isinstance(gens, list):
            raise MalformedInput('"degree" must be an integer and "generators" an array')
        return finite_group_from_permutations(degree, gens, cap=closure_cap)
    raise MalformedInput(f"unknown group type {kind!r}")
