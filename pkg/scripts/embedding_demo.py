#!/usr/bin/env python3
"""Walk through the embedding on a few concrete inputs.

Shows a path graph going in and coming back unchanged, a comma object over
an abelian group coreflecting to a complete graph, the standard
noncommuting witness in S3 coreflecting to a discrete graph, and a couple
of word reductions in the presented group of a path.
"""

import json

from commagraph import (
    comma,
    coreflect,
    cyclic_group,
    embed_graph,
    make_comma_object,
    make_graph,
    make_set,
    raag_is_identity,
    raag_of,
    raag_reduce,
    symmetric_group_3,
    word_from_tokens,
    word_to_tokens,
)
from commagraph.graphs import graph_to_json


def show(title, data):
    print(f"--- {title}")
    print(json.dumps(data, indent=2))


def main() -> None:
    path = make_graph(make_set(["a", "b", "c"]), [("a", "b"), ("b", "c")])
    embedded = embed_graph(path)
    show("path graph a-b-c as a comma object", comma.comma_object_to_json(embedded))
    show("its coreflection (the path again)", graph_to_json(coreflect(embedded).graph))

    abelian = make_comma_object(make_set(["x", "y"]), cyclic_group(4), {"x": "g", "y": "g2"})
    show("two generators in a cyclic group coreflect to a complete graph",
         graph_to_json(coreflect(abelian).graph))

    witness = make_comma_object(make_set(["x", "y"]), symmetric_group_3(), {"x": "213", "y": "231"})
    show("a transposition and a rotation coreflect to a discrete graph",
         graph_to_json(coreflect(witness).graph))

    raag = raag_of(path)
    for tokens in (["a", "b", "-a", "-b"], ["a", "c", "-a", "-c"], ["b", "a", "c", "-a"]):
        word = word_from_tokens(tokens)
        reduced = raag_reduce(raag, word)
        print(
            f"word {' '.join(tokens)}  ->  {' '.join(word_to_tokens(reduced)) or '(empty)'}"
            f"  identity={raag_is_identity(raag, word)}"
        )


if __name__ == "__main__":
    main()
