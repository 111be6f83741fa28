"""Truth-valued semantics: vectors as sets, coordination as intersection.

Run with:  python3 demos/05_boolean_relations.py
"""

import numpy as np

from frobcoord import (BOOLEAN, SpaceAssignment, Tensor, build_network,
                       coordinate_closed_form, coordinator_tensor,
                       coordinator_type, evaluate, parse_type, reduce)

# Over the boolean carrier a noun vector is the indicator of a subset of
# the universe of discourse.
universe = ["ada", "bob", "cat", "dog"]
spaces = SpaceAssignment({"n": 4, "s": 3})
noun = parse_type("n")

furry = Tensor(spaces.wires(noun), [0, 0, 1, 1], BOOLEAN)
loud = Tensor(spaces.wires(noun), [0, 1, 1, 0], BOOLEAN)
as_set = lambda v: {universe[i] for i in range(4) if v.array[i]}
print("furry:", as_set(furry))
print("loud: ", as_set(loud))

# Coordinating the two indicators intersects the sets, whether done by
# the closed form or by contracting the coordinator tensor.
both = coordinate_closed_form(furry, loud)
print("furry and loud:", as_set(both))
assert as_set(both) == as_set(furry) & as_set(loud)

derivation = reduce([noun, coordinator_type(noun), noun], noun)
explicit = evaluate(build_network(
    derivation, [furry, coordinator_tensor(noun, spaces, BOOLEAN), loud],
    spaces))
assert explicit.isclose(both)

# A transitive verb is a relation; coordinating two verbs intersects the
# relations triple by triple.
tv = parse_type("n.r s n.l")
rng = np.random.default_rng(0)
likes = Tensor(spaces.wires(tv), rng.random((4, 3, 4)) >= 0.5, BOOLEAN)
feeds = Tensor(spaces.wires(tv), rng.random((4, 3, 4)) >= 0.5, BOOLEAN)
derivation = reduce([tv, coordinator_type(tv), tv], tv)
conj = coordinator_tensor(tv, spaces, BOOLEAN)
merged = evaluate(build_network(derivation, [likes, conj, feeds], spaces))
triples = lambda m: {t for t in np.ndindex(*m.dims) if m.array[t]}
assert triples(merged) == triples(likes) & triples(feeds)
print("likes-and-feeds keeps", len(triples(merged)), "of",
      len(triples(likes)), "/", len(triples(feeds)), "triples")
