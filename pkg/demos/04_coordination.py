"""Coordinator tensors: contraction versus the entry-wise closed form.

Run with:  python3 demos/04_coordination.py
"""

import numpy as np

from frobcoord import (SpaceAssignment, Tensor, build_network,
                       coordinate_closed_form, coordinator_tensor,
                       coordinator_type, ditransitive_coordination,
                       evaluate, parse_type, random_tensor, reduce)

spaces = SpaceAssignment({"n": 3, "s": 2})
rng = np.random.default_rng(1)

# For an atomic type the coordinator is a three-legged copy spider:
# entry one exactly when all three indices agree.
spider = coordinator_tensor(parse_type("n"), spaces)
print("noun coordinator dims:", spider.dims)
print("C[i,j,k] = 1 iff i == j == k:", spider.array[1, 1, 1],
      spider.array[0, 1, 1])

# Contracting  apples (x) conj (x) oranges  along the ternary derivation
# gives exactly the entry-wise product of the two vectors.
noun = parse_type("n")
apples = random_tensor(spaces.wires(noun), rng)
oranges = random_tensor(spaces.wires(noun), rng)
derivation = reduce([noun, coordinator_type(noun), noun], noun)
explicit = evaluate(build_network(derivation, [apples, spider, oranges],
                                  spaces))
closed = coordinate_closed_form(apples, oranges)
assert explicit.isclose(closed)
print("\napples-and-oranges explicit == apples (*) oranges:",
      closed.array)

# For a compound type the coordinator is one spider per atomic factor,
# with the outer blocks mirrored.  Verb-phrase coordination copies the
# shared subject into both verbs and merges the two sentence wires:
vp = parse_type("n.r s")
john = random_tensor(spaces.wires(noun), rng)
sleeps = random_tensor(spaces.wires(vp), rng)
snores = random_tensor(spaces.wires(vp), rng)
conj_vp = coordinator_tensor(vp, spaces)
derivation = reduce([noun, vp, coordinator_type(vp), vp], parse_type("s"))
sentence = evaluate(build_network(
    derivation, [john, sleeps, conj_vp, snores], spaces))
compact = john.array @ (sleeps.array * snores.array)
assert np.allclose(sentence.array, compact)
print("john sleeps-and-snores == john^T x (sleeps (*) snores):",
      sentence.array)

# The same recipe scales to ditransitives: both the subject and the final
# object are copied into the two clauses.
dt = parse_type("n.r s n.l n.l")
bank, mary, johnn, loan = (random_tensor(spaces.wires(noun), rng)
                           for _ in range(4))
grant = random_tensor(spaces.wires(dt), rng)
deny = random_tensor(spaces.wires(dt), rng)
via_network = ditransitive_coordination(bank, grant, deny, loan, mary,
                                        johnn, mode="explicit")
via_formula = ditransitive_coordination(bank, grant, deny, loan, mary,
                                        johnn, mode="closed-form")
assert via_network.isclose(via_formula)
print("bank granted mary but denied john a loan:", via_formula.array)
