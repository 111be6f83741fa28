"""Pregroup types and grammaticality checking, step by step.

Run with:  python3 demos/01_pregroup_reduction.py
"""

from frobcoord import (coordinator_type, enumerate_reductions, parse_type,
                       reduce)

# A type is a row of simple types.  Adjoint marks stack and cancel:
# `.r` raises the adjoint order by one, `.l` lowers it.
likes = parse_type("n.r s n.l")
print("transitive verb type:", likes)
print("its right adjoint:   ", likes.adjoint_right())
assert parse_type("n.l.r") == parse_type("n")  # marks cancel

# A sentence is grammatical when the concatenated word types reduce to the
# target by cancelling (b, z) against an adjacent (b, z+1), cup-style.
tokens = [parse_type("n"), likes, parse_type("n")]
derivation = reduce(tokens, parse_type("s"))
print("\n'mary likes musicals' reduces to s")
print("links over the flattened row:", sorted(derivation.links))
print("surviving wire indices:      ", derivation.residual)
print("residual type:               ", derivation.residual_type())

# Word order matters: the same bag of types in the wrong order fails.
assert reduce([likes, parse_type("n")], parse_type("s")) is None
print("\n'likes mary' -> ungrammatical (reduce returns None)")

# When several non-crossing reductions exist they can be enumerated in a
# deterministic order; the first one is what reduce() returns.
row = [parse_type("n n.r n n.r")]
for d in enumerate_reductions(row, parse_type("n n.r"), cap=10):
    print("derivation:", sorted(d.links))

# Conjunction words take the type  x.r x x.l  for conjuncts of type x,
# which cancels against a conjunct on each side and leaves one x.
x = parse_type("n.r s")
print("\ncoordinator type for verb phrases:", coordinator_type(x))
ternary = reduce([x, coordinator_type(x), x], x)
print("x conj x -> x with links:", sorted(ternary.links))
