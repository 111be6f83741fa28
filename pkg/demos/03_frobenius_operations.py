"""The copy/merge/insert/delete operations and their laws.

Run with:  python3 demos/03_frobenius_operations.py
"""

import numpy as np

from frobcoord import (Tensor, Wire, frobenius_delta, frobenius_iota,
                       frobenius_mu, frobenius_mu_matrix, frobenius_zeta)

w = Wire("n", 0, 3)
u = Tensor([w], [1.0, 2.0, 3.0])
v = Tensor([w], [0.5, 0.0, 2.0])

# copy: a vector becomes the diagonal matrix holding its weights
copied = frobenius_delta(u)
print("delta(u) =\n", copied.array)

# merge: two same-shape tensors multiply entry by entry
merged = frobenius_mu(u, v)
print("mu(u, v) =", merged.array)

# merge of a matrix: its diagonal, so merge-after-copy is the identity
assert frobenius_mu_matrix(copied).isclose(u)
print("mu(delta(u)) == u   (specialness)")

# delete sums the weights; insert produces the all-ones vector, which is
# the unit of merging
print("iota(u) =", frobenius_iota(u))
ones = frobenius_zeta("n", 3)
assert frobenius_mu(ones, v).isclose(v)
print("mu(ones, v) == v    (unit law)")

# the two-sided condition: copying one factor then merging with the other
# gives the same matrix on either side, namely diag of the merge
left = u.array[:, None] * frobenius_delta(v).array
right = frobenius_delta(u).array * v.array[None, :]
middle = frobenius_delta(frobenius_mu(u, v)).array
assert np.allclose(left, middle) and np.allclose(right, middle)
print("the two-sided copy/merge condition holds:\n", middle)
