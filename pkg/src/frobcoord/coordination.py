"""Coordinator tensors and the coordination constructions built on them.

A coordinator for conjuncts of type ``x`` lives on the wires of
``x.r  x  x.l``.  Factor-wise it is a product of three-legged copy
spiders, one per atomic factor of ``x``: the spider's legs sit at the
mirrored position of the ``x.r`` block, the factor's own position in the
middle block, and the mirrored position of the ``x.l`` block (adjoints of
a product reverse order, so the outer blocks are flipped).  Contracting a
conjunct into each outer block therefore copies it onto the middle block
entry-wise, which is why coordination admits the compact closed form: the
merge of the two conjunct meanings.
"""

from __future__ import annotations

from functools import reduce as fold

import numpy as np

from .errors import EmptyType, ShapeMismatch
from .evaluator import SpaceAssignment, build_network, evaluate
from .pregroup import PregroupType, SimpleType, coordinator_type, parse_type
from .pregroup import reduce as pregroup_reduce
from .semiring import REAL, Semiring
from .tensor import (Tensor, Wire, contract, frobenius_mu, permute_wires,
                     tensor_product)


def _spider3(base: str, z: int, dim: int, semiring: Semiring) -> Tensor:
    """Three-legged copy spider: entry one iff all three indices agree.

    Legs are typed ``(base^{z+1}, base^{z}, base^{z-1})`` so they slot
    straight into the coordinator's outer-right, middle and outer-left
    blocks.
    """
    arr = np.zeros((dim, dim, dim), dtype=semiring.dtype)
    idx = np.arange(dim)
    arr[idx, idx, idx] = semiring.one
    wires = (Wire(base, z + 1, dim), Wire(base, z, dim),
             Wire(base, z - 1, dim))
    return Tensor(wires, arr, semiring, copy=False)


def coordinator_tensor(x: PregroupType, spaces: SpaceAssignment,
                       semiring: Semiring = REAL) -> Tensor:
    """The coordination tensor on the wires of ``coordinator_type(x)``.

    Equal to the cap-then-merge network — two nested identity caps with
    the merge applied between them — but built directly as a wire-permuted
    product of per-factor copy spiders.
    """
    if not x:
        raise EmptyType("coordinator of the unit type")
    spiders = [_spider3(s.base, s.z, spaces.dim(s.base), semiring)
               for s in x]
    prod = fold(tensor_product, spiders)
    # Spider f occupies source wires (3f, 3f+1, 3f+2); send them to the
    # coordinator layout [x.r reversed | x | x.l reversed].
    k = len(x)
    perm = [3 * (k - 1 - p) for p in range(k)]          # outer-right block
    perm += [3 * p + 1 for p in range(k)]               # middle block
    perm += [3 * (k - 1 - p) + 2 for p in range(k)]     # outer-left block
    return permute_wires(prod, perm)


def coordinate_closed_form(a: Tensor, b: Tensor) -> Tensor:
    """The compact form of coordination: the entry-wise merge of the
    conjunct meanings."""
    if a.wires != b.wires:
        raise ShapeMismatch(f"conjuncts {a!r} and {b!r} differ in shape")
    return frobenius_mu(a, b)


def _spaces_for(tensors) -> SpaceAssignment:
    dims = {}
    for t in tensors:
        for w in t.wires:
            if dims.setdefault(w.base, w.dim) != w.dim:
                raise ShapeMismatch(
                    f"inconsistent dimensions for base {w.base!r}")
    return SpaceAssignment(dims)


def _type_of(tensor: Tensor) -> PregroupType:
    return PregroupType(tuple(SimpleType(w.base, w.z) for w in tensor.wires))


def _pipeline(types, tensors, target: PregroupType,
              spaces: SpaceAssignment) -> Tensor:
    derivation = pregroup_reduce(types, target)
    if derivation is None:
        raise ShapeMismatch(
            f"token types {' | '.join(map(str, types))} do not reduce "
            f"to {target}")
    return evaluate(build_network(derivation, tensors, spaces))


def ditransitive_coordination(subject: Tensor, verb1: Tensor, verb2: Tensor,
                              shared_object: Tensor, obj1: Tensor = None,
                              obj2: Tensor = None,
                              mode: str = "closed-form") -> Tensor:
    """Coordinate two ditransitive clauses that share subject and final
    object, as in "the bank granted Mary but denied John a loan".

    Verbs are order-4 tensors typed ``n.r s n.l n.l`` (last wire takes the
    nearer object).  With ``obj1``/``obj2`` given, the conjuncts are the
    verb-object combinations; without them the bare verbs coordinate and
    ``shared_object`` must be a pair ``(near, far)``.  Both modes compute
    the sentence vector: ``explicit`` contracts the coordinator tensor,
    ``closed-form`` merges the conjuncts entry-wise; they agree.
    """
    if (obj1 is None) != (obj2 is None):
        raise ShapeMismatch("provide both per-conjunct objects or neither")
    semiring = subject.semiring
    if obj1 is not None:
        nouns = [subject, obj1, obj2, shared_object]
        shared = [shared_object]
    else:
        near, far = shared_object
        nouns = [subject, near, far]
        shared = [near, far]
    spaces = _spaces_for(nouns + [verb1, verb2])

    if mode == "closed-form":
        conjuncts = []
        for verb, obj in ((verb1, obj1), (verb2, obj2)):
            if obj is not None:
                verb = contract(tensor_product(verb, obj), 3, 4)
            conjuncts.append(verb)
        merged = coordinate_closed_form(*conjuncts)
        out = contract(tensor_product(subject, merged), 0, 1)
        # The last verb wire takes the nearer object, so consume in order.
        for obj in shared:
            out = contract(tensor_product(out, obj), out.order - 1, out.order)
        return out
    if mode != "explicit":
        raise ValueError(f"mode must be explicit or closed-form, got {mode!r}")

    x = _type_of(verb1) if obj1 is None \
        else _type_of(contract(tensor_product(verb1, obj1), 3, 4))
    conj = coordinator_tensor(x, spaces, semiring)
    if obj1 is not None:
        types = [_type_of(subject), _type_of(verb1), _type_of(obj1),
                 coordinator_type(x), _type_of(verb2), _type_of(obj2),
                 _type_of(shared_object)]
        tensors = [subject, verb1, obj1, conj, verb2, obj2, shared_object]
    else:
        near, far = shared_object
        types = [_type_of(subject), _type_of(verb1), coordinator_type(x),
                 _type_of(verb2), _type_of(near), _type_of(far)]
        tensors = [subject, verb1, conj, verb2, near, far]
    return _pipeline(types, tensors, parse_type("s"), spaces)


def stripping_sentence(subject: Tensor, verb: Tensor, obj1: Tensor,
                       obj2: Tensor, spaces: SpaceAssignment = None) -> Tensor:
    """Meaning of the elliptical "subject verb obj1, and obj2 as well".

    Subject and verb wires pass through unchanged while the two object
    wires are merged through a noun coordinator, so the result equals the
    spelled-out "subject verb (obj1 and obj2)".
    """
    for noun in (subject, obj1, obj2):
        if noun.order != 1:
            raise ShapeMismatch(f"expected an order-1 noun, got {noun!r}")
    if verb.order != 3:
        raise ShapeMismatch(f"expected an order-3 verb, got {verb!r}")
    if spaces is None:
        spaces = _spaces_for([subject, verb, obj1, obj2])
    x = _type_of(obj1)
    conj = coordinator_tensor(x, spaces, subject.semiring)
    types = [_type_of(subject), _type_of(verb), x, coordinator_type(x), x]
    tensors = [subject, verb, obj1, conj, obj2]
    return _pipeline(types, tensors, parse_type("s"), spaces)
