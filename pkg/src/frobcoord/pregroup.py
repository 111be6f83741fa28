"""Pregroup types and contraction-only reduction.

Types are sequences of simple types, each a base symbol with an integer
adjoint order ``z`` (``n.l`` has z = -1, ``n.r.r`` has z = +2, adjoints
cancel: ``n.l.r`` is plain ``n``).  A sequence of word types is
grammatical for a target when some set of contraction links — pairwise
disjoint, non-crossing, each pairing ``(b, z)`` with ``(b, z+1)`` and
enclosing no surviving wire — leaves exactly the target.

Surface syntax for type strings: base symbols are identifiers, adjoint
marks are ``.l`` / ``.r`` suffixes applied left to right and stackable,
simple types are separated by whitespace.

>>> print(parse_type("n.r s n.l"))
n.r s n.l
>>> parse_type("n.l.r") == parse_type("n")
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import islice

from .errors import (EmptyType, InvalidDerivation, TypeSyntaxError,
                     UnknownBaseSymbol)


@dataclass(frozen=True)
class SimpleType:
    """A base symbol with an iterated-adjoint order."""

    base: str
    z: int = 0

    @property
    def l(self) -> "SimpleType":
        """Left adjoint; cancels with :attr:`r`."""
        return SimpleType(self.base, self.z - 1)

    @property
    def r(self) -> "SimpleType":
        """Right adjoint."""
        return SimpleType(self.base, self.z + 1)

    def __str__(self):
        marks = ".l" * -self.z if self.z < 0 else ".r" * self.z
        return f"{self.base}{marks}"


@dataclass(frozen=True)
class PregroupType:
    """An ordered product of simple types; the empty product is the unit."""

    simples: tuple[SimpleType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "simples", tuple(self.simples))

    def __len__(self):
        return len(self.simples)

    def __iter__(self):
        return iter(self.simples)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return PregroupType(self.simples[key])
        return self.simples[key]

    def __bool__(self):
        return bool(self.simples)

    def __matmul__(self, other: "PregroupType") -> "PregroupType":
        return PregroupType(self.simples + other.simples)

    def adjoint_left(self) -> "PregroupType":
        """Left adjoint; reverses the factor order."""
        return PregroupType(tuple(s.l for s in reversed(self.simples)))

    def adjoint_right(self) -> "PregroupType":
        """Right adjoint; reverses the factor order."""
        return PregroupType(tuple(s.r for s in reversed(self.simples)))

    def __str__(self):
        return " ".join(str(s) for s in self.simples) if self.simples else "1"


_SIMPLE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)((?:\.[lr])*)$")


def parse_type(text: str, bases=None) -> PregroupType:
    """Parse the surface syntax into a :class:`PregroupType`.

    ``bases``, when given, is the set of declared base symbols; anything
    else raises :class:`UnknownBaseSymbol`.  Malformed tokens raise
    :class:`TypeSyntaxError` carrying the character position.
    """
    simples = []
    for token in re.finditer(r"\S+", text):
        m = _SIMPLE.match(token.group())
        if m is None or m.end() != len(token.group()):
            raise TypeSyntaxError(f"bad simple type {token.group()!r}",
                                  token.start())
        base, marks = m.group(1), m.group(2)
        if bases is not None and base not in bases:
            raise UnknownBaseSymbol(base, token.start())
        z = marks.count(".r") - marks.count(".l")
        simples.append(SimpleType(base, z))
    return PregroupType(tuple(simples))


def coordinator_type(x: PregroupType) -> PregroupType:
    """The conjunction type for conjuncts of type ``x``: ``x.r  x  x.l``.

    >>> print(coordinator_type(parse_type("n.r s")))
    s.r n.r.r n.r s s.l n
    """
    if not x:
        raise EmptyType("coordinator of the unit type")
    return x.adjoint_right() @ x @ x.adjoint_left()


@dataclass(frozen=True)
class Derivation:
    """A witness of grammaticality: contraction links over a token row.

    ``links`` pair flattened simple-type indices ``(i, j)``, ``i < j``;
    ``residual`` lists the surviving indices left to right.
    """

    token_types: tuple[PregroupType, ...]
    links: frozenset[tuple[int, int]]
    residual: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "token_types", tuple(self.token_types))
        object.__setattr__(self, "links", frozenset(self.links))
        object.__setattr__(self, "residual", tuple(self.residual))
        self.validate()

    @cached_property
    def flattened(self) -> tuple[SimpleType, ...]:
        return tuple(s for t in self.token_types for s in t)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for t in self.token_types:
            out.append(acc)
            acc += len(t)
        return tuple(out)

    def token_wire(self, flat_index: int) -> tuple[int, int]:
        """Map a flattened index to ``(token, wire-within-token)``."""
        for tok in range(len(self.token_types) - 1, -1, -1):
            if self.offsets[tok] <= flat_index:
                return tok, flat_index - self.offsets[tok]
        raise IndexError(flat_index)

    def residual_type(self) -> PregroupType:
        flat = self.flattened
        return PregroupType(tuple(flat[i] for i in self.residual))

    def validate(self):
        """Check every structural invariant; raise :class:`InvalidDerivation`."""
        flat = self.flattened
        n = len(flat)
        seen = set()
        for (i, j) in self.links:
            if not (0 <= i < j < n):
                raise InvalidDerivation(f"link ({i}, {j}) out of range")
            if i in seen or j in seen:
                raise InvalidDerivation(f"link ({i}, {j}) reuses an index")
            seen.update((i, j))
            a, b = flat[i], flat[j]
            if a.base != b.base or b.z != a.z + 1:
                raise InvalidDerivation(
                    f"link ({i}, {j}) pairs {a} with {b}")
        for (i, j) in self.links:
            for (k, l) in self.links:
                if i < k < j < l:
                    raise InvalidDerivation(
                        f"links ({i}, {j}) and ({k}, {l}) cross")
        expected = tuple(p for p in range(n) if p not in seen)
        if self.residual != expected:
            raise InvalidDerivation(
                f"residual {self.residual} != unlinked indices {expected}")
        for r in self.residual:
            for (i, j) in self.links:
                if i < r < j:
                    raise InvalidDerivation(
                        f"surviving wire {r} is trapped under link ({i}, {j})")


def _derivation_search(flat, target):
    """Yield link sets in lexicographic order of their sorted link lists.

    Walks the flattened row left to right keeping a stack of open link
    ends.  At each position the choices are tried in the order: close the
    top of the stack, open a new link, survive as residual (stack must be
    empty).  That order makes the first yield the canonical derivation.
    States proven hopeless are memoised by (position, open types, progress
    into the target) so backtracking stays cheap.
    """
    n = len(flat)
    t_sig = tuple((s.base, s.z) for s in target)
    t_len = len(t_sig)
    # For the "open" move to be worth trying, a matching closer must exist
    # somewhere to the right.
    closer_after = {}
    for p in range(n - 1, -1, -1):
        closer_after[(flat[p].base, flat[p].z, p)] = any(
            flat[q].base == flat[p].base and flat[q].z == flat[p].z + 1
            for q in range(p + 1, n))
    dead = set()
    stack: list[int] = []
    links: list[tuple[int, int]] = []

    def walk(p, tpos):
        if p == n:
            if not stack and tpos == t_len:
                yield tuple(sorted(links))
            return
        remaining = n - p
        needed = len(stack) + (t_len - tpos)
        if remaining < needed or (remaining - needed) % 2:
            return
        key = (p, tuple((flat[s].base, flat[s].z) for s in stack), tpos)
        if key in dead:
            return
        s = flat[p]
        fruitful = False
        if stack:
            top = flat[stack[-1]]
            if top.base == s.base and s.z == top.z + 1:
                opened = stack.pop()
                links.append((opened, p))
                for d in walk(p + 1, tpos):
                    fruitful = True
                    yield d
                links.pop()
                stack.append(opened)
        if closer_after[(s.base, s.z, p)]:
            stack.append(p)
            for d in walk(p + 1, tpos):
                fruitful = True
                yield d
            stack.pop()
        if not stack and tpos < t_len and (s.base, s.z) == t_sig[tpos]:
            for d in walk(p + 1, tpos + 1):
                fruitful = True
                yield d
        if not fruitful:
            dead.add(key)

    yield from walk(0, 0)


def _as_derivation(token_types, link_list) -> Derivation:
    linked = {i for pair in link_list for i in pair}
    n = sum(len(t) for t in token_types)
    residual = tuple(p for p in range(n) if p not in linked)
    return Derivation(tuple(token_types), frozenset(link_list), residual)


def reduce(tokens, target: PregroupType):
    """The canonical derivation reducing ``tokens`` to ``target``, or None.

    The canonical derivation is the first in lexicographic order of the
    sorted link lists, which realises the leftmost-innermost linking
    policy.  ``None`` means ungrammatical.

    >>> ts = [parse_type("n"), parse_type("n.r s n.l"), parse_type("n")]
    >>> sorted(reduce(ts, parse_type("s")).links)
    [(0, 1), (3, 4)]
    """
    if not tokens:
        raise EmptyType("cannot reduce an empty token sequence")
    flat = tuple(s for t in tokens for s in t)
    for link_list in _derivation_search(flat, target):
        return _as_derivation(tokens, link_list)
    return None


def enumerate_reductions(tokens, target: PregroupType, cap: int):
    """Up to ``cap`` derivations, lexicographic on sorted link lists.

    The first element, when any exist, is exactly the result of
    :func:`reduce`.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    if not tokens:
        raise EmptyType("cannot reduce an empty token sequence")
    flat = tuple(s for t in tokens for s in t)
    return [_as_derivation(tokens, link_list)
            for link_list in islice(_derivation_search(flat, target), cap)]
