"""Exception hierarchy shared by all modules."""


class FrobcoordError(Exception):
    """Base class for every error raised by this package."""


class DimMismatch(FrobcoordError):
    """Two wires (or a tensor and its data) disagree on dimension."""


class TypeMismatch(FrobcoordError):
    """Wires paired in type-checked mode are not adjoint-compatible."""


class ArityError(FrobcoordError):
    """A tensor has the wrong number of wires for the operation."""


class ShapeMismatch(FrobcoordError):
    """Wire lists or data shapes do not line up."""


class SemiringMismatch(FrobcoordError):
    """Operands carry elements of different semirings."""


class BadPermutation(FrobcoordError):
    """The argument is not a permutation of the wire indices."""


class TypeSyntaxError(FrobcoordError):
    """A type string failed to parse.

    ``position`` is the character offset of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownBaseSymbol(FrobcoordError):
    """A base symbol is not declared in the grammar."""

    def __init__(self, base, position=None):
        at = f" (at position {position})" if position is not None else ""
        super().__init__(f"unknown base symbol {base!r}{at}")
        self.base = base
        self.position = position


class EmptyType(FrobcoordError):
    """The empty (unit) type is not allowed here."""


class InvalidDerivation(FrobcoordError):
    """A derivation violates one of its structural invariants."""


class MissingSpace(FrobcoordError):
    """A base symbol has no dimension assigned."""


class WireTypeMismatch(FrobcoordError):
    """A word tensor does not match its declared pregroup type."""

    def __init__(self, token, wire, expected, actual):
        super().__init__(
            f"token {token}, wire {wire}: expected {expected}, got {actual}")
        self.token = token
        self.wire = wire
        self.expected = expected
        self.actual = actual


class UngrammaticalSentence(FrobcoordError):
    """The token sequence does not reduce to the target type."""


class UnknownWord(FrobcoordError):
    """A word is missing from the lexicon."""


class CoordinationStructureError(FrobcoordError):
    """A derivation does not use a coordinator in the ternary pattern,
    so the closed-form rewrite is undefined for it."""


class ParseError(FrobcoordError):
    """A lexicon file failed to parse.  ``line`` is 1-based."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UndeclaredSymbol(FrobcoordError):
    """A lexicon entry uses a base symbol with no ``#type`` directive."""

    def __init__(self, word, base, line=None):
        at = f" (line {line})" if line is not None else ""
        super().__init__(f"entry {word!r} uses undeclared symbol {base!r}{at}")
        self.word = word
        self.base = base
        self.line = line
