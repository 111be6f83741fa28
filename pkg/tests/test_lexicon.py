import numpy as np
import pytest

from frobcoord import errors
from frobcoord.lexicon import (SplitMix64, dumps_lexicon,
                               generate_random_lexicon, load_lexicon,
                               parse_lexicon, save_lexicon)
from frobcoord.pregroup import parse_type
from frobcoord.semiring import BOOLEAN, REAL

from oracles import coordinator_caps_and_merge

GOOD = """
#semiring real
#type n 4
#type s 3
john : n = [0.1, 0.2, 0.0, 1.0]
and : s.r s s.l = @conj
walks : n.r s = @random(42)
is : n.r n = @identity
"""


def test_splitmix_reference_values():
    # Standard test vector for seed 0 (0xe220a8397b1dcdaf, ...).
    stream = SplitMix64(0)
    assert [stream.next_int() for _ in range(3)] == [
        16294208416658607535, 7960286522194355700, 487617019471545679]
    unit = SplitMix64(0).next_unit()
    assert unit == (16294208416658607535 >> 11) * 2.0 ** -53
    assert 0.0 <= unit < 1.0


def test_parse_basic_entries():
    lex = parse_lexicon(GOOD)
    assert lex.semiring is REAL
    assert lex.spaces.dim("n") == 4
    assert lex["john"].type == parse_type("n")
    assert lex["john"].tensor.array.tolist() == [0.1, 0.2, 0.0, 1.0]
    assert not lex["john"].is_coordinator
    assert lex["and"].is_coordinator
    assert np.array_equal(lex["is"].tensor.array, np.eye(4))
    assert "walks" in lex and "flies" not in lex


def test_conj_entry_matches_brute_force_network():
    lex = parse_lexicon(GOOD)
    want = coordinator_caps_and_merge([3])
    assert np.allclose(lex["and"].tensor.array, want)
    assert lex["and"].tensor.dims == (3, 3, 3)


def test_loaded_tensors_type_check():
    lex = parse_lexicon(GOOD)
    for entry in lex:
        assert entry.tensor.wires == lex.spaces.wires(entry.type)


def test_dim_mismatch_names_word():
    bad = "#type n 3\njohn : n = [1, 2]\n"
    with pytest.raises(errors.DimMismatch) as exc:
        parse_lexicon(bad)
    assert "john" in str(exc.value)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(errors.ParseError) as exc:
        parse_lexicon("#type n 2\n\nbroken line\n")
    assert exc.value.line == 3
    with pytest.raises(errors.ParseError):
        parse_lexicon("#semiring quaternion\n")
    with pytest.raises(errors.ParseError):
        parse_lexicon("#type n 2\n#type n 3\n")
    with pytest.raises(errors.ParseError):
        parse_lexicon("#type n 2\na : n = [1, 2]\na : n = [2, 1]\n")
    with pytest.raises(errors.ParseError):
        parse_lexicon("#type n 2\na : n = @bogus\n")
    with pytest.raises(errors.ParseError):
        parse_lexicon("#type s 2\nand : s.r s s.r = @conj\n")


def test_undeclared_symbol():
    with pytest.raises(errors.UndeclaredSymbol) as exc:
        parse_lexicon("#type n 2\njohn : n q.l = [1]\n")
    assert exc.value.word == "john"
    assert exc.value.base == "q"


def test_identity_requires_square_order_two():
    with pytest.raises(errors.DimMismatch):
        parse_lexicon("#type n 2\n#type s 3\nis : n.r s = @identity\n")
    with pytest.raises(errors.DimMismatch):
        parse_lexicon("#type n 2\nis : n = @identity\n")


def test_round_trip_through_file(tmp_path):
    rng = np.random.default_rng(0)
    source = parse_lexicon(GOOD)
    # Add a literal entry with awkward floating-point values.
    text = dumps_lexicon(source) + \
        f"pi_ish : n = [{np.pi!r}, {1/3!r}, {2**-40!r}, {1e300!r}]\n"
    first = parse_lexicon(text)
    path = tmp_path / "lex.txt"
    save_lexicon(first, path)
    second = load_lexicon(path)
    assert second.semiring is first.semiring
    assert second.spaces == first.spaces
    assert second.words() == first.words()
    for word in first.words():
        a, b = first[word], second[word]
        assert a.type == b.type
        assert a.spec == b.spec
        assert np.array_equal(a.tensor.array, b.tensor.array)


def test_boolean_lexicon_round_trip(tmp_path):
    text = ("#semiring bool\n#type n 3\n"
            "cats : n = [1, 0, 1]\n"
            "pets : n = @random(5)\n")
    lex = parse_lexicon(text)
    assert lex.semiring is BOOLEAN
    assert lex["cats"].tensor.array.tolist() == [True, False, True]
    assert set(np.unique(lex["pets"].tensor.array)) <= {True, False}
    path = tmp_path / "bool.txt"
    save_lexicon(lex, path)
    again = load_lexicon(path)
    assert np.array_equal(again["cats"].tensor.array,
                          lex["cats"].tensor.array)
    assert np.array_equal(again["pets"].tensor.array,
                          lex["pets"].tensor.array)


def test_random_entries_are_deterministic():
    a = parse_lexicon("#type n 2\n#type s 2\nw : n.r s = @random(42)\n")
    b = parse_lexicon("#type n 2\n#type s 2\nw : n.r s = @random(42)\n")
    c = parse_lexicon("#type n 2\n#type s 2\nw : n.r s = @random(43)\n")
    assert np.array_equal(a["w"].tensor.array, b["w"].tensor.array)
    assert not np.array_equal(a["w"].tensor.array, c["w"].tensor.array)
    # The documented generator: splitmix64 stream mapped to [0, 1).
    stream = SplitMix64(42)
    want = [stream.next_unit() for _ in range(4)]
    assert a["w"].tensor.flat.tolist() == want


def test_boolean_random_thresholded():
    lex = parse_lexicon("#semiring bool\n#type n 8\nw : n = @random(1)\n")
    stream = SplitMix64(1)
    want = [stream.next_unit() >= 0.5 for _ in range(8)]
    assert lex["w"].tensor.array.tolist() == want


def test_generate_random_lexicon_determinism():
    grammar = {"john": "n", "sleeps": "n.r s"}
    sp = {"n": 3, "s": 2}
    a = generate_random_lexicon(grammar, sp, seed=9)
    b = generate_random_lexicon(grammar, sp, seed=9)
    c = generate_random_lexicon(grammar, sp, seed=10)
    for word in grammar:
        assert np.array_equal(a[word].tensor.array, b[word].tensor.array)
    assert not np.array_equal(a["john"].tensor.array,
                              c["john"].tensor.array)
    assert a["sleeps"].tensor.wires == a.spaces.wires(parse_type("n.r s"))


def test_generate_random_lexicon_boolean():
    lex = generate_random_lexicon([("cats", "n")], {"n": 6}, seed=3,
                                  semiring=BOOLEAN)
    assert lex["cats"].tensor.array.dtype == np.bool_


def test_load_missing_file():
    with pytest.raises(OSError):
        load_lexicon("/nonexistent/path/lex.txt")
