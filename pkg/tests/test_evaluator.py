import numpy as np
import pytest

from frobcoord import errors
from frobcoord.coordination import coordinator_tensor
from frobcoord.evaluator import (SpaceAssignment, TensorNetwork,
                                 build_network, evaluate, evaluate_sentence)
from frobcoord.lexicon import parse_lexicon
from frobcoord.pregroup import coordinator_type, parse_type, reduce
from frobcoord.semiring import BOOLEAN, REAL
from frobcoord.tensor import Tensor, Wire, random_tensor

from oracles import network_loops

SP = SpaceAssignment({"n": 2, "s": 3})


def rt(rng, type_text, sr=REAL, spaces=SP):
    return random_tensor(spaces.wires(parse_type(type_text)), rng, sr)


def test_space_assignment():
    assert SP.dim("n") == 2
    assert SP.wires(parse_type("n.r s")) == (Wire("n", 1, 2), Wire("s", 0, 3))
    with pytest.raises(errors.MissingSpace):
        SP.dim("q")
    with pytest.raises(errors.DimMismatch):
        SpaceAssignment({"n": 0})


def test_build_network_john_sleeps():
    rng = np.random.default_rng(0)
    types = [parse_type("n"), parse_type("n.r s")]
    derivation = reduce(types, parse_type("s"))
    john, sleep = rt(rng, "n"), rt(rng, "n.r s")
    net = build_network(derivation, [john, sleep], SP)
    assert net.edges == [((0, 0), (1, 0))]
    assert net.open_wires == [(1, 1)]
    got = evaluate(net)
    assert np.allclose(got.array, john.array @ sleep.array)


def test_build_network_reports_wire_mismatch():
    types = [parse_type("n"), parse_type("n.r s")]
    derivation = reduce(types, parse_type("s"))
    rng = np.random.default_rng(1)
    john = rt(rng, "n")
    bad = random_tensor([Wire("n", 1, 2), Wire("s", 0, 2)], rng)  # ds wrong
    with pytest.raises(errors.WireTypeMismatch) as exc:
        build_network(derivation, [john, bad], SP)
    assert exc.value.token == 1
    assert exc.value.wire == 1


def test_build_network_rejects_mixed_semirings():
    types = [parse_type("n"), parse_type("n.r s")]
    derivation = reduce(types, parse_type("s"))
    rng = np.random.default_rng(2)
    with pytest.raises(errors.SemiringMismatch):
        build_network(derivation, [rt(rng, "n"), rt(rng, "n.r s", BOOLEAN)],
                      SP)


def test_single_token_network():
    types = [parse_type("n")]
    derivation = reduce(types, parse_type("n"))
    rng = np.random.default_rng(3)
    v = rt(rng, "n")
    net = build_network(derivation, [v], SP)
    assert net.edges == []
    assert evaluate(net).isclose(v)


def test_transitive_sentence_against_loop_oracle():
    rng = np.random.default_rng(4)
    types = [parse_type("n"), parse_type("n.r s n.l"), parse_type("n")]
    derivation = reduce(types, parse_type("s"))
    tensors = [rt(rng, "n"), rt(rng, "n.r s n.l"), rt(rng, "n")]
    net = build_network(derivation, tensors, SP)
    assert len(net.edges) == 2
    assert [w for w in net.open_wires] == [(1, 1)]
    got = evaluate(net)
    want = network_loops([t.array for t in tensors], net.edges,
                         net.open_wires)
    assert np.allclose(got.array, want)


def test_fully_closed_network_returns_scalar_tensor():
    rng = np.random.default_rng(5)
    u, v = rt(rng, "n"), rt(rng, "n.r")
    derivation = reduce([parse_type("n"), parse_type("n.r")], parse_type(""))
    got = evaluate(build_network(derivation, [u, v], SP))
    assert got.order == 0
    assert np.allclose(got.item(), float(u.array @ v.array))


def test_functoriality_on_basis_subjects():
    rng = np.random.default_rng(6)
    sleep = rt(rng, "n.r s")
    types = [parse_type("n"), parse_type("n.r s")]
    derivation = reduce(types, parse_type("s"))
    for i in range(2):
        e = np.zeros(2)
        e[i] = 1.0
        john = Tensor(SP.wires(parse_type("n")), e)
        got = evaluate(build_network(derivation, [john, sleep], SP))
        assert np.allclose(got.array, sleep.array[i])


def test_multilinearity_in_each_word():
    rng = np.random.default_rng(7)
    types = [parse_type("n"), parse_type("n.r s n.l"), parse_type("n")]
    derivation = reduce(types, parse_type("s"))
    fixed = [rt(rng, "n"), rt(rng, "n.r s n.l"), rt(rng, "n")]
    for slot in range(3):
        a = rt(rng, str(types[slot]))
        b = rt(rng, str(types[slot]))
        alpha, beta = 1.75, -0.5
        combo = Tensor(a.wires, alpha * a.array + beta * b.array)

        def run(t):
            tensors = list(fixed)
            tensors[slot] = t
            return evaluate(build_network(derivation, tensors, SP)).array

        assert np.allclose(run(combo), alpha * run(a) + beta * run(b))


@pytest.mark.parametrize("sr", [REAL, BOOLEAN], ids=["real", "bool"])
def test_contraction_order_independence(sr):
    rng = np.random.default_rng(8)
    x = parse_type("n.r s")
    types = [parse_type("n"), x, coordinator_type(x), x]
    derivation = reduce(types, parse_type("s"))
    tensors = [rt(rng, "n", sr), rt(rng, "n.r s", sr),
               coordinator_tensor(x, SP, sr), rt(rng, "n.r s", sr)]
    net = build_network(derivation, tensors, SP)
    base = evaluate(net)
    for _ in range(12):
        order = rng.permutation(len(net.edges))
        shuffled = TensorNetwork(net.nodes, [net.edges[k] for k in order],
                                 net.open_wires)
        assert evaluate(shuffled).isclose(base)


LEX = """
#semiring real
#type n 2
#type s 3
john : n = [1.0, 0.5]
mary : n = [0.25, 1.0]
men : n = @random(10)
women : n = @random(11)
football : n = @random(12)
sleeps : n.r s = @random(1)
snores : n.r s = @random(2)
knit : n.r s = @random(13)
watch : n.r s n.l = @random(3)
and : s.r n.r.r n.r s s.l n = @conj
and_s : s.r s s.l = @conj
"""


@pytest.fixture(scope="module")
def lexicon():
    return parse_lexicon(LEX)


def test_modes_coincide_without_coordination(lexicon):
    e = evaluate_sentence(["john", "sleeps"], lexicon, "s", mode="explicit")
    c = evaluate_sentence(["john", "sleeps"], lexicon, "s",
                          mode="closed-form")
    assert e.isclose(c)


def test_vp_coordination_closed_form(lexicon):
    got = evaluate_sentence(["john", "sleeps", "and", "snores"], lexicon,
                            "s", mode="closed-form")
    john = lexicon["john"].tensor.array
    sleep = lexicon["sleeps"].tensor.array
    snore = lexicon["snores"].tensor.array
    assert np.allclose(got.array, john @ (sleep * snore))
    explicit = evaluate_sentence(["john", "sleeps", "and", "snores"],
                                 lexicon, "s", mode="explicit")
    assert got.isclose(explicit)


def test_sentence_coordination_formula(lexicon):
    words = ["men", "watch", "football", "and_s", "women", "knit"]
    got = evaluate_sentence(words, lexicon, "s", mode="explicit")
    men = lexicon["men"].tensor.array
    watch = lexicon["watch"].tensor.array
    football = lexicon["football"].tensor.array
    women = lexicon["women"].tensor.array
    knit = lexicon["knit"].tensor.array
    first = np.einsum("i,ikj,j->k", men, watch, football)
    second = women @ knit
    assert np.allclose(got.array, first * second)
    closed = evaluate_sentence(words, lexicon, "s", mode="closed-form")
    assert got.isclose(closed)


def test_evaluate_sentence_errors(lexicon):
    with pytest.raises(errors.UnknownWord):
        evaluate_sentence(["john", "flies"], lexicon, "s")
    with pytest.raises(errors.UngrammaticalSentence):
        evaluate_sentence(["sleeps", "john"], lexicon, "s")
    with pytest.raises(errors.WireTypeMismatch):
        evaluate_sentence([("john", "n.r s")], lexicon, "s")
    with pytest.raises(ValueError):
        evaluate_sentence(["john", "sleeps"], lexicon, "s", mode="fast")


def test_declared_types_accepted(lexicon):
    got = evaluate_sentence([("john", "n"), ("sleeps", "n.r s")], lexicon,
                            "s")
    assert got.order == 1


DITRANSITIVE_LEX = """
#semiring real
#type n 2
#type s 3
bank : n = @random(20)
mary : n = @random(21)
john : n = @random(22)
loan : n = @random(23)
granted : n.r s n.l n.l = @random(24)
denied : n.r s n.l n.l = @random(25)
but : n s.r n.r.r n.r s n.l n.l.l s.l n = @conj
"""


def test_ditransitive_sentence_through_lexicon():
    lex = parse_lexicon(DITRANSITIVE_LEX)
    words = ["bank", "granted", "mary", "but", "denied", "john", "loan"]
    explicit = evaluate_sentence(words, lex, "s", mode="explicit")
    closed = evaluate_sentence(words, lex, "s", mode="closed-form")
    assert explicit.isclose(closed)
    grab = lambda w: lex[w].tensor.array
    g3 = np.einsum("iklm,m->ikl", grab("granted"), grab("mary"))
    d3 = np.einsum("iklm,m->ikl", grab("denied"), grab("john"))
    want = np.einsum("i,ikl,l->k", grab("bank"), g3 * d3, grab("loan"))
    assert np.allclose(explicit.array, want)


def test_nested_coordination_folds_left(lexicon):
    # "john sleeps and snores and sleeps": the second coordinator's left
    # conjunct contains the first, so collapses run innermost first.
    words = ["john", "sleeps", "and", "snores", "and", "sleeps"]
    explicit = evaluate_sentence(words, lexicon, "s", mode="explicit")
    closed = evaluate_sentence(words, lexicon, "s", mode="closed-form")
    assert explicit.isclose(closed)
    john = lexicon["john"].tensor.array
    sleep = lexicon["sleeps"].tensor.array
    snore = lexicon["snores"].tensor.array
    assert np.allclose(closed.array, john @ (sleep * snore * sleep))
