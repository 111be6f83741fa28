"""Built-in randomized verification suites.

Each suite draws seeded random tensors, evaluates a law both through the
library and through straight-line arithmetic, and counts agreements.  The
suites back the ``selftest`` CLI command; ``inject_fault=True`` corrupts
the merge operation (one flipped entry) as a negative control, which must
make the run fail with a counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coordination import (coordinate_closed_form, coordinator_tensor,
                           ditransitive_coordination, stripping_sentence)
from .evaluator import SpaceAssignment, TensorNetwork, build_network, evaluate
from .pregroup import PregroupType, coordinator_type, parse_type, reduce
from .semiring import BOOLEAN, REAL
from .tensor import (Tensor, Wire, contract, eta_cap, frobenius_delta,
                     frobenius_mu, frobenius_mu_matrix, frobenius_zeta,
                     random_tensor, tensor_product)


@dataclass
class SuiteResult:
    name: str
    passed: int
    total: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total and self.counterexample is None


def _faulty_mu(a, b):
    out = frobenius_mu(a, b)
    arr = out.array.copy()
    flat = arr.reshape(-1)
    flat[0] = not flat[0] if out.semiring is BOOLEAN else flat[0] + 1.0
    return Tensor(out.wires, arr, out.semiring, copy=False)


def _show(t: Tensor) -> str:
    return np.array2string(np.asarray(t.array), threshold=30)


def _vec(rng, dim, sr, z=0):
    return random_tensor((Wire("n", z, dim),), rng, sr)


def _spider(dim, sr):
    return coordinator_tensor(parse_type("n"), SpaceAssignment({"n": dim}), sr)


class _Suite:
    """Counts trials and remembers the first counterexample."""

    def __init__(self, name):
        self.result = SuiteResult(name, 0, 0)

    def check(self, ok: bool, describe):
        self.result.total += 1
        if ok:
            self.result.passed += 1
        elif self.result.counterexample is None:
            self.result.counterexample = describe()


def suite_frobenius(rng, dims, trials, mu):
    s = _Suite("frobenius-axioms")
    for sr in (REAL, BOOLEAN):
        for d in dims:
            for t in range(trials):
                u, v, w = (_vec(rng, d, sr) for _ in range(3))
                ctx = lambda law: (lambda: f"law={law} semiring={sr.name} "
                                   f"d={d} u={_show(u)} v={_show(v)}")
                s.check(mu(mu(u, v), w).isclose(mu(u, mu(v, w))),
                        ctx("associativity"))
                s.check(mu(u, v).isclose(mu(v, u)), ctx("commutativity"))
                s.check(frobenius_mu_matrix(frobenius_delta(v)).isclose(v),
                        ctx("specialness"))
                s.check(mu(frobenius_zeta("n", d, semiring=sr), v).isclose(v),
                        ctx("merge-unit"))
                copied = frobenius_delta(v)
                s.check(sr.allclose(sr.sum(copied.array, axis=1), v.array),
                        ctx("copy-then-delete"))
                # The two-sided condition, evaluated as tensor networks.
                spider = _spider(d, sr)
                left = evaluate(TensorNetwork(
                    [u, v, spider, spider],
                    [((1, 0), (3, 0)), ((3, 1), (2, 0)), ((0, 0), (2, 1))],
                    [(2, 2), (3, 2)]))
                middle = evaluate(TensorNetwork(
                    [u, v, spider, spider],
                    [((0, 0), (2, 0)), ((1, 0), (2, 1)), ((2, 2), (3, 0))],
                    [(3, 1), (3, 2)]))
                right = evaluate(TensorNetwork(
                    [u, v, spider, spider],
                    [((0, 0), (3, 0)), ((3, 1), (2, 0)), ((1, 0), (2, 2))],
                    [(3, 2), (2, 1)]))
                direct = np.zeros((d, d), dtype=sr.dtype)
                np.fill_diagonal(direct, sr.mul(u.array, v.array))
                good = (sr.allclose(left.array, direct)
                        and sr.allclose(middle.array, direct)
                        and sr.allclose(right.array, direct))
                s.check(good, ctx("frobenius-condition"))
    return s.result


def suite_snake(rng, dims, trials):
    s = _Suite("snake-equations")
    for sr in (REAL, BOOLEAN):
        for d in dims:
            for t in range(trials):
                v = _vec(rng, d, sr)
                bent_l = contract(tensor_product(v, eta_cap("n", "left", d,
                                                            semiring=sr)),
                                  0, 1)
                bent_r = contract(tensor_product(eta_cap("n", "right", d,
                                                         semiring=sr), v),
                                  1, 2)
                ok = (sr.allclose(bent_l.array, v.array)
                      and sr.allclose(bent_r.array, v.array))
                s.check(ok, lambda: f"semiring={sr.name} d={d} v={_show(v)}")
    return s.result


_CONJUNCT_TYPES = ("n", "s", "n.r s", "n.r s n.l n.l")


def _sample_spaces(rng, dims):
    return SpaceAssignment({"n": int(rng.choice(dims)),
                            "s": int(rng.choice(dims))})


def _explicit_coordination(x, x1, conj, x2, spaces):
    derivation = reduce([x, coordinator_type(x), x], x)
    return evaluate(build_network(derivation, [x1, conj, x2], spaces))


def suite_coordinator_equivalence(rng, dims, trials, mu):
    s = _Suite("coordinator-equivalence")
    for sr in (REAL, BOOLEAN):
        for type_text in _CONJUNCT_TYPES:
            x = parse_type(type_text)
            for t in range(trials):
                spaces = _sample_spaces(rng, dims)
                conj = coordinator_tensor(x, spaces, sr)
                x1 = random_tensor(spaces.wires(x), rng, sr)
                x2 = random_tensor(spaces.wires(x), rng, sr)
                got = _explicit_coordination(x, x1, conj, x2, spaces)
                want = mu(x1, x2)
                s.check(sr.allclose(got.array, want.array),
                        lambda: f"type={type_text!r} semiring={sr.name} "
                                f"spaces={spaces!r} x1={_show(x1)} "
                                f"x2={_show(x2)}")
    return s.result


def suite_contraction_order(rng, dims, trials):
    s = _Suite("contraction-order")
    for sr in (REAL, BOOLEAN):
        for t in range(trials):
            spaces = _sample_spaces(rng, dims)
            x = parse_type(str(rng.choice(_CONJUNCT_TYPES[:3])))
            conj = coordinator_tensor(x, spaces, sr)
            x1 = random_tensor(spaces.wires(x), rng, sr)
            x2 = random_tensor(spaces.wires(x), rng, sr)
            derivation = reduce([x, coordinator_type(x), x], x)
            net = build_network(derivation, [x1, conj, x2], spaces)
            base = evaluate(net)
            order = rng.permutation(len(net.edges))
            shuffled = TensorNetwork(net.nodes,
                                     [net.edges[k] for k in order],
                                     net.open_wires)
            s.check(base.isclose(evaluate(shuffled)),
                    lambda: f"type={x} semiring={sr.name} order={order}")
    return s.result


def _sentence_spaces(rng, dims):
    spaces = _sample_spaces(rng, dims)
    return spaces, spaces.dim("n"), spaces.dim("s")


def suite_sentence_identities(rng, dims, trials):
    s = _Suite("sentence-identities")
    vp, tv = parse_type("n.r s"), parse_type("n.r s n.l")
    noun = parse_type("n")
    for sr in (REAL, BOOLEAN):
        for t in range(trials):
            spaces, dn, ds = _sentence_spaces(rng, dims)
            rt = lambda typ: random_tensor(spaces.wires(typ), rng, sr)

            # Shared-subject verb-phrase coordination.
            john, sleep, snore = rt(noun), rt(vp), rt(vp)
            conj_vp = coordinator_tensor(vp, spaces, sr)
            derivation = reduce([noun, vp, coordinator_type(vp), vp],
                                parse_type("s"))
            got = evaluate(build_network(derivation,
                                         [john, sleep, conj_vp, snore],
                                         spaces))
            want = sr.sum(sr.mul(john.array[:, None],
                                 sr.mul(sleep.array, snore.array)), axis=0)
            s.check(sr.allclose(got.array, want),
                    lambda: f"vp-coordination semiring={sr.name} "
                            f"spaces={spaces!r}")

            # Two full sentences joined by a sentence coordinator.
            men, watch, football = rt(noun), rt(tv), rt(noun)
            women, knit = rt(noun), rt(vp)
            conj_s = coordinator_tensor(parse_type("s"), spaces, sr)
            derivation = reduce(
                [noun, tv, noun, coordinator_type(parse_type("s")), noun, vp],
                parse_type("s"))
            got = evaluate(build_network(
                derivation,
                [men, watch, football, conj_s, women, knit], spaces))
            first = sr.sum(sr.mul(
                sr.mul(men.array[:, None, None], watch.array),
                football.array[None, None, :]), axis=(0, 2))
            second = sr.sum(sr.mul(women.array[:, None], knit.array), axis=0)
            s.check(sr.allclose(got.array, sr.mul(first, second)),
                    lambda: f"sentence-coordination semiring={sr.name} "
                            f"spaces={spaces!r}")

            # Ditransitive clauses sharing subject and final object.
            bank, mary, johnn, loan = rt(noun), rt(noun), rt(noun), rt(noun)
            dt = parse_type("n.r s n.l n.l")
            grant, deny = rt(dt), rt(dt)
            g3 = sr.sum(sr.mul(grant.array, mary.array[None, None, None, :]),
                        axis=3)
            d3 = sr.sum(sr.mul(deny.array, johnn.array[None, None, None, :]),
                        axis=3)
            merged = sr.mul(g3, d3)
            want = sr.sum(sr.mul(sr.mul(bank.array[:, None, None], merged),
                                 loan.array[None, None, :]), axis=(0, 2))
            for mode in ("closed-form", "explicit"):
                got = ditransitive_coordination(bank, grant, deny, loan,
                                                mary, johnn, mode=mode)
                s.check(sr.allclose(got.array, want),
                        lambda: f"ditransitive mode={mode} "
                                f"semiring={sr.name} spaces={spaces!r}")
    return s.result


def suite_subject_copying(rng, dims, trials):
    s = _Suite("subject-copying")
    vp, noun = parse_type("n.r s"), parse_type("n")
    for sr in (REAL, BOOLEAN):
        for t in range(trials):
            spaces, dn, ds = _sentence_spaces(rng, dims)
            sleep = random_tensor(spaces.wires(vp), rng, sr)
            snore = random_tensor(spaces.wires(vp), rng, sr)
            conj_vp = coordinator_tensor(vp, spaces, sr)
            derivation = reduce([noun, vp, coordinator_type(vp), vp],
                                parse_type("s"))
            for i in range(dn):
                basis = np.zeros(dn, dtype=sr.dtype)
                basis[i] = sr.one
                subject = Tensor(spaces.wires(noun), basis, sr)
                got = evaluate(build_network(
                    derivation, [subject, sleep, conj_vp, snore], spaces))
                want = sr.mul(sleep.array[i, :], snore.array[i, :])
                s.check(sr.allclose(got.array, want),
                        lambda: f"semiring={sr.name} i={i} spaces={spaces!r}")
    return s.result


def suite_stripping(rng, dims, trials):
    s = _Suite("stripping-equality")
    noun, tv = parse_type("n"), parse_type("n.r s n.l")
    for sr in (REAL, BOOLEAN):
        for t in range(trials):
            spaces, dn, ds = _sentence_spaces(rng, dims)
            rt = lambda typ: random_tensor(spaces.wires(typ), rng, sr)
            john, likes, poe, lovecraft = rt(noun), rt(tv), rt(noun), rt(noun)
            got = stripping_sentence(john, likes, poe, lovecraft, spaces)
            merged = sr.mul(poe.array, lovecraft.array)
            want = sr.sum(sr.mul(sr.mul(john.array[:, None, None],
                                        likes.array),
                                 merged[None, None, :]), axis=(0, 2))
            s.check(sr.allclose(got.array, want),
                    lambda: f"semiring={sr.name} spaces={spaces!r} "
                            f"john={_show(john)}")
    return s.result


def suite_rel_intersection(rng, dims, trials):
    s = _Suite("rel-intersection")
    sr = BOOLEAN
    for t in range(trials):
        du = int(rng.integers(1, 7))
        dv = int(rng.integers(1, 7))
        spaces = SpaceAssignment({"n": du, "s": dv})
        noun = parse_type("n")
        a = random_tensor(spaces.wires(noun), rng, sr)
        b = random_tensor(spaces.wires(noun), rng, sr)
        set_a = {i for i in range(du) if a.array[i]}
        set_b = {i for i in range(du) if b.array[i]}
        merged = coordinate_closed_form(a, b)
        got_set = {i for i in range(du) if merged.array[i]}
        s.check(got_set == set_a & set_b,
                lambda: f"nouns a={_show(a)} b={_show(b)}")
        conj = coordinator_tensor(noun, spaces, sr)
        explicit = _explicit_coordination(noun, a, conj, b, spaces)
        s.check(sr.allclose(explicit.array, merged.array),
                lambda: f"noun-explicit a={_show(a)} b={_show(b)}")

        tv = parse_type("n.r s n.l")
        r = random_tensor(spaces.wires(tv), rng, sr)
        q = random_tensor(spaces.wires(tv), rng, sr)
        rel = lambda m: {idx for idx in np.ndindex(*m.dims) if m.array[idx]}
        conj_tv = coordinator_tensor(tv, spaces, sr)
        merged_rel = _explicit_coordination(tv, r, conj_tv, q, spaces)
        s.check(rel(merged_rel) == rel(r) & rel(q),
                lambda: f"relations r={_show(r)} q={_show(q)}")
    return s.result


def run_selftest(dims=(1, 2, 3, 4), trials=100, seed=0,
                 inject_fault=False) -> list[SuiteResult]:
    """Run every suite; results report per-suite pass counts."""
    dims = tuple(int(d) for d in dims)
    mu = _faulty_mu if inject_fault else frobenius_mu
    suites = [
        lambda rng: suite_frobenius(rng, dims, trials, mu),
        lambda rng: suite_snake(rng, dims, trials),
        lambda rng: suite_coordinator_equivalence(
            rng, dims, max(1, trials // 2), mu),
        lambda rng: suite_contraction_order(rng, dims, trials),
        lambda rng: suite_sentence_identities(rng, dims, max(1, trials // 2)),
        lambda rng: suite_subject_copying(rng, dims, max(1, trials // 2)),
        lambda rng: suite_stripping(rng, dims, trials),
        lambda rng: suite_rel_intersection(rng, dims, trials),
    ]
    return [suite(np.random.default_rng([seed, k]))
            for k, suite in enumerate(suites)]
