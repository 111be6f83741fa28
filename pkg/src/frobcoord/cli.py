"""Command-line front end.

Commands: ``check`` (grammaticality + link listing), ``derive`` (canonical
derivation with an ASCII cup diagram), ``eval`` (meaning tensor, explicit
or closed-form mode, optional mode comparison), ``selftest`` (the
randomized verification suites).  Exit codes: 0 success, 1 semantic
failure (ungrammatical input or a failing suite), 2 environmental failure
(I/O, lexicon or lookup errors).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .errors import FrobcoordError, UngrammaticalSentence, UnknownWord
from .evaluator import evaluate_sentence
from .lexicon import load_lexicon
from .pregroup import enumerate_reductions, parse_type, reduce
from .selftest import run_selftest
from .semiring import REAL


def _lexicon_types(lexicon, words):
    types = []
    for word in words:
        if word not in lexicon:
            raise UnknownWord(f"{word!r} is not in the lexicon")
        types.append(lexicon[word].type)
    return types


def _format_links(derivation) -> str:
    parts = []
    for (i, j) in sorted(derivation.links):
        (ta, wa), (tb, wb) = derivation.token_wire(i), derivation.token_wire(j)
        parts.append(f"({ta}.{wa}–{tb}.{wb})")
    return " ".join(parts) if parts else "(no links)"


def _diagram(words, derivation) -> str:
    """Tokens above their simple types, cups as nested brackets below."""
    starts, centers, word_cells, type_cells = [], [], [], []
    col = 0
    flat = derivation.flattened
    for tok, ptype in enumerate(derivation.token_types):
        labels = [str(s) for s in ptype]
        body = " ".join(labels)
        width = max(len(words[tok]), len(body))
        word_cells.append(words[tok].ljust(width))
        type_cells.append(body.ljust(width))
        off = col
        for lab in labels:
            starts.append(off)
            centers.append(off + (len(lab) - 1) // 2)
            off += len(lab) + 1
        col += width + 2
    lines = ["  ".join(word_cells).rstrip(), "  ".join(type_cells).rstrip()]
    total = len(lines[1])

    links = sorted(derivation.links, key=lambda ij: ij[1] - ij[0])
    height = {}
    for (i, j) in links:
        inner = [height[(k, l)] for (k, l) in links if i < k and l < j]
        height[(i, j)] = 1 + max(inner) if inner else 0
    for level in range(len(links) and max(height.values()) + 1):
        row = [" "] * total
        for r in derivation.residual:
            row[centers[r]] = "│"
        for (i, j), h in height.items():
            if h > level:
                row[centers[i]] = row[centers[j]] = "│"
        for (i, j), h in height.items():
            if h == level:
                row[centers[i]], row[centers[j]] = "└", "┘"
                for c in range(centers[i] + 1, centers[j]):
                    row[c] = "─"
        lines.append("".join(row).rstrip())
    if derivation.residual:
        row = [" "] * total
        for r in derivation.residual:
            lab = str(flat[r])
            row[centers[r]:centers[r] + len(lab)] = lab
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def _derivations_for(args, lexicon):
    types = _lexicon_types(lexicon, args.words)
    target = parse_type(args.target, lexicon.spaces.bases())
    if getattr(args, "all", False):
        return enumerate_reductions(types, target, args.cap)
    derivation = reduce(types, target)
    return [] if derivation is None else [derivation]


def cmd_check(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    derivations = _derivations_for(args, lexicon)
    if not derivations:
        print("ungrammatical")
        return 1
    for derivation in derivations:
        print(_format_links(derivation))
        if args.ascii_diagram:
            print(_diagram(args.words, derivation))
    return 0


def cmd_derive(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    derivations = _derivations_for(args, lexicon)
    if not derivations:
        print("ungrammatical")
        return 1
    for k, derivation in enumerate(derivations):
        if k:
            print()
        print(_format_links(derivation))
        print(_diagram(args.words, derivation))
    return 0


def _print_tensor(tensor, fmt):
    if fmt == "json":
        if tensor.semiring is REAL:
            entries = [float(v) for v in tensor.flat]
        else:
            entries = [int(v) for v in tensor.flat]
        print(json.dumps({
            "semiring": tensor.semiring.name,
            "wires": [{"base": w.base, "z": w.z, "dim": w.dim}
                      for w in tensor.wires],
            "entries": entries,
        }))
    else:
        if tensor.semiring is REAL:
            print(" ".join(format(float(v), ".12g") for v in tensor.flat))
        else:
            print(" ".join("1" if v else "0" for v in tensor.flat))


def cmd_eval(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    try:
        if args.compare:
            explicit = evaluate_sentence(args.words, lexicon, args.target,
                                         mode="explicit")
            closed = evaluate_sentence(args.words, lexicon, args.target,
                                       mode="closed-form")
            if explicit.semiring is REAL:
                diff = float(np.max(np.abs(explicit.array - closed.array))) \
                    if explicit.array.size else 0.0
            else:
                diff = int(np.count_nonzero(
                    explicit.array != closed.array))
            print(f"max-abs-diff {diff:.6g}")
            return 0
        result = evaluate_sentence(args.words, lexicon, args.target,
                                   mode=args.mode)
    except UngrammaticalSentence as exc:
        print(f"ungrammatical: {exc}", file=sys.stderr)
        return 1
    _print_tensor(result, args.format)
    return 0


def cmd_selftest(args) -> int:
    dims = tuple(int(d) for d in args.dims.split(","))
    results = run_selftest(dims=dims, trials=args.trials, seed=args.seed,
                           inject_fault=args.inject_fault)
    ok = True
    for res in results:
        print(f"{res.name}: {res.passed}/{res.total} pass")
        if not res.ok:
            ok = False
            print(f"counterexample[{res.name}]: seed={args.seed} "
                  f"{res.counterexample}")
    print("selftest: OK" if ok else "selftest: FAILED")
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobcoord",
        description="Pregroup grammar checking and tensor-network "
                    "semantics with coordinator tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def sentence_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("lexicon", help="path to a lexicon file")
        p.add_argument("words", nargs="+", metavar="word")
        p.add_argument("--target", default="s",
                       help="target type (default: s)")
        p.add_argument("--all", action="store_true",
                       help="list every derivation, not just the canonical")
        p.add_argument("--cap", type=int, default=1000,
                       help="derivation cap for --all")
        p.set_defaults(func=func)
        return p

    p_check = sentence_command("check", cmd_check,
                               "check grammaticality and print links")
    p_check.add_argument("--ascii-diagram", action="store_true",
                         help="draw cups as nested brackets")
    sentence_command("derive", cmd_derive,
                     "print derivations with cup diagrams")

    p_eval = sub.add_parser("eval", help="evaluate a sentence meaning")
    p_eval.add_argument("lexicon")
    p_eval.add_argument("words", nargs="+", metavar="word")
    p_eval.add_argument("--target", default="s")
    p_eval.add_argument("--mode", choices=("explicit", "closed-form"),
                        default="explicit")
    p_eval.add_argument("--compare", action="store_true",
                        help="run both modes, print the max difference")
    p_eval.add_argument("--format", choices=("plain", "json"),
                        default="plain")
    p_eval.set_defaults(func=cmd_eval)

    p_self = sub.add_parser("selftest", help="run the verification suites")
    p_self.add_argument("--dims", default="1,2,3,4",
                        help="comma-separated dimensions to sample")
    p_self.add_argument("--trials", type=int, default=100)
    p_self.add_argument("--seed", type=int,
                        default=int(os.environ.get("FROBCOORD_SEED", "0")))
    p_self.add_argument("--inject-fault", action="store_true",
                        help=argparse.SUPPRESS)
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except UngrammaticalSentence as exc:
        print(f"ungrammatical: {exc}", file=sys.stderr)
        return 1
    except (OSError, FrobcoordError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
