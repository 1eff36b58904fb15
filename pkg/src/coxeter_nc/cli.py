"""Command-line interface.

Exit status: 0 success, 1 domain or usage error, 2 resource cap hit,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .absolute_order import build_interval, check_lattice, find_bowties, to_dot
from .core import (
    DEFAULT_MAX_BALL,
    DEFAULT_MAX_CLOSURE,
    IDENTITY,
    parse_coxeter_matrix,
    parse_word,
)
from .dihedral import canonical_pair, max_dihedral
from .errors import CapExceeded, CoxeterError, DomainError, InvariantViolation
from .interval_group import divisor_balance, emit_presentation
from .reflections import (
    MODES,
    absolute_le,
    as_reflection,
    enumerate_reflections,
    palindromize,
    reflection_from_word,
    reflection_length,
)

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--group", required=True, help="Coxeter matrix file")
    common.add_argument("--cutoff", type=int, default=9,
                        help="reflection length bound for infinite groups (default 9)")
    common.add_argument("--mode", choices=MODES, default="crosscheck",
                        help="reflection length mode (default crosscheck)")
    common.add_argument("--max-closure", type=int, default=DEFAULT_MAX_CLOSURE,
                        help=f"braid closure cap (default {DEFAULT_MAX_CLOSURE})")
    common.add_argument("--max-ball", type=int, default=DEFAULT_MAX_BALL,
                        help=f"element enumeration cap (default {DEFAULT_MAX_BALL})")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = _Parser(prog="coxeter-nc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, *args):
        p = sub.add_parser(name, parents=[common], help=help)
        for flag, kw in args:
            p.add_argument(flag, **kw)
        return p

    word = ("--word", dict(required=True, help="whitespace-separated generators"))
    word2 = ("--word2", dict(required=True, help="second word"))
    top = ("--top", dict(required=True, help="top element of the interval"))
    bottom = ("--bottom", dict(default="", help="bottom element (default identity)"))

    add("reduce", "print the ShortLex normal form", word)
    add("equal", "decide whether two words are equal in W", word, word2)
    add("refl", "reflection test and palindromic reduced word", word)
    add("reflections", "list reflections up to a length",
        ("--max-len", dict(type=int, help="length bound (default: --cutoff)")))
    add("tlength", "reflection length", word,
        ("--witness", dict(action="store_true", help="also print a factorization")))
    add("leq", "absolute order test word <=_T word2", word, word2)
    add("dihedral", "maximal dihedral reflection subgroup W(t, t')",
        ("--t", dict(required=True, help="first reflection")),
        ("--t2", dict(required=True, help="second reflection")))
    add("interval", "build [bottom, top]_T", bottom, top,
        ("--dot", dict(help="write the Hasse diagram as DOT")))
    add("lattice", "lattice audit of [bottom, top]_T", bottom, top)
    add("bowties", "list bowties of a height-3 interval", bottom, top)
    add("balance", "compare left and right divisors", word)
    add("present", "interval-group presentation of [1, top]_T", top)
    return parser


def _fmt(W, elem):
    return W.format_word(elem.nf)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        text = Path(args.group).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read group file: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        W = parse_coxeter_matrix(text, max_closure=args.max_closure, max_ball=args.max_ball)
        lines = _dispatch(W, args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CapExceeded as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CoxeterError, ValueError) as exc:
        print(f"error: {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8", newline="\n")
    else:
        stdout.write(out)
    return EXIT_OK


def _element(W, text):
    return W.normal_form(parse_word(W, text))


def _interval(W, args):
    u = _element(W, args.bottom)
    v = _element(W, args.top)
    return build_interval(W, u, v, cutoff=args.cutoff, mode=args.mode)


def _dispatch(W, args):
    cmd = args.command
    if cmd == "reduce":
        return [_fmt(W, _element(W, args.word))]
    if cmd == "equal":
        return ["true" if _element(W, args.word) == _element(W, args.word2) else "false"]
    if cmd == "refl":
        word = parse_word(W, args.word)
        elem = W.normal_form(word)
        r = as_reflection(W, elem)
        if r is None:
            return ["reflection: false"]
        pal = palindromize(W, word) if len(word) == elem.length else r.palindrome
        return ["reflection: true", "palindrome: " + W.format_word(pal)]
    if cmd == "reflections":
        refls = enumerate_reflections(W, args.max_len or args.cutoff)
        return ["count: %d" % len(refls)] + [_fmt(W, r.elem) for r in refls]
    if cmd == "tlength":
        res = reflection_length(W, _element(W, args.word), args.mode)
        lines = [str(res.value)]
        if args.witness:
            lines += ["  " + W.format_word(r.palindrome) for r in res.witness]
        return lines
    if cmd == "leq":
        u, v = _element(W, args.word), _element(W, args.word2)
        return ["true" if absolute_le(W, u, v, args.mode) else "false"]
    if cmd == "dihedral":
        t = reflection_from_word(W, parse_word(W, args.t))
        t2 = reflection_from_word(W, parse_word(W, args.t2))
        handle = max_dihedral(W, t, t2, args.cutoff)
        lines = ["w: " + _fmt(W, handle.core.elem),
                 "exhausted_to: %d" % handle.exhausted_to,
                 "reflections: %d" % len(handle.known_reflections)]
        lines += ["  " + _fmt(W, r.elem) for r in handle.sorted_reflections()]
        try:
            r1, r2 = canonical_pair(W, handle, args.cutoff)
            lines.append("canonical_pair: (%s) (%s)" % (_fmt(W, r1.elem), _fmt(W, r2.elem)))
        except DomainError as exc:
            lines.append("canonical_pair: unresolved (%s)" % exc)
        return lines
    if cmd == "interval":
        p = _interval(W, args)
        if args.dot:
            Path(args.dot).write_text(to_dot(W, p), encoding="utf-8", newline="\n")
        lines = ["elements: %d" % len(p),
                 "ranks: " + " ".join(map(str, p.rank_sizes())),
                 "complete: %s" % ("true" if p.complete else "false")]
        if not p.complete:
            lines.append("cutoff: %d" % p.cutoff)
        for x in p.elements:
            lines.append("%d %s" % (p.rank_of[x], _fmt(W, x) or "e"))
        return lines
    if cmd == "lattice":
        p = _interval(W, args)
        report = check_lattice(p)
        bowties = len(find_bowties(p)) if p.height == 3 else 0
        line = "lattice: %s, elements: %d, bowties: %d" % (
            "true" if report.is_lattice else "false", len(p), bowties)
        if report.bounded_evidence:
            line += ", bounded evidence (cutoff %d)" % p.cutoff
        lines = [line]
        if report.witness:
            a, b = report.witness
            lines.append("no %s: %s | %s" % (report.missing, _fmt(W, a) or "e", _fmt(W, b) or "e"))
        return lines
    if cmd == "bowties":
        p = _interval(W, args)
        found = find_bowties(p)
        lines = ["bowties: %d" % len(found)]
        if not p.complete:
            lines[0] += " (bounded evidence, cutoff %d)" % p.cutoff
        for bt in found:
            lines.append("%s, %s < %s, %s" % tuple(_fmt(W, x) for x in bt.low + bt.high))
        return lines
    if cmd == "balance":
        rep = divisor_balance(W, _element(W, args.word), cutoff=args.cutoff, mode=args.mode)
        line = "balanced: %s, left: %d, right: %d" % (
            "true" if rep.balanced else "false", len(rep.left), len(rep.right))
        if not rep.complete:
            line += ", bounded evidence (length <= %d)" % args.cutoff
        return [line]
    if cmd == "present":
        p = build_interval(W, IDENTITY, _element(W, args.top), cutoff=args.cutoff, mode=args.mode)
        return emit_presentation(W, p).serialize(W).splitlines()
    raise DomainError(f"unknown command {cmd!r}")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
