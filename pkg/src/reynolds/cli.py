"""Command-line interface.

Exit status: 0 on success, 1 on a domain error or a nonzero residual,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import algebra, enumeration, forests, models, words
from .algebra import LinComb, apply_p, parse_lincomb

DEFAULT_MAX_SIZE_CAP = 12


def _emit_lincomb(a: LinComb, as_json: bool) -> None:
    print(algebra.to_json(a) if as_json else algebra.render(a))


def cmd_parse(args) -> int:
    w = words.parse(args.expr)
    cls = words.classify(w)
    if args.json:
        print(json.dumps({"word": str(w), "size": words.size(w), "depth": words.depth(w), "class": cls.name}))
    else:
        print(f"word: {w}")
        print(f"size: {words.size(w)}")
        print(f"depth: {words.depth(w)}")
        print(f"class: {cls.name}")
    return 0


def cmd_apply_p(args) -> int:
    a = parse_lincomb(args.expr)
    _emit_lincomb(algebra.apply_p_power(a, args.power), args.json)
    return 0


def cmd_multiply(args) -> int:
    out = algebra.UNIT
    for expr in args.exprs:
        out = algebra.multiply(out, parse_lincomb(expr))
    _emit_lincomb(out, args.json)
    return 0


def _need(args, counts: tuple[int, ...], what: str) -> None:
    if len(args.args) not in counts:
        raise ValueError(f"{what} takes {' or '.join(map(str, counts))} arguments, got {len(args.args)}")


def cmd_check(args) -> int:
    xs = [parse_lincomb(t) for t in args.args]
    if args.identity == "reynolds":
        _need(args, (2,), "reynolds")
        res = algebra.reynolds_residual(*xs)
    elif args.identity == "multivariant":
        res = algebra.multivariant_residual(xs)
    elif args.identity == "series":
        _need(args, (2,), "series")
        res = algebra.truncated_series_residual(xs[0], xs[1], args.k)
    else:
        _need(args, (2, 3), "star")
        star = algebra.star_product_free
        if len(xs) == 2:
            res = apply_p(star(*xs)) - apply_p(xs[0]) * apply_p(xs[1])
        else:
            u, v, w = xs
            res = star(star(u, v), w) - star(u, star(v, w))
    _emit_lincomb(res, args.json)
    return 0 if res.is_zero() else 1


def cmd_enum(args) -> int:
    cap = int(os.environ.get("REYN_MAX_SIZE", DEFAULT_MAX_SIZE_CAP))
    if args.max_size > cap:
        raise ValueError(f"--max-size {args.max_size} exceeds the cap {cap} (set REYN_MAX_SIZE)")
    if args.max_size < 0:
        raise ValueError("--max-size must be >= 0")
    alphabet = [s.strip() for s in args.alphabet.split(",") if s.strip()]
    levels = enumeration.words_by_size(alphabet, args.max_size)
    if args.reynolds_only:
        levels = [[w for w in level if words.is_reynolds_word(w)] for level in levels]
    if args.count:
        for n, level in enumerate(levels):
            print(f"{n}\t{len(level)}")
    else:
        for level in levels:
            for w in level:
                print(w)
    return 0


_MODELS = {"averaging": models.averaging_model, "differential": models.differential_model}


def cmd_eval(args) -> int:
    model = _MODELS[args.model]()
    assignment = models.parse_assignment(args.assign)
    print(models.universal_map(model, assignment, parse_lincomb(args.expr)))
    return 0


def cmd_dot(args) -> int:
    sys.stdout.write(forests.to_dot(forests.word_to_forest(words.parse(args.word))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reynolds",
        description="Free Reynolds algebras on bracketed words. Words use [ ] for brackets, "
        "whitespace between atoms and 1 for the empty word; combinations look like "
        "'1/2 * [x] [y] - [x [y]]'.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="canonical form, size, depth and class of a word")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("apply-p", help="apply the Reynolds operator P to a combination")
    p.add_argument("expr")
    p.add_argument("--power", type=int, default=1, help="apply P this many times (default 1)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_apply_p)

    p = sub.add_parser("multiply", help="concatenation product of combinations")
    p.add_argument("exprs", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("check", help="print the residual of an identity; exit 0 iff it is zero")
    p.add_argument("--identity", required=True, choices=["reynolds", "multivariant", "series", "star"])
    p.add_argument("--args", nargs="+", required=True, metavar="EXPR")
    p.add_argument("--k", type=int, default=0, help="truncation order for 'series' (default 0)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enum", help="enumerate bracketed words by size")
    p.add_argument("--alphabet", required=True, help="comma-separated letters, e.g. x,y")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--reynolds-only", action="store_true")
    p.add_argument("--count", action="store_true", help="print size<TAB>count lines only")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("eval", help="image of a combination under the universal map into a model")
    p.add_argument("--model", required=True, choices=sorted(_MODELS))
    p.add_argument("--assign", required=True, help='letter images, e.g. "x=x,y=x^2"')
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dot", help="Graphviz DOT of the decorated forest of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
    except RecursionError:
        print("error: input nested too deeply", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
