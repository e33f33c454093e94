"""Exhaustively check the Reynolds identity, the multi-variant identity and
the universal property on small grids, reporting counts and timings."""

import argparse
import itertools
import time
from dataclasses import dataclass

from reynolds import algebra
from reynolds.algebra import apply_p, multivariant_residual, reynolds_residual
from reynolds.enumeration import enumerate_reynolds_words
from reynolds.models import X, UniversalMap, averaging_model, differential_model


@dataclass(frozen=True)
class VerifyConfig:
    alphabet: tuple[str, ...] = ("x", "y")
    pair_size: int = 4
    tuple_size: int = 2
    arity: int = 3
    map_size: int = 4


def _timed(label, fn):
    start = time.perf_counter()
    checked, failed = fn()
    print(f"{label}: {checked} checked, {failed} failed, {time.perf_counter() - start:.1f} s")
    return failed


def check_pairs(cfg: VerifyConfig):
    ws = enumerate_reynolds_words(cfg.alphabet, cfg.pair_size)
    failed = sum(not reynolds_residual(r, s).is_zero() for r in ws for s in ws)
    return len(ws) ** 2, failed


def check_tuples(cfg: VerifyConfig):
    ws = enumerate_reynolds_words(cfg.alphabet, cfg.tuple_size)
    checked = failed = 0
    for us in itertools.product(ws, repeat=cfg.arity):
        checked += 1
        failed += not multivariant_residual(us).is_zero()
    algebra.clear_cache()
    return checked, failed


def check_universal_map(cfg: VerifyConfig):
    ws = enumerate_reynolds_words(cfg.alphabet, cfg.map_size)
    images = {name: X ** (i + 1) for i, name in enumerate(cfg.alphabet)}
    checked = failed = 0
    for model in (averaging_model(), differential_model()):
        f = UniversalMap(model, images)
        for u in ws:
            checked += 1
            failed += f(apply_p(u)) != model(f(u))
            for v in ws:
                checked += 1
                failed += f(u * v) != f(u) * f(v)
    return checked, failed


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphabet", default=",".join(VerifyConfig.alphabet))
    parser.add_argument("--pair-size", type=int, default=VerifyConfig.pair_size)
    parser.add_argument("--tuple-size", type=int, default=VerifyConfig.tuple_size)
    parser.add_argument("--arity", type=int, default=VerifyConfig.arity)
    parser.add_argument("--map-size", type=int, default=VerifyConfig.map_size)
    args = parser.parse_args()
    cfg = VerifyConfig(
        tuple(args.alphabet.split(",")), args.pair_size, args.tuple_size, args.arity, args.map_size
    )
    failed = _timed("reynolds identity", lambda: check_pairs(cfg))
    failed += _timed(f"multi-variant identity, m={cfg.arity}", lambda: check_tuples(cfg))
    failed += _timed("universal map", lambda: check_universal_map(cfg))
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
