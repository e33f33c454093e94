"""Tabulate bracketed words and Reynolds words per size."""

import argparse
from dataclasses import dataclass

from reynolds.enumeration import count_words, reynolds_words_by_size


@dataclass(frozen=True)
class CountConfig:
    alphabet_size: int = 1
    max_size: int = 8


def run(cfg: CountConfig) -> list[tuple[int, int, int]]:
    alphabet = [f"x{i}" for i in range(cfg.alphabet_size)] if cfg.alphabet_size > 1 else ["x"]
    levels = reynolds_words_by_size(alphabet, cfg.max_size)
    totals = count_words(cfg.alphabet_size, cfg.max_size)
    return [(n, totals[n], len(level)) for n, level in enumerate(levels)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphabet-size", type=int, default=CountConfig.alphabet_size)
    parser.add_argument("--max-size", type=int, default=CountConfig.max_size)
    args = parser.parse_args()
    cfg = CountConfig(args.alphabet_size, args.max_size)
    print("size\twords\treynolds\tratio")
    for n, total, reyn in run(cfg):
        print(f"{n}\t{total}\t{reyn}\t{reyn / total:.4f}")


if __name__ == "__main__":
    main()
