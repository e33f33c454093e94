"""Apply P to [[x]] [y] [z] and print each term with its coefficient."""

import time

from reynolds.algebra import apply_p, parse_lincomb


def main() -> None:
    start = time.perf_counter()
    out = apply_p(parse_lincomb("[[x]] [y] [z]"))
    elapsed = time.perf_counter() - start
    for w in out.support():
        print(f"{str(out.coeff(w)):>5}  {w}")
    print(f"{len(out.terms)} terms in {elapsed * 1000:.1f} ms")


if __name__ == "__main__":
    main()
