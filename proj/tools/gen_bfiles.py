#!/usr/bin/env python3
"""Write offline b-file snapshots of the OEIS sequences used by `lukas check`
and `lukas selftest`, computed from each sequence's defining formula."""

import argparse
from math import comb
from pathlib import Path


def linear(init, coeffs, count):
    a = list(init)
    while len(a) < count:
        a.append(sum(c * a[-1 - i] for i, c in enumerate(coeffs)))
    return a[:count]


def sequences(terms):
    r = range(terms)
    return {
        "A000012": (0, [1 for _ in r]),
        "A000079": (0, [2**n for n in r]),
        "A000108": (0, [comb(2 * n, n) // (n + 1) for n in r]),
        "A000245": (0, [0] + [3 * comb(2 * n, n - 1) // (n + 2) for n in range(1, terms)]),
        "A000344": (2, [5 * comb(2 * n, n - 2) // (n + 3) for n in range(2, terms + 2)]),
        "A001519": (0, linear([1, 1], [3, -1], terms)),
        "A001906": (0, linear([0, 1], [3, -1], terms)),
        "A002057": (0, [4 * comb(2 * n + 3, n) // (n + 4) for n in r]),
        "A003462": (0, [(3**n - 1) // 2 for n in r]),
        "A005021": (0, linear([1, 5, 19], [5, -6, 1], terms)),
        "A007051": (0, [(3**n + 1) // 2 for n in r]),
        "A080937": (0, linear([1, 1, 2], [5, -6, 1], terms)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests/fixtures/bfiles")
    parser.add_argument("--terms", type=int, default=31)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, (offset, values) in sequences(args.terms).items():
        lines = [f"# {name}, generated offline by gen_bfiles.py"]
        lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
        (args.out / f"b{name[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
