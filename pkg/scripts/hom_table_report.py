#!/usr/bin/env python3
"""Print the full 10 x 10 hom-set table between the order-2 magma classes.

Rows and columns are labeled by the four-letter words for the tables
(a*a, a*b, b*a, b*b); cells list the maps found, with 1 = identity,
t = swap, a / b = the constant maps.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from gradeforge.magma import enumerate_homs, magma_from_word

WORDS = ["aaaa", "baaa", "abaa", "aaba", "aaab", "aabb", "bbaa", "abab", "baba", "abba"]
SYMBOLS = {(0, 1): "1", (1, 0): "t", (0, 0): "a", (1, 1): "b"}


def main():
    magmas = {w: magma_from_word(w) for w in WORDS}
    header = "      " + " ".join(f"{w:>5}" for w in WORDS)
    print(header)
    for gw in WORDS:
        cells = []
        for hw in WORDS:
            maps = enumerate_homs(magmas[gw], magmas[hw])
            label = "".join(sorted(SYMBOLS[m] for m in maps)) or "-"
            cells.append(f"{label:>5}")
        print(f"{gw:>5} " + " ".join(cells))


if __name__ == "__main__":
    main()
