"""Order of the two-generator subgroup built from the printed words, and nearby words.

The printed words for alpha and beta generate a proper subgroup of the cube
group. This script measures it under several reading conventions and lists
every single-token edit of either word that generates the full group.
"""

import itertools
import time

from rubikgalois.cube import ALPHA_WORD, BETA_WORD, RUBIK_ORDER, evaluate_word, face_turns
from rubikgalois.permgroup import bsgs_build

EXPONENTS = ("", "^2", "^-1")


def order(words, gens):
    return bsgs_build([evaluate_word(w, gens) for w in words]).order


def reversed_word(word):
    return " ".join(reversed(word.split()))


def edits(word):
    toks = word.split()
    for i in range(len(toks)):
        for name, e in itertools.product(face_turns(), EXPONENTS):
            cand = name + e
            if cand != toks[i]:
                yield " ".join(toks[:i] + [cand] + toks[i + 1:])
        yield " ".join(toks[:i] + toks[i + 1:])


def main():
    gens = face_turns()
    inv = {k: v.inverse() for k, v in gens.items()}
    rows = [
        ("left to right", order([ALPHA_WORD, BETA_WORD], gens)),
        ("right to left", order([reversed_word(ALPHA_WORD), reversed_word(BETA_WORD)], gens)),
        ("inverted turns", order([ALPHA_WORD, BETA_WORD], inv)),
        ("T1..T6", bsgs_build(list(gens.values())).order),
    ]
    for label, n in rows:
        print(f"{label:15s} {n:>22d}  index {RUBIK_ORDER // n if n else 0}")

    t0 = time.perf_counter()
    hits = []
    for which, word in (("alpha", ALPHA_WORD), ("beta", BETA_WORD)):
        for cand in edits(word):
            pair = [cand, BETA_WORD] if which == "alpha" else [ALPHA_WORD, cand]
            if order(pair, gens) == RUBIK_ORDER:
                hits.append((which, cand))
    print(f"\n{len(hits)} single-token edits generate the full group ({time.perf_counter() - t0:.0f} s):")
    for which, cand in hits:
        print(f"  {which}: {cand}")


if __name__ == "__main__":
    main()
