"""Induce a Specht lattice up a few degrees and read off the factors.

The induced module S(lam)^(S_n) carries a filtration whose factors are
the Specht lattices S(nu) for the shapes nu obtained from lam by adding
boxes, no two in the same column.  Reducing mod m turns each factor into
(Z_m)^(hook number of nu).

Run:  python3 demos/specht_filtration.py
"""

from pilattice.specht import (
    find_c,
    hook_number,
    induce_mod,
    pair,
    valid_pairs,
    verify_psi_lemma,
)


def main():
    for m in (0, 2):
        report = induce_mod((2, 1), 4, m)
        tag = "integral" if m == 0 else f"mod {m}"
        print(f"S(2,1) induced to degree 4, {tag}:")
        for f in report.factors:
            print(
                f"  factor S{f.label}: rank {f.lattice_rank},"
                f" hook number {hook_number(f.label)}, invariants {f.invariants}"
            )
        print()

    # the row-merging map drives the recursion: its image and kernel are
    # again lattices spanned by polytabloids
    p = pair((2, 1, 1), (2, 1, 2))
    print(f"pair {p}: recursion applies at column {find_c(p)}")
    image_ok, kernel_ok = verify_psi_lemma(p)
    print(f"  image identity {image_ok}, kernel identity {kernel_ok}")
    print()

    counts = {n: len(valid_pairs(n)) for n in range(1, 7)}
    print(f"valid (lam; mu) pairs by degree: {counts}")


if __name__ == "__main__":
    main()
