"""Walk the codimension tables for the two built-in ring families.

Computes the degree-n value group P_n / (P_n ∩ ker eval) for upper
triangular 2x2 matrices over (Z_l, Z_m) and for truncated Grassmann
algebras over Z_l, and checks each row against its closed formula.

Run:  python3 demos/codimension_tour.py
"""

from pilattice.pitheory import cyclic_invariants, ordinary_codim
from pilattice.rings import grassmann, ut2


def compact(inv):
    """Z/2 x Z/2 x Z/4 -> '2^2 4^1', free rank r -> 'Z^r'."""
    parts = [f"{q}^{k}" for q, k in sorted(inv.per_q().items()) if q]
    if inv.free_rank:
        parts.append(f"Z^{inv.free_rank}")
    return " ".join(parts) or "0"


def show(title, rows):
    print(title)
    print(f"  {'n':>2}  {'computed':<14} {'formula':<14} match")
    for n, got, want in rows:
        print(f"  {n:>2}  {compact(got):<14} {compact(want):<14} {got == want}")
    print()


def main():
    model = ut2(2, 2)
    rows = []
    for n in range(2, 6):
        report = ordinary_codim(model, n, include_proper=True)
        count = (n - 2) * 2 ** (n - 1) + 1
        want = cyclic_invariants(2).direct_sum(cyclic_invariants(2).power(count))
        rows.append((n, report.ordinary, want))
        print(f"ut2(2,2) n={n}: proper part {compact(report.proper)}")
    print()
    show("ut2(2,2): Z_2 + Z_2^((n-2)*2^(n-1)+1)", rows)

    rows = []
    for n in range(2, 5):
        got = ordinary_codim(grassmann(3, n + 1), n).ordinary
        want = cyclic_invariants(3).power(2 ** (n - 1))
        rows.append((n, got, want))
    show("grassmann(3, n+1): Z_3^(2^(n-1))", rows)

    # mixed moduli leave a mixed signature: count Z_q summands per q
    inv = ordinary_codim(ut2(4, 2), 4).ordinary
    print(f"ut2(4,2) n=4: {compact(inv)}  (per q: {inv.per_q()})")


if __name__ == "__main__":
    main()
