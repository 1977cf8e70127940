"""The edge-isoperimetric lower bound on hypercubes.

For the d-cube, min_cut(i) >= i * (d - log2 i), with equality whenever
i is a power of two and a subcube gives the optimal cut. The natural-log
variant of the bound is printed too; it genuinely fails for some sizes,
which is why base 2 is the enforced reading.
"""

from isoprofile import hypercube_inequality_check


def main():
    for d in (2, 3, 4):
        report = hypercube_inequality_check(d)
        print(f"dimension {d} (n={report.n}), all base-2 rows hold: {report.all_hold}")
        print(f"  {'i':>3} {'min_cut':>8} {'i*(d-log2 i)':>14} {'tight':>6} {'i*(d-ln i)':>12} {'ln ok':>6}")
        for row in report.rows:
            tight = "yes" if row.exact and row.min_cut == int(row.bound_base2) else ""
            print(
                f"  {row.size:>3} {row.min_cut:>8} {row.bound_base2:>14.4f} "
                f"{tight:>6} {row.bound_natural:>12.4f} {str(row.holds_natural):>6}"
            )
        print(f"  note: {report.note}")
        print()


if __name__ == "__main__":
    main()
