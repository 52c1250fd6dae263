"""Prefix densities of the parity classes under several orderings."""
from qparity import density_report
from qparity.density import list_order

for tag in ("natural-n", "f-reorder", "h-reorder", "cw", "sb", "cw-fullq", "sb-fullq"):
    row = density_report(tag, 30_000, [30_000]).final()
    print(f"{tag:>10}: even {float(row.ratios[0]):.4f}  odd {float(row.ratios[1]):.4f}"
          f"  none {float(row.ratios[2]):.4f}")

# denominators up to n_max, the (0, 1) listing
for n_max in (8, 20, 100, 1000):
    count = len(list_order(n_max))
    row = density_report("list-order", count, [count], n_max=n_max).final()
    print(f"list-order n_max={n_max:5d}: counts {row.counts}  ratios",
          ", ".join(f"{float(r):.4f}" for r in row.ratios))

# the Farey ordering: reported, no limit claimed
from qparity.density import farey_length
n = farey_length(200)
for cut in (n // 4, n // 2, n):
    row = density_report("farey", n, [cut], n_max=200).final()
    print(f"farey(200) first {cut:5d}:", ", ".join(f"{float(r):.4f}" for r in row.ratios))
