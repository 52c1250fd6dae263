"""Calkin-Wilf rows, their parity strings, and the repeating o, n, e pattern."""
import time

from qparity import cw_parity_row, cw_row, parity_transfer, Parity
from qparity.trees import cw_parity_codes, cw_row_pattern

for r in range(1, 5):
    print(r, " ".join(str(q) for q in cw_row(r)))

print("\ntransfer rules:", {p.symbol: tuple(c.symbol for c in parity_transfer(p)) for p in Parity})

for r in range(1, 8):
    row = cw_parity_row(r)
    print(f"row {r}: {row if len(row) <= 40 else row[:40] + '...'}"
          f"  closed form ok: {row == cw_row_pattern(r)}")

t0 = time.perf_counter()
codes = cw_parity_codes(10**7)
dt = time.perf_counter() - t0
counts = [int((codes == c).sum()) for c in (0, 1, 2)]
print(f"\n10^7 parity symbols in {dt:.3f}s; counts e/o/n = {counts}")
