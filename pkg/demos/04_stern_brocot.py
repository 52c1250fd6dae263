"""Stern-Brocot levels built by mediants, and the mediant parity rule."""
from qparity import sb_level, sb_parity_level
from qparity.trees import sb_level_pattern

for k in range(0, 4):
    lvl = sb_level(k)
    print(f"level {k}:", " ".join(str(e) for e in lvl),
          " [" + "".join(e.parity.symbol for e in lvl) + "]")

for k in range(1, 9):
    s = sb_parity_level(k)
    print(f"k={k}: len {len(s):4d}  matches closed form: {s == sb_level_pattern(k)}")
