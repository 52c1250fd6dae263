"""Cosets of the odd-denominator rationals Q_P inside the level sets Q_{-k}."""
import random
from fractions import Fraction

from qparity import coset_equal, coset_rep, coset_reps
from qparity.partition import coset_witness

for k in range(1, 5):
    print(f"k={k}:", " ".join(str(r) for r in coset_reps(k)))

print()
for q1, q2 in [(Fraction(1, 4), Fraction(3, 4)), (Fraction(1, 4), Fraction(5, 4)),
               (Fraction(1, 2), Fraction(1, 4))]:
    print(f"{q1} ~ {q2}: {coset_equal(q1, q2)}  (witness {coset_witness(q1, q2)})")

# every element of Q_{-3} lands on one of the four representatives
rng = random.Random(1)
hits = {}
for _ in range(2000):
    q = Fraction(rng.randrange(-999, 1000, 2), 8 * rng.randrange(1, 200, 2))
    rep = coset_rep(q)
    hits[str(rep)] = hits.get(str(rep), 0) + 1
print("\nrandom elements of Q_-3 per representative:", dict(sorted(hits.items())))
