"""Three parity classes of the rationals and the 2-adic order behind them."""
from fractions import Fraction

from qparity import Parity, classify, nu2, parity_add, parity_mul
from qparity.partition import dyadic_decompose

samples = [Fraction(5), Fraction(10), Fraction(1, 2), Fraction(1, 4), Fraction(2, 3),
           Fraction(3, 8), Fraction(12), Fraction(0)]

print(f"{'q':>6} {'parity':>7} {'nu2':>5}  dyadic form")
for q in samples:
    form = dyadic_decompose(q)
    shown = "-" if form is None else ("0" if form.is_zero else f"2^{form.k}(2*{form.ell}-1)")
    print(f"{str(q):>6} {classify(q).value:>7} {str(nu2(q)):>5}  {shown}")

# odd numerators alone are not closed the way odd integers are
print("\n1/4 + 1/4 =", Fraction(1, 4) + Fraction(1, 4), "->", classify(Fraction(1, 2)))

print("\naddition table")
for a in Parity:
    print(f"{a.value:>5}", *(f"{parity_add(a, b).value:>5}" for b in Parity))
print("multiplication table")
for a in Parity:
    print(f"{a.value:>5}", *(f"{parity_mul(a, b).value:>5}" for b in Parity))
