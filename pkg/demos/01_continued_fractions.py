"""Negative continued fractions: the calculus behind tangles and plumbing legs.

Every rational below -1 has a unique expansion with all coefficients <= -2,
and the expansion is exactly the list of weights of the corresponding
plumbing leg.  Run: python3 demos/01_continued_fractions.py
"""

from fractions import Fraction

from qamont import cf_eval, cf_expand, prefix_r

print("Expansions of a few rationals below -1:")
for t in (Fraction(-2), Fraction(-7, 3), Fraction(-5, 4), Fraction(-17, 5)):
    coeffs = cf_expand(t)
    print(f"  {str(t):>6}  ->  {list(coeffs)}  (round-trips: {cf_eval(coeffs) == t})")

print()
print("The chain identity: n copies of -2 evaluate to -(n+1)/n")
for n in range(1, 6):
    print(f"  {[-2] * n}  ->  {cf_eval([-2] * n)}")

print()
print("Prefix values r = -1/value(prefix) always lie strictly between 0 and 1:")
coeffs = cf_expand(Fraction(-17, 5))
for length in range(1, len(coeffs) + 1):
    print(f"  prefix {list(coeffs[:length])}  ->  r = {prefix_r(coeffs, length)}")
