"""Scalar arithmetic in the max-plus semifield.

Run with:  python3 demos/01_semifield_scalars.py
"""

from fractions import Fraction

from tropsolve import MAX_PLUS as sf

# In max-plus, "addition" is max and "multiplication" is ordinary +.
# The zero element is -inf (it absorbs products and is neutral for max),
# the identity is 0.
print("2 (+) 5   =", sf.add(2.0, 5.0))
print("2 (x) 5   =", sf.mul(2.0, 5.0))
print("zero, one =", sf.zero, ",", sf.one)
print("x (+) zero =", sf.add(7.0, sf.zero))
print("x (x) zero =", sf.mul(7.0, sf.zero))

# Addition is idempotent: adding a value to itself changes nothing.
print("3 (+) 3   =", sf.add(3.0, 3.0))

# Every nonzero scalar has a multiplicative inverse (its negation).
print("inv(5)    =", sf.inv(5.0))
print("5 (x) inv(5) =", sf.mul(5.0, sf.inv(5.0)), "(the identity)")

# Rational powers scale the exponent, so square roots halve the value.
print("4 ** (1/2) =", sf.rational_pow(4.0, Fraction(1, 2)))
print("4 ** 3     =", sf.rational_pow(4.0, 3))

# Idempotent addition induces the usual numeric order on max-plus.
print("-5 <= 0 ?  ", sf.leq(-5.0, 0.0))
print("zero is the bottom element:", sf.leq(sf.zero, -1e9))

# Scalars print as integer tokens when integral, '-inf' for the zero.
print("tokens:", [sf.format_scalar(v) for v in (3.0, -2.5, sf.zero)])
