"""The exact dictionary between FIN_k and a net on the positive sphere of c0.

Discretize the positive part of the unit sphere of c0 by rounding values to
powers (1+delta)^(-e), e < k: keep only finitely supported functions that
attain 1.  Carrying exponents instead of values turns the correspondence
with FIN_k into pure integer relabeling (value = k - exponent), so the round
trip is exact and no logarithm is ever evaluated numerically.

Run:  python demos/06_sphere_net.py
"""

from fractions import Fraction

from finkit import (
    NetFunction,
    Window,
    k_for_epsilon,
    theta,
    theta_inv,
    window_elements,
)

print("Given a stability tolerance epsilon, pick delta = epsilon/2 and the")
print("least k with (1+delta)^(k-1) > 1/delta, by exact rational comparison:")
for eps in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(4)):
    k, delta = k_for_epsilon(eps)
    print(f"  epsilon = {str(eps):4} -> k = {k}, delta = {delta}")
print()

delta = Fraction(1, 2)
h = NetFunction(2, delta, ((0, 0), (2, 1)))
print(f"A net function with exponents {h.exponents} and delta = {delta}:")
print(f"  h(0) = {h.value_at(0)}, h(2) = {h.value_at(2)}  (exact fractions)")
p = theta(h)
print(f"  relabeled into FIN_2: {p}")
print(f"  and back: exponents {theta_inv(p, delta).exponents}")
print()

w = Window(2, 6, 6)
count = 0
for q in window_elements(w):
    assert theta(theta_inv(q, delta)) == q
    count += 1
print(f"Round trip checked exactly on all {count} window elements at k=2, n<6.")
print("The net side and the combinatorial side are the same finite object.")
