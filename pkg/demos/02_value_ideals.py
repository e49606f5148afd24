"""
Ideals as value sets
====================

A monomial ideal of k[[H]] is described by its value set, a finite set of
sporadic values plus a tail [T, oo).
"""

import staircase_kit as sk

H = sk.from_generators([5, 6])

# powers of the maximal ideal
for n in range(5):
    P = sk.max_ideal_power(H, n)
    stable, start = sk.is_stable_under_normalization(P)
    print(f"m^{n} = {P}    stable={stable} start={start}")

# m^4 is the first power without sporadic values: it is t^20 times the whole
# normalization, which is also the conductor ideal.
u = sk.stable_power_threshold(H)
print("first stable power:", u)
print(sk.conductor_ideal(H) == sk.max_ideal_power(H, u))

###############################################################################
# Colons
# ------

m2 = sk.max_ideal_power(H, 2)
m = sk.max_ideal_power(H, 1)
print("m^2 : m =", sk.colon(m2, m))

# In the consecutive-generator family, m^p : m^q = m^(p-q).
S = sk.arithmetic_semigroup(7, 2)
powers = [sk.max_ideal_power(S, n) for n in range(9)]
print(all(sk.colon(powers[p], powers[q]) == powers[p - q] for p in range(9) for q in range(p + 1)))

###############################################################################
# Reductions
# ----------
# t^a generates a reduction of m from some exponent on:
# m^(n+1) = t^a m^n.

for a, r in [(5, 1), (7, 2), (10, 3)]:
    S = sk.arithmetic_semigroup(a, r)
    print((a, r), "reduction exponent", sk.reduction_exponent(S, a), "ceil((a-1)/r) =", -(-(a - 1) // r))

# an arbitrary ideal, and the difference between R-ideals and S-ideals
I = sk.ideal_from_values(H, [6, 10])
print(I, I.minimal_generators, I.is_integral)
