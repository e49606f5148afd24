"""
Numerical semigroups
====================

Build a few semigroups from generators and look at the usual invariants.
"""

import staircase_kit as sk

# Start with the classic two-generator case.  Every integer from the
# conductor on is a member, and the Frobenius number is the largest gap.
H = sk.from_generators([5, 6])
print("H          ", H.generators)
print("conductor  ", H.conductor)
print("frobenius  ", H.frobenius)
print("gaps       ", sk.gaps(H))
print("Apery(5)   ", sk.apery_set(H, 5))

# Redundant generators are dropped on construction.
print(sk.from_generators([5, 6, 10, 11, 12]).generators)

# Membership is a bit lookup below the conductor and trivially true above.
print([n for n in range(25) if n in H])

###############################################################################
# Consecutive generators
# ----------------------
# <a, a+1, ..., a+r> has conductor ceil((a-1)/r) * a.  Compare the closed form
# with the table-based value for a small grid.

for a in range(3, 9):
    row = []
    for r in range(1, a):
        closed = sk.conductor_arithmetic(a, r)
        table = sk.arithmetic_semigroup(a, r).conductor
        assert closed == table
        row.append(f"{closed:3d}")
    print(f"a={a}:", " ".join(row))

###############################################################################
# Two coprime generators: the conductor is (a-1)(b-1).

for a, b in [(3, 5), (7, 10), (11, 13)]:
    print((a, b), sk.from_generators([a, b]).conductor, (a - 1) * (b - 1))
