"""
Order matters in the product factorization
==========================================

For two Selberg operators S1, S2 one has

    S1 + S2 - 2 S2 S1 - I/2 = -2 (S2 - I/2)(S1 - I/2)

and the factors cannot be swapped unless S1 and S2 commute. Here we
check both orders in exact arithmetic, using real rational vectors so
every |<z_i, z_j>| is rational and S1, S2 have exact entries.
"""

from ipx import operators
from ipx.linalg import vec
from ipx.scalars import gr

one, half, two = gr(1), gr(1) / 2, gr(2)
S1 = operators.selberg([vec([1, 0], exact=True)])
S2 = operators.selberg([vec([1, 1], exact=True), vec([0, 2], exact=True)])


def shifted(S):
    return operators.combine([(one, S)], shift=-half)


lhs = operators.combine([(one, S1), (one, S2), (-two, operators.compose(S2, S1))], shift=-half)
good = operators.combine([(-two, operators.compose(shifted(S2), shifted(S1)))])
swapped = operators.combine([(-two, operators.compose(shifted(S1), shifted(S2)))])

print("S1 =\n", S1.dense)
print("S2 =\n", S2.dense)
print("S1 + S2 - 2 S2 S1 - I/2 =\n", lhs.dense)
print("-2 (S2 - I/2)(S1 - I/2) matches:", (lhs.dense == good.dense).all())
print("-2 (S1 - I/2)(S2 - I/2) matches:", (lhs.dense == swapped.dense).all())
print("difference = 2 [S1, S2] =\n", lhs.dense - swapped.dense)

# both sides still have norm at most 1/2, which is what the bound needs
print("norm of the product:", float(operators.spectral_norm(good)))
