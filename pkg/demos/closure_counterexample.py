# # Same integral closure, different inner rates
#
# The ideals (x^2, y^2) and (x^2, xy, y^2) have the same Newton polygon, so
# they have the same integral closure. Their inner rates still differ on the
# divisor of the ray (2,1). This script walks through the computation.

from fractions import Fraction

from innerrates import (MonomialIdeal, integral_closure, invariants_at_ray, omega2_module,
                        triple_of_ideal)
from innerrates.exactalg import format_rat

I = MonomialIdeal.parse("x^2, y^2")
J = MonomialIdeal.parse("x^2, x*y, y^2")

# Closures agree:

print("closure of I:", integral_closure(I))
print("closure of J:", integral_closure(J))

# The modules of 2-forms do not. For I the wedge d(x^2) ^ d(y^2) = 4xy dx^dy
# is the only independent pair; products with x and y add x^3 and y^3.

print("2-forms of I:", omega2_module(I))
print("2-forms of J:", omega2_module(J))

# At the ray (2,1) the orders of the ideals match but the orders of the
# 2-forms do not, which is what separates the inner rates.

for name, K in (("I", I), ("J", J)):
    x = invariants_at_ray(K, (2, 1))
    print(f"{name}: m={x.m} nu={x.nu} q={format_rat(x.q)}")

# The full triples also differ: the polar meets different curves.

for name, K in (("I", I), ("J", J)):
    t, p = triple_of_ideal(K)
    print(name, "E^2", [v.self_int for v in t.graph.vertices], "L", t.L, "P", t.P,
          "q", [format_rat(q) for q in p.q])

assert invariants_at_ray(I, (2, 1)).q == 2
assert invariants_at_ray(J, (2, 1)).q == Fraction(3, 2)
