# # Inner rates along the skeleton
#
# On each edge of the dual graph the inner rate is linear once the edge is
# parametrized by skeletal length, where the edge between v and v' has length
# 1/(m_v m_v'). Subdividing an edge by a blow-up leaves lengths unchanged and
# the new vertex gets the weighted average rate.

from fractions import Fraction

from innerrates import (GraphPoint, MonomialIdeal, invariants_at_ray, rate_at, recurrence_extend,
                        resolve, skeletal_distance)
from innerrates.exactalg import format_rat
from innerrates.toric import skeletal_parameter

I = MonomialIdeal.parse("x^5, x^2*y, y^3")
res = resolve(I)
prof = res.profile

print("chain:", " ".join(map(str, res.chain.rays)))
print("m:", prof.m)
print("q:", [format_rat(q) for q in prof.q])

# In[1]: blow up the double point on the first edge

ext = recurrence_extend(prof, on_edge=(0, 1))
u, v = res.chain.rays[1], res.chain.rays[2]
w = (u.p + v.p, u.q + v.q)
new = invariants_at_ray(I, w)
print("new vertex:", ext.m[-1], format_rat(ext.q[-1]), "toric at", w, ":", new.m, format_rat(new.q))

a, b = GraphPoint.at_vertex(0), GraphPoint.at_vertex(1)
print("length before:", skeletal_distance(prof, a, b), "after:", skeletal_distance(ext, a, b))

# In[2]: points deeper inside the cone u, v

for alpha, beta in ((2, 1), (1, 3), (5, 2)):
    r = (alpha * u.p + beta * v.p, alpha * u.q + beta * v.q)
    t = skeletal_parameter(I, u, v, r)
    lin = rate_at(prof, GraphPoint((0, 1), t))
    print(r, "t =", format_rat(t), "rate", format_rat(lin), "toric", format_rat(invariants_at_ray(I, r).q))
    assert lin == invariants_at_ray(I, r).q

assert (ext.m[-1], ext.q[-1]) == (new.m, new.q)
assert skeletal_distance(ext, a, b) == skeletal_distance(prof, a, b) == Fraction(1, prof.m[0] * prof.m[1])
