# # The family I_n = (x, y)^n
#
# Every I_n is resolved by a single blow-up of the origin, so the dual graph
# is always one (-1)-curve. The decorations L and P still tell the members
# apart, and so does the inner rate at any ray other than (1,1).

from innerrates import MonomialIdeal, canonical_key, invariants_at_ray, key_digest, resolve
from innerrates.exactalg import format_rat

# In[1]:

rows = []
for n in range(1, 9):
    I = MonomialIdeal.power_of_maximal(n)
    res = resolve(I)
    rows.append((n, res.triple.L, res.triple.P, format_rat(invariants_at_ray(I, (2, 1)).q),
                 key_digest(canonical_key(res.triple))))

print(" n  L     P      q(2,1)  key")
for n, L, P, q, key in rows:
    print(f"{n:2d}  {L!s:5} {P!s:6} {q:7} {key}")

# L = n and P = 2n - 2, so no two keys coincide:

assert len({r[-1] for r in rows}) == len(rows)
