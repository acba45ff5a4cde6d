# coding: utf-8

# # f-vectors that span the Euler hyperplane
#
# For odd d, the ordinary polytopes P^{d, d+i//2, d+i}, i = 1..d, give d
# f-vectors. Their rank is computed with exact integer elimination.

# In[1]:

from ordpoly import formulas as F
from ordpoly import verify as V


# In[2]:

for d in (5, 7, 9, 11):
    family = F.conjecture_family(d)
    rows = [F.dinh_f_vector(*p) for p in family]
    print(d, "rank", F.exact_rank(rows), "of", d)


# In[3]:

for line in V.conjecture_report(5).lines():
    print(line)


# The same checks can run over a grid of enumerated lattices.

# In[4]:

report = V.verify(V.expand_grid("multiplex", [3, 4]), ["fvector", "flag", "toric", "duality"])
print(report.lines()[-1])
