# coding: utf-8

# # Flag vectors and toric h-vectors
#
# The flag vector counts chains of faces with a prescribed set of dimensions.

# In[1]:

from ordpoly import constructions as C
from ordpoly import formulas as F
from ordpoly import lattice as LC


# In[2]:

M = C.multiplex(5, 9)
fl = LC.flag_vector(M)
for S, count in list(fl.items())[:8]:
    print(S, count, F.multiplex_flag(5, 9, S))


# A multiplex and a repeated pyramid over a polygon share every flag number,
# although their lattices differ.

# In[3]:

facets, nv = C.pyramid_over_polygon(5, 4)
Q = LC.build_face_lattice(facets, nv)
print("same flag vector:", LC.flag_vector(Q) == fl)
print("isomorphic:", LC.poset_isomorphic(Q, M)[0])


# The toric h-vector comes from the g/h recursion over lower intervals.

# In[4]:

for name, L in [("M^{5,9}", M), ("P^{5,7,9}", C.ordinary(5, 7, 9)), ("P^{5,9,9}", C.ordinary(5, 9, 9))]:
    h = LC.toric_h(L)
    print(name, h, "elementary" if h[1] == h[2] else "not elementary",
          "beta =", LC.elementary_beta_of(L))


# In ordinary 5-polytopes, chains (vertex, 3-face) and (2-face, 3-face) are equinumerous.

# In[5]:

fl = LC.flag_vector(C.ordinary(5, 7, 9))
print("f03 =", fl[(0, 3)], " f23 =", fl[(2, 3)])
