# coding: utf-8

# # Building face lattices
#
# A polytope is described here only by its facets, each given as a set of
# vertex indices. Closing the facets under intersection gives every face.

# In[1]:

from ordpoly import constructions as C
from ordpoly import lattice as LC


# The multiplex M^{3,4} has five vertices. Its facets come from a sliding
# window over the vertex order, clamped at both ends.

# In[2]:

facets = C.multiplex_facets(3, 4)
print([LC.members(f) for f in facets])
L = C.multiplex(3, 4)
print(L)
print("f-vector:", LC.f_vector(L))


# It is a pyramid over a quadrilateral, so the two lattices should be isomorphic.

# In[3]:

square = LC.build_face_lattice(C.polygon_lattice_facets(4), 4)
ok, mapping = LC.poset_isomorphic(L, C.pyramid(square))
print("isomorphic to a square pyramid:", ok)


# The ordinary polytope P^{5,7,9} is bigger: 10 vertices and 26 facets.

# In[4]:

P = C.ordinary(5, 7, 9)
print("f-vector:", LC.f_vector(P))
print("largest facet:", max((LC.members(f) for f in P.facets), key=len))
print("every facet is a multiplex:", all(C.face_is_induced_multiplex(P, f) for f in P.facets))
print("Gale polytope:", C.is_gale_polytope(P))


# Multiplexes are self-dual: sending each face to the intersection of the
# facets paired with its vertices reverses inclusion.

# In[5]:

ok, phi = LC.self_duality_witness(C.multiplex(5, 9))
print("M^{5,9} self-dual:", ok, "with", len(phi), "faces mapped")
