# coding: utf-8

# # Graphs of ordinary polytopes
#
# Adjacency follows a band pattern in the vertex order, so the graph can be
# written down without building the lattice.

# In[1]:

from math import ceil

from ordpoly import constructions as C
from ordpoly import graphs as G


# In[2]:

spec = C.PolytopeSpec("ordinary", 5, 9, 7)
g = G.ordinary_edges(7, 9)
print(g, "matches the lattice:", g == G.graph_of(C.construct(spec)))


# Seven colours suffice, and vertices 0..6 form a clique, so seven are needed.

# In[3]:

chi, coloring, clique = G.chromatic_number(g, spec)
print("chi =", chi, coloring, "clique", clique)


# In[4]:

print("Hamiltonian cycle:", G.hamiltonian_cycle(9, g))
print("diameter:", G.diameter(g), "=", ceil(9 / 7))


# Quadrilaterals are the only two-faces that are not triangles.

# In[5]:

L = C.construct(spec)
print([tuple(v for v in range(10) if q >> v & 1) for q in G.nontriangular_two_faces(L)])


# Weak neighborliness fails: x_0 and x_9 lie on no common two-face.

# In[6]:

print(G.is_weakly_neighborly(L))
print(G.is_weakly_neighborly(C.ordinary(5, 6, 7)))


# In[7]:

print(G.to_dot(G.multiplex_edges(3, 4), "M34"))
