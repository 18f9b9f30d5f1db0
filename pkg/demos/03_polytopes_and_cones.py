"""Face lattices, normal cones and link slices of lattice polytopes."""

from reductive_ih.polyhedra import (difference_lattice, link_slice, normal_cone, polytope_from_vertices,
                                    quotient_map)

pyramid = polytope_from_vertices(3, [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)])
print("square pyramid: dim", pyramid.dim, " f-vector", pyramid.face_counts())
for facet in pyramid.facets:
    print("  facet", facet)

# Normal cone at the apex: the image of pyramid - apex, here in the full lattice.
apex = next(f for f in pyramid.faces if f.dim == 0 and list(f.vertices) == [(0, 0, 1)])
qm = quotient_map(difference_lattice(apex), 3)
sigma = normal_cone(pyramid, apex, qm)
print("\ncone at the apex has rays", sigma.extreme_rays)

# Cutting it with a functional positive on the cone gives the link polytope.
link, n = link_slice(sigma, (0, 0, -1))
print("link at level", n, "is", [tuple(map(int, v)) for v in link.vertices], " (a square, so the apex is singular)")
