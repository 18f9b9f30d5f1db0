"""With no roots the engine computes toric IH; compare it to Stanley's g/h recursion."""

from reductive_ih.engine import IHEngine, VarietyDescriptor
from reductive_ih.polyhedra import polytope_from_vertices
from reductive_ih.rootdatum import torus
from reductive_ih.toric_oracle import simple_h_polynomial, toric_ih_oracle

polytopes = {
    "cube": [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)],
    "square pyramid": [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)],
    "octahedron": [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)],
    "cross-polytope": [tuple(s * (i == j) for j in range(4)) for i in range(4) for s in (1, -1)],
}
for name, verts in polytopes.items():
    delta = polytope_from_vertices(len(verts[0]), verts)
    engine = IHEngine().global_ih(VarietyDescriptor.build(torus(delta.ambient_rank), delta)).global_poly
    oracle = toric_ih_oracle(delta)
    print(f"{name:15s} engine {engine.to_list()!s:22s} oracle {oracle.to_list()!s:22s}"
          f" naive h {simple_h_polynomial(delta).to_list()}")
# The naive h-vector sum f_k (q-1)^k is only right for simple polytopes, like the cube.
