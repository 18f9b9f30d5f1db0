"""The recursion on GL(2) examples, orbit by orbit."""

from reductive_ih.engine import IHEngine, VarietyDescriptor, orbit_table
from reductive_ih.rootdatum import preset

engine = IHEngine()

# conv{(1,0),(0,1)} gives P^3 = P(Mat_2): the open orbit contributes q^3 - q
# and the closed orbit of rank one matrices contributes (1+q)^2.
seg = VarietyDescriptor.build(preset("GL2"), [(1, 0), (0, 1)])
print(orbit_table(engine.global_ih(seg)))

# The unit square: the diagonal vertex (1,1) has a link which is again P^3,
# so its stalk (1 - q) * (1 + q + q^2 + q^3) truncated below t^4 is just 1.
square = VarietyDescriptor.build(preset("GL2"), [(0, 0), (1, 0), (0, 1), (1, 1)])
vertex = next(af for af in engine.faces(square) if list(af.vertices) == [(1, 1)])
sl = engine.slice_descriptor(square, vertex)
print("\nslice at (1,1): functional", sl.functional, " link vertices", [tuple(map(int, v)) for v in sl.link.delta.vertices], " d_x =", sl.d_x)
print("link IH:", engine.global_ih(sl.link).global_poly.to_t_string())
print()
print(orbit_table(engine.global_ih(square)))
