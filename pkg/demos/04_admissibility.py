"""Which polytopes define a reductive variety, and the I/J/K data of their faces."""

from reductive_ih.admissibility import admissibility_report, admissible_faces
from reductive_ih.polyhedra import polytope_from_vertices
from reductive_ih.rootdatum import generate_weyl, preset

gl2 = preset("GL2")
W = generate_weyl(gl2)

for verts in [[(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1)], [(2, 0), (0, 2)], [(2, 0), (4, 0)]]:
    report = admissibility_report(gl2, W, polytope_from_vertices(2, verts))
    print(f"{str(verts):36s} {report.describe()}")

# Admissible faces index the G x G orbits; the unit square has six.
square = polytope_from_vertices(2, [(0, 0), (1, 0), (0, 1), (1, 1)])
print("\nadmissible faces of the unit square:")
for af in admissible_faces(gl2, W, square):
    s = af.symmetry
    print(f"  {[tuple(map(int, v)) for v in af.vertices]!s:28s} dim {af.dim}  I={s.I} J={s.J} K={s.K}")
