"""Root data and Weyl groups, with length generating functions."""

from reductive_ih.rootdatum import generate_weyl, length_polynomial, parabolic_poincare, preset, quotient_poincare

for name in ["A1", "A1xA1", "A2", "B2", "G2", "A3", "GL2"]:
    rd = preset(name)
    W = generate_weyl(rd)
    print(f"{name:6s} rank {rd.rank}  |W| = {len(W):3d}  W(q) = {length_polynomial(W, range(len(W)))}")

# W(q) factors as a product of (1 + q + ... + q^(d-1)) over the degrees.
# For A2 the degrees are 2 and 3; a parabolic W_I and its quotient W^I multiply back to W(q).
W = generate_weyl(preset("A2"))
print("\nA2 with I = {0}:  W_I =", parabolic_poincare(W, [0]), "  W^I =", quotient_poincare(W, [0]))
print("product:", parabolic_poincare(W, [0]) * quotient_poincare(W, [0]))
