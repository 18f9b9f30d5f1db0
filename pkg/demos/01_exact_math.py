"""Exact arithmetic: polynomials in q = t^2, Smith normal form, and strict feasibility."""

from reductive_ih.exactmath import StrictSystem, matmul, saturate, smith_normal_form, solve
from reductive_ih.qpoly import QPolynomial

# Poincare polynomials are stored in q = t^2 because odd degrees vanish.
p = QPolynomial([1, 1]) ** 3
print("(1+q)^3 =", p.to_q_string(), " i.e. in t:", p.to_t_string())
print("(1+q)^3 / (1+q) =", p.exact_div(QPolynomial([1, 1])))
print("truncated to t-degree <= 3:", p.truncate_t(3))
print("palindromic at t-degree 6:", p.is_palindromic(6))

# Smith normal form: U M V = S with U, V unimodular.
M = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
U, S, V = smith_normal_form(M)
print("\nSNF of", M, "->", [S[i][i] for i in range(3)])
assert matmul(matmul(U, M), V) == S

# The saturation of the lattice spanned by (2, 4, 6) and (0, 3, 3).
print("saturation basis:", saturate([(2, 4, 6), (0, 3, 3)], 3))

# Fourier-Motzkin with strict inequalities and an exact witness.
system = StrictSystem.of(((1, 1), "=", 1), ((1, 0), ">", 0), ((0, 1), ">", 0), ((1, -1), ">=", 0))
x = solve(system)
print("\nwitness for x+y=1, x>0, y>0, x>=y:", [str(c) for c in x])
print("x>0 and x<=0 feasible?", solve(StrictSystem.of(((1,), ">", 0), ((1,), "<=", 0))) is not None)
