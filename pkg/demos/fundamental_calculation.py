"""The generic cross-multiplication identity behind triple unprojection.

Over the 32-variable ring k[x1..x4, z1..z4, m23_1..m45_4] the four
pfaffian linear forms P_i = sum_j Q_ij z_j share the coefficient matrix
Q.  The signed 3x3 minors H_i of Q (deleting row i) satisfy
x_i H_j = x_j H_i, so H_i / x_i is a common vector g independent of i.
"""

from tomjerry import generic_fundamental_data

data = generic_fundamental_data()
ring = data.ring
xs = [ring.var(f"x{i}") for i in range(1, 5)]

print("ambient ring:", ring.nvars, "variables")
print("Q[0][0] =", data.q_matrix[0][0])
print()

print("cross-multiplication certificates x_i H_j == x_j H_i:")
checks = 0
for i in range(4):
    for j in range(4):
        for k in range(4):
            assert xs[i] * data.h_vectors[j][k] == xs[j] * data.h_vectors[i][k]
            checks += 1
print(f"  all {checks} identities hold")
print()

print("the common quotient g_k = H_i[k] / x_i (any row i):")
for k, gk in enumerate(data.g):
    degs = sorted({sum(mon) for mon, _ in gk.terms})
    print(f"  g[{k}]: {len(gk)} terms, total degree {degs}")
print()
print("g multiplies back: g_k * x_j == H_j[k] for every j, k")
for j in range(4):
    for k in range(4):
        assert data.g[k] * xs[j] == data.h_vectors[j][k]
print("  verified")
