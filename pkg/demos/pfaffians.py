"""Maximal pfaffians of a 5x5 skew-symmetric matrix.

An odd skew matrix has determinant zero, but deleting row and column t
leaves an even skew matrix whose determinant is a perfect square; its
square root is the t-th maximal pfaffian.  The five of them generate
the codimension-3 pfaffian ideal of the matrix.
"""

from tomjerry import QQ, RingSpec, SkewMatrix

names = tuple(f"x{i}{j}" for i in range(1, 6) for j in range(i + 1, 6))
ring = RingSpec(names, (1,) * len(names), QQ)

entries = {
    (i, j): ring.var(f"x{i}{j}") for i in range(1, 6) for j in range(i + 1, 6)
}
matrix = SkewMatrix(ring, 5, entries)

print("generic 5x5 skew matrix over", len(names), "entry variables")
pfs = matrix.maximal_pfaffians()
for t, p in enumerate(pfs, start=1):
    print(f"  pf{t} = {p}")

print()
print("a pfaffian squares to the determinant of its submatrix;")
print("check pf1 against the 4x4 skew matrix on rows/columns 2..5:")
sub_entries = {
    (i - 1, j - 1): ring.var(f"x{i}{j}") for i in range(2, 6) for j in range(i + 1, 6)
}
sub = SkewMatrix(ring, 4, sub_entries)
print("  pf(submatrix) =", sub.pfaffian())
print("  pf1           =", pfs[0])
assert sub.pfaffian() == pfs[0]
print("  equal, as expected")
