"""Classification of Tom/Jerry triples up to the S5 symmetry.

A triple assigns one format (Tom_i or Jerry_ij) to each of three ideals.
Permuting the five rows and columns of the skew matrix acts on formats,
so triples fall into orbits.  This enumerates all four shape classes.
"""

from tomjerry import enumerate_triple_classes

for shape in ("TTT", "JJJ", "TTJ", "TJJ"):
    classes = enumerate_triple_classes(shape)
    total = sum(len(c.members) for c in classes)
    print(f"shape {shape}: {len(classes)} classes, {total} triples total")
    for c in classes:
        rep = " + ".join(str(f) for f in c.representative)
        print(f"  orbit of size {len(c.members):3d} represented by {rep}")
    print()

print("the Tom(1,2,3) triple sits in the unique TTT class;")
ttt = enumerate_triple_classes("TTT")[0]
print("its orbit has", len(ttt.members), "members, one per unordered")
print("choice of three distinct Tom indices from five rows")
