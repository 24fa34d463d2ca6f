"""From the Tom(1,2,3) pfaffian ideal to 20 generators in codimension 6.

Specialize the 25 matrix coefficients to random scalars over F_1021,
compute the three unprojection homomorphisms and their couplings, and
assemble the codimension-6 ideal with the new variables T, S, W.
"""

from tomjerry import (
    FieldSpec,
    IdealPresentation,
    RingSpec,
    buchberger,
    build_unprojection_ideal,
    homogeneity_report,
    krull_dimension,
    rng_stream,
    triple_unprojection,
)

field = FieldSpec(1021)
ring = RingSpec(tuple(f"z{i}" for i in range(1, 8)), (1,) * 7, field)

rng = rng_stream(1, "tom123:c")
cs = {f"c{i}": rng.randrange(1, 1021) for i in range(1, 26)}

data = triple_unprojection(ring, cs)
print("base: Tom(1,2,3) pfaffian ideal in", ring.nvars, "variables")
print("unprojection ideals:")
for t, ideal in enumerate(data.ideals, start=1):
    print(f"  J{t} = (" + ", ".join(ideal.names) + ")")
print("couplings:", [(c.s, c.t) for c in data.couplings])
print()

un = build_unprojection_ideal(data)
print("unprojection ideal:", len(un.generators), "generators in",
      un.ring.nvars, "variables")
print("generator degrees:", homogeneity_report(un))

gb = buchberger(IdealPresentation(un.ring, tuple(un.generators)))
dim = krull_dimension(gb)
print("quotient dimension:", dim)
print("codimension:", un.ring.nvars - dim)
