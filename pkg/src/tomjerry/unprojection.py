"""Triple unprojection of a matrix in simultaneous Tom_1/Tom_2/Tom_3 format.

The construction runs in three stages.  A one-time generic calculation
over Q produces, for the skew matrix N with first row (0, x1..x4) and
remaining entries bilinear in z1..z4 and coefficient variables m_ij^k,
the four numerators g_k with g_k * x_j equal (up to the fundamental
identities) to signed maximal minors of the coefficient matrix Q of the
pfaffians.  Specializing N onto a concrete Tom matrix turns the g_k
into the images h_k of an unprojection homomorphism phi: J/I -> R/I.
Finally the three homomorphisms are coupled pairwise and assembled into
a 20-generator ideal in the ring extended by T, S, W.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .formats import (
    TOM123_ENTRIES,
    TOM123_FORMATS,
    TOM123_IDEALS,
    FormatKind,
    SkewMatrix,
    VariableCI,
    format_check,
)
from .groebner import (
    Budget,
    DEFAULT_BUDGET,
    GroebnerBasis,
    IdealPresentation,
    buchberger,
    lift_cofactors,
    reduce_poly,
)
from .ring import (
    QQ,
    AlgebraError,
    AnyDegree,
    FieldSpec,
    NotHomogeneous,
    Polynomial,
    RingSpec,
    Substitution,
    exact_divide,
    linear_coefficient_matrix,
    substitute,
    weighted_degree,
)


class UnprojectionError(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class GenericTomData:
    """Output of the generic fundamental calculation over Q.

    ring        k[x1..x4, z1..z4, m_ij^k] with 32 variables
    matrix      N: first row (0, x1..x4), block entries sum(m_ij^k z_k)
    pfaffians   P_0..P_4, with P_1..P_4 linear in the z's
    q_matrix    4x4 Q with (P_1..P_4)^t = Q (z_1..z_4)^t
    h_vectors   H_1..H_4, H_i[j] the signed 3x3 minors of Q minus row i
    g           the four numerators, g_k = H_j[k] / x_j for every j
    """

    ring: RingSpec
    matrix: SkewMatrix
    pfaffians: tuple
    q_matrix: tuple
    h_vectors: tuple
    g: tuple


def _det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = rows[0][0].ring.zero()
    for j in range(n):
        minor = [list(r[:j]) + list(r[j + 1 :]) for r in rows[1:]]
        term = rows[0][j] * _det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def generic_ring() -> RingSpec:
    names = tuple(f"x{k}" for k in range(1, 5))
    names += tuple(f"z{k}" for k in range(1, 5))
    for i in range(2, 6):
        for j in range(i + 1, 6):
            names += tuple(f"m{i}{j}_{k}" for k in range(1, 5))
    return RingSpec(names, (1,) * len(names), QQ)


@lru_cache(maxsize=1)
def generic_fundamental_data() -> GenericTomData:
    """The generic calculation, performed once and cached.

    Raises UnprojectionError if any of the fundamental identities
    x_i H_j == x_j H_i fails or a division by x_j is not exact; these
    are identities of the generic ring, so a failure means the
    construction itself is broken.
    """
    ring = generic_ring()
    x = [ring.var(f"x{k}") for k in range(1, 5)]
    z_names = [f"z{k}" for k in range(1, 5)]

    entries: dict[tuple, Polynomial] = {}
    for k in range(1, 5):
        entries[(1, k + 1)] = x[k - 1]
    for i in range(2, 6):
        for j in range(i + 1, 6):
            acc = ring.zero()
            for k in range(1, 5):
                acc = acc + ring.var(f"m{i}{j}_{k}") * ring.var(f"z{k}")
            entries[(i, j)] = acc
    matrix = SkewMatrix(ring, 5, entries)

    pfaffians = matrix.maximal_pfaffians()
    q_rows = linear_coefficient_matrix(pfaffians[1:], z_names)

    h_vectors = []
    for i in range(4):
        sub_rows = [q_rows[r] for r in range(4) if r != i]
        row = []
        for j in range(4):
            minor = [[r[c] for c in range(4) if c != j] for r in sub_rows]
            d = _det(minor)
            row.append(d if j % 2 == 0 else -d)
        h_vectors.append(tuple(row))

    for i in range(4):
        for j in range(4):
            for k in range(4):
                if x[i] * h_vectors[j][k] != x[j] * h_vectors[i][k]:
                    raise UnprojectionError(
                        f"fundamental identity x{i+1}*H{j+1} == x{j+1}*H{i+1} fails"
                    )

    g = tuple(exact_divide(h_vectors[0][k], x[0]) for k in range(4))
    for k in range(4):
        if exact_divide(h_vectors[1][k], x[1]) != g[k]:
            raise UnprojectionError("numerator depends on the row used to divide")

    x_idx = [ring.index(f"x{k}") for k in range(1, 5)]
    m_idx = [i for i, n in enumerate(ring.variables) if n.startswith("m")]
    z_idx = [ring.index(n) for n in z_names]
    for gk in g:
        if gk.degrees_in(z_idx) != {0}:
            raise UnprojectionError("numerator is not z-free")
        if gk.degrees_in(x_idx) != {2} or gk.degrees_in(m_idx) != {3}:
            raise UnprojectionError("numerator bidegree is not (2,3) in (x, m)")

    return GenericTomData(
        ring, matrix, tuple(pfaffians), tuple(tuple(r) for r in q_rows),
        tuple(h_vectors), g,
    )


def _conjugation_for(tom_index: int) -> tuple:
    """Permutation moving a Tom_i matrix into Tom_1 position (reads new
    entry (a,b) from old (sigma_a, sigma_b))."""
    if not 1 <= tom_index <= 5:
        raise UnprojectionError(f"tom index {tom_index} out of range")
    return (tom_index,) + tuple(k for k in range(1, 6) if k != tom_index)


def phi_images(
    matrix: SkewMatrix, ideal: VariableCI, tom_index: int
) -> dict[str, Polynomial]:
    """Images of the ideal's generators under the unprojection hom of a
    Tom_{tom_index} matrix.

    Conjugates the matrix so the distinguished index becomes 1, reads
    off the x-row and the coefficients m_ij^k of the block entries as
    combinations of the ideal's generators, and specializes the generic
    numerators.  The coefficients must be free of every generator
    variable of the ring that carries them (matching failure otherwise).
    """
    ring = matrix.ring
    report = format_check(matrix, ideal, FormatKind("tom", (tom_index,)))
    if not report.ok:
        raise UnprojectionError(
            f"matrix is not Tom_{tom_index} for {ideal.names}: "
            f"violations at {report.violations}"
        )
    conj = matrix.conjugate(_conjugation_for(tom_index))
    block = []
    positions = [(i, j) for i in range(2, 6) for j in range(i + 1, 6)]
    for pos in positions:
        block.append(conj.entry(*pos))
    try:
        coeff_rows = linear_coefficient_matrix(block, list(ideal.names))
    except AlgebraError as exc:
        raise UnprojectionError(f"block entries are not ideal-linear: {exc}") from exc
    z_like = [i for i, n in enumerate(ring.variables) if n.startswith("z")]
    for row in coeff_rows:
        for coeff in row:
            if coeff.degrees_in(z_like) != {0} and coeff:
                raise UnprojectionError(
                    "matching failure: a block coefficient involves a z variable"
                )

    generic = generic_fundamental_data()
    assignments: dict[str, Polynomial] = {}
    for k in range(1, 5):
        assignments[f"x{k}"] = conj.entry(1, k + 1)
    for k, name in enumerate(ideal.names):
        assignments[f"z{k+1}"] = ring.var(name)
    for row, (i, j) in zip(coeff_rows, positions):
        for k in range(4):
            assignments[f"m{i}{j}_{k+1}"] = row[k]
    sub = Substitution(assignments)
    return {
        name: substitute(generic.g[k], sub, ring)
        for k, name in enumerate(ideal.names)
    }


@dataclass(frozen=True)
class Coupling:
    """A_st with phi_s(phi_t(p)) == A_st * p mod I for all p in J_t;
    the residual r_st is kept for structure and is zero here."""

    s: int
    t: int
    value: Polynomial
    residual: Polynomial


@dataclass(frozen=True, eq=False)
class TripleUnprojectionData:
    """A specialized (or partially specialized) triple unprojection bundle."""

    ring: RingSpec
    matrix: SkewMatrix
    ideals: tuple
    pfaffians: tuple
    gb: GroebnerBasis
    phis: tuple  # one {generator name: image} per Tom index 1..3
    couplings: tuple  # A_12, A_13, A_23


def compute_coupling(
    phis_s: Mapping[str, Polynomial],
    phis_t: Mapping[str, Polynomial],
    ideal_s: VariableCI,
    ideal_t: VariableCI,
    gb: GroebnerBasis,
    s: int,
    t: int,
    *,
    budget: Budget = DEFAULT_BUDGET,
) -> Coupling:
    """Extract A_st from the composite phi_s . phi_t and verify it on all
    four generators of J_t."""
    ring = gb.ring
    targets_s = ideal_s.generators(ring)
    p1 = ring.var(ideal_t.names[0])
    h1 = phis_t[ideal_t.names[0]]
    b = lift_cofactors(h1, targets_s, gb, budget=budget)
    composite = ring.zero()
    for bk, name in zip(b, ideal_s.names):
        composite = composite + bk * phis_s[name]
    a = lift_cofactors(composite, [p1], gb, budget=budget)[0]
    for name in ideal_t.names:
        hk = phis_t[name]
        bk = lift_cofactors(hk, targets_s, gb, budget=budget)
        comp_k = ring.zero()
        for cof, sname in zip(bk, ideal_s.names):
            comp_k = comp_k + cof * phis_s[sname]
        if reduce_poly(comp_k - a * ring.var(name), gb):
            raise UnprojectionError(
                f"coupling A_{s}{t} fails on generator {name} of J_{t}"
            )
    return Coupling(s, t, a, ring.zero())


def triple_unprojection(
    ring: RingSpec,
    c_values: Mapping[str, object] | None = None,
    *,
    budget: Budget = DEFAULT_BUDGET,
) -> TripleUnprojectionData:
    """Build the Tom(1,2,3) bundle over a ring containing z1..z7.

    Coefficients c1..c25 that are not variables of the ring must get
    scalar values through c_values.  The pfaffian ideal, the three homs
    and the three couplings are all computed and certified here.
    """
    c_values = dict(c_values or {})
    have = set(ring.variables)
    entries: dict[tuple, Polynomial] = {}
    for pos, combo in TOM123_ENTRIES.items():
        acc = ring.zero()
        for ci, zname in combo:
            cname = f"c{ci}"
            if cname in have:
                coeff = ring.var(cname)
            elif cname in c_values:
                coeff = ring.const(c_values[cname])
            else:
                raise UnprojectionError(
                    f"coefficient {cname} is neither a ring variable nor valued"
                )
            acc = acc + coeff * ring.var(zname)
        entries[pos] = acc
    matrix = SkewMatrix(ring, 5, entries)

    pfaffians = tuple(matrix.maximal_pfaffians())
    gb = buchberger(IdealPresentation(ring, pfaffians), budget=budget)
    phis = tuple(
        phi_images(matrix, ideal, t)
        for t, ideal in zip((1, 2, 3), TOM123_IDEALS)
    )
    couplings = []
    for s, t in ((1, 2), (1, 3), (2, 3)):
        couplings.append(
            compute_coupling(
                phis[s - 1], phis[t - 1],
                TOM123_IDEALS[s - 1], TOM123_IDEALS[t - 1],
                gb, s, t, budget=budget,
            )
        )
    return TripleUnprojectionData(
        ring, matrix, TOM123_IDEALS, pfaffians, gb, phis, tuple(couplings)
    )


UNPROJECTION_NAMES = ("T", "S", "W")


@dataclass(frozen=True, eq=False)
class UnprojectionIdeal:
    """The 20-generator ideal: 5 pfaffians, 12 unprojection relations,
    3 product relations, in the ring extended by T, S, W."""

    ring: RingSpec
    generators: tuple
    data: TripleUnprojectionData


def build_unprojection_ideal(
    data: TripleUnprojectionData,
    tsw_weights: tuple[int, int, int] = (1, 1, 1),
) -> UnprojectionIdeal:
    base = data.ring
    ext = RingSpec(
        base.variables + UNPROJECTION_NAMES,
        base.weights + tuple(tsw_weights),
        base.field,
    )

    def lift(p: Polynomial) -> Polynomial:
        return substitute(p, Substitution({}), ext)

    gens: list[Polynomial] = [lift(p) for p in data.pfaffians]
    for letter, t in zip(UNPROJECTION_NAMES, (1, 2, 3)):
        tv = ext.var(letter)
        for name in data.ideals[t - 1].names:
            gens.append(tv * ext.var(name) - lift(data.phis[t - 1][name]))
    for (a, b), coup in zip((("T", "S"), ("T", "W"), ("S", "W")), data.couplings):
        if coup.residual:
            raise UnprojectionError("nonzero coupling residuals are not supported")
        gens.append(ext.var(a) * ext.var(b) - lift(coup.value))
    return UnprojectionIdeal(ext, tuple(gens), data)


# -- certificates -----------------------------------------------------------


def welldefinedness_check(data: TripleUnprojectionData) -> bool:
    """p_a*h_b - p_b*h_a in I for every generator pair, for each hom."""
    ring = data.ring
    for t in (1, 2, 3):
        names = data.ideals[t - 1].names
        phis = data.phis[t - 1]
        for a in range(4):
            for b in range(a + 1, 4):
                w = ring.var(names[a]) * phis[names[b]] - ring.var(names[b]) * phis[names[a]]
                if reduce_poly(w, data.gb):
                    return False
    return True


def inclusion_check(data: TripleUnprojectionData) -> bool:
    """Images of phi_t lie in J_s + I for every s != t (with certificates)."""
    ring = data.ring
    for t in (1, 2, 3):
        for s in (1, 2, 3):
            if s == t:
                continue
            targets = data.ideals[s - 1].generators(ring)
            for name in data.ideals[t - 1].names:
                lift_cofactors(data.phis[t - 1][name], targets, data.gb)
    return True


def homogeneity_report(ideal: UnprojectionIdeal) -> list:
    """Weighted degree of each generator; NotHomogeneous entries flag failure."""
    return [weighted_degree(g) for g in ideal.generators]


def is_homogeneous_ideal(ideal: UnprojectionIdeal) -> bool:
    return all(
        not isinstance(d, NotHomogeneous) for d in homogeneity_report(ideal)
    )


# -- the two indirect arguments behind the codimension bound ----------------

# the 15 coefficients killed by the specialization of the pfaffian ideal
SPECIALIZED_ZERO_CS = (1, 2, 3, 5, 6, 7, 9, 12, 13, 15, 16, 18, 19, 21, 23)
SPECIALIZED_KEPT_CS = (4, 8, 10, 11, 14, 17, 20, 22, 24, 25)


def specialized_pfaffian_ideal(field: FieldSpec) -> IdealPresentation:
    """The pfaffian ideal with the 15 listed coefficients set to zero,
    in the 17-variable ring of the surviving z's and c's."""
    names = tuple(f"z{i}" for i in range(1, 8)) + tuple(
        f"c{i}" for i in SPECIALIZED_KEPT_CS
    )
    ring = RingSpec(names, (1,) * len(names), field)
    values = {f"c{i}": 0 for i in SPECIALIZED_ZERO_CS}
    c_values = dict(values)
    entries: dict[tuple, Polynomial] = {}
    for pos, combo in TOM123_ENTRIES.items():
        acc = ring.zero()
        for ci, zname in combo:
            cname = f"c{ci}"
            if cname in c_values:
                continue
            acc = acc + ring.var(cname) * ring.var(zname)
        entries[pos] = acc
    matrix = SkewMatrix(ring, 5, entries)
    return IdealPresentation(ring, tuple(matrix.maximal_pfaffians()))


def pairwise_sum_collapse() -> list[dict]:
    """For each pair J_s + J_t: killing the union's six z variables sends
    every pfaffian of the symbolic Tom(1,2,3) matrix to zero, so the
    quotient by I + J_s + J_t is a polynomial ring in the 26 surviving
    variables: dimension 26, codimension 3 inside the 29-dimensional
    quotient by I."""
    from .formats import build_tom123, tom123_ring

    ring = tom123_ring()
    matrix, ideals = build_tom123(ring)
    pf = matrix.maximal_pfaffians()
    out = []
    for s, t in ((1, 2), (1, 3), (2, 3)):
        union = sorted(set(ideals[s - 1].names) | set(ideals[t - 1].names))
        sub = Substitution({name: ring.zero() for name in union})
        vanished = all(not substitute(p, sub, ring) for p in pf)
        remaining = ring.nvars - len(union)
        out.append(
            {
                "pair": (s, t),
                "killed": tuple(union),
                "pfaffians_vanish": vanished,
                "quotient_dimension": remaining,
                "codimension_in_pfaffian_quotient": 29 - remaining,
            }
        )
    return out
