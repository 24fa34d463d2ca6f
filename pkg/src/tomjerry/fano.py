"""Two codimension-6 Fano 3-fold families in weighted projective space.

Each family starts from the 20-generator triple unprojection ideal,
specializes the c coefficients to general field scalars, and maps the
result into a 10-variable ambient ring by a graded substitution that
eliminates three (or four) variables in favor of general forms.  The
verifications are the ones a referee would ask for: codimension 6, the
known Hilbert numerator, palindromicity, the orbifold point counts on
the singular strata of the weighted projective space, and a randomized
Jacobian-minor certificate that the affine cone is smooth away from
the vertex.

Database identifiers: 14885 lives in P(1^3, 2^7), 12979 in
P(1^3, 2^5, 3^2); both are entries of Brown's Graded Ring Database.
"""

from __future__ import annotations

import hashlib
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping, Sequence

import numpy as np

from .groebner import (
    Budget,
    DEFAULT_BUDGET,
    GroebnerBasis,
    HilbertNumerator,
    IdealPresentation,
    ResourceBudgetExceededError,
    buchberger,
    hilbert_numerator,
    krull_dimension,
    reduce_poly,
)
from .ring import (
    QQ,
    AlgebraError,
    FieldSpec,
    Polynomial,
    RingSpec,
    Substitution,
    partial_derivative,
    substitute,
    weighted_degree,
)
from .unprojection import (
    TripleUnprojectionData,
    build_unprojection_ideal,
    triple_unprojection,
)


class ConstructionError(AlgebraError):
    pass


KNOWN_IDS = (14885, 12979)
MAX_RETRIES = 8

HILBERT_TARGETS: dict[int, tuple[int, ...]] = {
    14885: (1, 0, 0, 0, -20, 0, 64, 0, -90, 0, 64, 0, -20, 0, 0, 0, 1),
    12979: (1, 0, 0, 0, -11, -8, 23, 32, -13, -48, -13, 32, 23, -8, -11, 0, 0, 0, 1),
}

# numerator of the specialized pfaffian quotient (all z's weight 2)
PFAFFIAN_STAGE_TARGET = (1, 0, 0, 0, -5, 0, 5, 0, 0, 0, -1)

# expected orbifold point count per singular stratum, in _STRATA order
ORBIFOLD_TARGETS: dict[int, tuple[int, ...]] = {
    14885: (8,),
    12979: (4, 2),
}

AMBIENT_NAMES: dict[int, tuple[str, ...]] = {
    14885: ("w1", "w2", "w3", "z1", "z2", "z3", "z5", "T", "S", "W"),
    12979: ("z1", "c5", "c9", "z2", "z3", "z5", "z6", "T", "S", "W"),
}
AMBIENT_WEIGHTS: dict[int, tuple[int, ...]] = {
    14885: (1, 1, 1, 2, 2, 2, 2, 2, 2, 2),
    12979: (1, 1, 1, 2, 2, 2, 2, 2, 3, 3),
}

SYMBOLIC_CS_12979 = (1, 5, 9, 11)


def rng_stream(seed: int, name: str) -> random.Random:
    """Independent deterministic RNG stream named within a master seed."""
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _draw(rng: random.Random, field: FieldSpec) -> int:
    if field.p is not None:
        return rng.randrange(1, field.p)
    return rng.randrange(1, 1000)


@dataclass(frozen=True, eq=False)
class ConstructionParams:
    """Inputs of a family construction.

    Overrides replace individual seeded draws (keys "c1".."c25" and
    "l1".."l39"); they exist for degeneracy experiments and do not
    perturb the draws of the other coefficients.
    """

    id: int
    seed: int = 1
    prime: int | None = 1021
    c_overrides: Mapping[str, int] | None = None
    l_overrides: Mapping[str, int] | None = None

    def field(self) -> FieldSpec:
        return FieldSpec(self.prime) if self.prime is not None else QQ


@dataclass(frozen=True, eq=False)
class FanoIdeal:
    """Image of the 20-generator unprojection ideal in the ambient ring."""

    ambient: RingSpec
    generators: tuple
    params: ConstructionParams
    retries: int
    data: TripleUnprojectionData
    gb: GroebnerBasis
    dimension: int
    numerator: HilbertNumerator

    @property
    def codimension(self) -> int:
        return self.ambient.nvars - self.dimension


def _draw_block(seed: int, stream: str, names: Sequence[str], field: FieldSpec,
                overrides: Mapping[str, int] | None) -> dict[str, int]:
    rng = rng_stream(seed, stream)
    values = {name: _draw(rng, field) for name in names}
    for name, value in (overrides or {}).items():
        if name not in values:
            raise ConstructionError(f"override {name} names no drawn coefficient")
        values[name] = value
    return values


def _family_14885(params: ConstructionParams, retry: int):
    field = params.field()
    c_names = [f"c{i}" for i in range(1, 26)]
    cs = _draw_block(params.seed, f"14885:c:{retry}", c_names, field,
                     params.c_overrides)
    working = RingSpec(tuple(f"z{i}" for i in range(1, 8)), (2,) * 7, field)
    data = triple_unprojection(working, cs)
    un = build_unprojection_ideal(data, (2, 2, 2))

    ambient = RingSpec(AMBIENT_NAMES[14885], AMBIENT_WEIGHTS[14885], field)
    l_names = [f"l{i}" for i in range(1, 40)]
    ls = _draw_block(params.seed, f"14885:l:{retry}", l_names, field,
                     params.l_overrides)
    v = ambient.var
    basis = [
        v("z1"), v("z2"), v("z3"), v("z5"), v("T"), v("S"), v("W"),
        v("w1") ** 2, v("w1") * v("w2"), v("w1") * v("w3"),
        v("w2") ** 2, v("w2") * v("w3"), v("w3") ** 2,
    ]

    def form(start: int) -> Polynomial:
        acc = ambient.zero()
        for offset, mono in enumerate(basis):
            acc = acc + mono.scale(ls[f"l{start + offset}"])
        return acc

    psi = Substitution({"z4": form(1), "z6": form(14), "z7": form(27)}, graded=True)
    gens = tuple(substitute(g, psi, ambient) for g in un.generators)
    return ambient, gens, data


def _family_12979(params: ConstructionParams, retry: int):
    field = params.field()
    scalar_c = [f"c{i}" for i in range(1, 26) if i not in SYMBOLIC_CS_12979]
    cs = _draw_block(params.seed, f"12979:c:{retry}", scalar_c, field,
                     params.c_overrides)
    names = tuple(f"z{i}" for i in range(1, 8)) + tuple(
        f"c{i}" for i in SYMBOLIC_CS_12979
    )
    weights = (1, 2, 2, 2, 2, 2, 2) + (1, 1, 1, 1)
    working = RingSpec(names, weights, field)
    data = triple_unprojection(working, cs)
    un = build_unprojection_ideal(data, (2, 3, 3))

    ambient = RingSpec(AMBIENT_NAMES[12979], AMBIENT_WEIGHTS[12979], field)
    l_names = [f"l{i}" for i in range(1, 29)]
    ls = _draw_block(params.seed, f"12979:l:{retry}", l_names, field,
                     params.l_overrides)
    v = ambient.var
    linear_basis = [v("z1"), v("c5"), v("c9")]
    quad_basis = [
        v("z2"), v("z3"), v("z5"), v("z6"), v("T"),
        v("z1") ** 2, v("z1") * v("c5"), v("z1") * v("c9"),
        v("c5") ** 2, v("c5") * v("c9"), v("c9") ** 2,
    ]

    def form(start: int, basis: list) -> Polynomial:
        acc = ambient.zero()
        for offset, mono in enumerate(basis):
            acc = acc + mono.scale(ls[f"l{start + offset}"])
        return acc

    psi = Substitution(
        {
            "c1": form(1, linear_basis),
            "c11": form(4, linear_basis),
            "z4": form(7, quad_basis),
            "z7": form(18, quad_basis),
        },
        graded=True,
    )
    gens = tuple(substitute(g, psi, ambient) for g in un.generators)
    return ambient, gens, data


_BUILDERS = {14885: _family_14885, 12979: _family_12979}


def construct_family(
    params: ConstructionParams, *, budget: Budget = DEFAULT_BUDGET
) -> FanoIdeal:
    """Draw coefficients, build the ambient ideal, and keep redrawing
    until the quotient has dimension 4 and the known Hilbert numerator
    (degenerate draws are a measure-zero event, so retries stay rare)."""
    if params.id not in _BUILDERS:
        raise ConstructionError(f"unknown construction id {params.id}")
    target = HILBERT_TARGETS[params.id]
    last = "no attempt made"
    for retry in range(MAX_RETRIES):
        ambient, gens, data = _BUILDERS[params.id](params, retry)
        gb = buchberger(IdealPresentation(ambient, gens), budget=budget)
        dim = krull_dimension(gb)
        if dim != 4:
            last = f"quotient dimension {dim}, expected 4"
            continue
        numerator = hilbert_numerator(gb)
        if numerator.coefficients != target:
            last = (
                f"numerator {numerator.coefficients} differs from the"
                f" target {target}"
            )
            continue
        return FanoIdeal(ambient, gens, params, retry, data, gb, dim, numerator)
    raise ConstructionError(
        f"id {params.id}: no general draw within {MAX_RETRIES} attempts ({last})"
    )


@dataclass(frozen=True)
class HilbertReport:
    numerator: HilbertNumerator
    palindromic: bool
    matches_target: bool
    target: tuple
    canonical_twist: int  # top numerator degree minus the sum of the weights


def hilbert_report(x: FanoIdeal) -> HilbertReport:
    target = HILBERT_TARGETS[x.params.id]
    num = x.numerator
    return HilbertReport(
        numerator=num,
        palindromic=num.palindromic(),
        matches_target=num.coefficients == target,
        target=target,
        canonical_twist=num.degree - sum(x.ambient.weights),
    )


def pfaffian_stage_report(x: FanoIdeal) -> HilbertReport:
    """Hilbert data of the codimension-3 pfaffian quotient the family
    was unprojected from, in the working grading."""
    num = hilbert_numerator(x.data.gb)
    return HilbertReport(
        numerator=num,
        palindromic=num.palindromic(),
        matches_target=num.coefficients == PFAFFIAN_STAGE_TARGET,
        target=PFAFFIAN_STAGE_TARGET,
        canonical_twist=num.degree - sum(x.data.ring.weights),
    )


# -- Jacobian and quasi-smoothness ------------------------------------------


@dataclass(frozen=True, eq=False)
class JacobianData:
    """Rows indexed by ambient variables, columns by generators."""

    matrix: tuple  # nvars rows x 20 columns of Polynomial
    minor_budget: int


def jacobian(x: FanoIdeal, *, minor_budget: int = 2000) -> JacobianData:
    rows = tuple(
        tuple(partial_derivative(g, name) for g in x.generators)
        for name in x.ambient.variables
    )
    return JacobianData(rows, minor_budget)


def euler_identity_check(x: FanoIdeal) -> bool:
    """sum_v w_v x_v dg/dx_v == deg(g) g for every generator (needs the
    characteristic to exceed every degree)."""
    ring = x.ambient
    field = ring.field
    for g in x.generators:
        acc = ring.zero()
        for name, w in zip(ring.variables, ring.weights):
            acc = acc + (ring.var(name) * partial_derivative(g, name)).scale(w)
        d = weighted_degree(g)
        if acc != g.scale(field.of(d)):
            return False
    return True


def vanishing_rows_check(x: FanoIdeal) -> bool:
    """For 14885: the three weight-1 rows of the Jacobian vanish after
    setting w1 = w2 = w3 = 0 (the stratum argument for the point type)."""
    if x.params.id != 14885:
        raise ConstructionError("the vanishing-rows check belongs to id 14885")
    ring = x.ambient
    kill = Substitution({name: ring.zero() for name in ("w1", "w2", "w3")})
    for name in ("w1", "w2", "w3"):
        for g in x.generators:
            if substitute(partial_derivative(g, name), kill, ring):
                return False
    return True


@dataclass(frozen=True)
class QuasismoothCertificate:
    """One-sided certificate: conclusive means the sampled-minor ideal
    already cuts the singular locus down to the cone vertex; running out
    of budget is inconclusive, never a disproof.  When inconclusive,
    dimension holds the best certified upper bound (the quotient
    dimension before any minor was adjoined), never a guess."""

    minors_used: int
    dimension: int
    conclusive: bool
    prime: int
    seed: int
    budget: int


def _worker_count() -> int:
    raw = os.environ.get("UNPROJ_THREADS", "")
    try:
        n = int(raw) if raw else 1
    except ValueError:
        n = 1
    return max(1, n)


def _reduced_minor(
    entries: Sequence[Sequence[Polynomial]],
    rows: tuple,
    cols: tuple,
    gb: GroebnerBasis,
) -> Polynomial:
    """Determinant of the selected submatrix, reduced mod gb at every
    level of the cofactor expansion.  The result differs from the true
    minor by an element of the ideal, which is harmless for cutting out
    the singular locus."""
    ring = gb.ring
    memo: dict[tuple, Polynomial] = {}

    def det(cols_left: tuple) -> Polynomial:
        if not cols_left:
            return ring.one()
        cached = memo.get(cols_left)
        if cached is not None:
            return cached
        level = len(rows) - len(cols_left)
        acc = ring.zero()
        for pos, c in enumerate(cols_left):
            e = entries[rows[level]][c]
            if not e:
                continue
            sub = det(cols_left[:pos] + cols_left[pos + 1 :])
            term = e * sub
            acc = acc + term if pos % 2 == 0 else acc - term
        acc = reduce_poly(acc, gb)
        memo[cols_left] = acc
        return acc

    return det(cols)


# -- graded slice-rank dimension test ----------------------------------------


def _weighted_monomials(weights: Sequence[int], d: int) -> Iterator[tuple]:
    """All exponent tuples of weighted degree exactly d."""
    n = len(weights)
    mon = [0] * n

    def rec(i: int, rem: int) -> Iterator[tuple]:
        if rem == 0:
            yield tuple(mon)
            return
        if i == n:
            return
        yield from rec(i + 1, rem)
        if weights[i] <= rem:
            mon[i] += 1
            yield from rec(i, rem - weights[i])
            mon[i] -= 1

    yield from rec(0, d)


def _standard_monomials(gb: GroebnerBasis, d: int) -> list[tuple]:
    """Monomials of weighted degree d outside the leading-term ideal."""
    lts = [g.leading_monomial() for g in gb.polys]
    out = []
    for mon in _weighted_monomials(gb.ring.weights, d):
        for lt in lts:
            if all(a >= b for a, b in zip(mon, lt)):
                break
        else:
            out.append(mon)
    return out


def _mono_shift(poly: Polynomial, u: tuple) -> Polynomial:
    """poly times the monomial with exponent tuple u."""
    terms = tuple(
        (tuple(a + b for a, b in zip(mon, u)), c) for mon, c in poly.terms
    )
    return Polynomial(poly.ring, terms)


class _SliceEliminator:
    """Incremental rank tracker for one graded slice of R/I over Z/p.

    Rows are normal forms expressed on the standard-monomial basis of
    the slice; the pivot matrix is kept fully reduced so a pending
    chunk clears all known pivots with one exact float64 matmul
    (products stay far below 2**53)."""

    def __init__(self, std: Sequence[tuple], p: int):
        self.col = {m: i for i, m in enumerate(std)}
        self.cols = len(std)
        self.p = p
        self.pivot_rows = np.zeros((0, self.cols), dtype=np.int64)
        self.pivot_cols: list[int] = []
        self.pending: list[np.ndarray] = []

    @property
    def full(self) -> bool:
        return len(self.pivot_cols) == self.cols

    def add(self, nf: Polynomial) -> None:
        if self.full or not nf:
            return
        row = np.zeros(self.cols, dtype=np.int64)
        for mon, c in nf.terms:
            row[self.col[mon]] = c
        self.pending.append(row)
        if len(self.pending) >= 128:
            self.flush()

    def flush(self) -> None:
        if not self.pending:
            return
        chunk = np.stack(self.pending)
        self.pending = []
        p = self.p
        if self.pivot_cols:
            coeffs = chunk[:, self.pivot_cols].astype(np.float64)
            cleared = coeffs @ self.pivot_rows.astype(np.float64)
            chunk = (chunk - cleared.astype(np.int64)) % p
        new_rows = []
        for row in chunk:
            # clear pivots found earlier in this same chunk
            for prow, lead in new_rows:
                c = row[lead]
                if c:
                    row = (row - c * prow) % p
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                continue
            lead = int(nz[0])
            inv = pow(int(row[lead]), p - 2, p)
            row = (row * inv) % p
            new_rows.append((row, lead))
        for row, lead in new_rows:
            if self.pivot_cols:
                coeffs = self.pivot_rows[:, lead]
                mask = np.nonzero(coeffs)[0]
                if mask.size:
                    self.pivot_rows[mask] = (
                        self.pivot_rows[mask] - np.outer(coeffs[mask], row)
                    ) % p
            self.pivot_rows = np.vstack([self.pivot_rows, row[None, :]])
            self.pivot_cols.append(lead)

    def rank(self) -> int:
        self.flush()
        return len(self.pivot_cols)


def _slice_supply(pool: Sequence[Polynomial], counts: Sequence[int], d: int) -> int:
    """Number of monomial shifts the pool can contribute at degree d."""
    total = 0
    for m in pool:
        k = d - weighted_degree(m)
        if 0 <= k < len(counts):
            total += counts[k]
    return total


def minor_certificate(
    gb: GroebnerBasis,
    matrix: Sequence[Sequence[Polynomial]],
    size: int,
    rng: random.Random,
    *,
    budget: int = 2000,
    batch: int = 100,
    numerator: HilbertNumerator | None = None,
) -> tuple[int, int, int]:
    """Adjoin uniformly sampled size x size minors of matrix to gb's
    ideal in batches; after each batch try to certify that the enlarged
    ideal has dimension <= 0.  Returns (minors used, final dimension,
    starting dimension); the final dimension is 0 on success and the
    starting dimension (an upper bound, never a guess) when the budget
    runs out inconclusively.

    The per-batch dimension test works degree by degree: the Hilbert
    function of R/(I + minors) at degree d is HF(R/I, d) minus the rank
    of the normal forms of all monomial shifts of the minors into
    degree d, an exact linear-algebra computation on the standard
    monomial basis.  If the Hilbert function vanishes at max(weights)
    consecutive degrees it vanishes at every higher degree (divide any
    monomial by one variable to land in a lower tested degree), so the
    quotient is finite-dimensional and the vanishing locus is the
    vertex alone.  This certifies dimension 0 without a Groebner basis
    of the fat minor ideal."""
    ring = gb.ring
    nrows = len(matrix)
    ncols = len(matrix[0])
    if size > nrows or size > ncols:
        raise ConstructionError(f"no {size}x{size} minors in a {nrows}x{ncols} matrix")
    start_dim = krull_dimension(gb)
    if start_dim <= 0:
        return 0, start_dim, start_dim
    if ring.field.p is None:
        raise ConstructionError("the slice-rank dimension test needs a prime field")
    p = ring.field.p
    entries = [[reduce_poly(e, gb) for e in row] for row in matrix]
    num = numerator if numerator is not None else hilbert_numerator(gb)
    wmax = max(ring.weights)
    # monomial counts of the ambient ring by weighted degree (for supply)
    span = 64
    counts = [0] * span
    counts[0] = 1
    for w in ring.weights:
        for dd in range(w, span):
            counts[dd] += counts[dd - w]
    hf = num.series_coefficients(span + wmax)

    pool: list[Polynomial] = []
    used = 0
    workers = _worker_count()
    elims: dict[int, _SliceEliminator] = {}
    fed: dict[int, int] = {}
    base_degree: int | None = None

    def feasible_degree() -> int | None:
        """Smallest degree at which the full minor budget could supply a
        full-rank slice with 25% headroom (sampled minors are nearly but
        not perfectly independent, and the pool size per batch varies)."""
        if not pool:
            return None
        projected = len(pool) * budget / max(used, 1)
        dmin = min(weighted_degree(m) for m in pool)
        for d in range(dmin, span - wmax):
            per_minor = _slice_supply(pool, counts, d) / len(pool)
            if per_minor and hf[d] * 1.25 <= per_minor * projected:
                return d
        return None

    while used < budget:
        count = min(batch, budget - used)
        pairs = [
            (
                tuple(sorted(rng.sample(range(nrows), size))),
                tuple(sorted(rng.sample(range(ncols), size))),
            )
            for _ in range(count)
        ]
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as tp:
                minors = list(
                    tp.map(lambda rc: _reduced_minor(entries, rc[0], rc[1], gb), pairs)
                )
        else:
            minors = [_reduced_minor(entries, r, c, gb) for r, c in pairs]
        used += count
        for m in minors:
            nf = reduce_poly(m, gb)
            if nf:
                pool.append(nf)
        if not pool:
            continue
        if base_degree is None:
            # pick the slice degrees once, from the first batch's pool:
            # rebuilding on a shifted estimate would discard fed rows
            d0 = feasible_degree()
            if d0 is None:
                continue
            base_degree = d0
            elims = {
                d: _SliceEliminator(_standard_monomials(gb, d), p)
                for d in range(d0, d0 + wmax)
            }
            fed = {d: 0 for d in elims}
        for d, elim in elims.items():
            for m in pool[fed[d]:]:
                if elim.full:
                    break
                k = d - weighted_degree(m)
                if k < 0:
                    continue
                for u in _weighted_monomials(ring.weights, k):
                    elim.add(reduce_poly(_mono_shift(m, u), gb))
                    if elim.full:
                        break
            fed[d] = len(pool)
            elim.flush()
        if all(e.rank() == e.cols for e in elims.values()):
            return used, 0, start_dim
    return used, start_dim, start_dim


def quasismooth_certificate(x: FanoIdeal, budget: int = 2000) -> QuasismoothCertificate:
    """Randomized certificate that the affine cone is smooth away from
    the vertex: dimension of (ideal + sampled 6x6 Jacobian minors) = 0."""
    if x.ambient.field.p is None:
        raise ConstructionError("the quasi-smoothness certificate needs a prime field")
    if x.dimension != 4:
        raise ConstructionError(
            f"degenerate draw: quotient dimension {x.dimension}, expected 4"
        )
    jac = jacobian(x, minor_budget=budget)
    rng = rng_stream(x.params.seed, f"{x.params.id}:minors")
    used, dim, _ = minor_certificate(
        x.gb, jac.matrix, x.codimension, rng, budget=budget, numerator=x.numerator
    )
    return QuasismoothCertificate(
        minors_used=used,
        dimension=dim,
        conclusive=dim <= 0,
        prime=x.ambient.field.p,
        seed=x.params.seed,
        budget=budget,
    )


# -- orbifold strata ---------------------------------------------------------


@dataclass(frozen=True)
class _Stratum:
    name: str
    killed: tuple
    weight: int
    type_tag: str


_STRATA: dict[int, tuple[_Stratum, ...]] = {
    14885: (
        _Stratum("V(w1,w2,w3)", ("w1", "w2", "w3"), 2, "1/2(1,1,1)"),
    ),
    12979: (
        _Stratum(
            "V(z1,c5,c9,S,W)", ("z1", "c5", "c9", "S", "W"), 2, "1/2(1,1,1)"
        ),
        _Stratum(
            "V(z1,c5,c9,z2,z3,z5,z6,T)",
            ("z1", "c5", "c9", "z2", "z3", "z5", "z6", "T"),
            3,
            "1/3(1,1,2)",
        ),
    ),
}


@dataclass(frozen=True)
class OrbifoldStratum:
    stratum: str
    count: int
    type_tag: str
    dimension: int
    stabilized: bool  # equal Hilbert values at two high degrees (radical-like)


def orbifold_report(
    x: FanoIdeal, *, budget: Budget = DEFAULT_BUDGET
) -> tuple[OrbifoldStratum, ...]:
    """Point count on each singular stratum of the ambient weighted
    projective space: restrict the ideal to the stratum and read the
    stabilized value of the Hilbert function of the restricted quotient."""
    out = []
    for st in _STRATA[x.params.id]:
        killed = set(st.killed)
        names = tuple(v for v in x.ambient.variables if v not in killed)
        weights = tuple(
            w for v, w in zip(x.ambient.variables, x.ambient.weights)
            if v not in killed
        )
        rring = RingSpec(names, weights, x.ambient.field)
        kill = Substitution({name: rring.zero() for name in st.killed})
        rgens = []
        for g in x.generators:
            r = substitute(g, kill, rring)
            if r:
                rgens.append(r)
        if not rgens:
            raise ConstructionError(
                f"stratum {st.name}: the whole stratum lies on the variety"
            )
        rgb = buchberger(IdealPresentation(rring, tuple(rgens)), budget=budget)
        rdim = krull_dimension(rgb)
        if rdim > 1:
            raise ConstructionError(
                f"stratum {st.name}: positive-dimensional intersection"
                f" (dimension {rdim}), degenerate draw"
            )
        if rdim < 1:
            count, stabilized = 0, True
        else:
            num = hilbert_numerator(rgb)
            d0 = st.weight * (num.degree // st.weight + 2)
            series = num.series_coefficients(d0 + st.weight)
            count = series[d0]
            stabilized = series[d0] == series[d0 + st.weight]
        out.append(OrbifoldStratum(st.name, count, st.type_tag, rdim, stabilized))
    return tuple(out)


# -- assembled report --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FanoReport:
    family: FanoIdeal
    codimension: int
    hilbert: HilbertReport
    orbifold: tuple
    quasismooth: QuasismoothCertificate


def fano_report(
    x: FanoIdeal,
    *,
    minor_budget: int = 2000,
    budget: Budget = DEFAULT_BUDGET,
) -> FanoReport:
    cert = quasismooth_certificate(x, minor_budget)
    orbifold = orbifold_report(x, budget=budget)
    return FanoReport(
        family=x,
        codimension=x.codimension,
        hilbert=hilbert_report(x),
        orbifold=orbifold,
        quasismooth=cert,
    )


# -- ideal-file round trip with construction metadata -----------------------


def family_file_comments(x: FanoIdeal) -> list[str]:
    return [
        f"fano id {x.params.id}",
        f"seed {x.params.seed}",
        f"prime {x.params.prime}",
        f"retries {x.retries}",
    ]


def read_family_metadata(path: str | Path) -> dict[str, int]:
    """Parse the comment header written next to a family's generators."""
    meta: dict[str, int] = {}
    for line in Path(path).read_text().splitlines():
        text = line.strip()
        if not text.startswith("#"):
            break
        words = text.lstrip("# ").split()
        if len(words) >= 2 and words[-1].lstrip("-").isdigit():
            meta[words[-2]] = int(words[-1])
    return meta
