"""The fundamental calculation, the three unprojection homs, couplings,
and the 20-generator ideal with its dimension bookkeeping.
"""

from __future__ import annotations

import random

import pytest

from tomjerry.formats import build_tom123, parse_format, triple_format_check
from tomjerry.groebner import (
    IdealPresentation,
    buchberger,
    krull_dimension,
    reduce_poly,
)
from tomjerry.ring import (
    QQ,
    FieldSpec,
    RingSpec,
    Substitution,
    substitute,
    weighted_degree,
)
from tomjerry.unprojection import (
    SPECIALIZED_KEPT_CS,
    SPECIALIZED_ZERO_CS,
    UNPROJECTION_NAMES,
    UnprojectionError,
    build_unprojection_ideal,
    generic_fundamental_data,
    generic_ring,
    homogeneity_report,
    inclusion_check,
    is_homogeneous_ideal,
    pairwise_sum_collapse,
    phi_images,
    specialized_pfaffian_ideal,
    triple_unprojection,
    welldefinedness_check,
)
from tomjerry.fano import _draw, rng_stream

F1021 = FieldSpec(1021)
F32003 = FieldSpec(32003)


def _numeric_bundle(seed: int, field: FieldSpec):
    ring = RingSpec(tuple(f"z{i}" for i in range(1, 8)), (1,) * 7, field)
    rng = rng_stream(seed, "tom123:c")
    c_values = {f"c{i}": _draw(rng, field) for i in range(1, 26)}
    return triple_unprojection(ring, c_values)


# -- the generic fundamental calculation ---------------------------------------


@pytest.fixture(scope="module")
def generic():
    return generic_fundamental_data()


def test_generic_ring_shape() -> None:
    ring = generic_ring()
    assert ring.nvars == 32
    assert ring.field == QQ
    assert ring.variables[:4] == ("x1", "x2", "x3", "x4")
    assert ring.variables[4:8] == ("z1", "z2", "z3", "z4")


def test_q_matrix_first_entry_formula(generic) -> None:
    ring = generic.ring
    want = (
        ring.var("x4") * ring.var("m34_1")
        - ring.var("x3") * ring.var("m35_1")
        + ring.var("x2") * ring.var("m45_1")
    )
    assert generic.q_matrix[0][0] == want


def test_q_matrix_reassembles_the_pfaffians(generic) -> None:
    ring = generic.ring
    zs = [ring.var(f"z{k}") for k in range(1, 5)]
    for i in range(4):
        rebuilt = sum(
            (generic.q_matrix[i][k] * zs[k] for k in range(4)), ring.zero()
        )
        assert rebuilt == generic.pfaffians[i + 1]


def test_cross_multiplication_certificates(generic) -> None:
    ring = generic.ring
    xs = [ring.var(f"x{i}") for i in range(1, 5)]
    # x_i * H_j = x_j * H_i entrywise, all 16 ordered pairs
    for i in range(4):
        for j in range(4):
            for k in range(4):
                left = xs[i] * generic.h_vectors[j][k]
                right = xs[j] * generic.h_vectors[i][k]
                assert left == right, (i, j, k)


def test_g_times_x_recovers_h(generic) -> None:
    ring = generic.ring
    xs = [ring.var(f"x{i}") for i in range(1, 5)]
    for k in range(4):
        for j in range(4):
            assert generic.g[k] * xs[j] == generic.h_vectors[j][k]


def test_g_shape_bidegree_and_term_count(generic) -> None:
    ring = generic.ring
    x_idx = [ring.index(f"x{i}") for i in range(1, 5)]
    z_idx = [ring.index(f"z{i}") for i in range(1, 5)]
    m_idx = [
        k for k, name in enumerate(ring.variables) if name.startswith("m")
    ]
    for g in generic.g:
        assert len(g) == 96
        assert weighted_degree(g) == 5
        assert g.degrees_in(x_idx) == {2}
        assert g.degrees_in(m_idx) == {3}
        assert g.degrees_in(z_idx) == {0}


# -- the three homs over numeric coefficients -----------------------------------


@pytest.mark.parametrize("seed", [1, 2, 3])
@pytest.mark.parametrize("field", [F1021, F32003], ids=str)
def test_welldefinedness_and_inclusions_across_seeds(seed: int, field: FieldSpec) -> None:
    data = _numeric_bundle(seed, field)
    assert welldefinedness_check(data)
    assert inclusion_check(data)


def test_phi_images_are_quadratic_and_keyed_by_generator() -> None:
    data = _numeric_bundle(5, F1021)
    for t, ideal in enumerate(data.ideals, start=1):
        phis = data.phis[t - 1]
        assert set(phis) == set(ideal.names)
        for img in phis.values():
            assert weighted_degree(img) == 2


def test_couplings_live_in_the_base_ring_with_zero_residual() -> None:
    data = _numeric_bundle(4, F1021)
    assert [(c.s, c.t) for c in data.couplings] == [(1, 2), (1, 3), (2, 3)]
    for coupling in data.couplings:
        assert not coupling.residual
        assert coupling.value.ring == data.ring
        assert weighted_degree(coupling.value) == 2


def test_phi_images_reject_foreign_matrices() -> None:
    ring = RingSpec(tuple(f"z{i}" for i in range(1, 8)), (1,) * 7, F1021)
    rng = rng_stream(9, "tom123:c")
    c_values = {f"c{i}": _draw(rng, F1021) for i in range(1, 26)}
    data = triple_unprojection(ring, c_values)
    with pytest.raises(UnprojectionError):
        phi_images(data.matrix, data.ideals[0], 4)


# -- the 20-generator ideal ------------------------------------------------------


@pytest.fixture(scope="module")
def bundle_seed1():
    data = _numeric_bundle(1, F1021)
    return data, build_unprojection_ideal(data)


def test_ideal_has_twenty_generators_in_canonical_order(bundle_seed1) -> None:
    data, ideal = bundle_seed1
    gens = ideal.generators
    assert len(gens) == 20
    ring = ideal.ring
    assert ring.variables[-3:] == UNPROJECTION_NAMES == ("T", "S", "W")
    lifted_pfaffians = [
        substitute(p, Substitution({}), ring) for p in data.pfaffians
    ]
    assert list(gens[:5]) == lifted_pfaffians

    def lift(p):
        return substitute(p, Substitution({}), ring)

    # blocks 5:9, 9:13, 13:17 are T*J1, S*J2, W*J3 minus the phi images
    pos = 5
    for t, letter in zip((1, 2, 3), UNPROJECTION_NAMES):
        var = ring.var(letter)
        for name in data.ideals[t - 1].names:
            expected = var * ring.var(name) - lift(data.phis[t - 1][name])
            assert gens[pos] == expected, (letter, name)
            pos += 1
    assert pos == 17
    # the three product relations close the list
    t_var, s_var, w_var = (ring.var(n) for n in UNPROJECTION_NAMES)
    pairs = ((t_var, s_var), (t_var, w_var), (s_var, w_var))
    for g, (a, b), coup in zip(gens[17:], pairs, data.couplings):
        assert g == a * b - lift(coup.value)


def test_ideal_is_homogeneous_with_degree_two_generators(bundle_seed1) -> None:
    _, ideal = bundle_seed1
    assert is_homogeneous_ideal(ideal)
    assert homogeneity_report(ideal) == [2] * 20


def test_codimension_six_across_seeds_and_primes() -> None:
    for field in (F1021, F32003):
        for seed in (1, 2, 3):
            data = _numeric_bundle(seed, field)
            ideal = build_unprojection_ideal(data)
            gb = buchberger(IdealPresentation(ideal.ring, tuple(ideal.generators)))
            dim = krull_dimension(gb)
            assert ideal.ring.nvars - dim == 6, (field, seed)


def test_unprojection_variables_multiply_into_the_base(bundle_seed1) -> None:
    data, ideal = bundle_seed1
    ring = ideal.ring
    gb = buchberger(IdealPresentation(ring, tuple(ideal.generators)))

    def lift(p):
        return substitute(p, Substitution({}), ring)

    # T*J1, S*J2, W*J3 land in the base: the product is congruent to the
    # phi image, a polynomial in the original variables alone
    for t, letter in zip((1, 2, 3), UNPROJECTION_NAMES):
        var = ring.var(letter)
        for name in data.ideals[t - 1].names:
            image = lift(data.phis[t - 1][name])
            assert not reduce_poly(var * ring.var(name) - image, gb)
            assert reduce_poly(var * ring.var(name), gb) == reduce_poly(image, gb)


# -- the specialized pfaffian quotient -------------------------------------------


def test_specialization_splits_the_25_coefficients() -> None:
    assert len(SPECIALIZED_ZERO_CS) == 15
    assert len(SPECIALIZED_KEPT_CS) == 10
    assert sorted(SPECIALIZED_ZERO_CS + SPECIALIZED_KEPT_CS) == list(range(1, 26))


def test_specialized_quotient_has_dimension_fourteen() -> None:
    pres = specialized_pfaffian_ideal(F1021)
    assert pres.ring.nvars == 17
    gb = buchberger(pres)
    assert krull_dimension(gb) == 14


def test_pairwise_sums_have_codimension_three() -> None:
    rows = pairwise_sum_collapse()
    assert [r["pair"] for r in rows] == [(1, 2), (1, 3), (2, 3)]
    for row in rows:
        assert row["pfaffians_vanish"] is True
        assert len(row["killed"]) == 6
        assert row["quotient_dimension"] == 26
        assert row["codimension_in_pfaffian_quotient"] == 3
