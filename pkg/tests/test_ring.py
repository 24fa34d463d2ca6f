"""Algebra laws and parsing of the polynomial substrate.

The randomized suites draw from seeded generators so failures replay
exactly; each law runs on at least 200 cases across the two fields.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tomjerry.ring import (
    QQ,
    AnyDegree,
    BlockDegreeError,
    CoefficientError,
    FieldSpec,
    GradingError,
    InexactDivisionError,
    NotHomogeneous,
    ParseError,
    Polynomial,
    RingSpec,
    Substitution,
    exact_divide,
    is_homogeneous,
    linear_coefficient_matrix,
    parse_poly,
    parse_ring_header,
    partial_derivative,
    ring_header,
    substitute,
    weighted_degree,
)

F1021 = FieldSpec(1021)
F32003 = FieldSpec(32003)


def _ring(field: FieldSpec = QQ, weights: tuple[int, ...] = (1, 1, 1)) -> RingSpec:
    names = tuple("xyzuvw"[: len(weights)])
    return RingSpec(names, weights, field)


def _random_poly(rng: random.Random, ring: RingSpec, terms: int = 5,
                 max_exp: int = 3) -> Polynomial:
    acc = ring.zero()
    for _ in range(rng.randrange(terms + 1)):
        mon = tuple(rng.randrange(max_exp + 1) for _ in range(ring.nvars))
        coeff = rng.randrange(-9, 10)
        acc = acc + ring.monomial(mon, coeff)
    return acc


# -- field arithmetic --------------------------------------------------------


def test_rational_field_is_exact() -> None:
    assert QQ.of(Fraction(1, 3)) + QQ.of(Fraction(1, 6)) == Fraction(1, 2)
    assert QQ.ratio(2, 4) == Fraction(1, 2)


def test_prime_field_maps_three_halves_to_512() -> None:
    value = F1021.ratio(3, 2)
    assert value == 512
    assert (2 * value) % 1021 == 3


def test_prime_field_rejects_composite_and_tiny_moduli() -> None:
    with pytest.raises(CoefficientError):
        FieldSpec(1024)
    with pytest.raises(CoefficientError):
        FieldSpec(2)
    with pytest.raises(CoefficientError):
        F1021.ratio(1, 1021)


def test_field_inverse_law_randomized() -> None:
    rng = random.Random(11)
    for field in (F1021, F32003):
        for _ in range(100):
            a = rng.randrange(1, field.p)
            assert field.mul(a, field.inv(a)) == field.one


# -- polynomial algebra laws -------------------------------------------------


@pytest.mark.parametrize("field", [QQ, F1021], ids=str)
def test_ring_laws_randomized(field: FieldSpec) -> None:
    rng = random.Random(17)
    ring = _ring(field)
    zero, one = ring.zero(), ring.one()
    for _ in range(120):
        f = _random_poly(rng, ring)
        g = _random_poly(rng, ring)
        h = _random_poly(rng, ring)
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + zero == f
        assert f * one == f
        assert f - f == zero
        assert f * zero == zero


@pytest.mark.parametrize("field", [QQ, F1021], ids=str)
def test_mul_is_degree_additive_on_nonzero(field: FieldSpec) -> None:
    rng = random.Random(19)
    ring = _ring(field, weights=(1, 2, 3))
    for _ in range(100):
        mon_f = tuple(rng.randrange(3) for _ in range(3))
        mon_g = tuple(rng.randrange(3) for _ in range(3))
        f = ring.monomial(mon_f, rng.randrange(1, 7))
        g = ring.monomial(mon_g, rng.randrange(1, 7))
        assert weighted_degree(f * g) == weighted_degree(f) + weighted_degree(g)


def test_power_matches_repeated_multiplication() -> None:
    rng = random.Random(23)
    ring = _ring(QQ)
    for _ in range(40):
        f = _random_poly(rng, ring, terms=3, max_exp=2)
        acc = ring.one()
        for k in range(4):
            assert f**k == acc
            acc = acc * f


def test_canonical_form_drops_zero_terms() -> None:
    ring = _ring(QQ)
    f = parse_poly("x*y - x*y + z", ring)
    assert len(f) == 1
    assert str(f) == "z"


# -- parsing and printing ----------------------------------------------------


def test_parse_print_parse_is_identity_randomized() -> None:
    rng = random.Random(29)
    for field in (QQ, F1021):
        ring = _ring(field, weights=(1, 1, 2))
        for _ in range(100):
            f = _random_poly(rng, ring)
            assert parse_poly(str(f), ring) == f


def test_parse_handles_rational_coefficients_over_prime_field() -> None:
    ring = RingSpec(("z1", "z2"), (1, 1), F1021)
    f = parse_poly("3/2*z1^2 - z2", ring)
    assert f.coefficient((2, 0)) == 512
    assert f.coefficient((0, 1)) == 1020


def test_parse_rejects_unknown_variable_and_garbage() -> None:
    ring = _ring(QQ)
    with pytest.raises(ParseError):
        parse_poly("x + q", ring)
    with pytest.raises(ParseError):
        parse_poly("x^ + y", ring)
    with pytest.raises(ParseError):
        parse_poly("", ring)


def test_ring_header_round_trip() -> None:
    ring = RingSpec(("z1", "z2", "T"), (1, 2, 3), F1021)
    assert parse_ring_header(ring_header(ring)) == ring
    qring = _ring(QQ)
    assert parse_ring_header(ring_header(qring)) == qring


# -- grading -----------------------------------------------------------------


def test_weighted_degree_and_homogeneity() -> None:
    ring = RingSpec(("x", "y"), (1, 2), QQ)
    f = parse_poly("x^2 + y", ring)
    assert weighted_degree(f) == 2
    assert is_homogeneous(f)
    g = parse_poly("x + y", ring)
    assert isinstance(weighted_degree(g), NotHomogeneous)
    assert not is_homogeneous(g)
    assert isinstance(weighted_degree(ring.zero()), AnyDegree)


# -- calculus and division ---------------------------------------------------


def test_partial_derivative_product_rule_randomized() -> None:
    rng = random.Random(31)
    ring = _ring(QQ)
    for _ in range(60):
        f = _random_poly(rng, ring, terms=4, max_exp=3)
        g = _random_poly(rng, ring, terms=4, max_exp=3)
        for name in ring.variables:
            left = partial_derivative(f * g, name)
            right = partial_derivative(f, name) * g + f * partial_derivative(g, name)
            assert left == right


def test_partial_derivative_in_characteristic_p() -> None:
    ring = RingSpec(("x",), (1,), F1021)
    f = parse_poly("x^1021", ring)
    assert not partial_derivative(f, "x")


def test_exact_divide_round_trip_randomized() -> None:
    rng = random.Random(37)
    for field in (QQ, F1021):
        ring = _ring(field)
        done = 0
        while done < 60:
            f = _random_poly(rng, ring, terms=4, max_exp=2)
            d = _random_poly(rng, ring, terms=3, max_exp=2)
            if not f or not d:
                continue
            assert exact_divide(f * d, d) == f
            done += 1


def test_exact_divide_rejects_nondivisor() -> None:
    ring = _ring(QQ)
    with pytest.raises(InexactDivisionError):
        exact_divide(parse_poly("x^2 + y", ring), parse_poly("x + 1", ring))


# -- substitution ------------------------------------------------------------


def test_substitution_is_a_ring_map_randomized() -> None:
    rng = random.Random(41)
    ring = _ring(QQ)
    target = RingSpec(("a", "b"), (1, 1), QQ)
    images = {
        "x": parse_poly("a + b", target),
        "y": parse_poly("a*b", target),
        "z": parse_poly("a^2 - 1", target),
    }
    sub = Substitution(images)
    for _ in range(60):
        f = _random_poly(rng, ring, terms=4, max_exp=2)
        g = _random_poly(rng, ring, terms=4, max_exp=2)
        assert substitute(f + g, sub, target) == substitute(f, sub, target) + substitute(g, sub, target)
        assert substitute(f * g, sub, target) == substitute(f, sub, target) * substitute(g, sub, target)


def test_graded_substitution_rejects_degree_drift() -> None:
    ring = RingSpec(("x", "y"), (1, 2), QQ)
    bad = Substitution({"y": parse_poly("x", ring)}, graded=True)
    with pytest.raises(GradingError):
        substitute(parse_poly("y", ring), bad, ring)


def test_field_change_substitution_q_to_prime() -> None:
    qring = _ring(QQ)
    pring = _ring(F1021)
    f = parse_poly("1/2*x^2 - 3*y*z", qring)
    image = substitute(f, Substitution({}), pring)
    assert image == parse_poly("511*x^2 + 1018*y*z", pring)


# -- linear coefficient extraction -------------------------------------------


def test_linear_coefficient_matrix_reassembles() -> None:
    rng = random.Random(43)
    ring = RingSpec(("z1", "z2", "z3", "a", "b"), (1, 1, 1, 1, 1), QQ)
    zs = ("z1", "z2", "z3")
    for _ in range(40):
        rows = []
        for _ in range(3):
            coeffs = [_random_poly(rng, RingSpec(("a", "b"), (1, 1), QQ), terms=3, max_exp=2)
                      for _ in zs]
            lifted = [substitute(c, Substitution({}), ring) for c in coeffs]
            row = sum((c * ring.var(z) for c, z in zip(lifted, zs)), ring.zero())
            rows.append((row, lifted))
        matrix = linear_coefficient_matrix([r for r, _ in rows], zs)
        for (row, lifted), got in zip(rows, matrix):
            assert list(got) == lifted


def test_linear_coefficient_matrix_rejects_quadratic_terms() -> None:
    ring = RingSpec(("z1", "z2", "a"), (1, 1, 1), QQ)
    with pytest.raises(BlockDegreeError):
        linear_coefficient_matrix([parse_poly("z1*z2", ring)], ("z1", "z2"))
