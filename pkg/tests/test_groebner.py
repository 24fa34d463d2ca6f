"""Groebner engine certificates: S-pairs, division records, dimension,
Hilbert numerators against brute-force standard-monomial counts.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from tomjerry.groebner import (
    Budget,
    IdealPresentation,
    NotInIdealError,
    ResourceBudgetExceededError,
    buchberger,
    hilbert_numerator,
    is_member,
    krull_dimension,
    lift_cofactors,
    normal_form,
    read_ideal_file,
    reduce_poly,
    write_ideal_file,
)
from tomjerry.ring import (
    QQ,
    FieldSpec,
    Polynomial,
    RingSpec,
    parse_poly,
)

F1021 = FieldSpec(1021)


def _ring(names: str = "xyz", weights: tuple[int, ...] | None = None,
          field: FieldSpec = QQ) -> RingSpec:
    parts = tuple(names)
    return RingSpec(parts, weights or (1,) * len(parts), field)


def _random_poly(rng: random.Random, ring: RingSpec, terms: int = 4,
                 max_exp: int = 2) -> Polynomial:
    acc = ring.zero()
    for _ in range(rng.randrange(1, terms + 1)):
        mon = tuple(rng.randrange(max_exp + 1) for _ in range(ring.nvars))
        acc = acc + ring.monomial(mon, rng.randrange(-5, 6) or 1)
    return acc


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = ring.monomial(tuple(l - a for l, a in zip(lcm, lf)),
                       ring.field.inv(f.leading_coefficient()))
    mg = ring.monomial(tuple(l - b for l, b in zip(lcm, lg)),
                       ring.field.inv(g.leading_coefficient()))
    return mf * f - mg * g


# -- Buchberger certificates -------------------------------------------------


@pytest.mark.parametrize("field", [QQ, F1021], ids=str)
def test_every_spair_of_the_basis_reduces_to_zero(field: FieldSpec) -> None:
    rng = random.Random(5)
    ring = _ring("xyz", field=field)
    for _ in range(25):
        gens = [_random_poly(rng, ring) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        gb = buchberger(IdealPresentation(ring, tuple(gens)))
        for f, g in itertools.combinations(gb.polys, 2):
            assert not reduce_poly(_spoly(f, g), gb)


def test_generators_reduce_to_zero_and_members_detected() -> None:
    rng = random.Random(7)
    ring = _ring("xyz")
    for _ in range(25):
        gens = [p for p in (_random_poly(rng, ring) for _ in range(3)) if p]
        if not gens:
            continue
        gb = buchberger(IdealPresentation(ring, tuple(gens)))
        for g in gens:
            assert is_member(g, gb)
        combo = gens[0] * _random_poly(rng, ring, terms=2)
        assert is_member(combo, gb)


def test_reduced_basis_is_monic_interreduced_sorted() -> None:
    ring = _ring("xy")
    gb = buchberger(IdealPresentation(ring, (
        parse_poly("2*x^2 + y", ring),
        parse_poly("3*y^3 - x", ring),
    )))
    lms = gb.leading_monomials()
    assert all(g.leading_coefficient() == ring.field.one for g in gb.polys)
    for i, g in enumerate(gb.polys):
        for j, lm in enumerate(lms):
            if i == j:
                continue
            assert not any(
                all(m >= l for m, l in zip(mon, lm)) for mon, _ in g.terms
            )
    keys = [ring.sort_key(m) for m in lms]
    assert keys == sorted(keys)


def test_division_record_verifies_and_normal_form_unique() -> None:
    rng = random.Random(9)
    ring = _ring("xyz", field=F1021)
    gens = (parse_poly("x^2 - y", ring), parse_poly("x*y - z", ring))
    gb = buchberger(IdealPresentation(ring, gens))
    for _ in range(50):
        f = _random_poly(rng, ring, terms=5, max_exp=3)
        rec = normal_form(f, gb)
        assert rec.verify()
        shuffled = list(gb.polys)
        rng.shuffle(shuffled)
        assert normal_form(f, shuffled).remainder == rec.remainder


def test_contains_one_for_unit_ideal() -> None:
    ring = _ring("xy")
    gb = buchberger(IdealPresentation(ring, (
        parse_poly("x", ring), parse_poly("x + 1", ring),
    )))
    assert gb.contains_one()
    assert len(gb) == 1


def test_lift_cofactors_reassembles_membership() -> None:
    rng = random.Random(13)
    ring = _ring("xyz", field=F1021)
    targets = [parse_poly("x^2 - y", ring), parse_poly("y*z + x", ring)]
    gb = buchberger(IdealPresentation(ring, ()))
    for _ in range(20):
        q1 = _random_poly(rng, ring, terms=2)
        q2 = _random_poly(rng, ring, terms=2)
        f = q1 * targets[0] + q2 * targets[1]
        cof = lift_cofactors(f, targets, gb)
        rebuilt = sum((c * t for c, t in zip(cof, targets)), ring.zero())
        assert rebuilt == f
    with pytest.raises(NotInIdealError):
        lift_cofactors(parse_poly("z", ring), targets, gb)


# -- dimension ---------------------------------------------------------------


def test_krull_dimension_known_cases() -> None:
    ring = _ring("xyz")
    cases = [
        ((), 3),
        (("x",), 2),
        (("x", "y"), 1),
        (("x", "y", "z"), 0),
        (("x*y",), 2),
        (("x*y", "x*z"), 2),
        (("x*y", "x*z", "y*z"), 1),
        (("x^2", "y^3", "z^4"), 0),
    ]
    for gens, want in cases:
        gb = buchberger(IdealPresentation(
            ring, tuple(parse_poly(g, ring) for g in gens)))
        assert krull_dimension(gb) == want, gens


def test_unit_ideal_has_dimension_minus_one() -> None:
    ring = _ring("xy")
    gb = buchberger(IdealPresentation(ring, (ring.one(),)))
    assert krull_dimension(gb) == -1


def test_dim_zero_exit_certifies_zero_dimension() -> None:
    rng = random.Random(15)
    ring = _ring("xyz", field=F1021)
    for _ in range(15):
        gens = [
            parse_poly("x^2", ring) + _random_poly(rng, ring, terms=2, max_exp=1),
            parse_poly("y^3", ring) + _random_poly(rng, ring, terms=2, max_exp=1),
            parse_poly("z^2", ring) + _random_poly(rng, ring, terms=2, max_exp=1),
        ]
        full = buchberger(IdealPresentation(ring, tuple(gens)))
        partial = buchberger(IdealPresentation(ring, tuple(gens)),
                             dim_zero_exit=True)
        if krull_dimension(partial) <= 0:
            assert krull_dimension(full) <= 0
        for g in partial.polys:
            assert is_member(g, full)


# -- budget ------------------------------------------------------------------


def test_budget_exhaustion_raises_instead_of_truncating() -> None:
    ring = _ring("xyzw", field=F1021)
    rng = random.Random(21)
    gens = tuple(_random_poly(rng, ring, terms=6, max_exp=4) for _ in range(4))
    with pytest.raises(ResourceBudgetExceededError):
        buchberger(IdealPresentation(ring, gens), budget=Budget(max_basis_terms=10))


# -- Hilbert numerators --------------------------------------------------------


def _brute_hilbert_function(gb, upto: int) -> list[int]:
    """Count standard monomials degree by degree (weights respected)."""
    ring = gb.ring
    lms = gb.leading_monomials()
    counts = [0] * (upto + 1)
    bound = [upto // w + 1 for w in ring.weights]

    for mon in itertools.product(*(range(b) for b in bound)):
        deg = sum(e * w for e, w in zip(mon, ring.weights))
        if deg > upto:
            continue
        if any(all(m >= l for m, l in zip(mon, lm)) for lm in lms):
            continue
        counts[deg] += 1
    return counts


@pytest.mark.parametrize("weights", [(1, 1, 1), (1, 2, 3)], ids=str)
def test_hilbert_numerator_matches_brute_force(weights) -> None:
    rng = random.Random(25)
    ring = _ring("xyz", weights=weights, field=F1021)
    upto = 10
    for _ in range(12):
        gens = tuple(
            ring.monomial(tuple(rng.randrange(3) for _ in range(3)))
            for _ in range(3)
        )
        gens = tuple(g for g in gens if not g.is_constant())
        if not gens:
            continue
        gb = buchberger(IdealPresentation(ring, gens))
        num = hilbert_numerator(gb)
        assert num.series_coefficients(upto) == _brute_hilbert_function(gb, upto)


def test_hilbert_numerator_of_polynomial_ring_is_one() -> None:
    ring = _ring("xy", weights=(1, 2))
    gb = buchberger(IdealPresentation(ring, ()))
    num = hilbert_numerator(gb)
    assert num.coefficients == (1,)
    assert num.series_coefficients(6) == [1, 1, 2, 2, 3, 3, 4]


def test_hilbert_numerator_complete_intersection_is_product() -> None:
    ring = _ring("xyz")
    gb = buchberger(IdealPresentation(ring, (
        parse_poly("x^2 + y*z", ring), parse_poly("y^3 - z^3", ring),
    )))
    num = hilbert_numerator(gb)
    # (1 - t^2)(1 - t^3) = 1 - t^2 - t^3 + t^5
    assert num.coefficients == (1, 0, -1, -1, 0, 1)
    assert num.palindromic()


# -- ideal files ---------------------------------------------------------------


def test_ideal_file_round_trip(tmp_path: Path) -> None:
    ring = RingSpec(("z1", "z2", "T"), (1, 2, 3), F1021)
    gens = (parse_poly("z1^2 - 3*z2", ring), parse_poly("T - z1*z2", ring))
    path = tmp_path / "sample.ideal"
    write_ideal_file(path, IdealPresentation(ring, gens),
                     comments=["two generators", "seed 9"])
    back = read_ideal_file(path)
    assert back.ring == ring
    assert back.generators == gens
    text = path.read_text()
    assert text.startswith("# two generators\n# seed 9\n")


def test_read_ideal_file_rejects_missing_header(tmp_path: Path) -> None:
    path = tmp_path / "bad.ideal"
    path.write_text("# only a comment\n")
    from tomjerry.ring import ParseError
    with pytest.raises(ParseError):
        read_ideal_file(path)
