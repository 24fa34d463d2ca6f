"""Groebner bases over Q or Z/p: Buchberger with the Gebauer-Moeller
pair criteria, normal forms with division records, cofactor lifting,
Krull dimension from leading terms, and weighted Hilbert numerators.

The engine works on raw {monomial: coefficient} dicts internally and
converts back to Polynomial at the boundaries.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

from .ring import (
    AlgebraError,
    ParseError,
    Polynomial,
    RingSpec,
    mon_coprime,
    mon_divides,
    mon_lcm,
    mon_mul,
    parse_poly,
    parse_ring_header,
    ring_header,
)


class NotInIdealError(AlgebraError):
    """Membership required but the element is not in the ideal."""


class ResourceBudgetExceededError(AlgebraError):
    """A Groebner computation outgrew its configured budget."""


@dataclass(frozen=True)
class Budget:
    """Caps for Buchberger runs; exceeding one raises, never truncates."""

    max_basis_terms: int = 50_000
    max_reduction_ops: int = 2_000_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class IdealPresentation:
    ring: RingSpec
    generators: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.ring != self.ring:
                raise AlgebraError("generator outside the presentation ring")


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, interreduced, sorted ascending."""

    ring: RingSpec
    polys: tuple[Polynomial, ...]

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def contains_one(self) -> bool:
        return any(g.is_constant() and g for g in self.polys)


@dataclass(frozen=True)
class DivisionRecord:
    """input == sum(quotient*divisor) + remainder, greedy first-divisor."""

    input: Polynomial
    divisors: tuple[Polynomial, ...]
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial

    def verify(self) -> bool:
        acc = self.remainder
        for q, d in zip(self.quotients, self.divisors):
            acc = acc + q * d
        return acc == self.input


Divisors = Union[GroebnerBasis, Sequence[Polynomial]]


def _divisor_list(divisors: Divisors) -> list[Polynomial]:
    if isinstance(divisors, GroebnerBasis):
        return list(divisors.polys)
    return list(divisors)


# -- raw engine ----------------------------------------------------------


def _heap_key(mon, weights):
    return (-sum(e * w for e, w in zip(mon, weights)), tuple(reversed(mon)))


class _Raw:
    """Shared state for one Buchberger run over raw dict polynomials."""

    def __init__(self, ring: RingSpec, budget: Budget):
        self.ring = ring
        self.p = ring.field.p
        self.weights = ring.weights
        self.budget = budget
        self.ops = 0

    def charge(self, n: int) -> None:
        self.ops += n
        if self.ops > self.budget.max_reduction_ops:
            raise ResourceBudgetExceededError(
                f"reduction operations exceeded {self.budget.max_reduction_ops}"
            )

    def inv(self, c):
        if self.p is not None:
            return pow(c, -1, self.p)
        return Fraction(1) / c

    def monic(self, poly: dict) -> tuple:
        """Split a nonzero dict poly into (lm, tail) with unit leading coeff."""
        weights = self.weights
        lm = max(poly, key=lambda m: (sum(e * w for e, w in zip(m, weights)),
                                      tuple(-e for e in reversed(m))))
        c = self.inv(poly[lm])
        p = self.p
        if p is not None:
            tail = [(m, v * c % p) for m, v in poly.items() if m != lm]
        else:
            tail = [(m, v * c) for m, v in poly.items() if m != lm]
        tail.sort(key=lambda mv: _heap_key(mv[0], weights))
        return lm, tail

    def normal_form(self, fdict: dict, basis: list, quotients=None):
        """Full reduction of fdict by basis entries [(lm, monic_tail), ...].

        Mutates and consumes fdict; returns the remainder dict.  When
        ``quotients`` is a list of dicts (one per entry) the monic
        quotients are accumulated there.
        """
        weights = self.weights
        p = self.p
        heap = [(_heap_key(m, weights), m) for m in fdict]
        heapq.heapify(heap)
        out: dict = {}
        nb = len(basis)
        while heap:
            _, m = heapq.heappop(heap)
            c = fdict.get(m)
            if not c:
                continue
            hit = -1
            for i in range(nb):
                blm = basis[i][0]
                ok = True
                for x, y in zip(m, blm):
                    if x < y:
                        ok = False
                        break
                if ok:
                    hit = i
                    break
            if hit < 0:
                out[m] = c
                del fdict[m]
                continue
            del fdict[m]
            blm, tail = basis[hit]
            q = tuple(x - y for x, y in zip(m, blm))
            if quotients is not None:
                qd = quotients[hit]
                prev = qd.get(q)
                qd[q] = c if prev is None else (prev + c) % p if p is not None else prev + c
            self.charge(len(tail) + 1)
            if p is not None:
                for tm, tc in tail:
                    mm = tuple(x + y for x, y in zip(q, tm))
                    prev = fdict.get(mm)
                    if prev is None:
                        v = -c * tc % p
                        if v:
                            fdict[mm] = v
                            heapq.heappush(heap, (_heap_key(mm, weights), mm))
                    else:
                        v = (prev - c * tc) % p
                        if v:
                            fdict[mm] = v
                        else:
                            del fdict[mm]
            else:
                for tm, tc in tail:
                    mm = tuple(x + y for x, y in zip(q, tm))
                    prev = fdict.get(mm)
                    if prev is None:
                        v = -c * tc
                        if v:
                            fdict[mm] = v
                            heapq.heappush(heap, (_heap_key(mm, weights), mm))
                    else:
                        v = prev - c * tc
                        if v:
                            fdict[mm] = v
                        else:
                            del fdict[mm]
        return out

    def spoly(self, a: tuple, b: tuple, lcm) -> dict:
        """S-polynomial of two monic (lm, tail) entries; leading terms cancel."""
        p = self.p
        qa = tuple(x - y for x, y in zip(lcm, a[0]))
        qb = tuple(x - y for x, y in zip(lcm, b[0]))
        acc: dict = {}
        for tm, tc in a[1]:
            acc[mon_mul(qa, tm)] = tc
        for tm, tc in b[1]:
            mm = mon_mul(qb, tm)
            prev = acc.get(mm)
            if prev is None:
                acc[mm] = -tc % p if p is not None else -tc
            else:
                v = (prev - tc) % p if p is not None else prev - tc
                if v:
                    acc[mm] = v
                else:
                    del acc[mm]
        self.charge(len(a[1]) + len(b[1]) + 1)
        return acc


def buchberger(
    generators: Union[IdealPresentation, Sequence[Polynomial]],
    *,
    budget: Budget = DEFAULT_BUDGET,
    dim_zero_exit: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis, deterministic in the given generator order.

    Normal selection strategy (smallest lcm first), Gebauer-Moeller pair
    pruning, full interreduction at the end.

    With dim_zero_exit, the pair loop stops as soon as the leading
    monomials contain a pure power of every variable.  Every basis
    element is a genuine ideal member, so those leading terms certify
    dimension <= 0 regardless of the pairs never processed; the result
    is then interreduced but possibly NOT a full Groebner basis, and is
    fit only for dimension bounds and membership-positive reductions.
    """
    if isinstance(generators, IdealPresentation):
        ring = generators.ring
        gens = [g for g in generators.generators if g]
    else:
        seq = list(generators)
        if not seq:
            raise AlgebraError("cannot infer the ring from an empty generator list")
        ring = seq[0].ring
        for g in seq:
            if g.ring != ring:
                raise AlgebraError("generators live in different rings")
        gens = [g for g in seq if g]

    raw = _Raw(ring, budget)
    weights = ring.weights
    entries: list[tuple] = []  # (lm, monic tail)
    alive_pairs: dict[tuple, tuple] = {}  # (i, j) -> lcm
    heap: list[tuple] = []
    basis_terms = 0

    def check_budget() -> None:
        if basis_terms > budget.max_basis_terms:
            raise ResourceBudgetExceededError(
                f"basis grew past {budget.max_basis_terms} terms"
            )

    def add_element(fdict: dict) -> None:
        nonlocal basis_terms
        t = len(entries)
        lm, tail = raw.monic(fdict)
        basis_terms += len(tail) + 1
        check_budget()
        # chain criterion on surviving old pairs
        doomed = []
        for (i, j), L in alive_pairs.items():
            if (
                mon_divides(lm, L)
                and mon_lcm(lm, entries[i][0]) != L
                and mon_lcm(lm, entries[j][0]) != L
            ):
                doomed.append((i, j))
        for key in doomed:
            del alive_pairs[key]
        # Gebauer-Moeller filtering of the new pairs
        lcms: dict[tuple, list[int]] = {}
        for i in range(t):
            L = mon_lcm(lm, entries[i][0])
            lcms.setdefault(L, []).append(i)
        minimal: list[tuple] = []
        for L in sorted(lcms, key=ring.sort_key):
            if any(L2 != L and mon_divides(L2, L) for L2 in minimal):
                continue
            minimal.append(L)
            group = lcms[L]
            if any(mon_coprime(lm, entries[i][0]) for i in group):
                continue
            i = group[0]
            alive_pairs[(i, t)] = L
            heapq.heappush(heap, (ring.sort_key(L), i, t))
        entries.append((lm, tail))

    uncovered = set(range(ring.nvars)) if dim_zero_exit else set()

    def covered() -> bool:
        lm = entries[-1][0]
        support = [k for k, e in enumerate(lm) if e]
        if not support:
            uncovered.clear()  # a unit: everything is covered
        elif len(support) == 1:
            uncovered.discard(support[0])
        return not uncovered

    for g in gens:
        fdict = raw.normal_form(dict(g.terms), entries)
        if fdict:
            add_element(fdict)
            if dim_zero_exit and covered():
                heap.clear()
                break

    while heap:
        _, i, j = heapq.heappop(heap)
        L = alive_pairs.pop((i, j), None)
        if L is None:
            continue
        s = raw.spoly(entries[i], entries[j], L)
        r = raw.normal_form(s, entries)
        if r:
            add_element(r)
            if dim_zero_exit and covered():
                break

    # minimal generators: leading monomial divisible by no other's
    order = sorted(range(len(entries)), key=lambda k: ring.sort_key(entries[k][0]))
    kept: list[int] = []
    for k in order:
        lm = entries[k][0]
        if not any(mon_divides(entries[m][0], lm) for m in kept):
            kept.append(k)

    # interreduce tails against the other minimal elements
    reduced: dict[int, tuple] = {k: entries[k] for k in kept}
    for k in kept:
        lm, tail = reduced[k]
        others = [reduced[m] for m in kept if m != k]
        rem = raw.normal_form(dict(tail), others)
        reduced[k] = (lm, sorted(rem.items(), key=lambda mv: _heap_key(mv[0], weights)))

    one = ring.field.one
    polys = []
    for k in kept:
        lm, tail = reduced[k]
        polys.append(Polynomial.from_terms(ring, [(lm, one), *tail]))
    polys.sort(key=lambda g: ring.sort_key(g.leading_monomial()))
    return GroebnerBasis(ring, tuple(polys))


# -- division records ----------------------------------------------------


def normal_form(f: Polynomial, divisors: Divisors, *, track: bool = True) -> DivisionRecord:
    """Divide f by the divisors greedily (first whose LM divides wins)."""
    ds = _divisor_list(divisors)
    ring = f.ring
    for d in ds:
        if d.ring != ring:
            raise AlgebraError("divisor outside the ring of the dividend")
        if not d:
            raise AlgebraError("zero divisor in division")
    raw = _Raw(ring, DEFAULT_BUDGET)
    basis = []
    lcs = []
    for d in ds:
        lm, lc = d.leading_term()
        inv = raw.inv(lc)
        p = raw.p
        if p is not None:
            tail = [(m, c * inv % p) for m, c in d.terms[1:]]
        else:
            tail = [(m, c * inv) for m, c in d.terms[1:]]
        basis.append((lm, tail))
        lcs.append(inv)
    quotients = [dict() for _ in ds] if track else None
    rem = raw.normal_form(dict(f.terms), basis, quotients)
    remainder = Polynomial.from_dict(ring, rem)
    if not track:
        return DivisionRecord(f, tuple(ds), (), remainder)
    qpolys = []
    for inv, q in zip(lcs, quotients):
        # monic quotients correspond to divisor/lc; rescale to the original
        qpolys.append(Polynomial.from_dict(ring, q).scale(inv))
    return DivisionRecord(f, tuple(ds), tuple(qpolys), remainder)


def reduce_poly(f: Polynomial, divisors: Divisors) -> Polynomial:
    return normal_form(f, divisors, track=False).remainder


def is_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return not reduce_poly(f, gb)


# -- cofactor lifting ------------------------------------------------------


def _tracked_gb(inputs: list[Polynomial], ring: RingSpec, budget: Budget):
    """Non-reduced Groebner basis with representations over ``inputs``.

    Returns a list of (lm, tail, reps) where reps is a list of dicts and
    the basis element equals sum(reps[k] * inputs[k]).
    """
    raw = _Raw(ring, budget)
    p = raw.p
    n = len(inputs)

    def rep_scale(reps, c):
        if p is not None:
            return [{m: v * c % p for m, v in r.items()} for r in reps]
        return [{m: v * c for m, v in r.items()} for r in reps]

    def rep_axpy(acc, c, q, reps):
        # acc -= c * x^q * reps
        for a, r in zip(acc, reps):
            for m, v in r.items():
                mm = mon_mul(q, m)
                prev = a.get(mm)
                nv = (prev if prev is not None else 0) - c * v
                if p is not None:
                    nv %= p
                if nv:
                    a[mm] = nv
                elif prev is not None:
                    del a[mm]

    def nf_tracked(fdict, frep, basis):
        weights = raw.weights
        heap = [(_heap_key(m, weights), m) for m in fdict]
        heapq.heapify(heap)
        out: dict = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = fdict.get(m)
            if not c:
                continue
            hit = None
            for e in basis:
                if mon_divides(e[0], m):
                    hit = e
                    break
            if hit is None:
                out[m] = c
                del fdict[m]
                continue
            del fdict[m]
            q = tuple(x - y for x, y in zip(m, hit[0]))
            raw.charge(len(hit[1]) + 1)
            for tm, tc in hit[1]:
                mm = tuple(x + y for x, y in zip(q, tm))
                prev = fdict.get(mm)
                v = (prev if prev is not None else 0) - c * tc
                if p is not None:
                    v %= p
                if v:
                    if prev is None:
                        heapq.heappush(heap, (_heap_key(mm, weights), mm))
                    fdict[mm] = v
                elif prev is not None:
                    del fdict[mm]
            rep_axpy(frep, c, q, hit[2])
        return out

    basis: list[tuple] = []
    heap: list[tuple] = []

    def add(fdict, frep):
        lm, tail = raw.monic(fdict)
        c = raw.inv(fdict[lm])
        reps = rep_scale(frep, c)
        t = len(basis)
        for i in range(t):
            L = mon_lcm(lm, basis[i][0])
            if mon_coprime(lm, basis[i][0]):
                continue
            heapq.heappush(heap, (ring.sort_key(L), i, t))
        basis.append((lm, tail, reps))

    for k, g in enumerate(inputs):
        if not g:
            continue
        fdict = dict(g.terms)
        frep = [dict() for _ in range(n)]
        frep[k][ring.zero_mon()] = ring.field.one
        rem = nf_tracked(fdict, frep, basis)
        if rem:
            add(rem, frep)

    while heap:
        _, i, j = heapq.heappop(heap)
        a, b = basis[i], basis[j]
        L = mon_lcm(a[0], b[0])
        qa = tuple(x - y for x, y in zip(L, a[0]))
        qb = tuple(x - y for x, y in zip(L, b[0]))
        s: dict = {}
        for tm, tc in a[1]:
            s[mon_mul(qa, tm)] = tc
        for tm, tc in b[1]:
            mm = mon_mul(qb, tm)
            prev = s.get(mm)
            v = (prev if prev is not None else 0) - tc
            if p is not None:
                v %= p
            if v:
                s[mm] = v
            elif prev is not None:
                del s[mm]
        srep = [dict() for _ in range(n)]
        # srep = x^qa * rep_a - x^qb * rep_b (rep_axpy subtracts c*x^q*reps)
        rep_axpy(srep, ring.field.of(-1), qa, a[2])
        rep_axpy(srep, ring.field.of(1), qb, b[2])
        rem = nf_tracked(s, srep, basis)
        if rem:
            add(rem, srep)
    return basis, nf_tracked


def lift_cofactors(
    f: Polynomial,
    targets: Sequence[Polynomial],
    modulus: GroebnerBasis,
    *,
    budget: Budget = DEFAULT_BUDGET,
) -> list[Polynomial]:
    """Cofactors b with f - sum(b_k * targets_k) in the modulus ideal.

    Greedy division by [targets, then modulus basis] first; when that
    leaves a remainder, a representation-tracking basis of
    [targets + modulus] decides membership and recovers the cofactors.
    Raises NotInIdealError when f is not in (targets) + modulus.
    """
    ring = f.ring
    ds = list(targets) + list(modulus.polys)
    record = normal_form(f, ds)
    if not record.remainder:
        return list(record.quotients[: len(targets)])

    inputs = list(targets) + list(modulus.polys)
    basis, nf_tracked = _tracked_gb(inputs, ring, budget)
    fdict = dict(f.terms)
    frep = [dict() for _ in inputs]
    rem = nf_tracked(fdict, frep, basis)
    if rem:
        raise NotInIdealError("element is not in (targets) + modulus ideal")
    # f = sum(frep[k] * inputs[k]) + 0, but frep accumulated with opposite
    # sign (reductions subtract); negate to get the representation of f.
    cofactors = []
    for k in range(len(targets)):
        poly = -Polynomial.from_dict(ring, frep[k])
        cofactors.append(poly)
    check = f
    for b, t in zip(cofactors, targets):
        check = check - b * t
    if reduce_poly(check, modulus):
        raise NotInIdealError("cofactor certification failed")
    return cofactors


# -- dimension and Hilbert series -----------------------------------------


def _minimalize(mons: list[tuple]) -> list[tuple]:
    """Minimal generators of the monomial ideal spanned by mons."""
    mons = sorted(set(mons), key=lambda m: (sum(m), m))
    out: list[tuple] = []
    for m in mons:
        if not any(mon_divides(g, m) for g in out):
            out.append(m)
    return out


def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of ring/ideal from the leading-term ideal.

    Largest variable subset S containing the support of no leading
    monomial; computed as nvars minus a minimum hitting set.  The unit
    ideal gets -1.
    """
    n = gb.ring.nvars
    if gb.contains_one():
        return -1
    masks = []
    for lm in _minimalize(gb.leading_monomials()):
        mask = 0
        for i, e in enumerate(lm):
            if e:
                mask |= 1 << i
        masks.append(mask)
    if not masks:
        return n
    # drop masks containing another mask (they are hit automatically)
    masks.sort(key=lambda m: bin(m).count("1"))
    minimal: list[int] = []
    for m in masks:
        if not any(m & mm == mm for mm in minimal):
            minimal.append(m)
    best = n + 1

    def search(remaining: list[int], chosen: int) -> None:
        nonlocal best
        if chosen >= best:
            return
        if not remaining:
            best = chosen
            return
        m = min(remaining, key=lambda x: bin(x).count("1"))
        bit_i = 0
        mm = m
        while mm:
            if mm & 1:
                bit = 1 << bit_i
                search([x for x in remaining if not x & bit], chosen + 1)
            mm >>= 1
            bit_i += 1

    search(minimal, 0)
    return n - best


@dataclass(frozen=True)
class HilbertNumerator:
    """Numerator N(t) of a Hilbert series over prod(1 - t^w_i)."""

    coefficients: tuple[int, ...]  # index = degree, trailing zeros trimmed
    weights: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def palindromic(self) -> bool:
        c = self.coefficients
        return c == tuple(reversed(c))

    def series_coefficients(self, upto: int) -> list[int]:
        """Power-series coefficients of N(t) / prod(1 - t^w) up to degree upto."""
        c = [0] * (upto + 1)
        for d, v in enumerate(self.coefficients):
            if d <= upto:
                c[d] = v
        for w in self.weights:
            for d in range(w, upto + 1):
                c[d] += c[d - w]
        return c

    def __str__(self) -> str:
        if not any(self.coefficients):
            return "0"
        parts = []
        for d, v in enumerate(self.coefficients):
            if not v:
                continue
            mag = abs(v)
            if d == 0:
                body = str(mag)
            elif d == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{d}" if mag == 1 else f"{mag}*t^{d}"
            if not parts:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append((" - " if v < 0 else " + ") + body)
        return "".join(parts)


def _poly1_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for da, va in a.items():
        for db, vb in b.items():
            d = da + db
            out[d] = out.get(d, 0) + va * vb
    return {d: v for d, v in out.items() if v}


def _numerator_rec(gens: list[tuple], weights: tuple[int, ...]) -> dict:
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    wdeg = lambda m: sum(e * w for e, w in zip(m, weights))
    # pairwise coprime generators form a regular sequence
    coprime = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not mon_coprime(gens[i], gens[j]):
                coprime = False
                break
        if not coprime:
            break
    if coprime:
        acc = {0: 1}
        for g in gens:
            factor = {0: 1}
            d = wdeg(g)
            factor[d] = factor.get(d, 0) - 1
            if not factor[d]:
                del factor[d]
            acc = _poly1_mul(acc, factor)
        return acc
    # pivot on the most shared variable
    counts = [0] * len(weights)
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    j = max(range(len(weights)), key=lambda i: counts[i])
    pivot = tuple(1 if i == j else 0 for i in range(len(weights)))
    added = [g for g in gens if g[j] == 0] + [pivot]
    colon = [tuple(e - 1 if i == j and e else e for i, e in enumerate(g)) for g in gens]
    n_added = _numerator_rec(added, weights)
    n_colon = _numerator_rec(colon, weights)
    out = dict(n_added)
    w = weights[j]
    for d, v in n_colon.items():
        out[d + w] = out.get(d + w, 0) + v
    return {d: v for d, v in out.items() if v}


def hilbert_numerator(gb: GroebnerBasis) -> HilbertNumerator:
    """Numerator of the Hilbert series of ring/ideal in the ring's weights.

    Computed from the leading-term ideal by the standard splitting
    recursion; the numerator of an ideal and of its leading-term ideal
    agree, so a Groebner basis is exactly what is needed.
    """
    ring = gb.ring
    coeffs = _numerator_rec(gb.leading_monomials(), ring.weights)
    top = max(coeffs) if coeffs else 0
    dense = [0] * (top + 1)
    for d, v in coeffs.items():
        dense[d] = v
    while len(dense) > 1 and dense[-1] == 0:
        dense.pop()
    return HilbertNumerator(tuple(dense), ring.weights)


# -- ideal files -----------------------------------------------------------


def read_ideal_file(path: str | Path) -> IdealPresentation:
    """Ideal file: ring header line, then one generator per line.

    Blank lines and lines starting with # are skipped.
    """
    lines = Path(path).read_text().splitlines()
    ring: RingSpec | None = None
    gens: list[Polynomial] = []
    for line in lines:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if ring is None:
            ring = parse_ring_header(text)
            continue
        gens.append(parse_poly(text, ring))
    if ring is None:
        raise ParseError(f"{path}: no ring header found")
    return IdealPresentation(ring, tuple(gens))


def write_ideal_file(
    path: str | Path,
    ideal: IdealPresentation,
    *,
    comments: Iterable[str] = (),
) -> None:
    lines = [f"# {c}" for c in comments]
    lines.append(ring_header(ideal.ring))
    lines.extend(str(g) for g in ideal.generators)
    Path(path).write_text("\n".join(lines) + "\n")
